//! Free functionals of the generalized model.
//!
//! The alpha functions are free data: a value table at the finitely many
//! points a formula can request, ratios of shifted monic polynomials, or
//! the eigenvalue ratios of a concrete chain.

use crate::error::{Error, Result};
use crate::field::{Rat, Scalar, UniRatFun};

/// Source of alpha values, queried pointwise in any scalar field.
pub trait AlphaOracle<K: Scalar> {
    fn alpha(&self, color: usize, point: &K) -> Result<K>;
}

/// Explicit per-color value table with exact point matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaTable<K: Scalar> {
    entries: Vec<Vec<(K, K)>>,
}

impl<K: Scalar> AlphaTable<K> {
    pub fn new(entries: Vec<Vec<(K, K)>>) -> Self {
        AlphaTable { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<(K, K)>] {
        &self.entries
    }

    /// Adds or overwrites one entry.
    pub fn insert(&mut self, color: usize, point: K, value: K) {
        let row = &mut self.entries[color];
        if let Some(slot) = row.iter_mut().find(|(p, _)| p == &point) {
            slot.1 = value;
        } else {
            row.push((point, value));
        }
    }

    /// Maps the table into another scalar field.
    pub fn map<T: Scalar>(&self, f: impl Fn(&K) -> T) -> AlphaTable<T> {
        AlphaTable {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|(p, v)| (f(p), f(v))).collect())
                .collect(),
        }
    }
}

impl<K: Scalar> AlphaOracle<K> for AlphaTable<K> {
    fn alpha(&self, color: usize, point: &K) -> Result<K> {
        let row = self
            .entries
            .get(color)
            .ok_or_else(|| Error::IndexOutOfRange(format!("alpha color {color}")))?;
        row.iter()
            .find(|(p, _)| p == point)
            .map(|(_, v)| v.clone())
            .ok_or_else(|| Error::MissingAlphaValue { color, point: point.to_string() })
    }
}

/// Alpha functions from monic classifying polynomials: for color 0 the
/// shift is half the coupling, for the other colors the full coupling:
/// `alpha_s(x) = P_s(x + shift_s) / P_s(x)` with
/// `P_s(x) = prod_k (x - root_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrinfeldAlpha {
    coupling: Rat,
    roots: Vec<Vec<Rat>>,
}

impl DrinfeldAlpha {
    pub fn new(coupling: Rat, roots: Vec<Vec<Rat>>) -> Self {
        DrinfeldAlpha { coupling, roots }
    }

    /// The model of the projection argument: polynomial roots placed so
    /// that `alpha_s` vanishes exactly on a designated set of points.
    /// Roots sit at `point + shift_s`.
    pub fn vanishing_at(coupling: Rat, points: &[Vec<Rat>]) -> Self {
        let n = points.len();
        let mut roots = Vec::with_capacity(n);
        for (s, pts) in points.iter().enumerate() {
            let shift = Self::shift_rat(&coupling, s);
            roots.push(pts.iter().map(|p| p + &shift).collect());
        }
        DrinfeldAlpha { coupling, roots }
    }

    fn shift_rat(coupling: &Rat, color: usize) -> Rat {
        if color == 0 {
            coupling / &Rat::from_int(2)
        } else {
            coupling.clone()
        }
    }
}

impl<K: Scalar> AlphaOracle<K> for DrinfeldAlpha {
    fn alpha(&self, color: usize, point: &K) -> Result<K> {
        let roots = self
            .roots
            .get(color)
            .ok_or_else(|| Error::IndexOutOfRange(format!("alpha color {color}")))?;
        let shift = K::from_rat(&Self::shift_rat(&self.coupling, color));
        let mut num = K::one();
        let mut den = K::one();
        for r in roots {
            let rk = K::from_rat(r);
            num = num.mul(&point.add(&shift).sub(&rk));
            den = den.mul(&point.sub(&rk));
        }
        num.div(&den).map_err(|_| Error::PoleAtPoint(format!(
            "classifying polynomial vanishes at {point} (color {color})"
        )))
    }
}

/// Alpha functions as consecutive eigenvalue ratios of a concrete chain:
/// `alpha_s = lambda_s / lambda_{s+1}` with the eigenvalues stored as
/// rational functions of the spectral parameter (index 0 holds
/// `lambda_{-n}` through index `2n` holding `lambda_n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainAlpha {
    rank: usize,
    lambdas: Vec<UniRatFun<Rat>>,
}

impl ChainAlpha {
    pub fn new(rank: usize, lambdas: Vec<UniRatFun<Rat>>) -> Result<Self> {
        if lambdas.len() != 2 * rank + 1 {
            return Err(Error::IndexOutOfRange(format!(
                "{} eigenvalue functions for rank {rank}",
                lambdas.len()
            )));
        }
        Ok(ChainAlpha { rank, lambdas })
    }

    /// Eigenvalue function for a monodromy index in `-n..=n`.
    pub fn lambda(&self, index: i64) -> &UniRatFun<Rat> {
        &self.lambdas[(index + self.rank as i64) as usize]
    }
}

impl<K: Scalar> AlphaOracle<K> for ChainAlpha {
    fn alpha(&self, color: usize, point: &K) -> Result<K> {
        if color >= self.rank {
            return Err(Error::IndexOutOfRange(format!("alpha color {color}")));
        }
        let num = self.lambda(color as i64).eval_lifted(point)?;
        let den = self.lambda(color as i64 + 1).eval_lifted(point)?;
        num.div(&den).map_err(|_| Error::PoleAtPoint(format!(
            "lambda_{} vanishes at {point}",
            color + 1
        )))
    }
}

/// Pointwise product of two alpha sources (composite models).
pub struct ProductAlpha<'a, K: Scalar> {
    pub first: &'a dyn AlphaOracle<K>,
    pub second: &'a dyn AlphaOracle<K>,
}

impl<K: Scalar> AlphaOracle<K> for ProductAlpha<'_, K> {
    fn alpha(&self, color: usize, point: &K) -> Result<K> {
        Ok(self.first.alpha(color, point)?.mul(&self.second.alpha(color, point)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri};

    #[test]
    fn table_lookup_and_missing() {
        let t = AlphaTable::new(vec![vec![(ri(1), ri(5))]]);
        assert_eq!(t.alpha(0, &ri(1)).unwrap(), ri(5));
        assert!(matches!(
            t.alpha(0, &ri(2)),
            Err(Error::MissingAlphaValue { color: 0, .. })
        ));
    }

    #[test]
    fn drinfeld_vanishes_on_designated_points() {
        let pts = vec![vec![ri(3)], vec![ri(5)]];
        let d = DrinfeldAlpha::vanishing_at(ri(1), &pts);
        assert!(d.alpha(0, &ri(3)).unwrap().is_zero());
        assert!(d.alpha(1, &ri(5)).unwrap().is_zero());
        assert!(!d.alpha(0, &ri(4)).unwrap().is_zero());
        // alpha_0(u) = P_0(u + c/2)/P_0(u): root at 3 + 1/2
        let a = d.alpha(0, &ri(0)).unwrap();
        assert_eq!(a, (ri(0) + rat(1, 2) - rat(7, 2)) / (ri(0) - rat(7, 2)));
    }
}
