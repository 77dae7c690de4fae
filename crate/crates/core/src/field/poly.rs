//! Dense univariate polynomials over an exact scalar field.
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial is the empty list. Degrees stay small at desk scale, so
//! schoolbook arithmetic and monic Euclidean gcd are the right tools.

use std::fmt;

use super::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<K: Scalar> {
    coeffs: Vec<K>,
}

impl<K: Scalar> UniPoly<K> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The indeterminate `x`.
    pub fn gen() -> Self {
        UniPoly { coeffs: vec![K::zero(), K::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&rhs.coeff(i)));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, rhs: &Self) -> Result<(Self, Self)> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dl = rhs.coeffs.len();
        if self.coeffs.len() < dl {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let lead_inv = rhs.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); rem.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dl - 1].mul(&lead_inv);
            if q.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&q.mul(b));
            }
            quot[k] = q;
        }
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// Euclidean gcd with content normalization of each remainder (the
    /// primitive-sequence trick that keeps base-field coefficients small);
    /// the result is monic (or zero when both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        if let Some(g) = K::poly_gcd_hook(&self.coeffs, &rhs.coeffs) {
            return UniPoly::from_coeffs(g).into_monic();
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        if let Some(s) = K::prs_scale(&a.coeffs) {
            a = a.scale(&s.inv().expect("nonzero content"));
        }
        if let Some(s) = K::prs_scale(&b.coeffs) {
            b = b.scale(&s.inv().expect("nonzero content"));
        }
        while !b.is_zero() {
            let (_, mut r) = a.div_rem(&b).expect("nonzero divisor");
            if let Some(s) = K::prs_scale(&r.coeffs) {
                r = r.scale(&s.inv().expect("nonzero content"));
            }
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn into_monic(self) -> Self {
        match self.leading() {
            None => self,
            Some(l) if l == &K::one() => self,
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&K::from_int(i as i64)))
            .collect();
        UniPoly::from_coeffs(out)
    }

    /// Returns `p(x + a)` (Taylor shift by Horner recomposition).
    pub fn shift_arg(&self, a: &K) -> Self {
        let x_plus_a = UniPoly::from_coeffs(vec![a.clone(), K::one()]);
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&x_plus_a).add(&UniPoly::constant(c.clone()));
        }
        acc
    }
}

impl<K: Scalar> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<K: Scalar> fmt::Debug for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri, Rat};

    fn p(cs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_coeffs(cs.iter().map(|&c| ri(c)).collect())
    }

    #[test]
    fn degree_and_trim() {
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[3, 0, 0]).degree(), Some(0));
        assert_eq!(p(&[0, 1]).degree(), Some(1));
    }

    #[test]
    fn div_rem_round_trip() {
        let a = p(&[2, 0, -3, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        // (x-1)(x-2) and (x-1)(x+3)
        let a = p(&[2, -3, 1]);
        let b = p(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[]).gcd(&p(&[])), p(&[]));
        assert_eq!(a.gcd(&p(&[])), a);
    }

    #[test]
    fn shift_and_derivative() {
        let a = p(&[1, 2, 1]); // (x+1)^2
        assert_eq!(a.shift_arg(&ri(-1)), p(&[0, 0, 1]));
        assert_eq!(a.derivative(), p(&[2, 2]));
        assert_eq!(a.eval(&rat(1, 2)), rat(9, 4));
    }
}
