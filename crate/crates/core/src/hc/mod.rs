//! The model-independent highest coefficient of the scalar-product sum
//! formula, computed by two independent recurrences.
//!
//! Both recurrences peel one parameter from one of the two collections and
//! express the value through partition sums over shifted extended sets.
//! They share no code path beyond the elementary weights, which makes
//! their bit-exact agreement a strong correctness check.

mod closed;
mod gln;
mod izergin;
mod residue;

pub use closed::{hc_gl2_closed, hc_gl2_rec_first, hc_gl2_rec_second, hc_o3_closed};
pub use gln::{hc_gln_tilde, tilde_rec_first, tilde_rec_second};
pub use izergin::{izergin, izergin_rec_first, izergin_rec_second};
pub use residue::{hc_residue_check, residue_coefficient, HcResidueReport};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::kinematics::{
    g_set, h_set, inv_frak_f_set, inv_g_set, inv_h_set, omega, omega_plain,
    partitions_or_empty, shifted, Collection, Profile,
};

/// Which color to peel next. The default peels the highest nonempty color;
/// the alternative exists to test peel-order independence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Peel {
    #[default]
    Highest,
    Lowest,
}

/// A memoized highest-coefficient computation.
///
/// The memo key is the exact pair of collections, so one session must not
/// mix different couplings or ranks. Sessions are single-writer; create
/// one per computation.
type MemoKey<K> = (Vec<Vec<K>>, Vec<Vec<K>>);

pub struct HcSession<K: Scalar> {
    rank: usize,
    c: K,
    peel: Peel,
    memo: HashMap<MemoKey<K>, K>,
    memo_alt: HashMap<MemoKey<K>, K>,
    pub hits: u64,
    pub misses: u64,
}

impl<K: Scalar> HcSession<K> {
    pub fn new(rank: usize, c: K) -> Self {
        HcSession {
            rank,
            c,
            peel: Peel::Highest,
            memo: HashMap::new(),
            memo_alt: HashMap::new(),
            hits: 0,
            misses: 0,
        }
    }

    pub fn with_peel(rank: usize, c: K, peel: Peel) -> Self {
        HcSession { peel, ..HcSession::new(rank, c) }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len() + self.memo_alt.len()
    }

    fn check_shapes(&self, first: &[Vec<K>], second: &[Vec<K>]) -> Result<()> {
        if first.len() != self.rank || second.len() != self.rank {
            return Err(Error::IndexOutOfRange(format!(
                "collections have {} and {} colors, session rank is {}",
                first.len(),
                second.len(),
                self.rank
            )));
        }
        for s in 0..self.rank {
            if first[s].len() != second[s].len() {
                return Err(Error::CardinalityMismatch(format!(
                    "color {s}: {} vs {}",
                    first[s].len(),
                    second[s].len()
                )));
            }
        }
        Ok(())
    }

    /// Highest coefficient by the recurrence that peels a parameter from
    /// the second collection.
    pub fn hc(&mut self, first: &[Vec<K>], second: &[Vec<K>]) -> Result<K> {
        self.check_shapes(first, second)?;
        let key = (first.to_vec(), second.to_vec());
        if let Some(v) = self.memo.get(&key) {
            self.hits += 1;
            return Ok(v.clone());
        }
        self.misses += 1;
        let value = self.hc_uncached(first, second)?;
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    fn peel_color(&self, sets: &[Vec<K>]) -> Option<usize> {
        match self.peel {
            Peel::Highest => (0..self.rank).rev().find(|&s| !sets[s].is_empty()),
            Peel::Lowest => (0..self.rank).find(|&s| !sets[s].is_empty()),
        }
    }

    fn hc_uncached(&mut self, first: &[Vec<K>], second: &[Vec<K>]) -> Result<K> {
        let n = self.rank;
        let ell = match self.peel_color(second) {
            None => return Ok(K::one()),
            Some(ell) => ell,
        };
        let c = self.c.clone();
        // peel the last element of color ell from the second collection
        let mut v: Vec<Vec<K>> = second.to_vec();
        let z = v[ell].pop().expect("nonempty color");
        let u = first;

        // x^(s) = u^(s) for s <= ell, u^(s) + {z} above
        let mut x: Vec<Vec<K>> = u.to_vec();
        for set in x.iter_mut().skip(ell + 1) {
            set.push(z.clone());
        }

        let zs = std::slice::from_ref(&z);
        let u_upper: &[K] = if ell + 1 < n { &u[ell + 1] } else { &[] };
        // g(z, u^(ell)) h(u^(ell+1), z), shared by every term
        let common = g_set(zs, &u[ell], &c)?.mul(&h_set(u_upper, zs, &c)?);

        let mut total = K::zero();
        for j in -(n as i64)..=(ell as i64) {
            // cardinalities of v_I and x_III as functions of j
            let mut v_i = Vec::with_capacity(n);
            let mut x_iii = Vec::with_capacity(n);
            for s in 0..n as i64 {
                let big = if j < -s {
                    2
                } else if -s <= j && j <= s {
                    1
                } else {
                    0
                };
                if s < ell as i64 {
                    v_i.push(big.min(2));
                    x_iii.push(big);
                } else {
                    v_i.push(usize::from(j < -s));
                    x_iii.push(big);
                }
            }
            let v_profile = Profile::two_block(v_i);
            let x_profile =
                Profile { size_i: vec![0; n], size_iii: x_iii };

            for xp in partitions_or_empty(&x, &x_profile) {
                // Omega(x_II | x_III) with boundary II^(n) = {}, III^(n) = {z}
                let phi = common.mul(&omega(
                    &xp.block_ii,
                    &xp.block_iii,
                    &[],
                    std::slice::from_ref(&z),
                    &c,
                )?);
                for vp in partitions_or_empty(&v, &v_profile) {
                    let psi = self.psi_peel_second(&vp.block_i, &vp.block_ii, &v, &z, ell)?;
                    let inner = self.hc(&xp.block_ii, &vp.block_ii)?;
                    total = total.add(&phi.mul(&psi).mul(&inner));
                }
            }
        }
        Ok(total)
    }

    /// The recurrence coefficient attached to the peeled-second route.
    fn psi_peel_second(
        &self,
        v_i: &[Vec<K>],
        v_ii: &[Vec<K>],
        v_full: &[Vec<K>],
        z: &K,
        ell: usize,
    ) -> Result<K> {
        let c = &self.c;
        let n = self.rank;
        let zs = std::slice::from_ref(z);
        let o = omega_plain(v_i, v_ii, c)?;
        let v_upper: &[K] = if ell + 1 < n { &v_full[ell + 1] } else { &[] };
        if ell == 0 {
            let z0 = shifted(z, 0, c);
            Ok(g_set(std::slice::from_ref(&z0), &v_i[0], c)?
                .mul(&o)
                .mul(&inv_frak_f_set(std::slice::from_ref(&z0), &v_full[0], c)?)
                .mul(&inv_g_set(v_upper, zs, c)?))
        } else {
            Ok(o.mul(&inv_g_set(zs, &v_ii[ell - 1], c)?)
                .mul(&inv_h_set(zs, &v_full[ell], c)?)
                .mul(&inv_h_set(&v_ii[ell], zs, c)?)
                .mul(&inv_g_set(v_upper, zs, c)?))
        }
    }

    /// Highest coefficient by the independent recurrence that peels a
    /// parameter from the first collection.
    pub fn hc_alt(&mut self, first: &[Vec<K>], second: &[Vec<K>]) -> Result<K> {
        self.check_shapes(first, second)?;
        let key = (first.to_vec(), second.to_vec());
        if let Some(v) = self.memo_alt.get(&key) {
            self.hits += 1;
            return Ok(v.clone());
        }
        self.misses += 1;
        let value = self.hc_alt_uncached(first, second)?;
        self.memo_alt.insert(key, value.clone());
        Ok(value)
    }

    fn hc_alt_uncached(&mut self, first: &[Vec<K>], second: &[Vec<K>]) -> Result<K> {
        let n = self.rank;
        let ell = match self.peel_color(first) {
            None => return Ok(K::one()),
            Some(ell) => ell,
        };
        let c = self.c.clone();
        let mut v: Vec<Vec<K>> = first.to_vec();
        let z = v[ell].pop().expect("nonempty color");
        let u = second;

        // w^(s) = u^(s) + {z, z_s} below ell, u^(s) + {z_s} from ell up
        let mut w: Vec<Vec<K>> = u.to_vec();
        for (s, set) in w.iter_mut().enumerate() {
            if s < ell {
                set.push(z.clone());
            }
            set.push(shifted(&z, s as i64, &c));
        }

        let zs = std::slice::from_ref(&z);
        let zn = shifted(&z, n as i64, &c);

        // color-independent prefactor of the peeled-first weight
        let common = if ell == 0 {
            g_set(zs, &u[0], &c)?.neg()
        } else {
            let z1 = shifted(&z, 1, &c);
            g_set(std::slice::from_ref(&z1), &u[0], &c)?
                .mul(&inv_h_set(zs, &u[0], &c)?)
                .mul(&h_set(zs, &u[ell - 1], &c)?)
                .mul(&g_set(&u[ell], zs, &c)?)
        };

        let mut total = K::zero();
        for i in (ell as i64 + 1)..=(n as i64) {
            let w_profile = Profile::two_block(
                (0..n as i64).map(|s| if s < i { 2 } else { 1 }).collect(),
            );
            let v_profile = Profile {
                size_i: vec![0; n],
                size_iii: (0..n as i64)
                    .map(|s| usize::from(s > ell as i64 && s < i))
                    .collect(),
            };
            for wp in partitions_or_empty(&w, &w_profile) {
                // Omega(w_I | w_II) with boundary I^(n) = {z_n}, II^(n) = {}
                let phi = common.mul(&omega(
                    &wp.block_i,
                    &wp.block_ii,
                    std::slice::from_ref(&zn),
                    &[],
                    &c,
                )?);
                for vp in partitions_or_empty(&v, &v_profile) {
                    let psi = self.psi_peel_first(&vp.block_ii, &vp.block_iii, &v, &z, ell)?;
                    let inner = self.hc_alt(&vp.block_ii, &wp.block_ii)?;
                    total = total.add(&phi.mul(&psi).mul(&inner));
                }
            }
        }
        Ok(total)
    }

    /// The recurrence coefficient attached to the peeled-first route.
    fn psi_peel_first(
        &self,
        v_ii: &[Vec<K>],
        v_iii: &[Vec<K>],
        v_full: &[Vec<K>],
        z: &K,
        ell: usize,
    ) -> Result<K> {
        let c = &self.c;
        let n = self.rank;
        let zs = std::slice::from_ref(z);
        let o = omega_plain(v_ii, v_iii, c)?;
        let v_upper_ii: &[K] = if ell + 1 < n { &v_ii[ell + 1] } else { &[] };
        if ell == 0 {
            let z0 = shifted(z, 0, c);
            Ok(o.mul(&inv_frak_f_set(std::slice::from_ref(&z0), &v_full[0], c)?)
                .mul(&inv_g_set(v_upper_ii, zs, c)?))
        } else {
            Ok(o.mul(&inv_g_set(zs, &v_full[ell - 1], c)?)
                .mul(&inv_h_set(zs, &v_full[ell], c)?)
                .mul(&inv_h_set(&v_full[ell], zs, c)?)
                .mul(&inv_g_set(v_upper_ii, zs, c)?))
        }
    }
}

/// Highest coefficient `Z(first | second)` via the peeled-second
/// recurrence, with a fresh memo session.
pub fn hc<K: Scalar>(first: &Collection<K>, second: &Collection<K>) -> Result<K> {
    let mut session = HcSession::new(first.rank(), first.coupling_as::<K>());
    session.hc(first.sets(), second.sets())
}

/// Highest coefficient via the independent peeled-first recurrence.
pub fn hc_alt<K: Scalar>(first: &Collection<K>, second: &Collection<K>) -> Result<K> {
    let mut session = HcSession::new(first.rank(), first.coupling_as::<K>());
    session.hc_alt(first.sets(), second.sets())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri, Rat};
    use crate::kinematics::Collection;

    fn coll(c: i64, sets: Vec<Vec<i64>>) -> Collection<Rat> {
        Collection::new(
            ri(c),
            sets.into_iter().map(|s| s.into_iter().map(ri).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn base_case_is_one() {
        let e = coll(1, vec![vec![]]);
        assert_eq!(hc(&e, &e).unwrap(), ri(1));
        assert_eq!(hc_alt(&e, &e).unwrap(), ri(1));
    }

    #[test]
    fn rank_one_single_parameter() {
        // closed form at r=1: Z({u}|{v}) = c/(v-u); here c=1, u=0, v=2
        let first = coll(1, vec![vec![0]]);
        let second = coll(1, vec![vec![2]]);
        assert_eq!(hc(&first, &second).unwrap(), rat(1, 2));
        assert_eq!(hc_alt(&first, &second).unwrap(), rat(1, 2));
    }

    #[test]
    fn cardinality_mismatch_is_error() {
        let first = coll(1, vec![vec![0]]);
        let second = coll(1, vec![vec![]]);
        assert!(matches!(hc(&first, &second), Err(Error::CardinalityMismatch(_))));
    }

    #[test]
    fn cross_recurrence_rank_one_r2() {
        let first = coll(1, vec![vec![0, 3]]);
        let second = coll(1, vec![vec![5, 7]]);
        let a = hc(&first, &second).unwrap();
        let b = hc_alt(&first, &second).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cross_recurrence_rank_two() {
        let first = coll(1, vec![vec![0], vec![5]]);
        let second = coll(1, vec![vec![2], vec![3]]);
        let a = hc(&first, &second).unwrap();
        let b = hc_alt(&first, &second).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn peel_order_independence() {
        let first = coll(1, vec![vec![0], vec![5]]);
        let second = coll(1, vec![vec![2], vec![3]]);
        let mut high = HcSession::new(2, ri(1));
        let mut low = HcSession::with_peel(2, ri(1), Peel::Lowest);
        assert_eq!(
            high.hc(first.sets(), second.sets()).unwrap(),
            low.hc(first.sets(), second.sets()).unwrap()
        );
    }

    #[test]
    fn permutation_invariance_within_color() {
        let first = coll(1, vec![vec![0, 3]]);
        let second = coll(1, vec![vec![5, 7]]);
        let swapped_first = coll(1, vec![vec![3, 0]]);
        let swapped_second = coll(1, vec![vec![7, 5]]);
        let a = hc(&first, &second).unwrap();
        assert_eq!(a, hc(&swapped_first, &second).unwrap());
        assert_eq!(a, hc(&first, &swapped_second).unwrap());
    }
}
