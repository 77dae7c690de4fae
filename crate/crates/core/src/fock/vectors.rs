//! Bethe vectors and dual Bethe vectors built bottom-up by the recurrence
//! relations, plus their contractions.

use std::collections::HashMap;

use super::monodromy::Monodromy;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::kinematics::{
    omega_plain, partitions_or_empty, profile_rec_b, profile_rec_c, psi_rec, Collection,
};
use crate::scalar::AlphaOracle;

/// Memoizing builder of kets and bras over one chain. One builder per
/// scalar field; symbolic fields are admitted for exact limit taking.
pub struct BvBuilder<'m, K: Scalar> {
    chain: &'m Monodromy,
    kets: HashMap<Vec<Vec<K>>, Vec<K>>,
    bras: HashMap<Vec<Vec<K>>, Vec<K>>,
}

impl<'m, K: Scalar> BvBuilder<'m, K> {
    pub fn new(chain: &'m Monodromy) -> Self {
        BvBuilder { chain, kets: HashMap::new(), bras: HashMap::new() }
    }

    pub fn chain(&self) -> &Monodromy {
        self.chain
    }

    fn vacuum(&self) -> Vec<K> {
        let mut v = vec![K::zero(); self.chain.dim()];
        v[self.chain.vacuum_index()] = K::one();
        v
    }

    fn alpha(&self, color: usize, point: &K) -> Result<K> {
        self.chain.chain_alpha().alpha(color, point)
    }

    fn lambda_at(&self, index: i64, z: &K) -> Result<K> {
        self.chain.lambda(index).eval_lifted(z)
    }

    /// The ket `B(u)`, built by peeling the highest nonempty color.
    pub fn ket(&mut self, u: &Collection<K>) -> Result<Vec<K>> {
        if u.rank() != self.chain.rank() {
            return Err(Error::IndexOutOfRange("rank mismatch with the chain".into()));
        }
        self.ket_sets(u.sets(), &u.coupling_as::<K>())
    }

    fn ket_sets(&mut self, sets: &[Vec<K>], c: &K) -> Result<Vec<K>> {
        let n = self.chain.rank();
        let ell = match (0..n).rev().find(|&s| !sets[s].is_empty()) {
            None => return Ok(self.vacuum()),
            Some(ell) => ell,
        };
        let key = sets.to_vec();
        if let Some(v) = self.kets.get(&key) {
            return Ok(v.clone());
        }
        let mut rest = sets.to_vec();
        let z = rest[ell].pop().expect("nonempty color");
        let lambda = self.lambda_at(ell as i64 + 1, &z)?;
        if lambda.is_zero() {
            return Err(Error::PoleAtPoint(format!("lambda_{} vanishes at {z}", ell + 1)));
        }

        let mut total = vec![K::zero(); self.chain.dim()];
        for i in -(n as i64)..=(ell as i64) {
            for j in (ell as i64 + 1)..=(n as i64) {
                let profile = profile_rec_b(i, j, ell, n)?;
                for part in partitions_or_empty(&rest, &profile) {
                    let psi = psi_rec(&part, &rest, &z, ell, i, c)?;
                    let mut alpha_prod = K::one();
                    for s in ell + 1..j as usize {
                        for point in &part.block_iii[s] {
                            alpha_prod = alpha_prod.mul(&self.alpha(s, point)?);
                        }
                    }
                    let inner = self.ket_sets(&part.block_ii, c)?;
                    let acted = self.chain.apply_ket(i, j, &z, &inner)?;
                    let coef = psi.mul(&alpha_prod).div(&lambda)?;
                    for (t, a) in acted.into_iter().enumerate() {
                        if !a.is_zero() {
                            total[t] = total[t].add(&coef.mul(&a));
                        }
                    }
                }
            }
        }
        self.kets.insert(key, total.clone());
        Ok(total)
    }

    /// The bra `C(v)`, built by the dual recurrence.
    pub fn bra(&mut self, v: &Collection<K>) -> Result<Vec<K>> {
        if v.rank() != self.chain.rank() {
            return Err(Error::IndexOutOfRange("rank mismatch with the chain".into()));
        }
        self.bra_sets(v.sets(), &v.coupling_as::<K>())
    }

    fn bra_sets(&mut self, sets: &[Vec<K>], c: &K) -> Result<Vec<K>> {
        let n = self.chain.rank();
        let ell = match (0..n).rev().find(|&s| !sets[s].is_empty()) {
            None => return Ok(self.vacuum()),
            Some(ell) => ell,
        };
        let key = sets.to_vec();
        if let Some(v) = self.bras.get(&key) {
            return Ok(v.clone());
        }
        let mut rest = sets.to_vec();
        let z = rest[ell].pop().expect("nonempty color");
        let lambda = self.lambda_at(ell as i64 + 1, &z)?;
        if lambda.is_zero() {
            return Err(Error::PoleAtPoint(format!("lambda_{} vanishes at {z}", ell + 1)));
        }

        let mut total = vec![K::zero(); self.chain.dim()];
        for j in -(n as i64)..=(ell as i64) {
            for i in (ell as i64 + 1)..=(n as i64) {
                let profile = profile_rec_c(j, i, ell, n)?;
                for part in partitions_or_empty(&rest, &profile) {
                    let psi = psi_rec(&part, &rest, &z, ell, j, c)?;
                    let mut alpha_prod = K::one();
                    for s in ell + 1..i as usize {
                        for point in &part.block_iii[s] {
                            alpha_prod = alpha_prod.mul(&self.alpha(s, point)?);
                        }
                    }
                    let inner = self.bra_sets(&part.block_ii, c)?;
                    let acted = self.chain.apply_bra(i, j, &z, &inner)?;
                    let coef = psi.mul(&alpha_prod).div(&lambda)?;
                    for (t, a) in acted.into_iter().enumerate() {
                        if !a.is_zero() {
                            total[t] = total[t].add(&coef.mul(&a));
                        }
                    }
                }
            }
        }
        self.bras.insert(key, total.clone());
        Ok(total)
    }

    /// Scalar product `C(v) B(u)` by direct contraction.
    pub fn oracle_scalar(&mut self, v: &Collection<K>, u: &Collection<K>) -> Result<K> {
        let bra = self.bra(v)?;
        let ket = self.ket(u)?;
        let mut acc = K::zero();
        for (b, k) in bra.iter().zip(&ket) {
            if !b.is_zero() && !k.is_zero() {
                acc = acc.add(&b.mul(k));
            }
        }
        Ok(acc)
    }
}

/// Exact vector equality between the composite-chain Bethe vector and the
/// partition sum of sub-chain Bethe vectors:
/// `B(u) = sum Omega(u_II|u_I) B1(u_I) (x) B2(u_II) prod alpha2(u^(s)_I)`,
/// where the chain splits into the first `l1` and remaining sites.
pub fn coproduct_check<K: Scalar>(
    full: &Monodromy,
    first: &Monodromy,
    second: &Monodromy,
    u: &Collection<K>,
) -> Result<bool> {
    let n = full.rank();
    let c: K = u.coupling_as();
    let lhs = BvBuilder::new(full).ket(u)?;
    let mut b1 = BvBuilder::new(first);
    let mut b2 = BvBuilder::new(second);
    let alpha2 = second.chain_alpha();

    let mut rhs = vec![K::zero(); full.dim()];
    let cards = u.cardinalities();
    let mut k = vec![0usize; n];
    'outer: loop {
        let profile = crate::kinematics::Profile::two_block(k.clone());
        for part in partitions_or_empty(u.sets(), &profile) {
            let omega = omega_plain(&part.block_ii, &part.block_i, &c)?;
            let mut alpha_prod = K::one();
            for s in 0..n {
                for point in &part.block_i[s] {
                    alpha_prod = alpha_prod.mul(&alpha2.alpha(s, point)?);
                }
            }
            let v1 = b1.ket_sets(&part.block_i, &c)?;
            let v2 = b2.ket_sets(&part.block_ii, &c)?;
            let coef = omega.mul(&alpha_prod);
            for (t1, a1) in v1.iter().enumerate() {
                if a1.is_zero() {
                    continue;
                }
                for (t2, a2) in v2.iter().enumerate() {
                    if a2.is_zero() {
                        continue;
                    }
                    let t = t1 * second.dim() + t2;
                    rhs[t] = rhs[t].add(&coef.mul(&a1.mul(a2)));
                }
            }
        }
        for s in (0..n).rev() {
            k[s] += 1;
            if k[s] <= cards[s] {
                continue 'outer;
            }
            k[s] = 0;
        }
        break;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri, Rat};
    use crate::fock::monodromy::{build_monodromy, ChainSpec};

    fn coll(sets: Vec<Vec<Rat>>) -> Collection<Rat> {
        Collection::new(ri(1), sets).unwrap()
    }

    #[test]
    fn single_site_ket_matches_direct_action() {
        let spec = ChainSpec::new(1, ri(1), vec![ri(0)]);
        let m = build_monodromy(&spec).unwrap();
        let mut b = BvBuilder::new(&m);
        let u = rat(5, 3);
        let ket = b.ket(&coll(vec![vec![u.clone()]])).unwrap();
        // B({u}) = T_{0,1}(u)|0> / lambda_1(u)
        let lambda = m.lambda(1).eval(&u).unwrap();
        let direct = m.entry_at(0, 1, &u).unwrap().mul_vec(&{
            let mut v = vec![Rat::zero(); 3];
            v[m.vacuum_index()] = Rat::one();
            v
        });
        let expected: Vec<Rat> = direct.into_iter().map(|a| a / lambda.clone()).collect();
        assert_eq!(ket, expected);
        // the single-site creation entry moves the lowest weight once
        assert_eq!(ket.iter().filter(|a| !a.is_zero()).count(), 1);
    }

    #[test]
    fn oracle_scalar_fixture() {
        // n=1, L=1, xi=0, c=1, u=2, v=3 -> 4/15
        let spec = ChainSpec::new(1, ri(1), vec![ri(0)]);
        let m = build_monodromy(&spec).unwrap();
        let mut b = BvBuilder::new(&m);
        let s = b
            .oracle_scalar(&coll(vec![vec![ri(3)]]), &coll(vec![vec![ri(2)]]))
            .unwrap();
        assert_eq!(s, rat(4, 15));
        // empty scalar product is <0|0> = 1
        let e = coll(vec![vec![]]);
        assert_eq!(b.oracle_scalar(&e, &e).unwrap(), ri(1));
        // mismatched cardinalities annihilate exactly
        let s = b.oracle_scalar(&coll(vec![vec![ri(3)]]), &e).unwrap();
        assert_eq!(s, ri(0));
    }

    #[test]
    fn coproduct_two_sites() {
        let c = ri(1);
        let full = build_monodromy(&ChainSpec::new(1, c.clone(), vec![ri(0), rat(1, 3)])).unwrap();
        let first = build_monodromy(&ChainSpec::new(1, c.clone(), vec![ri(0)])).unwrap();
        let second = build_monodromy(&ChainSpec::new(1, c.clone(), vec![rat(1, 3)])).unwrap();
        let u = coll(vec![vec![rat(7, 5)]]);
        assert!(coproduct_check(&full, &first, &second, &u).unwrap());
    }
}

#[cfg(test)]
mod oracle_vs_formula {
    use super::*;
    use crate::field::{rat, ri, Rat};
    use crate::fock::monodromy::{build_monodromy, ChainSpec};
    use crate::scalar::scalar_sum;

    fn coll(sets: Vec<Vec<Rat>>) -> Collection<Rat> {
        Collection::new(ri(1), sets).unwrap()
    }

    #[test]
    fn rank_one_r2_l2() {
        let m = build_monodromy(&ChainSpec::new(1, ri(1), vec![ri(0), rat(1, 3)])).unwrap();
        let alpha = m.chain_alpha();
        let v = coll(vec![vec![ri(3), rat(9, 2)]]);
        let u = coll(vec![vec![ri(2), rat(7, 4)]]);
        let mut b = BvBuilder::new(&m);
        let lhs = b.oracle_scalar(&v, &u).unwrap();
        let rhs = scalar_sum(&v, &u, &alpha).unwrap().value;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_two_r11_l1() {
        let m = build_monodromy(&ChainSpec::new(2, ri(1), vec![ri(0)])).unwrap();
        let alpha = m.chain_alpha();
        let v = coll(vec![vec![ri(3)], vec![rat(9, 2)]]);
        let u = coll(vec![vec![ri(2)], vec![rat(7, 4)]]);
        let mut b = BvBuilder::new(&m);
        let lhs = b.oracle_scalar(&v, &u).unwrap();
        let rhs = scalar_sum(&v, &u, &alpha).unwrap().value;
        assert_eq!(lhs, rhs);
    }
}
