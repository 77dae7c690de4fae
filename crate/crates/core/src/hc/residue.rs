//! Exact pole structure of the highest coefficient when a second-slot
//! parameter collides with its first-slot partner.

use super::HcSession;
use crate::error::{Error, Result};
use crate::field::{Rat, Scalar, UniRatFun};
use crate::kinematics::{omega_plain, Collection};

/// Outcome of the residue check: the exact residue of `Z(u|v)` in
/// `v^(p)_k` at `u^(p)_k`, and the predicted value
/// `c * A^(p)_k * Z(u-ring | v-ring)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcResidueReport {
    pub residue: Rat,
    pub expected: Rat,
    pub pass: bool,
}

/// The amplitude `A^(p)_k = Omega(u_pk | u-ring) Omega(v-ring | u_pk)`
/// evaluated at the collision point.
fn amplitude(
    u_ring: &Collection<Rat>,
    v_ring: &Collection<Rat>,
    p: usize,
    u_pk: &Rat,
) -> Result<Rat> {
    let n = u_ring.rank();
    let c = u_ring.coupling().clone();
    let single = Collection::singleton(n, c.clone(), p, u_pk.clone());
    let left = omega_plain(single.sets(), u_ring.sets(), &c)?;
    let right = omega_plain(v_ring.sets(), single.sets(), &c)?;
    Ok(left * right)
}

/// Verifies the simple-pole behavior of the highest coefficient: with
/// `x = v^(p)_k` treated as an indeterminate, the residue of `Z(u|v)` at
/// `x = u^(p)_k` must equal `c * A^(p)_k * Z(u-ring|v-ring)` exactly.
pub fn hc_residue_check(
    first: &Collection<Rat>,
    second: &Collection<Rat>,
    p: usize,
    k: usize,
) -> Result<HcResidueReport> {
    let n = first.rank();
    if p >= n || k >= second.cardinality(p) {
        return Err(Error::IndexOutOfRange(format!("color {p}, index {k}")));
    }
    let c = first.coupling().clone();
    let u_pk = first.set(p)[k].clone();

    // lift the collections into the rational-function field with the
    // designated entry as the indeterminate
    type Rf = UniRatFun<Rat>;
    let lift_first: Collection<Rf> = first.map(|r| Rf::constant(r.clone()));
    let mut second_sets: Vec<Vec<Rf>> = second.map(|r| Rf::constant(r.clone())).sets().to_vec();
    second_sets[p][k] = Rf::gen();
    let z_sym = hc_symbolic(&lift_first, &second_sets)?;
    let residue = z_sym
        .residue_at(&u_pk)?
        .as_rat()
        .ok_or_else(|| Error::Parse("residue is not a constant".into()))?;

    let (_, u_ring) = first.with_removed(p, k);
    let (_, v_ring) = second.with_removed(p, k);
    let a = amplitude(&u_ring, &v_ring, p, &u_pk)?;
    let mut session = HcSession::new(n, c.clone());
    let z_ring = session.hc(u_ring.sets(), v_ring.sets())?;
    let expected = c * a * z_ring;
    let pass = residue == expected;
    Ok(HcResidueReport { residue, expected, pass })
}

fn hc_symbolic(
    first: &Collection<UniRatFun<Rat>>,
    second_sets: &[Vec<UniRatFun<Rat>>],
) -> Result<UniRatFun<Rat>> {
    let mut session = HcSession::new(first.rank(), first.coupling_as());
    session.hc(first.sets(), second_sets)
}

/// Coefficient extraction used by tests: residue of `Z` in the designated
/// variable at an arbitrary point (zero away from poles).
pub fn residue_coefficient(
    first: &Collection<Rat>,
    second: &Collection<Rat>,
    p: usize,
    k: usize,
    at: &Rat,
) -> Result<Rat> {
    type Rf = UniRatFun<Rat>;
    let lift_first: Collection<Rf> = first.map(|r| Rf::constant(r.clone()));
    let mut second_sets: Vec<Vec<Rf>> = second.map(|r| Rf::constant(r.clone())).sets().to_vec();
    second_sets[p][k] = Rf::gen();
    let z_sym = hc_symbolic(&lift_first, &second_sets)?;
    z_sym
        .residue_at(at)?
        .as_rat()
        .ok_or_else(|| Error::Parse("residue is not a constant".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri, Rat};

    fn coll(sets: Vec<Vec<Rat>>) -> Collection<Rat> {
        Collection::new(ri(1), sets).unwrap()
    }

    #[test]
    fn rank_one_single_parameter() {
        // Z({u}|{x}) = c/(x-u): residue at x=u is c; A = 1, Z(0|0) = 1
        let first = coll(vec![vec![ri(0)]]);
        let second = coll(vec![vec![ri(2)]]);
        let report = hc_residue_check(&first, &second, 0, 0).unwrap();
        assert!(report.pass);
        assert_eq!(report.residue, ri(1));
    }

    #[test]
    fn rank_one_two_parameters() {
        let first = coll(vec![vec![ri(0), rat(7, 2)]]);
        let second = coll(vec![vec![ri(5), ri(9)]]);
        for k in 0..2 {
            let report = hc_residue_check(&first, &second, 0, k).unwrap();
            assert!(report.pass, "k = {k}: {report:?}");
        }
    }

    #[test]
    fn rank_two_both_colors() {
        let first = coll(vec![vec![ri(0)], vec![ri(5)]]);
        let second = coll(vec![vec![ri(2)], vec![ri(3)]]);
        for p in 0..2 {
            let report = hc_residue_check(&first, &second, p, 0).unwrap();
            assert!(report.pass, "p = {p}: {report:?}");
        }
    }

    #[test]
    fn regular_point_has_zero_residue() {
        let first = coll(vec![vec![ri(0)]]);
        let second = coll(vec![vec![ri(2)]]);
        // residue at a non-colliding point
        let r = residue_coefficient(&first, &second, 0, 0, &ri(17)).unwrap();
        assert_eq!(r, ri(0));
    }
}
