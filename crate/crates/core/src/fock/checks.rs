//! Structural identity checks of the oracle: exchange relations, action
//! formula, zero modes, transfer eigenproblem.

use super::monodromy::Monodromy;
use super::vectors::BvBuilder;
use crate::error::{Error, Result};
use crate::field::Rat;
use crate::kinematics::{
    f_set, kappa, partitions_or_empty, phi_action, profile_action, shifted, Collection,
    ProfileOutcome,
};
use crate::linalg::Mat;
use crate::scalar::{bae_residual, AlphaOracle};

/// Spot-checks the exchange relation for one index quadruple.
pub fn commutation_spot_check(
    m: &Monodromy,
    z: &Rat,
    w: &Rat,
    (i, j, k, l): (i64, i64, i64, i64),
) -> Result<bool> {
    let n = m.rank() as i64;
    let c = m.coupling().clone();
    let y = z - w;
    let g1 = &c / &y;
    let g2 = &c / &(&y + &(&c * &kappa::<Rat>(m.rank())));
    let t = |a: i64, b: i64, x: &Rat| m.entry_at(a, b, x);
    let lhs = t(i, j, z)?.mul(&t(k, l, w)?).sub(&t(k, l, w)?.mul(&t(i, j, z)?));
    let mut rhs = t(k, j, w)?.mul(&t(i, l, z)?).sub(&t(k, j, z)?.mul(&t(i, l, w)?)).scale(&g1);
    if k == -i {
        let mut sum = Mat::zero(m.dim(), m.dim());
        for p in -n..=n {
            sum = sum.add(&t(p, j, z)?.mul(&t(-p, l, w)?));
        }
        rhs = rhs.add(&sum.scale(&g2));
    }
    if l == -j {
        let mut sum = Mat::zero(m.dim(), m.dim());
        for p in -n..=n {
            sum = sum.add(&t(k, -p, w)?.mul(&t(i, p, z)?));
        }
        rhs = rhs.sub(&sum.scale(&g2));
    }
    Ok(lhs == rhs)
}

/// Verifies the action formula on a vector: `T_{i,j}(z) B(u) / lambda_n(z)`
/// must equal the partition sum over extended sets with the discard rule.
pub fn action_formula_check(
    m: &Monodromy,
    u: &Collection<Rat>,
    i: i64,
    j: i64,
    z: &Rat,
) -> Result<bool> {
    let n = m.rank();
    let c = u.coupling().clone();
    let mut builder = BvBuilder::new(m);
    let ket = builder.ket(u)?;
    let lambda_n = m.lambda(n as i64).eval(z)?;
    if lambda_n.is_zero() {
        return Err(Error::PoleAtPoint(format!("lambda_n vanishes at {z}")));
    }
    let lhs: Vec<Rat> = m
        .apply_ket(i, j, z, &ket)?
        .into_iter()
        .map(|a| a / lambda_n.clone())
        .collect();

    // extended sets w^(s) = u^(s) + {z, z_s}
    let mut w: Vec<Vec<Rat>> = u.sets().to_vec();
    for (s, set) in w.iter_mut().enumerate() {
        set.push(z.clone());
        set.push(shifted(z, s as i64, &c));
    }
    let sizes: Vec<usize> = w.iter().map(Vec::len).collect();
    let alpha = m.chain_alpha();

    let mut rhs = vec![Rat::zero(); m.dim()];
    if let ProfileOutcome::Profile(profile) = profile_action(i, j, n, &sizes)? {
        for part in partitions_or_empty(&w, &profile) {
            let phi = phi_action(&part, u.set(0), z, n, i, j, &c)?;
            let mut alpha_prod = Rat::one();
            for s in 0..n {
                for point in &part.block_iii[s] {
                    alpha_prod = alpha_prod * alpha.alpha(s, point)?;
                }
            }
            let inner = builder.ket(&Collection::new(c.clone(), part.block_ii.clone())?)?;
            let coef = phi * alpha_prod;
            for (t, a) in inner.into_iter().enumerate() {
                if !a.is_zero() {
                    rhs[t] = &rhs[t] + &(&coef * &a);
                }
            }
        }
    }
    Ok(lhs == rhs)
}

/// Checks the grading `t_s B(u) = r_s B(u)` and `C(u) t_s = r_s C(u)`, and
/// the orthogonal-algebra commutator of the zero modes on a quadruple.
pub fn zero_mode_check(m: &Monodromy, u: &Collection<Rat>) -> Result<bool> {
    let mut builder = BvBuilder::new(m);
    let ket = builder.ket(u)?;
    let bra = builder.bra(u)?;
    for s in 0..m.rank() {
        let t_s = m.grading_operator(s)?;
        let r_s = Rat::from_int(u.cardinality(s) as i64);
        let expect_ket: Vec<Rat> = ket.iter().map(|a| a * &r_s).collect();
        if t_s.mul_vec(&ket) != expect_ket {
            return Ok(false);
        }
        let expect_bra: Vec<Rat> = bra.iter().map(|a| a * &r_s).collect();
        if t_s.vec_mul(&bra) != expect_bra {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verifies the orthogonal-algebra commutator of zero modes:
/// `[T[0]_{ij}, T[0]_{kl}] = delta_{il} T[0]_{kj} - delta_{jk} T[0]_{il}
///  - delta_{j,-l} T[0]_{k,-i} + delta_{i,-k} T[0]_{-j,l}`.
pub fn zero_mode_commutator_check(
    m: &Monodromy,
    (i, j, k, l): (i64, i64, i64, i64),
) -> Result<bool> {
    let zm = |a: i64, b: i64| m.zero_mode(a, b);
    let lhs = zm(i, j)?.mul(&zm(k, l)?).sub(&zm(k, l)?.mul(&zm(i, j)?));
    let mut rhs = Mat::zero(m.dim(), m.dim());
    if i == l {
        rhs = rhs.add(&zm(k, j)?);
    }
    if j == k {
        rhs = rhs.sub(&zm(i, l)?);
    }
    if j == -l {
        rhs = rhs.sub(&zm(k, -i)?);
    }
    if i == -k {
        rhs = rhs.add(&zm(-j, l)?);
    }
    Ok(lhs == rhs)
}

/// Transfer-matrix eigenvalue as assembled from the raw eigenvalue
/// functions:
/// `tau(z;u) = lambda_0(z) f(u^(0),z_0) f(z,u^(0))
///  + sum_{s>=1} lambda_s(z) f(u^(s),z) f(z,u^(s-1))
///  + lambda_{-s}(z) f(u^(s-1),z_{s-1}) f(z_s,u^(s))`.
pub fn transfer_eigenvalue(m: &Monodromy, u: &Collection<Rat>, z: &Rat) -> Result<Rat> {
    let n = m.rank();
    let c = u.coupling().clone();
    let zs = std::slice::from_ref(z);
    let z0 = shifted(z, 0, &c);
    let mut tau = m.lambda(0).eval(z)?
        * f_set(u.set(0), std::slice::from_ref(&z0), &c)?
        * f_set(zs, u.set(0), &c)?;
    for s in 1..=n {
        let upper: &[Rat] = if s < n { u.set(s) } else { &[] };
        let term_plus = m.lambda(s as i64).eval(z)?
            * f_set(upper, zs, &c)?
            * f_set(zs, u.set(s - 1), &c)?;
        let zs_minus = shifted(z, s as i64 - 1, &c);
        let zs_shift = shifted(z, s as i64, &c);
        let term_minus = m.lambda(-(s as i64)).eval(z)?
            * f_set(u.set(s - 1), std::slice::from_ref(&zs_minus), &c)?
            * f_set(std::slice::from_ref(&zs_shift), upper, &c)?;
        tau = tau + term_plus + term_minus;
    }
    Ok(tau)
}

/// Checks `T(z) B(u) = tau(z;u) B(u)` for on-shell parameters; errors with
/// `NotOnShell` when the Bethe ratios differ from one.
pub fn transfer_eigencheck(m: &Monodromy, u: &Collection<Rat>, z: &Rat) -> Result<bool> {
    let alpha = m.chain_alpha();
    for s in 0..m.rank() {
        for k in 0..u.cardinality(s) {
            let residual = bae_residual(u, &alpha, s, k)?;
            if !residual.is_one() {
                return Err(Error::NotOnShell(format!(
                    "Bethe ratio at color {s}, index {k} is {residual}"
                )));
            }
        }
    }
    let mut builder = BvBuilder::new(m);
    let ket = builder.ket(u)?;
    let tau = transfer_eigenvalue(m, u, z)?;
    let lhs = m.transfer_at(z)?.mul_vec(&ket);
    let rhs: Vec<Rat> = ket.iter().map(|a| a * &tau).collect();
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri};
    use crate::fock::monodromy::{build_monodromy, ChainSpec};

    fn coll(sets: Vec<Vec<Rat>>) -> Collection<Rat> {
        Collection::new(ri(1), sets).unwrap()
    }

    #[test]
    fn exchange_relation_small_chains() {
        use crate::fock::exchange_relation_check;
        let m = build_monodromy(&ChainSpec::new(1, ri(1), vec![ri(0)])).unwrap();
        assert!(exchange_relation_check(&m, &ri(2), &ri(5)).unwrap());
        let m = build_monodromy(&ChainSpec::new(1, ri(1), vec![ri(0), rat(1, 3)])).unwrap();
        assert!(exchange_relation_check(&m, &rat(7, 2), &rat(-9, 4)).unwrap());
    }

    #[test]
    fn commutation_spot() {
        let m = build_monodromy(&ChainSpec::new(1, ri(1), vec![ri(0)])).unwrap();
        assert!(commutation_spot_check(&m, &ri(2), &ri(5), (0, 1, 1, 0)).unwrap());
    }

    #[test]
    fn action_formula_diagonal_vacuum() {
        let m = build_monodromy(&ChainSpec::new(1, ri(1), vec![ri(0)])).unwrap();
        let empty = coll(vec![vec![]]);
        assert!(action_formula_check(&m, &empty, 1, 1, &ri(2)).unwrap());
    }

    #[test]
    fn action_formula_with_parameter() {
        let m = build_monodromy(&ChainSpec::new(1, ri(1), vec![ri(0), rat(1, 3)])).unwrap();
        let u = coll(vec![vec![rat(7, 5)]]);
        for (i, j) in [(0, 1), (-1, 1), (1, 1), (-1, 0), (0, 0)] {
            assert!(
                action_formula_check(&m, &u, i, j, &ri(4)).unwrap(),
                "action of T_({i},{j})"
            );
        }
    }

    #[test]
    fn zero_modes_grade_by_cardinality() {
        let m = build_monodromy(&ChainSpec::new(1, ri(1), vec![ri(0), rat(1, 3)])).unwrap();
        let u = coll(vec![vec![rat(7, 5)]]);
        assert!(zero_mode_check(&m, &u).unwrap());
        let empty = coll(vec![vec![]]);
        assert!(zero_mode_check(&m, &empty).unwrap());
        assert!(zero_mode_commutator_check(&m, (0, 1, 1, 0)).unwrap());
    }

    #[test]
    fn transfer_eigenproblem_on_shell() {
        // homogeneous two-site chain: u = 0 solves the Bethe equations
        let m = build_monodromy(&ChainSpec::new(1, ri(1), vec![ri(0), ri(0)])).unwrap();
        let u = coll(vec![vec![ri(0)]]);
        assert!(transfer_eigencheck(&m, &u, &rat(7, 3)).unwrap());
        // vacuum is always an eigenvector
        let empty = coll(vec![vec![]]);
        assert!(transfer_eigencheck(&m, &empty, &rat(7, 3)).unwrap());
        // off-shell parameters are rejected: alpha_0(1) = 9
        let off = coll(vec![vec![ri(1)]]);
        assert!(matches!(
            transfer_eigencheck(&m, &off, &rat(7, 3)),
            Err(Error::NotOnShell(_))
        ));
    }
}
