//! Closed forms of the highest coefficient for the two rank-one cases, and
//! the rank-one recurrence relations they solve.

use super::izergin::izergin;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::kinematics::{f_set, h_set};

fn check_equal<K>(first: &[K], second: &[K]) -> Result<()> {
    if first.len() != second.len() {
        return Err(Error::CardinalityMismatch(format!(
            "{} vs {}",
            first.len(),
            second.len()
        )));
    }
    Ok(())
}

/// Rank-one orthogonal closed form:
/// `Z(u|v) = 2^|u| K^{(c/2)}(v|u)`.
pub fn hc_o3_closed<K: Scalar>(first: &[K], second: &[K], c: &K) -> Result<K> {
    check_equal(first, second)?;
    let half_c = c.div(&K::from_int(2))?;
    let mut pow = K::one();
    for _ in 0..first.len() {
        pow = pow.mul(&K::from_int(2));
    }
    Ok(pow.mul(&izergin(second, first, &half_c)?))
}

/// Double product `h(x, x)` over all ordered pairs including the diagonal
/// (where `h(u, u) = 1`).
fn h_double<K: Scalar>(x: &[K], c: &K) -> Result<K> {
    h_set(x, x, c)
}

/// Rank-one linear closed form:
/// `Z(u|v) = K^{(c)}(v|u) / (h(u,u) h(v,v))`.
pub fn hc_gl2_closed<K: Scalar>(first: &[K], second: &[K], c: &K) -> Result<K> {
    check_equal(first, second)?;
    izergin(second, first, c)?
        .div(&h_double(first, c)?.mul(&h_double(second, c)?))
        .map_err(|e| match e {
            Error::DivisionByZero => Error::PoleAtPoint("vanishing diagonal h product".into()),
            other => other,
        })
}

/// Right-hand side of the linear rank-one recurrence peeling from the
/// second slot:
/// `Z(u|v,z) = f(z,u)/(h(z,v)h(v,z)) sum f(u_II,u_III)/h(z,u_III)
///  Z(u_II|v)/(h(u_II,u_III)h(u_III,u_II))` over `|u_III| = 1`.
pub fn hc_gl2_rec_second<K: Scalar>(u: &[K], v: &[K], z: &K, c: &K) -> Result<K> {
    if u.len() != v.len() + 1 {
        return Err(Error::CardinalityMismatch("needs |u| = |v| + 1".into()));
    }
    let zs = std::slice::from_ref(z);
    let mut sum = K::zero();
    for k in 0..u.len() {
        let u_iii = std::slice::from_ref(&u[k]);
        let u_ii: Vec<K> = u.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, x)| x.clone()).collect();
        let term = f_set(&u_ii, u_iii, c)?
            .div(&h_set(zs, u_iii, c)?)?
            .mul(&hc_gl2_closed(&u_ii, v, c)?)
            .div(&h_set(&u_ii, u_iii, c)?.mul(&h_set(u_iii, &u_ii, c)?))?;
        sum = sum.add(&term);
    }
    Ok(f_set(zs, u, c)?.div(&h_set(zs, v, c)?.mul(&h_set(v, zs, c)?))?.mul(&sum))
}

/// Right-hand side of the linear rank-one recurrence peeling from the
/// first slot:
/// `Z(v,z|u) = f(u,z)/(h(z,v)h(v,z)) sum f(u_I,u_II)/h(u_I,z)
///  Z(v|u_II)/(h(u_I,u_II)h(u_II,u_I))` over `|u_I| = 1`.
pub fn hc_gl2_rec_first<K: Scalar>(v: &[K], z: &K, u: &[K], c: &K) -> Result<K> {
    if u.len() != v.len() + 1 {
        return Err(Error::CardinalityMismatch("needs |u| = |v| + 1".into()));
    }
    let zs = std::slice::from_ref(z);
    let mut sum = K::zero();
    for k in 0..u.len() {
        let u_i = std::slice::from_ref(&u[k]);
        let u_ii: Vec<K> = u.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, x)| x.clone()).collect();
        let term = f_set(u_i, &u_ii, c)?
            .div(&h_set(u_i, zs, c)?)?
            .mul(&hc_gl2_closed(v, &u_ii, c)?)
            .div(&h_set(u_i, &u_ii, c)?.mul(&h_set(&u_ii, u_i, c)?))?;
        sum = sum.add(&term);
    }
    Ok(f_set(u, zs, c)?.div(&h_set(zs, v, c)?.mul(&h_set(v, zs, c)?))?.mul(&sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri, Rat};
    use crate::hc::{hc, hc_alt};
    use crate::kinematics::Collection;

    #[test]
    fn o3_fixtures() {
        let c = ri(1);
        assert_eq!(hc_o3_closed(&[ri(0)], &[ri(2)], &c).unwrap(), rat(1, 2));
        let e: [Rat; 0] = [];
        assert_eq!(hc_o3_closed(&e, &e, &c).unwrap(), ri(1));
    }

    #[test]
    fn o3_matches_recurrences_r2() {
        let c = ri(1);
        let first = vec![ri(0), ri(3)];
        let second = vec![ri(5), ri(7)];
        let closed = hc_o3_closed(&first, &second, &c).unwrap();
        let fc = Collection::new(c.clone(), vec![first.clone()]).unwrap();
        let sc = Collection::new(c.clone(), vec![second.clone()]).unwrap();
        assert_eq!(closed, hc(&fc, &sc).unwrap());
        assert_eq!(closed, hc_alt(&fc, &sc).unwrap());
    }

    #[test]
    fn gl2_fixture_and_recurrences() {
        let c = ri(1);
        // r = 1: diagonal h factors are 1
        assert_eq!(hc_gl2_closed(&[ri(0)], &[ri(2)], &c).unwrap(), rat(1, 2));

        // r = 2: closed form satisfies both one-parameter recurrences
        let u = vec![ri(0), ri(3), ri(9)];
        let v = vec![ri(5), ri(7)];
        let z = rat(11, 3);
        let mut vz = v.clone();
        vz.push(z.clone());
        assert_eq!(
            hc_gl2_closed(&u, &vz, &c).unwrap(),
            hc_gl2_rec_second(&u, &v, &z, &c).unwrap()
        );
        assert_eq!(
            hc_gl2_closed(&vz, &u, &c).unwrap(),
            hc_gl2_rec_first(&v, &z, &u, &c).unwrap()
        );
    }
}
