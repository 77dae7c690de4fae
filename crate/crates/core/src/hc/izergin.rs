//! The Izergin determinant and its one-parameter recurrence relations.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::kinematics::{f_set, g, h, h_set};
use crate::linalg::Mat;

/// Triangular product `prod_{a<b} g(u_b, u_a)`.
fn delta_g<K: Scalar>(u: &[K], c: &K) -> Result<K> {
    let mut acc = K::one();
    for a in 0..u.len() {
        for b in a + 1..u.len() {
            acc = acc.mul(&g(&u[b], &u[a], c)?);
        }
    }
    Ok(acc)
}

/// Triangular product `prod_{a<b} g(u_a, u_b)`.
fn delta_g_prime<K: Scalar>(u: &[K], c: &K) -> Result<K> {
    let mut acc = K::one();
    for a in 0..u.len() {
        for b in a + 1..u.len() {
            acc = acc.mul(&g(&u[a], &u[b], c)?);
        }
    }
    Ok(acc)
}

/// Izergin determinant
/// `K_r(v|u) = h(v,u) delta_g(u) delta_g'(v) det[g(v_a,u_b)/h(v_a,u_b)]`,
/// with `K_0 = 1`.
pub fn izergin<K: Scalar>(v: &[K], u: &[K], c: &K) -> Result<K> {
    if v.len() != u.len() {
        return Err(Error::CardinalityMismatch(format!(
            "izergin needs equal cardinalities, got {} and {}",
            v.len(),
            u.len()
        )));
    }
    let r = v.len();
    if r == 0 {
        return Ok(K::one());
    }
    let mut m = Mat::zero(r, r);
    for a in 0..r {
        for b in 0..r {
            let hv = h(&v[a], &u[b], c)?;
            if hv.is_zero() {
                return Err(Error::PoleAtPoint(format!("h({}, {}) = 0", v[a], u[b])));
            }
            m.set(a, b, g(&v[a], &u[b], c)?.div(&hv)?);
        }
    }
    let det = m.det()?;
    Ok(h_set(v, u, c)?
        .mul(&delta_g(u, c)?)
        .mul(&delta_g_prime(v, c)?)
        .mul(&det))
}

/// Right-hand side of the recurrence
/// `K_r({v,z}|u) = f(z,u) sum f(u_II,u_I)/h(z,u_I) K_{r-1}(v|u_II)`
/// over partitions with `|u_I| = 1`.
pub fn izergin_rec_first<K: Scalar>(v: &[K], z: &K, u: &[K], c: &K) -> Result<K> {
    if u.len() != v.len() + 1 {
        return Err(Error::CardinalityMismatch(
            "first-argument recurrence needs |u| = |v| + 1".into(),
        ));
    }
    let zs = std::slice::from_ref(z);
    let mut sum = K::zero();
    for k in 0..u.len() {
        let u_i = std::slice::from_ref(&u[k]);
        let u_ii: Vec<K> = u.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, x)| x.clone()).collect();
        let term = f_set(&u_ii, u_i, c)?
            .div(&h_set(zs, u_i, c)?)
            .map_err(to_pole)?
            .mul(&izergin(v, &u_ii, c)?);
        sum = sum.add(&term);
    }
    Ok(f_set(zs, u, c)?.mul(&sum))
}

/// Right-hand side of the recurrence
/// `K_r(u|{v,z}) = f(u,z) sum f(u_I,u_II)/h(u_I,z) K_{r-1}(u_II|v)`
/// over partitions with `|u_I| = 1`.
pub fn izergin_rec_second<K: Scalar>(u: &[K], v: &[K], z: &K, c: &K) -> Result<K> {
    if u.len() != v.len() + 1 {
        return Err(Error::CardinalityMismatch(
            "second-argument recurrence needs |u| = |v| + 1".into(),
        ));
    }
    let zs = std::slice::from_ref(z);
    let mut sum = K::zero();
    for k in 0..u.len() {
        let u_i = std::slice::from_ref(&u[k]);
        let u_ii: Vec<K> = u.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, x)| x.clone()).collect();
        let term = f_set(u_i, &u_ii, c)?
            .div(&h_set(u_i, zs, c)?)
            .map_err(to_pole)?
            .mul(&izergin(&u_ii, v, c)?);
        sum = sum.add(&term);
    }
    Ok(f_set(u, zs, c)?.mul(&sum))
}

fn to_pole(e: Error) -> Error {
    match e {
        Error::DivisionByZero => Error::PoleAtPoint("vanishing h factor".into()),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri, Rat};

    #[test]
    fn single_and_empty() {
        let c = ri(1);
        assert_eq!(izergin(&[ri(4)], &[ri(0)], &c).unwrap(), rat(1, 4));
        let e: [Rat; 0] = [];
        assert_eq!(izergin(&e, &e, &c).unwrap(), ri(1));
        assert!(izergin(&[ri(1)], &e, &c).is_err());
    }

    #[test]
    fn two_by_two_fixture() {
        let c = ri(1);
        let v = [ri(4), ri(5)];
        let u = [ri(0), ri(2)];
        assert_eq!(izergin(&v, &u, &c).unwrap(), rat(1, 4));
    }

    #[test]
    fn recurrences_hold() {
        let c = ri(1);
        let v = [ri(4), rat(11, 2)];
        let z = rat(13, 3);
        let u = [ri(0), ri(2), ri(7)];
        let mut vz = v.to_vec();
        vz.push(z.clone());
        let lhs_first = izergin(&vz, &u, &c).unwrap();
        assert_eq!(lhs_first, izergin_rec_first(&v, &z, &u, &c).unwrap());
        let lhs_second = izergin(&u, &vz, &c).unwrap();
        assert_eq!(lhs_second, izergin_rec_second(&u, &v, &z, &c).unwrap());
    }
}
