//! Elementary rational weights and the Omega weight.
//!
//! Conventions: a set-valued argument means the product of the function
//! over all elements, and the empty set contributes 1.

use crate::error::{Error, Result};
use crate::field::Scalar;

fn diff_nonzero<K: Scalar>(u: &K, v: &K) -> Result<K> {
    let d = u.sub(v);
    if d.is_zero() {
        return Err(Error::PoleAtPoint(format!("coinciding arguments {u} and {v}")));
    }
    Ok(d)
}


/// `f(u,v) = (u - v + c)/(u - v)`
pub fn f<K: Scalar>(u: &K, v: &K, c: &K) -> Result<K> {
    let d = diff_nonzero(u, v)?;
    d.add(c).div(&d)
}

/// `frak_f(u,v) = (u - v + c/2)/(u - v)`
pub fn frak_f<K: Scalar>(u: &K, v: &K, c: &K) -> Result<K> {
    let d = diff_nonzero(u, v)?;
    let half_c = c.div(&K::from_int(2))?;
    d.add(&half_c).div(&d)
}

/// `g(u,v) = c/(u - v)`
pub fn g<K: Scalar>(u: &K, v: &K, c: &K) -> Result<K> {
    c.div(&diff_nonzero(u, v)?)
}

/// `h(u,v) = (u - v + c)/c`
pub fn h<K: Scalar>(u: &K, v: &K, c: &K) -> Result<K> {
    u.sub(v).add(c).div(c)
}

/// Color-dependent weight: `frak_f` for color 0 and `g(u,v)/h(v,u)`
/// otherwise.
pub fn gamma<K: Scalar>(color: usize, u: &K, v: &K, c: &K) -> Result<K> {
    if color == 0 {
        frak_f(u, v, c)
    } else {
        g(u, v, c)?.div(&h(v, u, c)?)
    }
}

/// `1/f(u,v) = (u - v)/(u - v + c)`: finite at coinciding arguments (where
/// `f` has its pole and a division by it produces a vanishing factor),
/// singular only where `f` itself vanishes.
pub fn inv_f<K: Scalar>(u: &K, v: &K, c: &K) -> Result<K> {
    let d = u.sub(v);
    let den = d.add(c);
    if den.is_zero() {
        return Err(Error::PoleAtPoint(format!("f({u}, {v}) = 0")));
    }
    d.div(&den)
}

/// `1/g(u,v) = (u - v)/c`: entire, vanishes at coinciding arguments.
pub fn inv_g<K: Scalar>(u: &K, v: &K, c: &K) -> Result<K> {
    u.sub(v).div(c)
}

/// `1/h(u,v) = c/(u - v + c)`: singular only where `h` vanishes.
pub fn inv_h<K: Scalar>(u: &K, v: &K, c: &K) -> Result<K> {
    let den = u.sub(v).add(c);
    if den.is_zero() {
        return Err(Error::PoleAtPoint(format!("h({u}, {v}) = 0")));
    }
    c.div(&den)
}

/// `1/frak_f(u,v) = (u - v)/(u - v + c/2)`: finite at coinciding
/// arguments, singular where `frak_f` vanishes.
pub fn inv_frak_f<K: Scalar>(u: &K, v: &K, c: &K) -> Result<K> {
    let d = u.sub(v);
    let den = d.add(&c.div(&K::from_int(2))?);
    if den.is_zero() {
        return Err(Error::PoleAtPoint(format!("frak_f({u}, {v}) = 0")));
    }
    d.div(&den)
}

/// `1/f` over all pairs.
pub fn inv_f_set<K: Scalar>(xs: &[K], ys: &[K], c: &K) -> Result<K> {
    prod_pairs(inv_f, xs, ys, c)
}

/// `1/g` over all pairs.
pub fn inv_g_set<K: Scalar>(xs: &[K], ys: &[K], c: &K) -> Result<K> {
    prod_pairs(inv_g, xs, ys, c)
}

/// `1/h` over all pairs.
pub fn inv_h_set<K: Scalar>(xs: &[K], ys: &[K], c: &K) -> Result<K> {
    prod_pairs(inv_h, xs, ys, c)
}

/// `1/frak_f` over all pairs.
pub fn inv_frak_f_set<K: Scalar>(xs: &[K], ys: &[K], c: &K) -> Result<K> {
    prod_pairs(inv_frak_f, xs, ys, c)
}

/// Selector for the pointwise evaluator exposed to the CLI and tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KinFn {
    F,
    FrakF,
    G,
    H,
    Gamma,
}

/// Evaluates one of the elementary weights at scalar arguments; `color`
/// only matters for [`KinFn::Gamma`].
pub fn kin_eval<K: Scalar>(kind: KinFn, u: &K, v: &K, c: &K, color: usize) -> Result<K> {
    match kind {
        KinFn::F => f(u, v, c),
        KinFn::FrakF => frak_f(u, v, c),
        KinFn::G => g(u, v, c),
        KinFn::H => h(u, v, c),
        KinFn::Gamma => gamma(color, u, v, c),
    }
}

/// Product of a two-argument weight over all pairs of two sets.
pub fn prod_pairs<K: Scalar>(
    fun: impl Fn(&K, &K, &K) -> Result<K>,
    xs: &[K],
    ys: &[K],
    c: &K,
) -> Result<K> {
    let mut acc = K::one();
    for x in xs {
        for y in ys {
            acc = acc.mul(&fun(x, y, c)?);
        }
    }
    Ok(acc)
}

/// `f` over all pairs.
pub fn f_set<K: Scalar>(xs: &[K], ys: &[K], c: &K) -> Result<K> {
    prod_pairs(f, xs, ys, c)
}

/// `frak_f` over all pairs.
pub fn frak_f_set<K: Scalar>(xs: &[K], ys: &[K], c: &K) -> Result<K> {
    prod_pairs(frak_f, xs, ys, c)
}

/// `g` over all pairs.
pub fn g_set<K: Scalar>(xs: &[K], ys: &[K], c: &K) -> Result<K> {
    prod_pairs(g, xs, ys, c)
}

/// `h` over all pairs.
pub fn h_set<K: Scalar>(xs: &[K], ys: &[K], c: &K) -> Result<K> {
    prod_pairs(h, xs, ys, c)
}

/// `gamma_s` over all pairs.
pub fn gamma_set<K: Scalar>(color: usize, xs: &[K], ys: &[K], c: &K) -> Result<K> {
    prod_pairs(|u, v, c| gamma(color, u, v, c), xs, ys, c)
}

/// The Omega weight of two colored collections,
/// `prod_s gamma_s(x^(s), y^(s)) h(y^(s+1), x^(s)) / g(x^(s+1), y^(s))`,
/// where the color-n sets default to empty and may be overridden by the
/// boundary arguments (the action formula fixes them to shifted copies of
/// the acted spectral parameter).
pub fn omega<K: Scalar>(
    x: &[Vec<K>],
    y: &[Vec<K>],
    x_boundary: &[K],
    y_boundary: &[K],
    c: &K,
) -> Result<K> {
    let n = x.len();
    assert_eq!(n, y.len(), "collections must share the rank");
    fn upper<'a, K>(sets: &'a [Vec<K>], bnd: &'a [K], s: usize, n: usize) -> &'a [K] {
        if s + 1 < n {
            &sets[s + 1]
        } else {
            bnd
        }
    }
    let mut acc = K::one();
    for s in 0..n {
        acc = acc.mul(&gamma_set(s, &x[s], &y[s], c)?);
        acc = acc.mul(&h_set(upper(y, y_boundary, s, n), &x[s], c)?);
        acc = acc.mul(&inv_g_set(upper(x, x_boundary, s, n), &y[s], c)?);
    }
    Ok(acc)
}

/// Omega with empty color-n boundaries (the common case outside the action
/// formula).
pub fn omega_plain<K: Scalar>(x: &[Vec<K>], y: &[Vec<K>], c: &K) -> Result<K> {
    omega(x, y, &[], &[], c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri, Rat};

    #[test]
    fn pointwise_values() {
        let c = ri(1);
        assert_eq!(f(&ri(3), &ri(1), &c).unwrap(), rat(3, 2));
        assert_eq!(g(&ri(3), &ri(1), &c).unwrap(), rat(1, 2));
        assert_eq!(h(&ri(3), &ri(1), &c).unwrap(), ri(3));
        assert_eq!(frak_f(&ri(3), &ri(1), &c).unwrap(), rat(5, 4));
        // gamma_1(3,1) = g(3,1)/h(1,3) = (1/2)/(-1)
        assert_eq!(gamma(1, &ri(3), &ri(1), &c).unwrap(), rat(-1, 2));
        // zero of the numerator is a legitimate value
        assert_eq!(f(&ri(0), &ri(1), &c).unwrap(), ri(0));
        assert!(matches!(f(&ri(1), &ri(1), &c), Err(Error::PoleAtPoint(_))));
    }

    #[test]
    fn dispatcher_matches_direct_functions() {
        let c = ri(1);
        let (u, v) = (ri(3), ri(1));
        assert_eq!(kin_eval(KinFn::F, &u, &v, &c, 0).unwrap(), f(&u, &v, &c).unwrap());
        assert_eq!(kin_eval(KinFn::FrakF, &u, &v, &c, 0).unwrap(), frak_f(&u, &v, &c).unwrap());
        assert_eq!(kin_eval(KinFn::G, &u, &v, &c, 0).unwrap(), g(&u, &v, &c).unwrap());
        assert_eq!(kin_eval(KinFn::H, &u, &v, &c, 0).unwrap(), h(&u, &v, &c).unwrap());
        assert_eq!(kin_eval(KinFn::Gamma, &u, &v, &c, 1).unwrap(), rat(-1, 2));
    }

    #[test]
    fn empty_set_products_are_one() {
        let c = ri(1);
        assert_eq!(f_set(&[], &[ri(5)], &c).unwrap(), ri(1));
        assert_eq!(omega_plain::<Rat>(&[vec![]], &[vec![ri(2)]], &c).unwrap(), ri(1));
    }

    #[test]
    fn omega_rank_one_reduces_to_frak_f() {
        let c = ri(1);
        let val = omega_plain(&[vec![ri(3)]], &[vec![ri(1)]], &c).unwrap();
        assert_eq!(val, frak_f(&ri(3), &ri(1), &c).unwrap());
        assert_eq!(val, rat(5, 4));
    }

    #[test]
    fn omega_rank_two_hand_value() {
        let c = ri(1);
        // x = ({0},{5}), y = ({2},{3}):
        // frak_f(0,2)*gamma_1(5,3)*h(3,0)/g(5,2) = (3/4)(-1/2)(4)/(1/3) = -9/2
        let x = vec![vec![ri(0)], vec![ri(5)]];
        let y = vec![vec![ri(2)], vec![ri(3)]];
        assert_eq!(omega_plain(&x, &y, &c).unwrap(), rat(-9, 2));
    }

    #[test]
    fn omega_multiplicative_in_first_argument() {
        let c = ri(1);
        let x1 = vec![vec![ri(7)], vec![ri(5)]];
        let x2 = vec![vec![ri(9)], vec![]];
        let joined = vec![vec![ri(7), ri(9)], vec![ri(5)]];
        let y = vec![vec![ri(2)], vec![ri(3)]];
        let lhs = omega_plain(&joined, &y, &c).unwrap();
        let rhs = omega_plain(&x1, &y, &c).unwrap() * omega_plain(&x2, &y, &c).unwrap();
        assert_eq!(lhs, rhs);
    }
}
