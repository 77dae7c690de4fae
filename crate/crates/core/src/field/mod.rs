//! Exact scalar arithmetic and the univariate rational-function field.
//!
//! Every formula evaluator in this crate is generic over [`Scalar`], so the
//! same code path runs over plain rationals, over rational functions in one
//! indeterminate (for exact limits and residues), over nested rational
//! functions (for sequential multi-variable limits), and over `f64` shadows
//! (for the floating sanity checks of the norm).

mod poly;
mod rat;
mod ratfun;

pub use poly::UniPoly;
pub use rat::{rat, ri, Rat};
pub use ratfun::UniRatFun;

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// A field element usable by the evaluation kernels.
///
/// Equality must be exact structural equality of canonical forms (except
/// for the floating shadow type, where it is bitwise). Hashing must agree
/// with equality; it is used for memoization keys.
pub trait Scalar: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplicative inverse; `DivisionByZero` on zero.
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Embeds a base rational.
    fn from_rat(r: &Rat) -> Self;

    /// Returns the base rational when the element is a constant, `None`
    /// for genuinely symbolic (or inexact) elements.
    fn as_rat(&self) -> Option<Rat>;

    /// Optional rescaling for polynomial remainder sequences: a nonzero
    /// scalar whose removal keeps the coefficients small (the content for
    /// rationals). `None` skips normalization. Correctness never depends
    /// on this; gcds are defined up to units.
    fn prs_scale(_values: &[Self]) -> Option<Self> {
        None
    }

    /// Optional specialized polynomial gcd (coefficients lowest degree
    /// first, result up to units). The base rationals route through a
    /// primitive remainder sequence over integers; tower fields fall back
    /// to generic Euclid.
    fn poly_gcd_hook(_a: &[Self], _b: &[Self]) -> Option<Vec<Self>> {
        None
    }

    fn from_int(v: i64) -> Self {
        Self::from_rat(&Rat::from_int(v))
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        self.recip()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn prs_scale(values: &[Self]) -> Option<Self> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::Zero;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::from(1);
        for v in values {
            if v.is_zero() {
                continue;
            }
            num_gcd = num_gcd.gcd(v.numer());
            den_lcm = den_lcm.lcm(v.denom());
        }
        if num_gcd.is_zero() {
            return None;
        }
        Some(Rat::new(num_gcd, den_lcm))
    }

    fn poly_gcd_hook(a: &[Self], b: &[Self]) -> Option<Vec<Self>> {
        Some(int_prs::rat_poly_gcd(a, b))
    }
}

/// Primitive polynomial remainder sequence over the integers, used as the
/// fast gcd route for rational coefficients.
mod int_prs {
    use super::Rat;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, Zero};

    fn trim(v: &mut Vec<BigInt>) {
        while matches!(v.last(), Some(c) if c.is_zero()) {
            v.pop();
        }
    }

    fn content(v: &[BigInt]) -> BigInt {
        let mut g = BigInt::zero();
        for c in v {
            g = g.gcd(c);
        }
        g
    }

    fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
        trim(&mut v);
        let g = content(&v);
        if g.is_zero() {
            return v;
        }
        for c in &mut v {
            *c = &*c / &g;
        }
        v
    }

    /// `lc(b)^(deg a - deg b + 1) a  mod  b`, computed without divisions.
    fn pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
        let db = b.len() - 1;
        let lb = b.last().expect("nonzero divisor").clone();
        while a.len() > db {
            let la = a.last().expect("trimmed").clone();
            let shift = a.len() - 1 - db;
            for c in a.iter_mut() {
                *c = &*c * &lb;
            }
            for (k, bc) in b.iter().enumerate() {
                let idx = shift + k;
                let delta = &la * bc;
                a[idx] = &a[idx] - delta;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        a
    }

    fn int_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
        a = primitive(a);
        b = primitive(b);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(a, &b);
            a = b;
            b = primitive(r);
        }
        if let Some(l) = a.last() {
            if l.is_negative() {
                for c in &mut a {
                    *c = -&*c;
                }
            }
        }
        a
    }

    /// Clears denominators, runs the integer remainder sequence, lifts
    /// back to rational coefficients (up to units).
    pub fn rat_poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let clear = |v: &[Rat]| -> Vec<BigInt> {
            let mut lcm = BigInt::from(1);
            for c in v {
                lcm = lcm.lcm(c.denom());
            }
            v.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
        };
        int_gcd(clear(a), clear(b))
            .into_iter()
            .map(Rat::from_int)
            .collect()
    }
}

/// Floating shadow scalar for directional sanity checks.
///
/// Equality and hashing are bitwise; this is only sound because the float
/// path never relies on cancellation, it just evaluates formulas at
/// concrete points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct F64(pub f64);

impl Eq for F64 {}

impl Hash for F64 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state);
    }
}

impl fmt::Display for F64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Scalar for F64 {
    fn zero() -> Self {
        F64(0.0)
    }
    fn one() -> Self {
        F64(1.0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        F64(self.0 + rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        F64(self.0 - rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        F64(self.0 * rhs.0)
    }
    fn neg(&self) -> Self {
        F64(-self.0)
    }
    fn inv(&self) -> Result<Self> {
        if self.0 == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(F64(1.0 / self.0))
    }
    fn from_rat(r: &Rat) -> Self {
        F64(r.to_f64())
    }
    fn as_rat(&self) -> Option<Rat> {
        None
    }
}

/// Evaluates a polynomial with `Rat` coefficients at a point of any scalar
/// field (Horner form). Coefficients are listed lowest degree first.
pub fn eval_poly_lifted<K: Scalar>(coeffs: &[Rat], x: &K) -> K {
    let mut acc = K::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(&K::from_rat(c));
    }
    acc
}
