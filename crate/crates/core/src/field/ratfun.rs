//! Univariate rational functions in canonical form.
//!
//! Canonical form: `gcd(num, den) = 1` and `den` monic, restored after every
//! arithmetic operation. Exact limits and residues read straight off the
//! canonical representation: removable singularities have already been
//! cancelled, so a vanishing denominator is a genuine pole.

use std::fmt;

use super::{Scalar, UniPoly};
use crate::error::{Error, Result};
use crate::field::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniRatFun<K: Scalar> {
    num: UniPoly<K>,
    den: UniPoly<K>,
}

impl<K: Scalar> UniRatFun<K> {
    /// Builds `num/den` in canonical form; errors when `den` is zero.
    pub fn new(num: UniPoly<K>, den: UniPoly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: UniPoly<K>, den: UniPoly<K>) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return UniRatFun { num: UniPoly::zero(), den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            let (n, _) = num.div_rem(&g).expect("gcd divides numerator");
            let (d, _) = den.div_rem(&g).expect("gcd divides denominator");
            (n, d)
        };
        let lead_inv = den.leading().expect("nonzero").inv().expect("nonzero leading");
        UniRatFun { num: num.scale(&lead_inv), den: den.scale(&lead_inv) }
    }

    pub fn from_poly(p: UniPoly<K>) -> Self {
        UniRatFun { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The indeterminate `x`.
    pub fn gen() -> Self {
        Self::from_poly(UniPoly::gen())
    }

    pub fn num(&self) -> &UniPoly<K> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<K> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::canonical(num, self.den.mul(&rhs.den))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den));
        Self::canonical(num, self.den.mul(&rhs.den))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::canonical(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn neg(&self) -> Self {
        UniRatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Exact evaluation at a point of the coefficient field.
    pub fn eval(&self, a: &K) -> Result<K> {
        let d = self.den.eval(a);
        if d.is_zero() {
            let n = self.num.eval(a);
            if n.is_zero() {
                // unreachable for canonical forms over a field
                return Err(Error::IndeterminateAtPoint(format!("{a}")));
            }
            return Err(Error::PoleAtPoint(format!("{a}")));
        }
        self.num.eval(a).div(&d)
    }

    /// Exact limit as the indeterminate tends to `a`. Identical to `eval`
    /// because canonicalization already removed spurious singularities.
    pub fn limit_at(&self, a: &K) -> Result<K> {
        self.eval(a)
    }

    /// Residue at `a` for at most a simple pole; `0` at regular points,
    /// `HigherOrderPole` when `(x-a)^2` divides the denominator.
    pub fn residue_at(&self, a: &K) -> Result<K> {
        if !self.den.eval(a).is_zero() {
            return Ok(K::zero());
        }
        // den = (x - a) * d1 by synthetic division
        let linear = UniPoly::from_coeffs(vec![a.neg(), K::one()]);
        let (d1, r) = self.den.div_rem(&linear).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        let d1_at = d1.eval(a);
        if d1_at.is_zero() {
            return Err(Error::HigherOrderPole(format!("{a}")));
        }
        self.num.eval(a).div(&d1_at)
    }

    /// Exact limit as the indeterminate tends to infinity. `0` when the
    /// numerator degree is smaller, the leading-coefficient ratio when the
    /// degrees agree, and a pole error otherwise.
    pub fn limit_at_infinity(&self) -> Result<K> {
        if self.is_zero() {
            return Ok(K::zero());
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        if dn < dd {
            Ok(K::zero())
        } else if dn == dd {
            self.num.leading().unwrap().div(self.den.leading().unwrap())
        } else {
            Err(Error::PoleAtPoint("infinity".into()))
        }
    }

    pub fn derivative(&self) -> Self {
        let num = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        Self::canonical(num, self.den.mul(&self.den))
    }

    /// Returns `f(x + a)`.
    pub fn shift_arg(&self, a: &K) -> Self {
        Self::canonical(self.num.shift_arg(a), self.den.shift_arg(a))
    }

    /// Evaluates a rational function with `Rat` coefficients at a point of
    /// any scalar field.
    pub fn eval_lifted<T: Scalar>(&self, x: &T) -> Result<T>
    where
        K: AsRatCoeff,
    {
        let num = eval_lifted_poly::<K, T>(&self.num, x);
        let den = eval_lifted_poly::<K, T>(&self.den, x);
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::IndeterminateAtPoint(format!("{x}")));
            }
            return Err(Error::PoleAtPoint(format!("{x}")));
        }
        num.div(&den)
    }
}

/// Marker for coefficient fields that embed into every scalar field
/// (i.e. the base rationals).
pub trait AsRatCoeff: Scalar {
    fn to_rat(&self) -> &Rat;
}

impl AsRatCoeff for Rat {
    fn to_rat(&self) -> &Rat {
        self
    }
}

fn eval_lifted_poly<K: AsRatCoeff, T: Scalar>(p: &UniPoly<K>, x: &T) -> T {
    let mut acc = T::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&T::from_rat(c.to_rat()));
    }
    acc
}

impl<K: Scalar> Scalar for UniRatFun<K> {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
    fn is_zero(&self) -> bool {
        UniRatFun::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        UniRatFun::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UniRatFun::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UniRatFun::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UniRatFun::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        UniRatFun::inv(self)
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(K::from_rat(r))
    }
    fn as_rat(&self) -> Option<Rat> {
        if self.num.is_constant() && self.den.is_constant() {
            let n = self.num.coeff(0).as_rat()?;
            let d = self.den.coeff(0).as_rat()?;
            if d.is_zero() {
                return None;
            }
            return Some(&n / &d);
        }
        None
    }
}

impl<K: Scalar> fmt::Display for UniRatFun<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<K: Scalar> fmt::Debug for UniRatFun<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, ri, Rat};

    type Rf = UniRatFun<Rat>;

    fn x() -> Rf {
        Rf::gen()
    }

    fn c(v: i64) -> Rf {
        Rf::constant(ri(v))
    }

    #[test]
    fn arithmetic_canonical() {
        // x + 1/x = (x^2+1)/x
        let f = x().add(&x().inv().unwrap());
        assert_eq!(f.num(), &UniPoly::from_coeffs(vec![ri(1), ri(0), ri(1)]));
        assert_eq!(f.den(), &UniPoly::gen());

        // (x^2-1)/(x-1) * 1 = x+1
        let g = Rf::new(
            UniPoly::from_coeffs(vec![ri(-1), ri(0), ri(1)]),
            UniPoly::from_coeffs(vec![ri(-1), ri(1)]),
        )
        .unwrap();
        assert_eq!(g, x().add(&c(1)));

        // (1/(x-2)) / (1/(x-2)) = 1
        let h = x().sub(&c(2)).inv().unwrap();
        assert_eq!(h.div(&h).unwrap(), Rf::one());
    }

    #[test]
    fn eval_and_poles() {
        let f = x().add(&c(1)).div(&x().sub(&c(1))).unwrap();
        assert_eq!(f.eval(&ri(3)).unwrap(), ri(2));
        let sq = x().mul(&x());
        assert_eq!(sq.eval(&rat(-1, 2)).unwrap(), rat(1, 4));
        assert!(matches!(x().inv().unwrap().eval(&ri(0)), Err(Error::PoleAtPoint(_))));
    }

    #[test]
    fn limits() {
        // (x^2-1)/(x-1) -> 2 as x -> 1
        let g = Rf::new(
            UniPoly::from_coeffs(vec![ri(-1), ri(0), ri(1)]),
            UniPoly::from_coeffs(vec![ri(-1), ri(1)]),
        )
        .unwrap();
        assert_eq!(g.limit_at(&ri(1)).unwrap(), ri(2));
        let pole = x().sub(&c(1)).inv().unwrap();
        assert!(matches!(pole.limit_at(&ri(1)), Err(Error::PoleAtPoint(_))));
    }

    #[test]
    fn difference_quotient_limit_gives_derivative() {
        // alpha(v) = ((v + 1/2)/(v - 1/2))^2;
        // lim_{v->0} c (alpha(v) - alpha(0)) / (0 - v) = -alpha'(0) = -8
        let half = Rf::constant(rat(1, 2));
        let base = x().add(&half).div(&x().sub(&half)).unwrap();
        let alpha = base.mul(&base);
        let alpha_at_zero = Rf::constant(alpha.eval(&ri(0)).unwrap());
        let quotient = alpha.sub(&alpha_at_zero).div(&Rf::zero().sub(&x())).unwrap();
        assert_eq!(quotient.limit_at(&ri(0)).unwrap(), ri(-8));
    }

    #[test]
    fn residues() {
        // 1/(x(x-1)) at 0 -> -1
        let f = x().mul(&x().sub(&c(1))).inv().unwrap();
        assert_eq!(f.residue_at(&ri(0)).unwrap(), ri(-1));
        // (x+3)/(x-2) at 2 -> 5
        let g = x().add(&c(3)).div(&x().sub(&c(2))).unwrap();
        assert_eq!(g.residue_at(&ri(2)).unwrap(), ri(5));
        // regular point
        assert_eq!(x().add(&c(1)).residue_at(&ri(0)).unwrap(), ri(0));
        // double pole
        let d = x().mul(&x()).inv().unwrap();
        assert!(matches!(d.residue_at(&ri(0)), Err(Error::HigherOrderPole(_))));
    }

    #[test]
    fn residue_matches_eval_of_shifted_product() {
        // residue(f, a) == eval((x-a) f, a) when the product is regular
        let f = x().add(&c(3)).div(&x().sub(&c(2))).unwrap();
        let shifted = x().sub(&c(2)).mul(&f);
        assert_eq!(f.residue_at(&ri(2)).unwrap(), shifted.eval(&ri(2)).unwrap());
    }

    #[test]
    fn limit_at_infinity() {
        let f = x().mul(&c(3)).add(&c(1)).div(&x().add(&c(5))).unwrap();
        assert_eq!(f.limit_at_infinity().unwrap(), ri(3));
        assert_eq!(x().inv().unwrap().limit_at_infinity().unwrap(), ri(0));
        assert!(x().limit_at_infinity().is_err());
    }

    #[test]
    fn nested_field_cancellation() {
        // (x - y)/(x - y) over UniRatFun<UniRatFun<Rat>> cancels to 1,
        // where y is the inner indeterminate lifted as a constant.
        type R2 = UniRatFun<Rf>;
        let xo = R2::gen();
        let yi = R2::constant(Rf::gen());
        let d = xo.sub(&yi);
        assert_eq!(d.div(&d).unwrap(), R2::one());
        // limit of the outer variable at a rational point
        let lim = d.limit_at(&Rf::constant(ri(0))).unwrap();
        assert_eq!(lim, Rf::gen().neg());
    }
}
