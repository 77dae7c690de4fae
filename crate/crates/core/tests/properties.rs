//! Property tests for the exact arithmetic layer.

use bsk_core::field::{Rat, Scalar, UniPoly, UniRatFun};
use proptest::prelude::*;

type Rf = UniRatFun<Rat>;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| Rat::new(p, q))
}

fn arb_poly(max_deg: usize) -> impl Strategy<Value = UniPoly<Rat>> {
    prop::collection::vec(arb_rat(), 0..=max_deg + 1).prop_map(UniPoly::from_coeffs)
}

fn arb_ratfun() -> impl Strategy<Value = Rf> {
    (arb_poly(3), arb_poly(3))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| Rf::new(n, d).expect("nonzero denominator"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn canonical_form_is_idempotent(f in arb_ratfun()) {
        let rebuilt = Rf::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(&rebuilt, &f);
        // the denominator is monic and coprime to the numerator
        if !f.is_zero() {
            prop_assert_eq!(f.den().leading().unwrap(), &Rat::one());
            prop_assert!(f.num().gcd(f.den()).is_constant());
        }
    }

    #[test]
    fn independently_built_expressions_agree(
        fs in prop::collection::vec(arb_ratfun(), 1..5)
    ) {
        // left-to-right and right-to-left assembly of the same product
        // (interleaved with sums) must agree bit for bit
        let mut left = Rf::one();
        for f in &fs {
            left = left.mul(f).add(f);
        }
        let mut right = Rf::one();
        for f in &fs {
            right = right.mul(f).add(f);
        }
        prop_assert_eq!(left, right);

        let sum_lr = fs.iter().fold(Rf::zero(), |acc, f| acc.add(f));
        let sum_rl = fs.iter().rev().fold(Rf::zero(), |acc, f| acc.add(f));
        prop_assert_eq!(sum_lr, sum_rl);
    }

    #[test]
    fn field_axioms(a in arb_ratfun(), b in arb_ratfun(), c in arb_ratfun()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), Rf::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Rf::one());
        }
    }

    #[test]
    fn limit_agrees_with_eval_off_poles(f in arb_ratfun(), a in arb_rat()) {
        match (f.eval(&a), f.limit_at(&a)) {
            (Ok(v), Ok(l)) => prop_assert_eq!(v, l),
            (Err(_), Err(_)) => {}
            (x, y) => prop_assert!(false, "eval {x:?} vs limit {y:?}"),
        }
    }

    #[test]
    fn residue_matches_shifted_evaluation(f in arb_ratfun(), a in arb_rat()) {
        // residue(f, a) = eval((x - a) f, a) whenever the product is regular
        let shift = Rf::gen().sub(&Rf::constant(a.clone()));
        let product = shift.mul(&f);
        if let Ok(value) = product.eval(&a) {
            if let Ok(res) = f.residue_at(&a) {
                prop_assert_eq!(res, value);
            }
        }
    }

    #[test]
    fn derivative_is_leibniz(a in arb_ratfun(), b in arb_ratfun()) {
        let lhs = a.mul(&b).derivative();
        let rhs = a.derivative().mul(&b).add(&a.mul(&b.derivative()));
        prop_assert_eq!(lhs, rhs);
    }
}

/// The twenty-factor case of the canonical-form invariant, deterministic.
#[test]
fn twenty_factor_product_is_canonical_and_order_independent() {
    let mut factors = Vec::new();
    for t in 1..=20i64 {
        let num = UniPoly::from_coeffs(vec![Rat::new(t, 3), Rat::from_int(1)]);
        let den = UniPoly::from_coeffs(vec![Rat::new(-t, 2), Rat::new(t % 5 + 1, 7), Rat::from_int(1)]);
        factors.push(Rf::new(num, den).unwrap());
    }
    let forward = factors.iter().fold(Rf::one(), |acc, f| acc.mul(f));
    let backward = factors.iter().rev().fold(Rf::one(), |acc, f| acc.mul(f));
    assert_eq!(forward, backward);
    let rebuilt = Rf::new(forward.num().clone(), forward.den().clone()).unwrap();
    assert_eq!(rebuilt, forward);
    assert_eq!(forward.den().leading().unwrap(), &Rat::one());

    let sum_forward = factors.iter().fold(Rf::zero(), |acc, f| acc.add(f));
    let sum_backward = factors.iter().rev().fold(Rf::zero(), |acc, f| acc.add(f));
    assert_eq!(sum_forward, sum_backward);
}
