use blowup_core::parse::parse_polynomial;
use blowup_core::{Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, Term};
use proptest::prelude::*;
use std::cmp::Ordering;

const P: u32 = 32003;

fn ring() -> PolyRing {
    PolyRing::standard(&["x", "y", "z"], PrimeField::default()).unwrap()
}

fn poly_strategy() -> impl Strategy<Value = Vec<(u32, [u32; 3])>> {
    prop::collection::vec((0..P, [0u32..4, 0u32..4, 0u32..4]), 0..6)
}

fn build(r: &PolyRing, raw: &[(u32, [u32; 3])]) -> Polynomial {
    let terms = raw
        .iter()
        .map(|(c, e)| Term {
            coeff: *c,
            mono: Monomial::from_exponents(e).unwrap(),
        })
        .collect();
    Polynomial::from_terms(r, terms)
}

fn mono_strategy() -> impl Strategy<Value = [u32; 3]> {
    [0u32..6, 0u32..6, 0u32..6]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_and_multiplication_form_a_commutative_ring(
        a in poly_strategy(), b in poly_strategy(), c in poly_strategy()
    ) {
        let r = ring();
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
        prop_assert!((&a * &Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn products_have_additive_degree(a in poly_strategy(), b in poly_strategy()) {
        let r = ring();
        let (a, b) = (build(&r, &a), build(&r, &b));
        let prod = &a * &b;
        match (a.degree(), b.degree()) {
            (Some(x), Some(y)) => prop_assert_eq!(prod.degree(), Some(x + y)),
            _ => prop_assert!(prod.is_zero()),
        }
        // lead terms multiply under a monomial order
        if let (Some(la), Some(lb)) = (a.lead_monomial(), b.lead_monomial()) {
            prop_assert_eq!(prod.lead_monomial(), Some(la.mul(&lb)));
        }
    }

    #[test]
    fn printing_then_parsing_is_the_identity(a in poly_strategy()) {
        let r = ring();
        let a = build(&r, &a);
        let back = parse_polynomial(&a.to_string(), &r).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn monomial_orders_are_multiplicative_total_orders(
        a in mono_strategy(), b in mono_strategy(), c in mono_strategy(), w in [1u32..4, 1u32..4, 1u32..4]
    ) {
        let base = ring();
        let orders = [
            base.clone(),
            base.with_order(MonomialOrder::Lex).unwrap(),
            base.with_order(MonomialOrder::BlockElimination(1)).unwrap(),
            base.with_weights(w.to_vec()).unwrap().with_order(MonomialOrder::WeightedGRevLex).unwrap(),
        ];
        let (a, b, c) = (
            Monomial::from_exponents(&a).unwrap(),
            Monomial::from_exponents(&b).unwrap(),
            Monomial::from_exponents(&c).unwrap(),
        );
        for r in &orders {
            prop_assert_eq!(r.cmp(&a, &b), r.cmp(&b, &a).reverse());
            prop_assert_eq!(r.cmp(&a, &b) == Ordering::Equal, a == b);
            if r.cmp(&a, &b) != Ordering::Less && r.cmp(&b, &c) != Ordering::Less {
                prop_assert_ne!(r.cmp(&a, &c), Ordering::Less);
            }
            prop_assert_eq!(r.cmp(&a.mul(&c), &b.mul(&c)), r.cmp(&a, &b));
            prop_assert_ne!(r.cmp(&a, &Monomial::one()), Ordering::Less);
        }
    }
}

#[test]
fn field_inverse_round_trips() {
    let f = PrimeField::default();
    for a in 1..2000 {
        assert_eq!(f.mul(a, f.inv(a)), 1);
    }
    assert_eq!(f.characteristic(), P);
}
