mod common;

use proptest::prelude::*;
use snk_core::{divide_multi, groebner, Ideal, Monomial, MonomialOrder, Polynomial, Rational, Ring};

const N: usize = 3;

fn poly_strategy(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, N), -5i64..=5), 0..=max_terms).prop_map(|terms| {
        Polynomial::from_unsorted(
            N,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(e), Rational::from_integer(c.into())))
                .collect(),
        )
    })
}

fn mono_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, N).prop_map(Monomial::from_exponents)
}

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::lex(),
        MonomialOrder::grevlex(),
        MonomialOrder::block(&[0]),
        MonomialOrder::grevlex().with_precedence(vec![2, 0, 1]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in poly_strategy(4, 3), b in poly_strategy(4, 3), c in poly_strategy(4, 3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(N), a.clone());
        prop_assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn print_parse_roundtrip(a in poly_strategy(5, 3)) {
        let ring = Ring::new(["x", "y", "z"]).unwrap();
        prop_assert_eq!(ring.parse(&ring.format(&a)).unwrap(), a);
    }

    #[test]
    fn division_reassembles(f in poly_strategy(6, 3), g1 in poly_strategy(3, 2), g2 in poly_strategy(3, 2)) {
        let gs: Vec<Polynomial> = [g1, g2].into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gs.is_empty());
        for ord in orders() {
            let (q, r) = divide_multi(&f, &gs, &ord).unwrap();
            let mut acc = r.clone();
            for (qi, gi) in q.iter().zip(&gs) {
                acc = &acc + &(qi * gi);
            }
            prop_assert_eq!(&acc, &f);
            let leads: Vec<&Monomial> = gs.iter().map(|g| g.leading_monomial(&ord).unwrap()).collect();
            for (m, _) in r.terms() {
                prop_assert!(leads.iter().all(|l| !l.divides(m)));
            }
        }
    }

    #[test]
    fn gb_membership_is_sound(g1 in poly_strategy(3, 2), g2 in poly_strategy(3, 2), h1 in poly_strategy(2, 1), h2 in poly_strategy(2, 1)) {
        let ring = Ring::new(["x", "y", "z"]).unwrap();
        let ideal = Ideal::new(ring, vec![g1.clone(), g2.clone()]).unwrap();
        let f = &(&h1 * &g1) + &(&h2 * &g2);
        prop_assert!(ideal.contains(&f).unwrap());
        for ord in [MonomialOrder::lex(), MonomialOrder::grevlex()] {
            let gb = groebner(&[g1.clone(), g2.clone()], &ord).unwrap();
            prop_assert_eq!(groebner(&gb, &ord).unwrap(), gb.clone());
            for g in &gb {
                prop_assert!(ideal.contains(g).unwrap());
            }
        }
    }
}

#[test]
fn order_axioms_on_many_triples() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    use std::cmp::Ordering;

    let mut runner = TestRunner::deterministic();
    let strat = (mono_strategy(), mono_strategy(), mono_strategy());
    let one = Monomial::one(N);
    for _ in 0..1000 {
        let (a, b, c) = strat.new_tree(&mut runner).unwrap().current();
        for ord in orders() {
            // total, antisymmetric
            assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
            // transitive
            if ord.cmp(&a, &b) != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
                assert_ne!(ord.cmp(&a, &c), Ordering::Greater);
            }
            // multiplicative, well-founded
            assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ord.cmp(&a, &b));
            assert_ne!(ord.cmp(&one, &a), Ordering::Greater);
        }
    }
}
