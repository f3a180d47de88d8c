use proptest::prelude::*;

use shicat::arrangement::Arrangement;
use shicat::derivation::{Derivation, GroupElement};
use shicat::exactalg::{rat, Monomial, Poly, PolyMatrix, RatFunc, Var};

fn poly(max_deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0..=max_deg), (0..=max_deg), (0..=max_deg), -6i64..=6, 1i64..=3), 0..5).prop_map(
        move |terms| {
            Poly::from_terms(
                terms
                    .into_iter()
                    .filter(|(a, b, c, _, _)| a + b + c <= max_deg)
                    .map(|(a, b, c, n, d)| (Monomial::new(a, b, c), rat(n, d))),
            )
        },
    )
}

fn nonzero_poly(max_deg: u32) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn derivation() -> impl Strategy<Value = Derivation> {
    (poly(2), poly(2), poly(2)).prop_map(|(a, b, c)| Derivation::new(a, b, c))
}

fn group_element() -> impl Strategy<Value = GroupElement> {
    prop::collection::vec(0usize..4, 0..5).prop_map(|word| {
        let gens = [
            GroupElement::s1(),
            GroupElement::s2(),
            GroupElement::s0(),
            GroupElement::tau(),
        ];
        word.into_iter()
            .fold(GroupElement::identity(), |acc, i| acc.compose(&gens[i]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(f in poly(3), g in poly(3), h in poly(3)) {
        prop_assert_eq!(&(&f + &g) * &h, &f * &h + &g * &h);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(f in poly(3), g in nonzero_poly(2)) {
        let q = (&f * &g).div_exact(&g).unwrap();
        prop_assert_eq!(q, Some(f));
    }

    #[test]
    fn leibniz(theta in derivation(), f in poly(3), g in poly(3)) {
        prop_assert_eq!(theta.apply(&(&f * &g)), &theta.apply(&f) * &g + &f * &theta.apply(&g));
    }

    #[test]
    fn action_commutes_with_application(g in group_element(), theta in derivation(), f in poly(3)) {
        let lhs = g.act_on_derivation(&theta).apply(&g.act_on_poly(&f));
        prop_assert_eq!(lhs, g.act_on_poly(&theta.apply(&f)));
    }

    #[test]
    fn action_is_a_group_action(g in group_element(), h in group_element(), theta in derivation()) {
        let lhs = g.act_on_derivation(&h.act_on_derivation(&theta));
        let rhs = g.compose(&h).act_on_derivation(&theta);
        prop_assert_eq!(lhs.coeffs(), rhs.coeffs());
        let back = g.inverse().act_on_derivation(&g.act_on_derivation(&theta));
        prop_assert_eq!(back.coeffs(), theta.coeffs());
    }

    #[test]
    fn det_is_multiplicative(n in 1usize..=3, seed in prop::collection::vec(poly(1), 18)) {
        let a = PolyMatrix::from_rows((0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect());
        let b = PolyMatrix::from_rows((0..n).map(|i| seed[9 + i * n..9 + (i + 1) * n].to_vec()).collect());
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn ratfunc_quotient_rule(p in poly(2), q in nonzero_poly(2), r in poly(2), s in nonzero_poly(2)) {
        let x = RatFunc::new(p, q).unwrap();
        let y = RatFunc::new(r, s).unwrap();
        for v in Var::ALL {
            prop_assert_eq!((&x * &y).partial(v), &(&x.partial(v) * &y) + &(&x * &y.partial(v)));
        }
        prop_assert_eq!(x.clone().reduce(), x);
    }

    #[test]
    fn euler_is_logarithmic_everywhere(k in 0u32..4) {
        prop_assert!(Derivation::euler().is_logarithmic(&Arrangement::shi(k)).is_ok());
        prop_assert!(Derivation::euler().is_logarithmic(&Arrangement::cat(k)).is_ok());
    }
}
