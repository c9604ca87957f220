use num_integer::Integer;
use pencil_index::construct::{
    check_weighted_equivariance, fixtures, monomial_norm, pushforward_splitting_type, ProjectiveCurveMap,
    WeightedTorusAction, C_VARS,
};
use pencil_index::exactalg::{vandermonde_general_position, ExactMatrix, LinePoint};
use pencil_index::semigroup::NumericalSemigroup;
use pencil_index::witness::choose_ab;
use pencil_index::{Rational, SparseMultiPoly};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rational::new(p, q))
}

fn binary_form(max_degree: u32) -> impl Strategy<Value = SparseMultiPoly<Rational>> {
    (0..=max_degree).prop_flat_map(|deg| {
        proptest::collection::vec(rational(), deg as usize + 1).prop_map(move |cs| {
            let terms = cs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (vec![deg - k as u32, k as u32], c));
            SparseMultiPoly::from_terms(&C_VARS, terms).unwrap()
        })
    })
}

fn matrix() -> impl Strategy<Value = ExactMatrix<Rational>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c)
            .prop_map(move |v| ExactMatrix::new(r, c, v.into_iter().map(Rational::from).collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn rank_plus_nullity(m in matrix()) {
        let kernel = m.nullspace();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            for r in 0..m.rows() {
                let dot = m.row(r).iter().zip(v).fold(Rational::from(0), |acc, (a, b)| acc + a.clone() * b.clone());
                prop_assert_eq!(dot, Rational::from(0));
            }
        }
    }

    #[test]
    fn polynomial_ring_axioms(p in binary_form(3), q in binary_form(3), r in binary_form(3)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn distinct_points_are_in_general_position(ts in proptest::collection::btree_set(-30i64..=30, 1..=6)) {
        let pts: Vec<LinePoint> = ts.into_iter().map(|t| LinePoint::Finite(Rational::from(t))).collect();
        prop_assert!(vandermonde_general_position(5, &pts).unwrap());
    }

    #[test]
    fn norm_is_multiplicative(p in binary_form(4), q in binary_form(4), d in 1u32..=4) {
        let lhs = monomial_norm(&(&p * &q), d).unwrap();
        let rhs = &monomial_norm(&p, d).unwrap() * &monomial_norm(&q, d).unwrap();
        prop_assert_eq!(lhs, rhs);
        if !p.is_zero() {
            prop_assert_eq!(monomial_norm(&p, d).unwrap().degree(), p.degree());
        }
    }

    #[test]
    fn equivariance_ignores_entry_scaling(i in 0usize..6, c in rational().prop_filter("nonzero", |c| *c != Rational::from(0))) {
        let j = fixtures::j_corrected();
        let mut entries = j.entries().to_vec();
        entries[i] = entries[i].scale(&c);
        let scaled = ProjectiveCurveMap::new(["S0", "S1"], entries, j.target_labels().to_vec()).unwrap();
        let a = WeightedTorusAction::standard_mu6();
        prop_assert_eq!(check_weighted_equivariance(&scaled, &a).unwrap(), 0);
    }

    #[test]
    fn splitting_conserves_sections(d in 1u32..=12, m in 0u32..=40) {
        let twists = pushforward_splitting_type(d, m);
        prop_assert_eq!(twists.iter().map(|t| t + 1).sum::<u32>(), m + 1);
    }

    #[test]
    fn semigroup_membership_matches_gcd_free_search(gens in proptest::collection::vec(1u64..=30, 1..=4), x in 0u64..=300) {
        let s = NumericalSemigroup::new(gens.clone()).unwrap();
        let mut reach = vec![false; x as usize + 1];
        reach[0] = true;
        for v in 1..=x as usize {
            reach[v] = gens.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
        }
        prop_assert_eq!(s.contains(x), reach[x as usize]);
        prop_assert_eq!(s.gcd(), gens.iter().fold(0, |a, b| a.gcd(b)));
    }

    #[test]
    fn larger_e_never_shrinks_the_product(ap in 1u64..=5, bp in 1u64..=5, e in 1u64..=200) {
        let (a0, b0) = choose_ab(ap, bp, e).unwrap();
        let (a1, b1) = choose_ab(ap, bp, e + 1).unwrap();
        prop_assert!(a1 * b1 >= a0 * b0);
        prop_assert!(4 * a0 * b0 > e + 1);
    }
}
