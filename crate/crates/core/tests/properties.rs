use num_traits::{One, Zero};
use proptest::prelude::*;

use involution_orbits::closure::{flip_p, flip_p_inverse, gamma, script_m, z_contains, ZSpec};
use involution_orbits::field::{q, Q};
use involution_orbits::moves::{all_moves, near};
use involution_orbits::orbit::{
    act, degeneration, closed_form, random_borel, rank_profile, x_transpose, QMatrixJson,
};
use involution_orbits::perm::{Arc, Involution, Permutation};
use involution_orbits::rank::{
    leq_bruhat, leq_star, permutation_rank_matrix, southwest_count, star_r, RankMatrix,
};
use involution_orbits::ratfunc::{Poly, RatFunc};
use involution_orbits::QMatrix;

/// A random involution: shuffle `1..=n`, then pair off a prefix.
fn involution(max_n: usize) -> impl Strategy<Value = Involution> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), 0..=n / 2))
        .prop_map(|(n, order, pairs)| {
            let arcs = (0..pairs).map(|k| {
                let (a, b) = (order[2 * k], order[2 * k + 1]);
                Arc::new(a.max(b), a.min(b))
            });
            Involution::from_arcs(n, arcs).unwrap()
        })
}

fn involution_pair(n: usize) -> impl Strategy<Value = (Involution, Involution)> {
    let one = move || {
        (Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), 0..=n / 2).prop_map(move |(order, pairs)| {
            let arcs = (0..pairs).map(|k| {
                let (a, b) = (order[2 * k], order[2 * k + 1]);
                Arc::new(a.max(b), a.min(b))
            });
            Involution::from_arcs(n, arcs).unwrap()
        })
    };
    (one(), one())
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    let poly = prop::collection::vec(-4i64..=4, 0..4).prop_map(|cs| Poly::new(cs.into_iter().map(q).collect()));
    (poly.clone(), poly).prop_filter_map("nonzero denominator", |(a, b)| {
        (!b.is_zero()).then(|| RatFunc::new(a, b))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_equals_rook_count(s in involution(8)) {
        let r = star_r(&s);
        for i in 1..=s.n() {
            for j in 1..i {
                prop_assert_eq!(r.get(i, j), southwest_count(s.arcs(), i, j));
            }
        }
    }

    #[test]
    fn star_is_the_low_part_of_the_permutation_rank_matrix(s in involution(8)) {
        prop_assert_eq!(star_r(&s), permutation_rank_matrix(&s.to_permutation()).low());
    }

    #[test]
    fn star_order_matches_bruhat((t, s) in involution_pair(7)) {
        let b = leq_bruhat(&t.to_permutation(), &s.to_permutation()).unwrap();
        prop_assert_eq!(leq_star(&t, &s).unwrap(), b);
    }

    #[test]
    fn star_order_is_antisymmetric((t, s) in involution_pair(6)) {
        if leq_star(&t, &s).unwrap() && leq_star(&s, &t).unwrap() {
            prop_assert_eq!(t, s);
        }
    }

    #[test]
    fn bruhat_is_reflexive_and_bounded(w in permutation(6)) {
        prop_assert!(leq_bruhat(&w, &w).unwrap());
        prop_assert!(leq_bruhat(&Permutation::identity(6), &w).unwrap());
        prop_assert!(leq_bruhat(&w, &Permutation::longest(6)).unwrap());
    }

    #[test]
    fn moves_go_strictly_down(s in involution(8)) {
        for tau in near(&s) {
            prop_assert!(tau != s);
            prop_assert!(leq_star(&tau, &s).unwrap());
        }
    }

    #[test]
    fn curves_match_closed_forms(s in involution(7)) {
        for (mv, tau) in all_moves(&s) {
            let d = degeneration(&s, &mv).unwrap();
            prop_assert_eq!(&d.y, &closed_form(&s, &mv).unwrap());
            prop_assert_eq!(d.limit, x_transpose::<Q>(&tau));
        }
    }

    #[test]
    fn action_is_a_group_action(s in involution(6), a in 0u64..1000, b in 0u64..1000) {
        let n = s.n();
        let (g, h) = (random_borel(n, a, 3), random_borel(n, b, 3));
        let x: QMatrix = x_transpose(&s);
        let lhs = act(&g, &act(&h, &x).unwrap()).unwrap();
        prop_assert_eq!(lhs, act(&g.mul(&h), &x).unwrap());
    }

    #[test]
    fn orbit_points_keep_rank_and_lie_in_z(s in involution(7), seed in 0u64..1000) {
        let y = act(&random_borel(s.n(), seed, 3), &x_transpose(&s)).unwrap();
        prop_assert_eq!(rank_profile(&y), star_r(&s));
        prop_assert!(z_contains(&ZSpec::of(&s), &y).unwrap());
    }

    #[test]
    fn quadrics_vanish_on_representatives(s in involution(8)) {
        let x: QMatrix = x_transpose(&s);
        for (r, c) in script_m(&s) {
            prop_assert!(gamma(&x, r, c).is_zero());
            prop_assert_eq!(star_r(&s).get(r, c), 0);
        }
    }

    #[test]
    fn flip_is_invertible(s in involution(6), seed in 0u64..100) {
        let y = act(&random_borel(s.n(), seed, 3), &x_transpose(&s)).unwrap();
        prop_assert_eq!(flip_p_inverse(&flip_p(&y)), y.clone());
        prop_assert_eq!(flip_p(&flip_p_inverse(&y)), y);
    }

    #[test]
    fn rational_functions_form_a_field(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), RatFunc::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() / a.clone(), RatFunc::one());
        }
        let back = RatFunc::from_json(&a.to_json()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn json_round_trips(s in involution(7), seed in 0u64..100) {
        let r = star_r(&s);
        let text = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<RankMatrix>(&text).unwrap(), r);
        let y = act(&random_borel(s.n(), seed, 3), &x_transpose(&s)).unwrap();
        let j = serde_json::to_string(&QMatrixJson::from_matrix(&y)).unwrap();
        let back: QMatrixJson = serde_json::from_str(&j).unwrap();
        prop_assert_eq!(back.to_matrix().unwrap(), y);
        let spec = ZSpec::of(&s);
        prop_assert_eq!(ZSpec::from_json(&spec.to_json()).unwrap(), spec);
    }

    #[test]
    fn cycle_notation_round_trips(s in involution(8)) {
        prop_assert_eq!(Involution::parse(&s.to_string(), s.n()).unwrap(), s);
    }
}
