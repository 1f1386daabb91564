mod common;

use common::{positive_roots_by_closure, rs};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qcentre::root_system::{Family, RationalVector, RootSystem, Weight};

const TYPES: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 4),
    (Family::B, 3),
    (Family::C, 3),
    (Family::D, 4),
    (Family::D, 5),
    (Family::E, 6),
    (Family::E, 7),
    (Family::E, 8),
    (Family::F, 4),
    (Family::G, 2),
];

fn all_types_up_to_8() -> Vec<(Family, usize)> {
    let mut v = Vec::new();
    for n in 1..=8 {
        v.push((Family::A, n));
    }
    for n in 2..=8 {
        v.push((Family::B, n));
    }
    for n in 3..=8 {
        v.push((Family::C, n));
    }
    for n in 4..=8 {
        v.push((Family::D, n));
    }
    v.extend([(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)]);
    v
}

fn system_and_weight() -> impl Strategy<Value = (RootSystem, Weight)> {
    (0..TYPES.len()).prop_flat_map(|t| {
        let (f, n) = TYPES[t];
        prop::collection::vec(-4i64..=4, n).prop_map(move |c| (rs(f, n), Weight(c)))
    })
}

fn system_and_two_weights() -> impl Strategy<Value = (RootSystem, Weight, Weight)> {
    (0..TYPES.len()).prop_flat_map(|t| {
        let (f, n) = TYPES[t];
        (prop::collection::vec(-4i64..=4, n), prop::collection::vec(-4i64..=4, n))
            .prop_map(move |(a, b)| (rs(f, n), Weight(a), Weight(b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reflections_are_involutions((r, l) in system_and_weight()) {
        for i in 0..r.rank() {
            prop_assert_eq!(r.reflect(i, &r.reflect(i, &l)), l.clone());
        }
    }

    #[test]
    fn bilinear_form_is_w_invariant((r, l, m) in system_and_two_weights()) {
        let before = r.bilinear_form(&l, &m);
        for i in 0..r.rank() {
            prop_assert_eq!(r.bilinear_form(&r.reflect(i, &l), &r.reflect(i, &m)), before.clone());
        }
    }

    #[test]
    fn root_coordinates_round_trip((r, l) in system_and_weight()) {
        let c = r.weight_to_root_coords(&l);
        let back = r.root_coords_to_weight_coords(&c);
        let expect = RationalVector(l.0.iter().map(|&x| BigRational::from_integer(x.into())).collect());
        prop_assert_eq!(back, expect);
    }

    #[test]
    fn dominant_representative_is_in_orbit((r, l) in system_and_weight()) {
        let d = r.dominant_representative(&l);
        prop_assert!(d.is_dominant());
        prop_assert_eq!(r.dominant_representative(&d), d);
    }
}

#[test]
fn orbits_have_one_dominant_element() {
    for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2), (Family::D, 4), (Family::F, 4)] {
        let r = rs(f, n);
        for seed in [vec![1; n], {
            let mut v = vec![0; n];
            v[0] = 2;
            v[n - 1] -= 1;
            v
        }] {
            let orbit = r.weyl_orbit(&Weight(seed.clone())).unwrap();
            assert_eq!(orbit.iter().filter(|w| w.is_dominant()).count(), 1, "{r} {seed:?}");
        }
    }
}

#[test]
fn fundamental_weights_are_dual_to_coroots() {
    for (f, n) in all_types_up_to_8() {
        let r = rs(f, n);
        for i in 0..n {
            for j in 0..n {
                let aj = r.simple_root(j);
                let p = r.bilinear_form(&r.fundamental_weight(i), &aj) * BigRational::from_integer(2.into())
                    / r.bilinear_form(&aj, &aj);
                let expect = if i == j { BigRational::one() } else { BigRational::zero() };
                assert_eq!(p, expect, "{r} i={i} j={j}");
            }
        }
    }
}

#[test]
fn positive_roots_match_closure_oracle() {
    for (f, n) in all_types_up_to_8() {
        let r = rs(f, n);
        let mut mine: Vec<Vec<i64>> = r.positive_roots().iter().map(|a| a.root_coords.clone()).collect();
        mine.sort();
        assert_eq!(mine, positive_roots_by_closure(&r), "{r}");
    }
}

#[test]
fn weyl_group_orders() {
    let cases = [
        (Family::A, 1, 2u64),
        (Family::A, 4, 120),
        (Family::B, 3, 48),
        (Family::C, 4, 384),
        (Family::D, 5, 1920),
        (Family::E, 6, 51840),
        (Family::F, 4, 1152),
        (Family::G, 2, 12),
    ];
    for (f, n, order) in cases {
        assert_eq!(rs(f, n).weyl_group_order().unwrap(), order, "{f}{n}");
    }
}

/// Long roots of B and G carry the larger symmetrizer entry; C's long root is the last node.
#[test]
fn non_simply_laced_orientation() {
    let norm = |r: &RootSystem, j: usize| r.bilinear_form(&r.simple_root(j), &r.simple_root(j));
    let b3 = rs(Family::B, 3);
    assert!(norm(&b3, 0) > norm(&b3, 2));
    let c3 = rs(Family::C, 3);
    assert!(norm(&c3, 2) > norm(&c3, 0));
    let f4 = rs(Family::F, 4);
    assert!(norm(&f4, 1) > norm(&f4, 2));
    let g2 = rs(Family::G, 2);
    assert_eq!(norm(&g2, 1) / norm(&g2, 0), BigRational::from_integer(3.into()));
}
