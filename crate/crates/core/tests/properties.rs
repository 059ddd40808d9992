//! Randomized and exhaustive invariants across modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use trivalent::bigseries::TruncSeries;
use trivalent::census::{enumerate_pointed, enumerate_size};
use trivalent::counting::{counts, d3star_closed_form, CountKind};
use trivalent::diagram::{
    automorphism_order, barycentric_export, canonical_code, find_isomorphism, is_normal,
    parse_diagram, pointed_morphism, Diagram, Morphism, PointedDiagram,
};

fn rational_series(order: usize, constant: i64) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec((-9i64..=9, 1i64..=5), order).prop_map(move |pairs| {
        let coeffs = std::iter::once(BigRational::from_integer(BigInt::from(constant))).chain(
            pairs
                .into_iter()
                .map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b))),
        );
        TruncSeries::from_coeffs(order, coeffs)
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// An involution: pairs up a shuffled prefix, fixes the rest.
fn involution(n: usize) -> impl Strategy<Value = Vec<usize>> {
    (permutation(n), 0..=n / 2).prop_map(move |(order, pairs)| {
        let mut inv: Vec<usize> = (0..n).collect();
        for i in 0..pairs {
            let (a, b) = (order[2 * i], order[2 * i + 1]);
            inv[a] = b;
            inv[b] = a;
        }
        inv
    })
}

fn connected_diagram(max: usize) -> impl Strategy<Value = Diagram> {
    (1..=max)
        .prop_flat_map(|n| (permutation(n), involution(n)))
        .prop_filter_map("disconnected", |(rot, inv)| {
            let d = Diagram::new(rot, inv, false).ok()?;
            d.is_connected().then_some(d)
        })
}

fn equivariant(src: &Diagram, dst: &Diagram, map: &[usize]) -> bool {
    (0..src.size())
        .all(|a| map[src.rot(a)] == dst.rot(map[a]) && map[src.inv(a)] == dst.inv(map[a]))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn transforms_invert_each_other(g in (1usize..=40).prop_flat_map(|n| rational_series(n, 1))) {
        let connected = g.moebius_log_transform().unwrap();
        prop_assert_eq!(connected.exp_sum_transform().unwrap(), g);
    }

    #[test]
    fn euler_operator_is_a_derivation(
        (f, g) in (1usize..=30).prop_flat_map(|n| (rational_series(n, 2), rational_series(n, -1)))
    ) {
        let lhs = f.checked_mul(&g).unwrap().euler_operator();
        let rhs = f.euler_operator().checked_mul(&g).unwrap()
            .checked_add(&f.checked_mul(&g.euler_operator()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn morphisms_are_equivariant(d in connected_diagram(9), base in 0usize..9, sigma_seed in any::<u64>()) {
        let n = d.size();
        let base = base % n;
        // a relabelled copy is isomorphic, so some pointing of it receives a morphism
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.rotate_left((sigma_seed as usize) % n);
        let copy = d.conjugate_by(&sigma).unwrap();
        let src = PointedDiagram::new(d.clone(), base).unwrap();
        let mut found = 0;
        for target in 0..n {
            let dst = PointedDiagram::new(copy.clone(), target).unwrap();
            match pointed_morphism(&src, &dst) {
                Morphism::Found(map) => {
                    found += 1;
                    prop_assert!(equivariant(&d, &copy, &map));
                    // both ways gives mutually inverse bijections
                    let Morphism::Found(back) = pointed_morphism(&dst, &src) else {
                        return Err(TestCaseError::fail("no morphism back"));
                    };
                    prop_assert!((0..n).all(|a| back[map[a]] == a && map[back[a]] == a));
                }
                Morphism::Obstructed(pair) => {
                    let image = match pair.generator {
                        trivalent::diagram::Generator::Rot => d.rot(pair.from),
                        trivalent::diagram::Generator::Inv => d.inv(pair.from),
                    };
                    prop_assert_eq!(image, pair.arc);
                    prop_assert_ne!(pair.first, pair.second);
                }
            }
        }
        prop_assert_eq!(found, automorphism_order(&d).unwrap());
        prop_assert!(find_isomorphism(&d, &copy).unwrap().is_some());
        prop_assert_eq!(canonical_code(&d).unwrap(), canonical_code(&copy).unwrap());
        // everything maps onto the one-arc diagram
        let terminal = PointedDiagram::terminal();
        prop_assert!(pointed_morphism(&src, &terminal).exists());
    }

    #[test]
    fn automorphism_group_structure(d in connected_diagram(9)) {
        let order = automorphism_order(&d).unwrap();
        prop_assert_eq!(d.size() % order, 0);
        prop_assert_eq!(is_normal(&d).unwrap(), order == d.size());
        prop_assert!(barycentric_export(&d).is_proper());
    }
}

#[test]
fn census_representatives_are_well_formed() {
    for n in 1..=9 {
        let report = enumerate_size(n, true).unwrap();
        for d in &report.class_representatives {
            assert!(d.is_connected() && d.is_trivalent());
            assert_eq!(&parse_diagram(&d.to_string()).unwrap().diagram, d);
            let order = automorphism_order(d).unwrap();
            assert_eq!(n % order, 0);
            assert!(barycentric_export(d).is_proper());
        }
        for d in enumerate_pointed(n, true).unwrap() {
            let p = PointedDiagram::new(d, 0).unwrap();
            assert_eq!(parse_diagram(&p.to_string()).unwrap().pointed().unwrap(), p);
        }
    }
}

#[test]
fn canonical_code_is_complete_at_nine() {
    let diagrams = enumerate_pointed(9, true).unwrap();
    for (i, a) in diagrams.iter().enumerate() {
        for b in &diagrams[i..] {
            let same = canonical_code(a).unwrap() == canonical_code(b).unwrap();
            assert_eq!(same, find_isomorphism(a, b).unwrap().is_some(), "{a} / {b}");
        }
    }
}

#[test]
fn labelled_census_gives_disconnected_counts() {
    // exp of sum labelled_connected t^n / n! is sum a*_n t^n
    let max = 9;
    let mut labelled = vec![BigRational::from_integer(BigInt::from(0))];
    let mut fact = BigInt::from(1);
    for n in 1..=max {
        fact *= n;
        let census = enumerate_size(n, true).unwrap();
        labelled.push(BigRational::new(census.labelled_connected, fact.clone()));
    }
    let star = TruncSeries::from_coeffs(max, labelled).exp().unwrap();
    assert_eq!(star, d3star_closed_form(max));
}

#[test]
fn census_agrees_to_twelve() {
    let pointed = counts(CountKind::Pointed, 12, false).unwrap();
    let classes = counts(CountKind::Classes, 12, false).unwrap();
    for n in 1..=12 {
        let census = enumerate_size(n, true).unwrap();
        assert_eq!(census.pointed_classes, pointed[n - 1], "n={n}");
        assert_eq!(census.unpointed_classes, classes[n - 1], "n={n}");
    }
}
