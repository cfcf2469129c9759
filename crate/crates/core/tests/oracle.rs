//! Constructions and closed forms checked against the exhaustive solver.

use locchroma::bounds::{
    bounds_report, chi_olive, chi_sn1, chi_sn2, chi_sn3, palm_bounds, WitnessSource,
};
use locchroma::constructions::{
    algorithm2_color, color_tree, palm_full_coloring, palm_nonstar_coloring, Method,
};
use locchroma::exact::{exact_chi_l, ExactOptions};
use locchroma::experiments::PalmOracle;
use locchroma::locating::verify;
use locchroma::tree::{PalmSpec, Tree};

fn chi(tree: &Tree) -> usize {
    exact_chi_l(tree, &ExactOptions::default()).unwrap().chi_l
}

fn locating(tree: &Tree, c: &locchroma::Coloring) -> bool {
    verify(tree, c).unwrap().is_locating
}

#[test]
fn algorithm2_on_olives_and_long_regular_palms() {
    for n in 3..=60 {
        let spec = PalmSpec::olive(n).unwrap();
        let c = algorithm2_color(&spec).unwrap();
        assert!(locating(&spec.build(), &c), "O_{n}");
        assert_eq!(c.k(), chi_olive(n).unwrap());
    }
    for n in 3..=36 {
        let spec = PalmSpec::regular(n, 6).unwrap();
        let c = algorithm2_color(&spec).unwrap();
        assert!(locating(&spec.build(), &c), "S_{n}(6)");
    }
    // arm 37 would be modified at position 7, past the end of the arm, and
    // so repeats arm 1
    let spec = PalmSpec::regular(37, 6).unwrap();
    let c = algorithm2_color(&spec).unwrap();
    assert!(!locating(&spec.build(), &c));
}

#[test]
fn palm_constructions_verify_on_all_small_palms() {
    for spec in PalmSpec::all_up_to(12) {
        let tree = spec.build();
        let full = palm_full_coloring(&spec);
        assert!(locating(&tree, &full), "{spec}");
        assert_eq!(full.k(), spec.n() + 1);
        match palm_nonstar_coloring(&spec) {
            Ok(c) => {
                assert!(!spec.is_star());
                assert!(locating(&tree, &c), "{spec}");
                assert_eq!(c.k(), spec.n().max(3), "{spec}");
            }
            Err(_) => assert!(spec.is_star()),
        }
    }
}

#[test]
fn exact_values_lie_in_palm_range() {
    let mut oracle = PalmOracle::new(ExactOptions::default());
    for spec in PalmSpec::all_up_to(16) {
        let value = oracle.chi(&spec).unwrap();
        let (lo, hi) = palm_bounds(&spec);
        assert!(
            lo <= value && value <= hi,
            "{spec}: {value} not in {lo}..={hi}"
        );
        // from three arms on, only stars need n + 1 colors
        if spec.n() >= 3 {
            assert_eq!(value == spec.n() + 1, spec.is_star(), "{spec}: {value}");
        }
    }
}

#[test]
fn closed_forms_match_exact_values() {
    for n in 2..=7 {
        assert_eq!(
            chi(&PalmSpec::regular(n, 1).unwrap().build()),
            chi_sn1(n).unwrap()
        );
    }
    let sn2: Vec<usize> = (2..=6)
        .map(|n| chi(&PalmSpec::regular(n, 2).unwrap().build()))
        .collect();
    assert_eq!(sn2, [3, 3, 3, 4, 4]);
    for n in 2..=6 {
        assert_eq!(sn2[n - 2], chi_sn2(n).unwrap());
    }
    for n in 2..=5 {
        assert_eq!(
            chi(&PalmSpec::regular(n, 3).unwrap().build()),
            chi_sn3(n).unwrap()
        );
    }
    let olive: Vec<usize> = (2..=4)
        .map(|n| chi(&PalmSpec::olive(n).unwrap().build()))
        .collect();
    assert_eq!(olive, [3, 3, 3]);
}

#[test]
fn auto_coloring_never_exceeds_star_count() {
    for spec in PalmSpec::all_up_to(14) {
        let tree = spec.build();
        let (_, c) = color_tree(&tree, Method::Auto).unwrap();
        assert!(locating(&tree, &c));
        assert!(c.k() <= spec.n() + 1, "{spec}");
    }
}

fn double_spider() -> Tree {
    Tree::new(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 4),
            (4, 5),
            (0, 6),
            (3, 7),
            (7, 8),
            (3, 9),
        ],
    )
    .unwrap()
}

#[test]
fn report_on_regular_palm_with_thirty_six_arms() {
    let tree = PalmSpec::regular(36, 6).unwrap().build();
    let r = bounds_report(&tree, WitnessSource::Constructions).unwrap();
    assert_eq!(r.delta_lb, 5);
    assert_eq!(r.palm_sum, Some(5));
    assert_eq!(r.palm_bounds, Some((5, 37)));
    assert_eq!(r.chartrand, (5, 32));
}

#[test]
fn report_chain_on_double_spider() {
    let tree = double_spider();
    for source in [WitnessSource::Constructions, WitnessSource::Exact] {
        let r = bounds_report(&tree, source).unwrap();
        assert_eq!((r.l, r.beta, r.b), (4, 2, 2));
        assert_eq!(r.chain_holds, Some(true), "{r:?}");
        assert!(r.palm_sum.unwrap() <= r.bound_l_beta);
    }
    let (_, c) = color_tree(&tree, Method::Tree).unwrap();
    assert!(locating(&tree, &c));
    assert!(c.k() <= 6);
    assert!(chi(&tree) <= c.k());
}

#[test]
fn caterpillar_with_three_end_palms() {
    // spine 0-1-2, each spine vertex carries a claw-like pair of leaves
    let tree = Tree::new(
        9,
        [
            (0, 1),
            (1, 2),
            (0, 3),
            (0, 4),
            (1, 5),
            (1, 6),
            (2, 7),
            (2, 8),
        ],
    )
    .unwrap();
    let r = bounds_report(&tree, WitnessSource::Exact).unwrap();
    assert_eq!(r.b, 3);
    assert_eq!(r.chain_holds, Some(true));
    let (method, c) = color_tree(&tree, Method::Auto).unwrap();
    assert_eq!(method, Method::Tree);
    assert!(locating(&tree, &c));
    assert!(chi(&tree) <= c.k());
}
