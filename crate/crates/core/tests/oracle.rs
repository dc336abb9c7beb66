use std::collections::BTreeMap;
use std::time::Duration;

use g31_core::bounds::{regime4_lb, turan_lb};
use g31_core::constructions::{build_c1, build_c2, build_c3, BuildOptions};
use g31_core::independence::{
    alpha_reference, decompose_independent, is_independent, max_independent_set, parse_alpha_table,
    ALPHA_FIXTURE,
};
use g31_core::oracle::{
    enumerate_independent_sets, exact_min_edges, parse_min_edges_table, MIN_EDGES_FIXTURE,
};
use g31_core::{count_induced_edges, make_params, AlphaMode};

const BUDGET: Duration = Duration::from_secs(120);

fn fixture() -> BTreeMap<(u32, u64), u64> {
    parse_min_edges_table(MIN_EDGES_FIXTURE).unwrap()
}

fn row(n: u32) -> Vec<u64> {
    fixture()
        .range((n, 0)..(n + 1, 0))
        .map(|(_, &v)| v)
        .collect()
}

#[test]
fn alpha_fixture_regenerates() {
    let cached = parse_alpha_table(ALPHA_FIXTURE).unwrap();
    assert_eq!(
        cached.keys().copied().collect::<Vec<_>>(),
        (3..=12).collect::<Vec<_>>()
    );
    for (&n, &alpha) in &cached {
        let r = max_independent_set(&make_params(n).unwrap(), BUDGET).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.value, alpha, "n = {n}");
        assert!(is_independent(&r.witness));
        assert_eq!(r.witness.len(), alpha);
    }
}

#[test]
fn min_edges_fixture_regenerates_n6() {
    let p = make_params(6).unwrap();
    let cached = row(6);
    assert_eq!(cached.len(), 21);
    for (l, &want) in cached.iter().enumerate() {
        let r = exact_min_edges(&p, l as u64, BUDGET).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.value, want, "l = {l}");
        assert_eq!(r.witness.len(), l as u64);
        assert_eq!(count_induced_edges(&p, &r.witness), want as u128);
    }
}

#[test]
fn min_edges_n7_spot_checks() {
    let p = make_params(7).unwrap();
    let cached = row(7);
    assert_eq!(cached.len(), 36);
    for l in [5, 6, 7, 30, 33, 35] {
        let r = exact_min_edges(&p, l, BUDGET).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.value, cached[l as usize], "l = {l}");
    }
}

#[test]
fn zero_exactly_up_to_alpha() {
    for n in [6, 7] {
        let alpha = alpha_reference(n, AlphaMode::Exact).unwrap().value;
        for (l, &v) in row(n).iter().enumerate() {
            assert_eq!(v == 0, l as u64 <= alpha, "n = {n}, l = {l}");
        }
    }
}

#[test]
fn nondecreasing_in_l() {
    for n in [6, 7] {
        assert!(row(n).windows(2).all(|w| w[0] <= w[1]), "n = {n}");
    }
}

#[test]
fn endpoints_match_graph() {
    for n in [6, 7] {
        let p = make_params(n).unwrap();
        let r = row(n);
        assert_eq!(*r.last().unwrap() as u128, p.total_edges);
        // one vertex short of everything loses exactly d edges
        assert_eq!(r[r.len() - 2] as u128, p.total_edges - p.degree);
    }
}

#[test]
fn bounds_never_exceed_minimum() {
    for n in [6, 7] {
        let params = make_params(n).unwrap();
        let alpha = alpha_reference(n, AlphaMode::Exact).unwrap();
        for (l, &v) in row(n).iter().enumerate() {
            let l = l as u64;
            assert!(
                turan_lb(l as u128, alpha.value as u128) <= v as u128,
                "n = {n}, l = {l}"
            );
            assert!(regime4_lb(&params, l, alpha).unwrap().lower_bound <= v as u128);
        }
        let full = params.vertex_count as u64;
        assert_eq!(
            regime4_lb(&params, full, alpha).unwrap().lower_bound,
            params.total_edges
        );
    }
}

#[test]
fn constructions_at_least_minimum() {
    let table = fixture();
    let opts = BuildOptions::default();
    let mut checked = 0;
    for n in [6u32, 7] {
        let total = make_params(n).unwrap().vertex_count as u64;
        for l in 0..=total {
            let built = [
                build_c1(n, l, opts),
                build_c3(n, l, opts),
                build_c2(n, 0.5 + l as f64 / 10.0, opts),
            ];
            for r in built.into_iter().flatten() {
                let size = r.size_actual.unwrap();
                assert!(r.edges_actual.unwrap() >= table[&(n, size)] as u128);
                checked += 1;
            }
        }
    }
    assert!(checked > 10);
}

#[test]
fn every_maximal_independent_set_decomposes() {
    for n in [5, 6, 7] {
        let sets = enumerate_independent_sets(&make_params(n).unwrap(), 1).unwrap();
        assert!(!sets.is_empty());
        for s in &sets {
            let d = decompose_independent(s).unwrap();
            d.verify(s).unwrap();
        }
    }
}

#[test]
fn enumeration_examples() {
    let one = enumerate_independent_sets(&make_params(4).unwrap(), 4).unwrap();
    assert_eq!(one.len(), 1);
    assert!(enumerate_independent_sets(&make_params(5).unwrap(), 5)
        .unwrap()
        .is_empty());
}
