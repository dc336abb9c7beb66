use proptest::prelude::*;

use g31_core::bounds::{regime4_polynomial, turan_lb};
use g31_core::constructions::{build_c1, build_c2, build_c3, one_factorization, BuildOptions};
use g31_core::graph::setfile::{read_set, write_set};
use g31_core::graph::{count_edges_grouped, count_edges_pairwise, vertex_count_u64};
use g31_core::{adjacent, colex_rank, colex_unrank, make_params, neighbors, Vertex, VertexSet};

fn vertex_in(n: u32) -> impl Strategy<Value = Vertex> {
    proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 3)
        .prop_map(|e| Vertex::new(e[0], e[1], e[2]).unwrap())
}

fn subset_of(n: u32) -> impl Strategy<Value = (u32, Vec<Vertex>)> {
    let total = vertex_count_u64(n).unwrap() as usize;
    proptest::collection::vec(any::<bool>(), total).prop_map(move |mask| {
        let vs = mask
            .iter()
            .enumerate()
            .filter(|(_, &keep)| keep)
            .map(|(r, _)| colex_unrank(r as u64, n).unwrap())
            .collect();
        (n, vs)
    })
}

proptest! {
    #[test]
    fn colex_round_trip(n in 3u32..3000, seed in any::<u64>()) {
        let r = seed % vertex_count_u64(n).unwrap();
        let v = colex_unrank(r, n).unwrap();
        prop_assert_eq!(colex_rank(&v, n).unwrap(), r);
        prop_assert!(v.validate(n).is_ok());
    }

    #[test]
    fn colex_rank_respects_order(n in 3u32..200, a in any::<u64>(), b in any::<u64>()) {
        let total = vertex_count_u64(n).unwrap();
        let (u, w) = (colex_unrank(a % total, n).unwrap(), colex_unrank(b % total, n).unwrap());
        prop_assert_eq!(u.cmp(&w), colex_rank(&u, n).unwrap().cmp(&colex_rank(&w, n).unwrap()));
    }

    #[test]
    fn grouped_matches_pairwise((_, vs) in (6u32..=10).prop_flat_map(subset_of)) {
        prop_assert_eq!(count_edges_grouped(&vs), count_edges_pairwise(&vs));
    }

    #[test]
    fn removal_never_adds_edges((_, vs) in (6u32..=10).prop_flat_map(subset_of), pick in any::<usize>()) {
        prop_assume!(!vs.is_empty());
        let mut fewer = vs.clone();
        let gone = fewer.remove(pick % vs.len());
        let lost = vs.iter().filter(|w| adjacent(&gone, w)).count() as u128;
        prop_assert_eq!(count_edges_grouped(&vs), count_edges_grouped(&fewer) + lost);
    }

    #[test]
    fn handshake((n, vs) in (6u32..=10).prop_flat_map(subset_of)) {
        let set = VertexSet::from_vertices(n, vs.iter().copied()).unwrap();
        let degree_sum: usize = vs.iter().map(|v| vs.iter().filter(|w| adjacent(v, w)).count()).sum();
        prop_assert_eq!(degree_sum as u128, 2 * count_edges_grouped(&set.to_vec()));
    }

    #[test]
    fn regular_of_closed_form_degree(v in (6u32..80).prop_flat_map(vertex_in), extra in 0u32..5) {
        let n = v.max_elem() + extra;
        let p = make_params(n).unwrap();
        let nb = neighbors(&p, &v);
        prop_assert_eq!(nb.len() as u128, p.degree);
        prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(nb.iter().all(|w| adjacent(&v, w) && w.validate(n).is_ok()));
    }

    #[test]
    fn turan_monotone_in_m(m in 0u128..5000, alpha in 1u128..500) {
        prop_assert!(turan_lb(m, alpha) <= turan_lb(m + 1, alpha));
        prop_assert_eq!(turan_lb(alpha, alpha), 0);
        // never above the m²/(2α) − m/2 form rounded up
        let real = (m * m) as f64 / (2.0 * alpha as f64) - m as f64 / 2.0;
        prop_assert!(turan_lb(m, alpha) as f64 <= real.max(0.0).ceil() + 1e-9);
    }

    #[test]
    fn regime4_polynomial_decreasing(a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assume!(hi - lo > 1e-9);
        prop_assert!(regime4_polynomial(hi) < regime4_polynomial(lo));
    }

    #[test]
    fn set_file_round_trip((n, vs) in (3u32..=9).prop_flat_map(subset_of)) {
        let set = VertexSet::from_vertices(n, vs).unwrap();
        let mut buf = Vec::new();
        write_set(&mut buf, &set).unwrap();
        let back = read_set(&buf[..], Some(n)).unwrap();
        prop_assert_eq!(back.to_vec(), set.to_vec());
    }

    #[test]
    fn factorization_partitions_pairs(half in 1u32..=15, t_frac in 0.0f64..=1.0) {
        let m = 2 * half;
        let t = ((m - 1) as f64 * t_frac).round() as u32;
        let ms = one_factorization(m, t).unwrap();
        prop_assert_eq!(ms.len() as u32, t);
        let mut pairs: Vec<(u32, u32)> = ms.iter().flatten().copied().collect();
        let count = pairs.len();
        pairs.sort_unstable();
        pairs.dedup();
        prop_assert_eq!(pairs.len(), count);
        prop_assert_eq!(count as u32, t * half);
    }

    #[test]
    fn c1_closed_form_matches_count(n in 10u32..160, l_frac in 0.0f64..1.0) {
        let l = 1 + (l_frac * (n * n / 8) as f64) as u64;
        if let Ok(r) = build_c1(n, l, BuildOptions::default()) {
            prop_assert!(r.size_predicted <= l);
            prop_assert_eq!(r.edges_actual, Some(r.edges_predicted));
            r.verify_pairwise().unwrap();
        }
    }

    #[test]
    fn c2_closed_form_matches_count(n in 12u32..200, c in 0.05f64..3.999) {
        if let Ok(r) = build_c2(n, c, BuildOptions::default()) {
            prop_assert_eq!(r.size_actual, Some(r.size_predicted));
            prop_assert_eq!(r.edges_actual, Some(r.edges_predicted));
        }
    }

    #[test]
    fn c3_closed_form_matches_count(n in 4u32..40, l_frac in 0.0f64..1.0) {
        let p = make_params(n).unwrap();
        let l = (l_frac * p.vertex_count as f64 / 2.0) as u64;
        if let Ok(r) = build_c3(n, l, BuildOptions::default()) {
            prop_assert_eq!(r.size_actual, Some(l));
            prop_assert_eq!(r.edges_actual, Some(r.edges_predicted));
            prop_assert_eq!(r.pieces_actual, r.pieces_predicted);
        }
    }
}
