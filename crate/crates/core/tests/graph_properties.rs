mod common;

use colorful_core::coloring::chromatic_number;
use colorful_core::fixtures::{heawood, petersen, q3};
use colorful_core::kneser::{binomial, kneser_graph, lovasz_chromatic, rank_subset, unrank, KneserLabel};
use colorful_core::{Girth, Graph};
use common::{cycle_lengths, random_graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// 2-subsets of {1..5} disjoint from a fixed one, counted by hand.
#[test]
fn petersen_closed_neighborhoods_have_four_vertices() {
    let pairs: Vec<[usize; 2]> = (1..=5).flat_map(|a| (a + 1..=5).map(move |b| [a, b])).collect();
    let disjoint = |x: &[usize; 2], y: &[usize; 2]| x.iter().all(|e| !y.contains(e));
    let p = petersen();
    for (v, x) in pairs.iter().enumerate() {
        let expected = pairs.iter().filter(|y| disjoint(x, y)).count() + 1;
        assert_eq!(expected, 4);
        assert_eq!(p.closed_neighborhood(v).unwrap().len(), expected);
    }
}

#[test]
fn fixture_graphs_match_brute_force() {
    for (g, girth, bipartite) in [(petersen(), 5, false), (q3(), 4, true), (heawood(), 6, true)] {
        let shortest = cycle_lengths(&g).into_iter().min().unwrap();
        assert_eq!(shortest, girth);
        assert_eq!(g.girth(), Girth::Finite(girth));
        assert_eq!(g.is_bipartite(), bipartite);
        assert_eq!(g.regularity(), Ok(Some(3)));
    }
}

#[test]
fn girth_agrees_with_cycle_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..400 {
        let n = 1 + trial % 10;
        let p = [0.1, 0.2, 0.35, 0.5][trial % 4];
        let g = random_graph(&mut rng, n, p);
        let cycles = cycle_lengths(&g);
        let expected = cycles.iter().min().map_or(Girth::Infinite, |&l| Girth::Finite(l));
        assert_eq!(g.girth(), expected, "{g:?}");
        // forest test
        let forest = g.edge_count() + g.component_count() == g.vertex_count();
        assert_eq!(g.girth() == Girth::Infinite, forest, "{g:?}");
    }
}

#[test]
fn bipartite_iff_no_odd_cycle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..400 {
        let n = 1 + trial % 8;
        let g = random_graph(&mut rng, n, [0.15, 0.3, 0.5][trial % 3]);
        let odd = cycle_lengths(&g).iter().any(|l| l % 2 == 1);
        assert_eq!(g.is_bipartite(), !odd, "{g:?}");
        if let Some(side) = g.bipartition() {
            assert!(g.edges().all(|(u, v)| side[u] != side[v]));
        }
    }
}

#[test]
fn kneser_degrees_and_disjointness() {
    for n in 1..=9 {
        for m in 1..=n.min(4) {
            let kg = kneser_graph(n, m).unwrap();
            let g = kg.graph();
            assert_eq!(g.vertex_count(), binomial(n, m));
            let labels: Vec<Vec<usize>> = g
                .labels()
                .unwrap()
                .iter()
                .map(|l| KneserLabel::parse(n, l).unwrap().members().to_vec())
                .collect();
            for u in 0..g.vertex_count() {
                assert_eq!(g.degree(u), binomial(n - m, m), "KG({n},{m}) vertex {u}");
                for v in 0..g.vertex_count() {
                    let disjoint = labels[u].iter().all(|x| !labels[v].contains(x));
                    assert_eq!(g.has_edge(u, v), u != v && disjoint);
                }
            }
        }
    }
}

#[test]
fn kneser_chromatic_matches_formula() {
    for n in 2..=9 {
        for m in 1..=4 {
            if n < 2 * m {
                continue;
            }
            let kg = kneser_graph(n, m).unwrap();
            let r = chromatic_number(kg.graph()).unwrap();
            assert_eq!(r.chi, lovasz_chromatic(n, m).unwrap(), "KG({n},{m})");
        }
    }
}

#[test]
fn graph_constructors_uphold_invariants() {
    for g in [Graph::complete(6), Graph::cycle(5), petersen(), heawood(), q3()] {
        for v in 0..g.vertex_count() {
            assert!(!g.has_edge(v, v));
            for w in g.neighbors(v) {
                assert!(g.has_edge(w, v));
            }
        }
    }
}

proptest! {
    #[test]
    fn colex_rank_is_a_bijection(n in 1usize..=12, m_seed in 0usize..12, idx_seed in 0usize..10_000) {
        let m = 1 + m_seed % n;
        let total = binomial(n, m);
        let idx = idx_seed % total;
        let label = unrank(n, m, idx).unwrap();
        prop_assert_eq!(label.members().len(), m);
        prop_assert!(label.members().windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(rank_subset(n, m, &label).unwrap(), idx);
        if idx + 1 < total {
            // colex order: compare from the largest member down
            let next = unrank(n, m, idx + 1).unwrap();
            let a: Vec<_> = label.members().iter().rev().collect();
            let b: Vec<_> = next.members().iter().rev().collect();
            prop_assert!(a < b);
        }
    }
}
