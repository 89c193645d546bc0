//! Golden inputs: the explicit colorful 4-coloring of `KG(7,3)`, a colorful
//! 5-coloring of `KG(7,3)` found by search, and a few standard graphs.

use std::collections::BTreeSet;

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::io;
use crate::kneser::{kneser_graph, KneserGraph};

type Triple = [usize; 3];

const V1: [Triple; 8] = [
    [1, 2, 3],
    [1, 4, 5],
    [2, 5, 6],
    [1, 2, 6],
    [1, 2, 7],
    [1, 3, 6],
    [1, 6, 7],
    [1, 4, 6],
];

const V2: [Triple; 12] = [
    [1, 2, 5],
    [1, 3, 5],
    [1, 5, 6],
    [1, 5, 7],
    [2, 3, 5],
    [2, 4, 5],
    [2, 5, 7],
    [3, 4, 5],
    [3, 5, 6],
    [3, 5, 7],
    [4, 5, 6],
    [5, 6, 7],
];

const V3: [Triple; 5] = [[1, 2, 4], [1, 3, 7], [4, 5, 7], [1, 4, 7], [2, 6, 7]];

const V4: [Triple; 10] = [
    [1, 3, 4],
    [2, 3, 4],
    [2, 4, 6],
    [2, 4, 7],
    [3, 4, 6],
    [3, 4, 7],
    [4, 6, 7],
    [2, 3, 6],
    [2, 3, 7],
    [3, 6, 7],
];

const DOMINATORS: [Triple; 4] = [[1, 2, 3], [5, 6, 7], [2, 6, 7], [1, 3, 4]];

fn sorted(t: Triple) -> Triple {
    let mut t = t;
    t.sort_unstable();
    t
}

fn set_of(ts: &[Triple]) -> BTreeSet<Triple> {
    ts.iter().copied().map(sorted).collect()
}

/// `{pivot, x, y}` for distinct `x, y` drawn from `pool`.
fn pivot_triples(pivot: usize, pool: &[usize]) -> BTreeSet<Triple> {
    let mut out = BTreeSet::new();
    for (i, &x) in pool.iter().enumerate() {
        for &y in &pool[i + 1..] {
            out.insert(sorted([pivot, x, y]));
        }
    }
    out
}

/// Expands the set-builder forms of the second and fourth classes and checks
/// them against the explicit lists above.
fn check_set_builder_forms() {
    let v2: BTreeSet<_> = pivot_triples(5, &[1, 2, 3, 4, 6, 7])
        .difference(&set_of(&[[1, 4, 5], [2, 5, 6], [4, 5, 7]]))
        .copied()
        .collect();
    assert_eq!(v2, set_of(&V2), "second class disagrees with its set-builder form");

    let mut v4: BTreeSet<_> = pivot_triples(4, &[1, 2, 3, 6, 7])
        .difference(&set_of(&[[1, 2, 4], [1, 4, 6], [1, 4, 7]]))
        .copied()
        .collect();
    v4.extend(set_of(&[[2, 3, 6], [2, 3, 7], [3, 6, 7]]));
    assert_eq!(v4, set_of(&V4), "fourth class disagrees with its set-builder form");
}

/// The explicit colorful 4-coloring of `KG(7,3)`.
#[derive(Debug, Clone)]
pub struct Kg73Fixture {
    pub kneser: KneserGraph,
    pub coloring: Coloring,
    /// Designated b-dominating vertex of each class, as vertex indices.
    pub dominators: [usize; 4],
}

impl Kg73Fixture {
    pub fn graph(&self) -> &Graph {
        self.kneser.graph()
    }
}

/// Builds the fixture, asserting the partition property on the way.
pub fn kg73_colorful_four() -> Kg73Fixture {
    check_set_builder_forms();
    let kneser = kneser_graph(7, 3).expect("KG(7,3) is valid");
    let to_vertices = |ts: &[Triple]| -> Vec<usize> {
        ts.iter()
            .map(|t| kneser.vertex(t).expect("fixture triples are 3-subsets of [7]"))
            .collect()
    };
    let classes = [to_vertices(&V1), to_vertices(&V2), to_vertices(&V3), to_vertices(&V4)];
    let n = kneser.graph().vertex_count();
    assert_eq!(
        classes.iter().map(Vec::len).sum::<usize>(),
        n,
        "classes must cover all 35 subsets"
    );
    let coloring = Coloring::from_classes(n, &classes).expect("fixture classes partition KG(7,3)");
    let dominators = [0, 1, 2, 3].map(|i| kneser.vertex(&DOMINATORS[i]).expect("valid triple"));
    for (i, &d) in dominators.iter().enumerate() {
        assert_eq!(coloring.color(d), i + 1, "designated dominator outside its class");
    }
    Kg73Fixture {
        kneser,
        coloring,
        dominators,
    }
}

const KG73_FIVE: &str = include_str!("../fixtures/kg73_colorful_five.coloring");

/// A colorful 5-coloring of `KG(7,3)` produced by the exhaustive search and
/// stored with the crate.
pub fn kg73_colorful_five() -> (KneserGraph, Coloring) {
    let kneser = kneser_graph(7, 3).expect("KG(7,3) is valid");
    let coloring = io::read_coloring(KG73_FIVE, kneser.graph()).expect("stored fixture parses");
    (kneser, coloring)
}

/// The Petersen graph, built as `KG(5,2)`.
pub fn petersen() -> Graph {
    kneser_graph(5, 2).expect("KG(5,2) is valid").graph().clone()
}

/// The 3-cube: 3-bit strings adjacent when they differ in one bit.
pub fn q3() -> Graph {
    let edges = (0..8usize).flat_map(|u| (0..3).map(move |b| (u, u ^ 1 << b)).filter(|&(u, v)| u < v));
    Graph::from_edges(8, edges).expect("cube is valid")
}

/// Point-line incidence graph of the Fano plane: points `0..7`, line `i`
/// (vertex `7 + i`) is `{i, i+1, i+3} mod 7`.
pub fn heawood() -> Graph {
    let edges = (0..7).flat_map(|i| [0, 1, 3].map(|s| ((i + s) % 7, 7 + i)));
    Graph::from_edges(14, edges).expect("Heawood graph is valid")
}
