use super::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Coloring,
    /// Size of the greedy clique used as the lower bound.
    pub clique_bound: usize,
}

/// Picks the uncolored vertex with the most distinct neighbor colors, then the
/// most uncolored neighbors, then the smallest index.
fn pick_dsatur(g: &Graph, colors: &[usize], forbidden: &[u64]) -> Option<usize> {
    let mut best: Option<(u32, usize, usize)> = None;
    for v in 0..g.vertex_count() {
        if colors[v] != 0 {
            continue;
        }
        let sat = forbidden[v].count_ones();
        let free = g.neighbors(v).iter().filter(|&w| colors[w] == 0).count();
        let better = match best {
            None => true,
            Some((bs, bf, _)) => (sat, free) > (bs, bf),
        };
        if better {
            best = Some((sat, free, v));
        }
    }
    best.map(|(_, _, v)| v)
}

/// Greedy DSATUR: each vertex takes its least available color.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    let mut forbidden = vec![0u64; n];
    let mut k = 0;
    while let Some(v) = pick_dsatur(g, &colors, &forbidden) {
        let c = (!forbidden[v]).trailing_zeros() as usize + 1;
        assert!(c <= super::MAX_COLORS, "greedy coloring needs more than 64 colors");
        colors[v] = c;
        k = k.max(c);
        for w in g.neighbors(v) {
            forbidden[w] |= 1 << (c - 1);
        }
    }
    Coloring::new(k, colors).expect("greedy colors are in range")
}

struct Decider<'g> {
    g: &'g Graph,
    k: usize,
    colors: Vec<usize>,
    forbidden: Vec<u64>,
}

impl Decider<'_> {
    fn full(&self) -> u64 {
        if self.k == 64 {
            u64::MAX
        } else {
            (1u64 << self.k) - 1
        }
    }

    /// Colors beyond `max_used + 1` are never tried: any coloring can be
    /// relabeled so colors first appear in increasing order.
    fn solve(&mut self, max_used: usize) -> bool {
        let Some(v) = pick_dsatur(self.g, &self.colors, &self.forbidden) else {
            return true;
        };
        let limit = (max_used + 1).min(self.k);
        for c in 1..=limit {
            let bit = 1u64 << (c - 1);
            if self.forbidden[v] & bit != 0 {
                continue;
            }
            let saved: Vec<(usize, u64)> = self.g.neighbors(v).iter().map(|w| (w, self.forbidden[w])).collect();
            self.colors[v] = c;
            let mut dead = false;
            for w in self.g.neighbors(v) {
                self.forbidden[w] |= bit;
                if self.colors[w] == 0 && self.forbidden[w] & self.full() == self.full() {
                    dead = true;
                }
            }
            if !dead && self.solve(max_used.max(c)) {
                return true;
            }
            self.colors[v] = 0;
            for (w, f) in saved {
                self.forbidden[w] = f;
            }
        }
        false
    }
}

/// Proper `k`-coloring of `g`, if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.vertex_count();
    if n == 0 {
        return Coloring::new(k, Vec::new()).ok();
    }
    if k == 0 || k > super::MAX_COLORS {
        return None;
    }
    let mut d = Decider {
        g,
        k,
        colors: vec![0; n],
        forbidden: vec![0; n],
    };
    d.solve(0)
        .then(|| Coloring::new(k, d.colors).expect("colors are in range"))
}

/// Exact chromatic number with a witness coloring.
///
/// Tries `k` upward from a greedy clique bound; the greedy DSATUR coloring is
/// the fallback upper bound.
pub fn chromatic_number(g: &Graph) -> Result<ChromaticResult> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let clique_bound = g.greedy_clique().len();
    let greedy = greedy_coloring(g);
    for k in clique_bound..greedy.k() {
        if let Some(witness) = k_coloring(g, k) {
            return Ok(ChromaticResult {
                chi: k,
                witness,
                clique_bound,
            });
        }
    }
    Ok(ChromaticResult {
        chi: greedy.k(),
        witness: greedy,
        clique_bound,
    })
}
