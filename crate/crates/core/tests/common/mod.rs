//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search or verification code it is used to check.

#![allow(dead_code)]

use colorful_core::Graph;
use rand::Rng;

/// Plain adjacency lists built from the graph's edge list.
pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Graph whose edges are the set bits of `code` over pairs `(u, v)`, `u < v`, in order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Lengths of all simple cycles, by DFS from each cycle's smallest vertex.
pub fn cycle_lengths(g: &Graph) -> Vec<usize> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut out = Vec::new();
    fn dfs(adj: &[Vec<bool>], start: usize, v: usize, on_path: &mut Vec<bool>, len: usize, out: &mut Vec<usize>) {
        for w in 0..adj.len() {
            if !adj[v][w] || w < start {
                continue;
            }
            if w == start && len >= 3 {
                out.push(len);
            } else if w != start && !on_path[w] {
                on_path[w] = true;
                dfs(adj, start, w, on_path, len + 1, out);
                on_path[w] = false;
            }
        }
    }
    for s in 0..n {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        dfs(&adj, s, s, &mut on_path, 1, &mut out);
    }
    out
}

/// Proper, and every class `1..=k` holds a vertex whose closed neighborhood sees all colors.
pub fn naive_colorful(adj: &[Vec<bool>], colors: &[usize], k: usize) -> bool {
    let n = adj.len();
    for u in 0..n {
        for v in 0..n {
            if adj[u][v] && colors[u] == colors[v] {
                return false;
            }
        }
    }
    (1..=k).all(|c| {
        (0..n)
            .any(|v| colors[v] == c && (1..=k).all(|want| want == c || (0..n).any(|w| adj[v][w] && colors[w] == want)))
    })
}

/// All `k^n` assignments of colors `1..=k`, in lexicographic order.
pub fn all_assignments(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut c = vec![0; n];
        for slot in c.iter_mut() {
            *slot = code % k + 1;
            code /= k;
        }
        c
    })
}

/// Restricted-growth strings of length `n` with at most `k` values: one
/// representative per coloring up to renaming colors.
pub fn restricted_growth(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in 1..=(max + 1).min(k) {
            cur.push(c);
            rec(n, k, cur, max.max(c), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), 0, &mut out);
    out
}

/// Definition of a semi-locally-surjective map, evaluated literally.
pub fn naive_sls(g: &[Vec<bool>], h: &[Vec<bool>], f: &[usize]) -> bool {
    let (ng, nh) = (g.len(), h.len());
    let hom = (0..ng).all(|a| (0..ng).all(|b| !g[a][b] || h[f[a]][f[b]]));
    let onto = (0..nh).all(|u| f.contains(&u));
    hom && onto
        && (0..nh)
            .all(|u| (0..ng).any(|a| f[a] == u && (0..nh).all(|v| !h[u][v] || (0..ng).any(|b| f[b] == v && g[a][b]))))
}

/// Whether target vertex `u` has a witness preimage, evaluated literally.
pub fn naive_has_witness(g: &[Vec<bool>], h: &[Vec<bool>], f: &[usize], u: usize) -> bool {
    (0..g.len()).any(|a| f[a] == u && (0..h.len()).all(|v| !h[u][v] || (0..g.len()).any(|b| f[b] == v && g[a][b])))
}

pub fn naive_exists(g: &Graph, k: usize) -> bool {
    let adj = adjacency(g);
    all_assignments(g.vertex_count(), k).any(|c| naive_colorful(&adj, &c, k))
}
