//! Kneser graphs `KG(n, m)`: vertices are the `m`-subsets of `{1..n}`,
//! adjacent when disjoint.
//!
//! Vertex `i` of the generated graph is the `i`-th subset in colexicographic
//! order, so `{1,2,..,m}` is vertex 0 and `{n-m+1,..,n}` is the last vertex.
//! Subsets are kept as `n`-bit masks (bit `j - 1` for element `j`).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest universe size representable by a mask.
pub const MAX_UNIVERSE: usize = 64;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

/// An `m`-subset of `{1..n}`, members strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KneserLabel {
    n: usize,
    members: Vec<usize>,
}

impl KneserLabel {
    pub fn new(n: usize, members: Vec<usize>) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::InvalidLabel(format!("universe size {n} exceeds {MAX_UNIVERSE}")));
        }
        if let Some(&first) = members.first() {
            if first < 1 {
                return Err(Error::InvalidLabel(format!("member {first} below 1")));
            }
        }
        if let Some(w) = members.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidLabel(format!(
                "members not strictly increasing at {} {}",
                w[0], w[1]
            )));
        }
        if let Some(&last) = members.last() {
            if last > n {
                return Err(Error::InvalidLabel(format!("member {last} exceeds n = {n}")));
            }
        }
        Ok(Self { n, members })
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        let members = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
        Self { n, members }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> u64 {
        self.members.iter().fold(0, |acc, &x| acc | 1 << (x - 1))
    }

    /// Parses the `{a,b,c}` rendering against universe size `n`. Members may
    /// appear in any order but must be distinct.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidLabel(format!("expected {{a,b,..}}, got {s:?}")))?;
        let mut members = Vec::new();
        if !inner.trim().is_empty() {
            for part in inner.split(',') {
                let x = usize::from_str(part.trim())
                    .map_err(|_| Error::InvalidLabel(format!("bad member {part:?} in {s:?}")))?;
                members.push(x);
            }
        }
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidLabel(format!("repeated member in {s:?}")));
        }
        Self::new(n, members)
    }
}

impl fmt::Display for KneserLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

fn check_params(n: usize, m: usize) -> Result<()> {
    if m < 1 || m > n {
        return Err(Error::InvalidParameters(format!("KG({n},{m}) needs 1 <= m <= n")));
    }
    if n > MAX_UNIVERSE {
        return Err(Error::InvalidParameters(format!("n = {n} exceeds {MAX_UNIVERSE}")));
    }
    Ok(())
}

/// Colexicographic rank of an `m`-subset: `sum_i C(s_i - 1, i)` over the
/// members `s_1 < .. < s_m`.
pub fn rank_subset(n: usize, m: usize, label: &KneserLabel) -> Result<usize> {
    check_params(n, m)?;
    if label.universe() != n || label.members().len() != m {
        return Err(Error::InvalidLabel(format!("{label} is not a {m}-subset of [{n}]")));
    }
    Ok(label
        .members()
        .iter()
        .enumerate()
        .map(|(i, &s)| binomial(s - 1, i + 1))
        .sum())
}

/// Inverse of [`rank_subset`].
pub fn unrank(n: usize, m: usize, index: usize) -> Result<KneserLabel> {
    check_params(n, m)?;
    let total = binomial(n, m);
    if index >= total {
        return Err(Error::InvalidParameters(format!(
            "index {index} out of range for C({n},{m}) = {total}"
        )));
    }
    let mut rest = index;
    let mut members = vec![0; m];
    let mut top = n;
    for i in (1..=m).rev() {
        // largest s with C(s - 1, i) <= rest
        let mut s = top;
        while binomial(s - 1, i) > rest {
            s -= 1;
        }
        members[i - 1] = s;
        rest -= binomial(s - 1, i);
        top = s - 1;
    }
    KneserLabel::new(n, members)
}

#[derive(Debug, Clone)]
pub struct KneserGraph {
    n: usize,
    m: usize,
    graph: Arc<Graph>,
    masks: Vec<u64>,
}

impl KneserGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    pub fn mask(&self, v: usize) -> u64 {
        self.masks[v]
    }

    pub fn label(&self, v: usize) -> KneserLabel {
        KneserLabel::from_mask(self.n, self.masks[v])
    }

    pub fn vertex_of(&self, label: &KneserLabel) -> Result<usize> {
        rank_subset(self.n, self.m, label)
    }

    /// Vertex index of the subset given by its members.
    pub fn vertex(&self, members: &[usize]) -> Result<usize> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        self.vertex_of(&KneserLabel::new(self.n, sorted)?)
    }

    /// Vertex index of a subset given as a mask.
    pub fn vertex_of_mask(&self, mask: u64) -> Result<usize> {
        self.vertex_of(&KneserLabel::from_mask(self.n, mask))
    }
}

/// Builds `KG(n, m)`. For `n < 2m` the graph is edgeless.
pub fn kneser_graph(n: usize, m: usize) -> Result<KneserGraph> {
    check_params(n, m)?;
    let count = binomial(n, m);
    let masks: Vec<u64> = (0..count)
        .map(|i| unrank(n, m, i).map(|l| l.mask()))
        .collect::<Result<_>>()?;
    let mut edges = Vec::new();
    for u in 0..count {
        for v in u + 1..count {
            if masks[u] & masks[v] == 0 {
                edges.push((u, v));
            }
        }
    }
    let labels = masks
        .iter()
        .map(|&mk| KneserLabel::from_mask(n, mk).to_string())
        .collect();
    let graph = Graph::from_edges(count, edges)?.with_labels(labels)?;
    Ok(KneserGraph {
        n,
        m,
        graph: Arc::new(graph),
        masks,
    })
}

/// `n - 2m + 2`, the chromatic number of `KG(n, m)` for `n >= 2m`.
pub fn lovasz_chromatic(n: usize, m: usize) -> Result<usize> {
    if m < 1 || n < 2 * m {
        return Err(Error::InvalidParameters(format!(
            "chromatic formula needs n >= 2m >= 2, got n = {n}, m = {m}"
        )));
    }
    Ok(n - 2 * m + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn petersen_shape() {
        let kg = kneser_graph(5, 2).unwrap();
        let g = kg.graph();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.regularity(), Ok(Some(3)));
        assert_eq!(g.girth(), Girth::Finite(5));
    }

    #[test]
    fn kg31_is_triangle() {
        let kg = kneser_graph(3, 1).unwrap();
        assert_eq!(
            *kg.graph(),
            Graph::complete(3)
                .with_labels(vec!["{1}".into(), "{2}".into(), "{3}".into()])
                .unwrap()
        );
    }

    #[test]
    fn kg73_degrees() {
        let kg = kneser_graph(7, 3).unwrap();
        assert_eq!(kg.graph().vertex_count(), 35);
        assert_eq!(kg.graph().regularity(), Ok(Some(binomial(4, 3))));
    }

    #[test]
    fn small_n_is_edgeless() {
        let kg = kneser_graph(5, 3).unwrap();
        assert_eq!(kg.graph().vertex_count(), 10);
        assert_eq!(kg.graph().edge_count(), 0);
    }

    #[test]
    fn parameter_errors() {
        assert!(kneser_graph(3, 4).is_err());
        assert!(kneser_graph(3, 0).is_err());
        assert!(lovasz_chromatic(5, 3).is_err());
        assert_eq!(lovasz_chromatic(5, 2), Ok(3));
        assert_eq!(lovasz_chromatic(7, 3), Ok(3));
        for m in 1..6 {
            assert_eq!(lovasz_chromatic(2 * m, m), Ok(2));
        }
    }

    #[test]
    fn colex_rank_endpoints_and_roundtrip() {
        let l = |v: &[usize]| KneserLabel::new(7, v.to_vec()).unwrap();
        assert_eq!(rank_subset(7, 3, &l(&[1, 2, 3])), Ok(0));
        assert_eq!(rank_subset(7, 3, &l(&[5, 6, 7])), Ok(34));
        assert_eq!(rank_subset(7, 3, &l(&[1, 2, 4])), Ok(1));
        assert_eq!(rank_subset(7, 3, &l(&[1, 3, 4])), Ok(2));
        for i in 0..35 {
            let x = unrank(7, 3, i).unwrap();
            assert_eq!(rank_subset(7, 3, &x), Ok(i));
        }
        assert!(unrank(7, 3, 35).is_err());
        assert!(rank_subset(7, 3, &l(&[1, 2])).is_err());
    }

    #[test]
    fn label_parsing() {
        assert_eq!(KneserLabel::parse(7, "{3,1,2}").unwrap().to_string(), "{1,2,3}");
        assert!(KneserLabel::parse(7, "{1,1,2}").is_err());
        assert!(KneserLabel::parse(7, "{0,1,2}").is_err());
        assert!(KneserLabel::parse(7, "{1,2,8}").is_err());
        assert!(KneserLabel::parse(7, "1,2,3").is_err());
        assert!(KneserLabel::new(7, vec![2, 1]).is_err());
    }

    #[test]
    fn labels_attached_in_colex_order() {
        let kg = kneser_graph(4, 2).unwrap();
        let labels = kg.graph().labels().unwrap();
        assert_eq!(labels, ["{1,2}", "{1,3}", "{2,3}", "{1,4}", "{2,4}", "{3,4}"]);
    }
}
