//! Colorings and their verification, exact chromatic number, exact search for
//! colorful (b-)colorings, and the b-spectrum of a graph.
//!
//! Colors are `1..=k`. A coloring is *colorful* when it is proper and every
//! color class contains a b-dominating vertex, i.e. a vertex whose closed
//! neighborhood carries all `k` colors.

mod chromatic;
mod colorful;
mod spectrum;

pub use chromatic::{chromatic_number, greedy_coloring, ChromaticResult};
pub use colorful::{find_colorful_coloring, m_degree_bound, Budget, SearchOptions, SearchOutcome, SearchStats};
pub use spectrum::{b_spectrum, BSpectrumReport, KStatus, Verdict};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest number of colors the search kernels handle (colors fit in a `u64` mask).
pub const MAX_COLORS: usize = 64;

/// A total map from vertices to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c < 1 || c > k) {
            return Err(Error::ColorOutOfRange { vertex, color, k });
        }
        Ok(Self { k, colors })
    }

    /// Builds a coloring from disjoint classes covering `0..n`; class `i` gets color `i + 1`.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut colors = vec![0; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count: n,
                    });
                }
                if colors[v] != 0 {
                    return Err(Error::InvalidParameters(format!("vertex {v} in two classes")));
                }
                colors[v] = i + 1;
            }
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidParameters(format!("vertex {v} in no class")));
        }
        Self::new(classes.len(), colors)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Vertices of each class, ascending; index `i` holds color `i + 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes().iter().map(Vec::len).collect()
    }

    fn check_against(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.vertex_count() {
            return Err(Error::ColoringLength {
                expected: g.vertex_count(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// True iff no edge is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_against(g)?;
    Ok(first_monochromatic_edge(g, c).is_none())
}

fn first_monochromatic_edge(g: &Graph, c: &Coloring) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| c.color(u) == c.color(v))
}

/// True iff the closed neighborhood of `v` carries every color `1..=k`.
pub fn is_b_dominating(g: &Graph, c: &Coloring, v: usize) -> Result<bool> {
    c.check_against(g)?;
    let seen = g
        .closed_neighborhood(v)?
        .iter()
        .fold(VertexSet::new(c.k()), |mut acc, w| {
            acc.insert(c.color(w) - 1);
            acc
        });
    Ok(seen.len() == c.k())
}

/// Outcome of checking a coloring for colorfulness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Colorfulness {
    /// Proper, with `witnesses[i]` the least b-dominating vertex of color `i + 1`.
    Colorful { witnesses: Vec<usize> },
    /// Some edge is monochromatic.
    NotProper { edge: (usize, usize) },
    /// Proper, but this color's class has no b-dominating vertex (or is empty).
    NoDominatingVertex { color: usize },
}

impl Colorfulness {
    pub fn is_colorful(&self) -> bool {
        matches!(self, Colorfulness::Colorful { .. })
    }

    pub fn witnesses(&self) -> Option<&[usize]> {
        match self {
            Colorfulness::Colorful { witnesses } => Some(witnesses),
            _ => None,
        }
    }
}

/// Checks properness and that each of the `k` classes holds a b-dominating vertex.
pub fn is_colorful(g: &Graph, c: &Coloring) -> Result<Colorfulness> {
    c.check_against(g)?;
    if let Some(edge) = first_monochromatic_edge(g, c) {
        return Ok(Colorfulness::NotProper { edge });
    }
    let mut witnesses = vec![usize::MAX; c.k()];
    for v in 0..g.vertex_count() {
        let slot = &mut witnesses[c.color(v) - 1];
        if *slot == usize::MAX && is_b_dominating(g, c, v)? {
            *slot = v;
        }
    }
    if let Some(i) = witnesses.iter().position(|&w| w == usize::MAX) {
        return Ok(Colorfulness::NoDominatingVertex { color: i + 1 });
    }
    Ok(Colorfulness::Colorful { witnesses })
}
