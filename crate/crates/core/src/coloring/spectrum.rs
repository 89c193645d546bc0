use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{
    chromatic_number, find_colorful_coloring, is_colorful, m_degree_bound, Coloring, SearchOptions, SearchOutcome,
};
use crate::error::Result;
use crate::graph::Graph;

/// Three-valued verdict for claims that an exhausted budget may leave open.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "true",
            Verdict::No => "false",
            Verdict::Unknown => "unknown",
        })
    }
}

/// Search result for one `k` of the spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KStatus {
    Found(Coloring),
    NotExists,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSpectrumReport {
    pub chi: usize,
    /// `m_degree_bound`, the largest `k` searched.
    pub upper_bound: usize,
    /// Status of every `k` in `chi..=upper_bound`.
    pub per_k: BTreeMap<usize, KStatus>,
}

impl BSpectrumReport {
    /// Every `k` with a colorful `k`-coloring found.
    pub fn spectrum(&self) -> BTreeSet<usize> {
        self.per_k
            .iter()
            .filter(|(_, s)| matches!(s, KStatus::Found(_)))
            .map(|(&k, _)| k)
            .collect()
    }

    pub fn unknown(&self) -> BTreeSet<usize> {
        self.per_k
            .iter()
            .filter(|(_, s)| matches!(s, KStatus::Unknown))
            .map(|(&k, _)| k)
            .collect()
    }

    /// Largest `k` found. Exact unless some larger `k` is unknown.
    pub fn b(&self) -> usize {
        self.spectrum().last().copied().unwrap_or(self.chi)
    }

    pub fn b_is_exact(&self) -> bool {
        self.unknown().iter().all(|&k| k < self.b())
    }

    pub fn witness(&self, k: usize) -> Option<&Coloring> {
        match self.per_k.get(&k) {
            Some(KStatus::Found(c)) => Some(c),
            _ => None,
        }
    }

    /// `No` once a refuted `k` lies below a found one. `Unknown` while some
    /// resolution of the open values of `k` could still open a gap: an open
    /// `k` with a found or open value above it, or with a refuted value below.
    pub fn continuous(&self) -> Verdict {
        let refuted: Vec<usize> = self
            .per_k
            .iter()
            .filter(|(_, s)| matches!(s, KStatus::NotExists))
            .map(|(&k, _)| k)
            .collect();
        let found = self.spectrum();
        let unknown = self.unknown();
        if refuted.iter().any(|&k| found.iter().any(|&f| f > k)) {
            return Verdict::No;
        }
        let open_gap = unknown
            .iter()
            .any(|&u| found.iter().any(|&f| f > u) || unknown.iter().any(|&v| v > u) || refuted.iter().any(|&r| r < u));
        if open_gap {
            Verdict::Unknown
        } else {
            Verdict::Yes
        }
    }

    pub fn is_complete(&self) -> bool {
        self.unknown().is_empty()
    }
}

/// Computes `B(G)` by exhaustive search for every `k` from the chromatic
/// number up to [`m_degree_bound`].
pub fn b_spectrum(g: &Graph, opts: &SearchOptions) -> Result<BSpectrumReport> {
    let chromatic = chromatic_number(g)?;
    let chi = chromatic.chi;
    let upper_bound = m_degree_bound(g).max(chi);
    let mut per_k = BTreeMap::new();
    for k in chi..=upper_bound {
        // any chi-coloring is colorful; keep the chromatic witness when it checks out
        if k == chi && is_colorful(g, &chromatic.witness)?.is_colorful() {
            per_k.insert(k, KStatus::Found(chromatic.witness.clone()));
            continue;
        }
        let status = match find_colorful_coloring(g, k, opts).0 {
            SearchOutcome::Found(c) => KStatus::Found(c),
            SearchOutcome::NotExists => KStatus::NotExists,
            SearchOutcome::BudgetExceeded => KStatus::Unknown,
        };
        per_k.insert(k, status);
    }
    Ok(BSpectrumReport {
        chi,
        upper_bound,
        per_k,
    })
}
