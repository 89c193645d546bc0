//! Exact search for colorful `k`-colorings.
//!
//! The search runs in three stages, each a backtracking layer over a shared
//! state of per-vertex color domains (`u64` masks) with forward checking:
//!
//! 1. choose the b-dominating vertices `d_1 < d_2 < .. < d_k` among vertices
//!    of degree at least `k - 1`, giving `d_i` color `i`;
//! 2. for every `d_i`, force its neighborhood to realize each missing color,
//!    branching on the (dominator, color) pair with the fewest options;
//! 3. extend to a proper coloring of the remaining vertices, smallest domain
//!    first.
//!
//! Sorting the dominators and tying color `i` to the `i`-th of them loses no
//! solutions: colors of any colorful coloring can be renamed so that its
//! per-class dominators appear in that order. A completed run therefore
//! proves non-existence.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use super::{Coloring, MAX_COLORS};
use crate::graph::Graph;

/// Node-expansion and wall-clock limits for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const fn unlimited() -> Self {
        Self {
            max_nodes: None,
            max_time: None,
        }
    }

    pub const fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: Some(2_000_000_000),
            max_time: Some(Duration::from_secs(600)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Threads exploring disjoint first-dominator branches. Witnesses are
    /// reproducible only with a single worker.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: Budget::default(),
            workers: 1,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: Budget) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Coloring),
    /// The search space was exhausted.
    NotExists,
    /// Inconclusive: the budget ran out first.
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Largest `d` such that at least `d` vertices have degree `>= d - 1`.
/// Every member of the b-spectrum is at most this value.
pub fn m_degree_bound(g: &Graph) -> usize {
    let mut degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    (1..=degrees.len())
        .take_while(|&d| degrees[d - 1] + 1 >= d)
        .last()
        .unwrap_or(0)
}

/// Searches for a colorful `k`-coloring of `g`.
pub fn find_colorful_coloring(g: &Graph, k: usize, opts: &SearchOptions) -> (SearchOutcome, SearchStats) {
    let start = Instant::now();
    let shared = Shared {
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        exceeded: AtomicBool::new(false),
        start,
        budget: opts.budget,
    };
    let outcome = search(g, k, opts.workers.max(1), &shared);
    let stats = SearchStats {
        nodes: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    };
    (outcome, stats)
}

fn search(g: &Graph, k: usize, workers: usize, shared: &Shared) -> SearchOutcome {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return SearchOutcome::NotExists;
    }
    if k == 1 {
        // a single class; every vertex dominates iff there are no edges
        return if g.edge_count() == 0 {
            SearchOutcome::Found(Coloring::new(1, vec![1; n]).expect("color 1 in range"))
        } else {
            SearchOutcome::NotExists
        };
    }
    let candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 >= k).collect();
    if candidates.len() < k {
        return SearchOutcome::NotExists;
    }
    if k > MAX_COLORS {
        return SearchOutcome::BudgetExceeded;
    }

    let kernel = Kernel {
        g,
        k,
        full: if k == 64 { u64::MAX } else { (1 << k) - 1 },
        candidates: &candidates,
        shared,
    };
    // roots: choices of the first dominator; the last k - 1 candidates cannot start a tuple
    let roots = &candidates[..=candidates.len() - k];
    let found: Mutex<Option<(usize, State)>> = Mutex::new(None);
    let next_root = AtomicU64::new(0);

    let work = || loop {
        if shared.stop.load(Ordering::Relaxed) {
            break;
        }
        let r = next_root.fetch_add(1, Ordering::Relaxed) as usize;
        if r >= roots.len() {
            break;
        }
        match kernel.root(roots[r]) {
            Ok(Some(st)) => {
                let mut slot = found.lock().expect("result lock");
                if slot.as_ref().is_none_or(|(fr, _)| r < *fr) {
                    *slot = Some((r, st));
                }
                shared.stop.store(true, Ordering::Relaxed);
                break;
            }
            Ok(None) => {}
            Err(Aborted) => break,
        }
    };

    if workers == 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(work);
            }
        });
    }

    if let Some((_, st)) = found.into_inner().expect("result lock") {
        let colors = st.color.iter().map(|&c| c as usize).collect();
        return SearchOutcome::Found(Coloring::new(k, colors).expect("search colors are in range"));
    }
    if shared.exceeded.load(Ordering::Relaxed) {
        SearchOutcome::BudgetExceeded
    } else {
        SearchOutcome::NotExists
    }
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    exceeded: AtomicBool,
    start: Instant,
    budget: Budget,
}

#[derive(Debug)]
struct Aborted;

#[derive(Clone)]
struct State {
    /// 0 while unassigned.
    color: Vec<u8>,
    domain: Vec<u64>,
    dominators: Vec<usize>,
}

struct Kernel<'a> {
    g: &'a Graph,
    k: usize,
    full: u64,
    candidates: &'a [usize],
    shared: &'a Shared,
}

#[inline]
fn bit(c: usize) -> u64 {
    1 << (c - 1)
}

impl Kernel<'_> {
    fn expand(&self) -> Result<(), Aborted> {
        let s = self.shared;
        if s.stop.load(Ordering::Relaxed) {
            return Err(Aborted);
        }
        let count = s.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = s.budget.max_nodes.is_some_and(|m| count > m);
        let over_time = count.is_multiple_of(1024) && s.budget.max_time.is_some_and(|t| s.start.elapsed() > t);
        if over_nodes || over_time {
            s.exceeded.store(true, Ordering::Relaxed);
            s.stop.store(true, Ordering::Relaxed);
            return Err(Aborted);
        }
        Ok(())
    }

    fn initial(&self) -> State {
        let n = self.g.vertex_count();
        State {
            color: vec![0; n],
            domain: vec![self.full; n],
            dominators: Vec::with_capacity(self.k),
        }
    }

    /// Assigns `c` to `v` and propagates: neighbors lose `c`, and vertices
    /// left with a single color are assigned in turn.
    fn assign(&self, st: &mut State, v: usize, c: usize) -> bool {
        let mut pending = vec![(v, c)];
        while let Some((v, c)) = pending.pop() {
            if st.color[v] != 0 {
                if st.color[v] as usize == c {
                    continue;
                }
                return false;
            }
            if st.domain[v] & bit(c) == 0 {
                return false;
            }
            st.color[v] = c as u8;
            st.domain[v] = bit(c);
            for w in self.g.neighbors(v) {
                if st.color[w] as usize == c {
                    return false;
                }
                if st.color[w] == 0 {
                    st.domain[w] &= !bit(c);
                    match st.domain[w].count_ones() {
                        0 => return false,
                        1 => pending.push((w, st.domain[w].trailing_zeros() as usize + 1)),
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Colors still missing around dominator `d` (of color `i`), and whether
    /// they can still all be realized by its uncolored neighbors.
    fn missing(&self, st: &State, d: usize, i: usize) -> (u64, bool) {
        let mut present = bit(i);
        let mut possible = 0;
        let mut free = 0;
        for w in self.g.neighbors(d) {
            match st.color[w] {
                0 => {
                    free += 1;
                    possible |= st.domain[w];
                }
                c => present |= bit(c as usize),
            }
        }
        let missing = self.full & !present;
        let ok = missing & !possible == 0 && missing.count_ones() <= free;
        (missing, ok)
    }

    fn coverage_ok(&self, st: &State) -> bool {
        st.dominators
            .iter()
            .enumerate()
            .all(|(i, &d)| self.missing(st, d, i + 1).1)
    }

    fn root(&self, d: usize) -> Result<Option<State>, Aborted> {
        self.expand()?;
        let mut st = self.initial();
        if !self.assign(&mut st, d, 1) {
            return Ok(None);
        }
        st.dominators.push(d);
        if !self.coverage_ok(&st) {
            return Ok(None);
        }
        self.choose_dominators(st, 2, d + 1)
    }

    /// Stage 1: dominator for color `i`, with index at least `min_index`.
    fn choose_dominators(&self, st: State, i: usize, min_index: usize) -> Result<Option<State>, Aborted> {
        if i > self.k {
            return self.cover(st);
        }
        let first = self.candidates.partition_point(|&v| v < min_index);
        let still_needed = self.k - i;
        let last = self.candidates.len().saturating_sub(still_needed);
        for &d in self.candidates.get(first..last).unwrap_or(&[]) {
            if st.domain[d] & bit(i) == 0 {
                continue;
            }
            self.expand()?;
            let mut next = st.clone();
            if !self.assign(&mut next, d, i) {
                continue;
            }
            next.dominators.push(d);
            if !self.coverage_ok(&next) {
                continue;
            }
            if let Some(sol) = self.choose_dominators(next, i + 1, d + 1)? {
                return Ok(Some(sol));
            }
        }
        Ok(None)
    }

    /// Stage 2: realize every missing color around every dominator.
    fn cover(&self, st: State) -> Result<Option<State>, Aborted> {
        let mut best: Option<(usize, usize, usize)> = None; // (options, dominator, color)
        for (idx, &d) in st.dominators.iter().enumerate() {
            let (missing, ok) = self.missing(&st, d, idx + 1);
            if !ok {
                return Ok(None);
            }
            let mut m = missing;
            while m != 0 {
                let c = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                let options = self
                    .g
                    .neighbors(d)
                    .iter()
                    .filter(|&w| st.color[w] == 0 && st.domain[w] & bit(c) != 0)
                    .count();
                if best.is_none_or(|(o, _, _)| options < o) {
                    best = Some((options, d, c));
                }
            }
        }
        let Some((_, d, c)) = best else {
            return self.extend(st);
        };
        for w in self.g.neighbors(d) {
            if st.color[w] != 0 || st.domain[w] & bit(c) == 0 {
                continue;
            }
            self.expand()?;
            let mut next = st.clone();
            if self.assign(&mut next, w, c) && self.coverage_ok(&next) {
                if let Some(sol) = self.cover(next)? {
                    return Ok(Some(sol));
                }
            }
        }
        Ok(None)
    }

    /// Stage 3: any proper completion.
    fn extend(&self, st: State) -> Result<Option<State>, Aborted> {
        let pick = (0..self.g.vertex_count())
            .filter(|&v| st.color[v] == 0)
            .min_by_key(|&v| st.domain[v].count_ones());
        let Some(v) = pick else {
            return Ok(Some(st));
        };
        let mut m = st.domain[v];
        while m != 0 {
            let c = m.trailing_zeros() as usize + 1;
            m &= m - 1;
            self.expand()?;
            let mut next = st.clone();
            if self.assign(&mut next, v, c) {
                if let Some(sol) = self.extend(next)? {
                    return Ok(Some(sol));
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_colorful;

    fn run(g: &Graph, k: usize) -> SearchOutcome {
        find_colorful_coloring(g, k, &SearchOptions::default()).0
    }

    #[test]
    fn m_degree_bound_examples() {
        assert_eq!(m_degree_bound(&Graph::complete(3)), 3);
        assert_eq!(m_degree_bound(&Graph::empty(5)), 1);
        assert_eq!(m_degree_bound(&Graph::empty(0)), 0);
        assert_eq!(m_degree_bound(&Graph::path(3)), 2);
        // star K_{1,4}: one vertex of degree 4, four of degree 1
        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(m_degree_bound(&star), 2);
    }

    #[test]
    fn k_one_iff_edgeless() {
        assert!(matches!(run(&Graph::empty(3), 1), SearchOutcome::Found(_)));
        assert_eq!(run(&Graph::path(2), 1), SearchOutcome::NotExists);
        assert_eq!(
            run(&Graph::empty(1), 1),
            SearchOutcome::Found(Coloring::new(1, vec![1]).unwrap())
        );
    }

    #[test]
    fn found_colorings_verify() {
        for (g, k) in [
            (Graph::complete(4), 4),
            (Graph::cycle(6), 2),
            (Graph::cycle(5), 3),
            (Graph::path(3), 2),
        ] {
            let SearchOutcome::Found(c) = run(&g, k) else {
                panic!("expected a colorful {k}-coloring");
            };
            assert_eq!(c.k(), k);
            assert!(is_colorful(&g, &c).unwrap().is_colorful());
        }
    }

    #[test]
    fn refutations() {
        assert_eq!(run(&Graph::complete(3), 2), SearchOutcome::NotExists);
        assert_eq!(run(&Graph::complete(3), 4), SearchOutcome::NotExists);
        assert_eq!(run(&Graph::cycle(4), 3), SearchOutcome::NotExists);
        assert_eq!(run(&Graph::empty(3), 2), SearchOutcome::NotExists);
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let g = Graph::cycle(7);
        let (outcome, stats) = find_colorful_coloring(&g, 3, &SearchOptions::with_budget(Budget::nodes(1)));
        assert_eq!(outcome, SearchOutcome::BudgetExceeded);
        assert!(stats.nodes >= 1);
    }

    #[test]
    fn parallel_agrees_on_existence() {
        let opts = SearchOptions {
            workers: 4,
            ..SearchOptions::default()
        };
        let (o, _) = find_colorful_coloring(&Graph::cycle(4), 3, &opts);
        assert_eq!(o, SearchOutcome::NotExists);
        let (o, _) = find_colorful_coloring(&Graph::cycle(9), 3, &opts);
        let c = o.coloring().expect("C9 has a colorful 3-coloring");
        assert!(is_colorful(&Graph::cycle(9), c).unwrap().is_colorful());
    }
}
