//! Semi-locally-surjective (SLS) homomorphisms.
//!
//! A map `f: V(G) -> V(H)` is SLS when it is a surjective homomorphism and
//! every target vertex `u` has a preimage `a` whose neighbors map onto all
//! of `N_H(u)`. Pulling a colorful coloring of `H` back along an SLS map gives
//! a colorful coloring of `G` with the same number of colors, and colorful
//! `k`-colorings of `G` are exactly the SLS maps `G -> K_k`.

use std::sync::Arc;

use crate::bitset::VertexSet;
use crate::coloring::{is_colorful, Colorfulness, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kneser::{kneser_graph, KneserGraph};

/// A total map from the vertices of `source` to the vertices of `target`.
#[derive(Debug, Clone)]
pub struct VertexMap {
    source: Arc<Graph>,
    target: Arc<Graph>,
    image: Vec<usize>,
}

impl PartialEq for VertexMap {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image && same_graph(&self.source, &other.source) && same_graph(&self.target, &other.target)
    }
}

impl Eq for VertexMap {}

fn same_graph(a: &Arc<Graph>, b: &Arc<Graph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl VertexMap {
    pub fn new(source: Arc<Graph>, target: Arc<Graph>, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.vertex_count() {
            return Err(Error::MapLength {
                expected: source.vertex_count(),
                got: image.len(),
            });
        }
        if let Some(&bad) = image.iter().find(|&&u| u >= target.vertex_count()) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                vertex_count: target.vertex_count(),
            });
        }
        Ok(Self { source, target, image })
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        let image = (0..g.vertex_count()).collect();
        Self {
            source: Arc::clone(&g),
            target: g,
            image,
        }
    }

    pub fn source(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Graph> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Preimage of every target vertex, each ascending.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.target.vertex_count()];
        for (v, &u) in self.image.iter().enumerate() {
            fibers[u].push(v);
        }
        fibers
    }

    /// First source edge whose endpoints do not map to a target edge.
    pub fn first_broken_edge(&self) -> Option<(usize, usize)> {
        self.source
            .edges()
            .find(|&(a, b)| !self.target.has_edge(self.image[a], self.image[b]))
    }

    pub fn is_homomorphism(&self) -> bool {
        self.first_broken_edge().is_none()
    }

    /// First target vertex with an empty preimage.
    pub fn first_unreached(&self) -> Option<usize> {
        let mut hit = VertexSet::new(self.target.vertex_count());
        for &u in &self.image {
            hit.insert(u);
        }
        (0..self.target.vertex_count()).find(|&u| !hit.contains(u))
    }

    pub fn is_surjective(&self) -> bool {
        self.first_unreached().is_none()
    }
}

/// Witness data for the SLS condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlsCertificate {
    /// Per target vertex `u`: the witness `a` in the preimage of `u`, and for
    /// each target neighbor `v` of `u` (ascending), a neighbor `b` of `a`
    /// mapping to `v`.
    pub witnesses: Vec<SlsWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlsWitness {
    pub source: usize,
    pub neighbors: Vec<(usize, usize)>,
}

impl SlsCertificate {
    /// Re-checks the certificate by direct lookups, independent of how it was found.
    pub fn verify(&self, f: &VertexMap) -> bool {
        let h = f.target();
        let g = f.source();
        if !f.is_homomorphism() || self.witnesses.len() != h.vertex_count() {
            return false;
        }
        self.witnesses.iter().enumerate().all(|(u, w)| {
            let targets: Vec<usize> = w.neighbors.iter().map(|&(v, _)| v).collect();
            w.source < g.vertex_count()
                && f.apply(w.source) == u
                && targets == h.neighbors(u).iter().collect::<Vec<_>>()
                && w.neighbors
                    .iter()
                    .all(|&(v, b)| b < g.vertex_count() && f.apply(b) == v && g.has_edge(w.source, b))
        })
    }
}

/// Why a map fails to be SLS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlsFailure {
    NotHomomorphism {
        edge: (usize, usize),
    },
    NotSurjective {
        target: usize,
    },
    /// No preimage of this target vertex sees all of its target neighbors.
    NoWitness {
        target: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlsVerdict {
    Yes(SlsCertificate),
    No(SlsFailure),
}

impl SlsVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, SlsVerdict::Yes(_))
    }

    pub fn certificate(&self) -> Option<&SlsCertificate> {
        match self {
            SlsVerdict::Yes(c) => Some(c),
            SlsVerdict::No(_) => None,
        }
    }
}

/// Decides the SLS property, producing a certificate when it holds.
/// Candidates `a` are scanned in ascending index per target vertex.
pub fn is_semi_locally_surjective(f: &VertexMap) -> SlsVerdict {
    if let Some(edge) = f.first_broken_edge() {
        return SlsVerdict::No(SlsFailure::NotHomomorphism { edge });
    }
    if let Some(target) = f.first_unreached() {
        return SlsVerdict::No(SlsFailure::NotSurjective { target });
    }
    let g = f.source();
    let h = f.target();
    let fibers = f.fibers();
    let mut witnesses = Vec::with_capacity(h.vertex_count());
    for (u, fiber) in fibers.iter().enumerate() {
        let wanted = h.neighbors(u);
        let found = fiber.iter().find_map(|&a| {
            let mut reached = VertexSet::new(h.vertex_count());
            for b in g.neighbors(a) {
                reached.insert(f.apply(b));
            }
            wanted.is_subset(&reached).then(|| SlsWitness {
                source: a,
                neighbors: wanted
                    .iter()
                    .map(|v| {
                        let b = g.neighbors(a).iter().find(|&b| f.apply(b) == v).expect("v is reached");
                        (v, b)
                    })
                    .collect(),
            })
        });
        match found {
            Some(w) => witnesses.push(w),
            None => return SlsVerdict::No(SlsFailure::NoWitness { target: u }),
        }
    }
    SlsVerdict::Yes(SlsCertificate { witnesses })
}

/// `g ∘ f` for `f: G3 -> G2` and `g: G2 -> G1`.
pub fn compose(f: &VertexMap, g: &VertexMap) -> Result<VertexMap> {
    if !same_graph(f.target(), g.source()) {
        return Err(Error::GraphMismatch(
            "target of the first map differs from the source of the second".into(),
        ));
    }
    let image = f.image.iter().map(|&v| g.apply(v)).collect();
    VertexMap::new(Arc::clone(f.source()), Arc::clone(g.target()), image)
}

/// The map `KG(n+2, m+1) -> KG(n, m)` together with both Kneser graphs.
#[derive(Debug, Clone)]
pub struct KneserStep {
    pub source: KneserGraph,
    pub target: KneserGraph,
    pub map: VertexMap,
}

/// Image of an `(m+1)`-subset `a` of `[n+2]` (as a mask): drop `max a`
/// unless both `n+1` and `n+2` are in `a`, in which case replace that pair
/// by the largest element of `[n]` missing from `a`.
pub fn kneser_step_image(n: usize, a: u64) -> u64 {
    let top_two = 0b11u64 << n;
    if a & top_two == top_two {
        let rest = a & !top_two;
        let missing = !rest & ((1u64 << n) - 1);
        let fill = 63 - missing.leading_zeros() as u64;
        rest | 1 << fill
    } else {
        let max = 63 - a.leading_zeros() as u64;
        a & !(1 << max)
    }
}

/// Builds the step homomorphism `KG(n+2, m+1) -> KG(n, m)`; needs `n > 2m`.
pub fn kneser_step_hom(n: usize, m: usize) -> Result<KneserStep> {
    if m < 1 || n <= 2 * m {
        return Err(Error::InvalidParameters(format!(
            "step map needs n > 2m >= 2, got n = {n}, m = {m}"
        )));
    }
    let source = kneser_graph(n + 2, m + 1)?;
    let target = kneser_graph(n, m)?;
    let image = (0..source.graph().vertex_count())
        .map(|v| target.vertex_of_mask(kneser_step_image(n, source.mask(v))))
        .collect::<Result<Vec<_>>>()?;
    let map = VertexMap::new(source.shared_graph(), target.shared_graph(), image)?;
    Ok(KneserStep { source, target, map })
}

/// A coloring lifted along an SLS map, with one b-dominating vertex per color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedColoring {
    pub coloring: Coloring,
    pub witnesses: Vec<usize>,
}

/// Pulls a colorful coloring of the target back to the source: each source
/// vertex takes the color of its image. The b-dominating vertex of color `i`
/// is the certificate witness for the target's b-dominating vertex `x_i`.
pub fn lift_coloring(f: &VertexMap, c: &Coloring) -> Result<LiftedColoring> {
    let cert = match is_semi_locally_surjective(f) {
        SlsVerdict::Yes(cert) => cert,
        SlsVerdict::No(why) => {
            return Err(Error::Precondition(format!(
                "map is not semi-locally-surjective: {why:?}"
            )))
        }
    };
    let target_witnesses = match is_colorful(f.target(), c)? {
        Colorfulness::Colorful { witnesses } => witnesses,
        other => return Err(Error::Precondition(format!("coloring is not colorful: {other:?}"))),
    };
    let colors = f.image.iter().map(|&u| c.color(u)).collect();
    let coloring = Coloring::new(c.k(), colors)?;
    let witnesses: Vec<usize> = target_witnesses.iter().map(|&x| cert.witnesses[x].source).collect();
    for (i, &a) in witnesses.iter().enumerate() {
        let ok = coloring.color(a) == i + 1 && crate::coloring::is_b_dominating(f.source(), &coloring, a)?;
        assert!(ok, "certificate witness {a} does not dominate color {}", i + 1);
    }
    Ok(LiftedColoring { coloring, witnesses })
}

/// The map `G -> K_k` sending a vertex of color `i` to vertex `i - 1`.
/// Every class must be nonempty, otherwise the map is not surjective.
pub fn coloring_as_hom(g: Arc<Graph>, c: &Coloring) -> Result<VertexMap> {
    if c.len() != g.vertex_count() {
        return Err(Error::ColoringLength {
            expected: g.vertex_count(),
            got: c.len(),
        });
    }
    if let Some(i) = c.class_sizes().iter().position(|&s| s == 0) {
        return Err(Error::EmptyColorClass(i + 1));
    }
    let image = c.colors().iter().map(|&col| col - 1).collect();
    VertexMap::new(g, Arc::new(Graph::complete(c.k())), image)
}

/// Inverse of [`coloring_as_hom`]; the target must be complete.
pub fn hom_as_coloring(f: &VertexMap) -> Result<Coloring> {
    let k = f.target().vertex_count();
    if f.target().edge_count() != k * k.saturating_sub(1) / 2 {
        return Err(Error::GraphMismatch("target is not a complete graph".into()));
    }
    Coloring::new(k, f.image.iter().map(|&u| u + 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: Graph) -> Arc<Graph> {
        Arc::new(g)
    }

    #[test]
    fn identity_and_collapse() {
        let p = kneser_graph(5, 2).unwrap();
        let id = VertexMap::identity(p.shared_graph());
        assert!(id.is_homomorphism());
        assert!(is_semi_locally_surjective(&id).is_yes());

        let collapse = VertexMap::new(arc(Graph::complete(2)), arc(Graph::empty(1)), vec![0, 0]).unwrap();
        assert!(!collapse.is_homomorphism());
        assert_eq!(
            is_semi_locally_surjective(&collapse),
            SlsVerdict::No(SlsFailure::NotHomomorphism { edge: (0, 1) })
        );
    }

    #[test]
    fn map_validation() {
        let k2 = arc(Graph::complete(2));
        assert!(matches!(
            VertexMap::new(Arc::clone(&k2), Arc::clone(&k2), vec![0]),
            Err(Error::MapLength { expected: 2, got: 1 })
        ));
        assert!(VertexMap::new(Arc::clone(&k2), k2, vec![0, 2]).is_err());
    }

    #[test]
    fn path_to_edge_is_sls() {
        // P3 = 0-1-2, endpoints in class 0, middle in class 1
        let f = VertexMap::new(arc(Graph::path(3)), arc(Graph::complete(2)), vec![0, 1, 0]).unwrap();
        let SlsVerdict::Yes(cert) = is_semi_locally_surjective(&f) else {
            panic!("P3 -> K2 should be SLS");
        };
        assert_eq!(cert.witnesses[0].source, 0);
        assert_eq!(cert.witnesses[1].source, 1);
        assert!(cert.verify(&f));
    }

    #[test]
    fn non_surjective_and_no_witness() {
        let f = VertexMap::new(arc(Graph::empty(2)), arc(Graph::empty(3)), vec![0, 1]).unwrap();
        assert_eq!(
            is_semi_locally_surjective(&f),
            SlsVerdict::No(SlsFailure::NotSurjective { target: 2 })
        );
        // P4 -> P3 folding: 0-1-2-3 to 0,1,2,1 ; vertex 1 of P3 needs a preimage seeing 0 and 2
        let f = VertexMap::new(arc(Graph::path(4)), arc(Graph::path(3)), vec![0, 1, 2, 1]).unwrap();
        assert!(is_semi_locally_surjective(&f).is_yes());
        // two disjoint edges onto P3: each preimage of the middle sees one side only
        let two_edges = arc(Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        let f = VertexMap::new(two_edges, arc(Graph::path(3)), vec![0, 1, 1, 2]).unwrap();
        assert_eq!(
            is_semi_locally_surjective(&f),
            SlsVerdict::No(SlsFailure::NoWitness { target: 1 })
        );
    }

    #[test]
    fn tampered_certificate_fails() {
        let step = kneser_step_hom(5, 2).unwrap();
        let mut cert = is_semi_locally_surjective(&step.map).certificate().unwrap().clone();
        assert!(cert.verify(&step.map));
        cert.witnesses[0].neighbors[0].1 = cert.witnesses[0].source;
        assert!(!cert.verify(&step.map));
    }

    #[test]
    fn step_image_examples() {
        let kg = kneser_graph(9, 4).unwrap();
        let img = |a: &[usize]| {
            let v = kg.vertex(a).unwrap();
            crate::kneser::KneserLabel::from_mask(7, kneser_step_image(7, kg.mask(v))).to_string()
        };
        assert_eq!(img(&[1, 2, 3, 4]), "{1,2,3}");
        assert_eq!(img(&[3, 5, 8, 9]), "{3,5,7}");
        assert_eq!(img(&[1, 2, 3, 9]), "{1,2,3}");
        assert_eq!(img(&[1, 2, 8, 9]), "{1,2,7}");
        assert_eq!(img(&[4, 5, 6, 7]), "{4,5,6}");
        assert_eq!(img(&[5, 6, 7, 8]), "{5,6,7}");
        assert_eq!(img(&[6, 7, 8, 9]), "{5,6,7}");
    }

    #[test]
    fn step_parameter_errors() {
        assert!(kneser_step_hom(4, 2).is_err());
        assert!(kneser_step_hom(5, 0).is_err());
        assert!(kneser_step_hom(5, 2).is_ok());
    }

    #[test]
    fn compose_checks_graphs() {
        let a = kneser_step_hom(7, 3).unwrap();
        let b = kneser_step_hom(5, 2).unwrap();
        assert!(compose(&a.map, &b.map).is_ok());
        assert!(matches!(compose(&b.map, &a.map), Err(Error::GraphMismatch(_))));
        let id = VertexMap::identity(a.map.source().clone());
        assert_eq!(compose(&id, &a.map).unwrap(), a.map);
    }

    #[test]
    fn coloring_hom_roundtrip() {
        let k3 = arc(Graph::complete(3));
        let c = Coloring::new(3, vec![1, 2, 3]).unwrap();
        let f = coloring_as_hom(Arc::clone(&k3), &c).unwrap();
        assert_eq!(f.image(), &[0, 1, 2]);
        assert!(is_semi_locally_surjective(&f).is_yes());
        assert_eq!(hom_as_coloring(&f).unwrap(), c);

        let partial = Coloring::new(3, vec![1, 2, 2]).unwrap();
        assert_eq!(
            coloring_as_hom(Arc::clone(&k3), &partial),
            Err(Error::EmptyColorClass(3))
        );

        let not_complete = VertexMap::new(arc(Graph::path(3)), arc(Graph::path(3)), vec![0, 1, 2]).unwrap();
        assert!(hom_as_coloring(&not_complete).is_err());
    }

    #[test]
    fn lift_preconditions() {
        let p3 = arc(Graph::path(3));
        let k2 = arc(Graph::complete(2));
        let f = VertexMap::new(Arc::clone(&p3), Arc::clone(&k2), vec![0, 1, 0]).unwrap();
        let improper = Coloring::new(2, vec![1, 1]).unwrap();
        assert!(matches!(lift_coloring(&f, &improper), Err(Error::Precondition(_))));
        let not_sls = VertexMap::new(Arc::clone(&k2), Arc::clone(&k2), vec![0, 0]).unwrap();
        let c = Coloring::new(2, vec![1, 2]).unwrap();
        assert!(matches!(lift_coloring(&not_sls, &c), Err(Error::Precondition(_))));

        let lifted = lift_coloring(&f, &c).unwrap();
        assert_eq!(lifted.coloring.colors(), &[1, 2, 1]);
        assert_eq!(lifted.witnesses, vec![0, 1]);

        let id = VertexMap::identity(Arc::clone(&k2));
        assert_eq!(lift_coloring(&id, &c).unwrap().coloring, c);
    }
}
