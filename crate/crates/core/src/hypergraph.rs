//! Hypergraphs, instance pairs and the basic transversal predicates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Dense index of a vertex in the universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

/// Position of an edge in its hypergraph's input order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A list of edges over a universe of `universe` vertices.
///
/// Edge order is the input order and is what ties break on. The empty
/// hypergraph has no edges; the empty-edge hypergraph `{∅}` has exactly one
/// edge, the empty set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    universe: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(universe: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if universe > MAX_VERTICES {
            return Err(Error::UniverseTooLarge {
                requested: universe,
                limit: MAX_VERTICES,
            });
        }
        if let Some(e) = edges.iter().find(|e| e.universe() != universe) {
            return Err(Error::UniverseMismatch {
                left: universe,
                right: e.universe(),
            });
        }
        Ok(Self { universe, edges })
    }

    /// Builds a hypergraph from edges given as index lists.
    pub fn from_edges<E, I>(universe: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        if universe > MAX_VERTICES {
            return Err(Error::UniverseTooLarge {
                requested: universe,
                limit: MAX_VERTICES,
            });
        }
        let mut sets = Vec::new();
        for edge in edges {
            let mut set = VertexSet::empty(universe);
            for v in edge {
                if v >= universe {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        universe,
                    });
                }
                set.insert(v);
            }
            sets.push(set);
        }
        Ok(Self {
            universe,
            edges: sets,
        })
    }

    /// The hypergraph with no edges.
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            edges: Vec::new(),
        }
    }

    /// The hypergraph `{∅}`.
    pub fn empty_edge(universe: usize) -> Self {
        Self {
            universe,
            edges: vec![VertexSet::empty(universe)],
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&VertexSet> {
        self.edges.get(id.0)
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn into_edges(self) -> Vec<VertexSet> {
        self.edges
    }

    pub fn push(&mut self, edge: VertexSet) {
        assert_eq!(edge.universe(), self.universe);
        self.edges.push(edge);
    }

    /// Total number of vertex occurrences over all edges.
    pub fn representation_size(&self) -> usize {
        self.edges.iter().map(VertexSet::len).sum()
    }

    pub fn has_empty_edge(&self) -> bool {
        self.edges.iter().any(VertexSet::is_empty)
    }

    /// Union of all edges.
    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.universe);
        for e in &self.edges {
            s.union_with(e);
        }
        s
    }

    /// Vertices of the universe that belong to no edge.
    pub fn isolated_vertices(&self) -> VertexSet {
        self.support().complement()
    }

    /// First pair `(contained, container)` of distinct edges with
    /// `contained ⊆ container`, scanning containers in input order.
    pub fn find_containment(&self) -> Option<(EdgeId, EdgeId)> {
        for (j, container) in self.edges.iter().enumerate() {
            for (i, contained) in self.edges.iter().enumerate() {
                if i != j && contained.is_subset(container) {
                    return Some((EdgeId(i), EdgeId(j)));
                }
            }
        }
        None
    }

    /// True iff no edge is a subset of a distinct edge.
    pub fn is_simple(&self) -> bool {
        self.find_containment().is_none()
    }

    /// The inclusion-minimal edges, first occurrence of duplicates kept.
    pub fn minimize(&self) -> Self {
        if self.has_empty_edge() {
            return Self::empty_edge(self.universe);
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, e)| {
                !self
                    .edges
                    .iter()
                    .enumerate()
                    .any(|(j, f)| j != i && f.is_subset(e) && (f != e || j < i))
            })
            .map(|(_, e)| e.clone())
            .collect();
        Self {
            universe: self.universe,
            edges,
        }
    }

    /// Edges entirely contained in `s`.
    pub fn restrict(&self, s: &VertexSet) -> Self {
        Self {
            universe: self.universe,
            edges: self
                .edges
                .iter()
                .filter(|e| e.is_subset(s))
                .cloned()
                .collect(),
        }
    }

    /// Every edge intersected with `s`, then minimized.
    pub fn project(&self, s: &VertexSet) -> Self {
        Self {
            universe: self.universe,
            edges: self.edges.iter().map(|e| e.intersection(s)).collect(),
        }
        .minimize()
    }

    /// True iff `t` meets every edge.
    pub fn is_transversal(&self, t: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersects(t))
    }

    /// True iff no edge is a subset of `t`.
    pub fn is_independent_set(&self, t: &VertexSet) -> bool {
        !self.edges.iter().any(|e| e.is_subset(t))
    }

    /// First edge `e` with `e ∩ t = {v}`.
    ///
    /// Fails when `v ∉ t`.
    pub fn criticality_witness(&self, t: &VertexSet, v: VertexId) -> Result<Option<EdgeId>> {
        if !t.contains(v.0) {
            return Err(Error::VertexNotInSet(v));
        }
        Ok(self
            .edges
            .iter()
            .position(|e| e.contains(v.0) && e.intersection_len(t) == 1)
            .map(EdgeId))
    }

    /// True iff `t` is a transversal whose every vertex is critical.
    pub fn is_minimal_transversal(&self, t: &VertexSet) -> bool {
        self.is_transversal(t)
            && t.iter().all(|v| {
                self.criticality_witness(t, VertexId(v))
                    .expect("v drawn from t")
                    .is_some()
            })
    }

    /// Edges sorted by bit pattern.
    pub fn canonical(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.sort();
        Self {
            universe: self.universe,
            edges,
        }
    }

    /// Equality of the edge sets, ignoring order and repetitions.
    pub fn same_edges(&self, other: &Self) -> bool {
        if self.universe != other.universe {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort();
        a.dedup();
        b.sort();
        b.dedup();
        a == b
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.edges.iter()).finish()
    }
}

/// A pair `⟨G, H⟩` over one universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    g: Hypergraph,
    h: Hypergraph,
}

impl Instance {
    pub fn new(g: Hypergraph, h: Hypergraph) -> Result<Self> {
        if g.universe() != h.universe() {
            return Err(Error::UniverseMismatch {
                left: g.universe(),
                right: h.universe(),
            });
        }
        Ok(Self { g, h })
    }

    pub fn g(&self) -> &Hypergraph {
        &self.g
    }

    pub fn h(&self) -> &Hypergraph {
        &self.h
    }

    pub fn universe(&self) -> usize {
        self.g.universe()
    }

    pub fn into_parts(self) -> (Hypergraph, Hypergraph) {
        (self.g, self.h)
    }

    /// `‖G‖ + ‖H‖`.
    pub fn size(&self) -> usize {
        self.g.representation_size() + self.h.representation_size()
    }

    /// The same pair with the roles of `G` and `H` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            g: self.h.clone(),
            h: self.g.clone(),
        }
    }

    /// First pair of disjoint edges `(G-edge, H-edge)`.
    pub fn find_disjoint_pair(&self) -> Option<(EdgeId, EdgeId)> {
        for (i, ge) in self.g.edges().iter().enumerate() {
            for (j, he) in self.h.edges().iter().enumerate() {
                if ge.is_disjoint(he) {
                    return Some((EdgeId(i), EdgeId(j)));
                }
            }
        }
        None
    }

    /// True iff every edge of `G` meets every edge of `H`.
    pub fn intersection_property(&self) -> bool {
        self.find_disjoint_pair().is_none()
    }

    /// True iff one side has no edges and the other is `{∅}`.
    pub fn is_trivially_dual(&self) -> bool {
        let is_empty_edge = |x: &Hypergraph| x.len() == 1 && x.edges()[0].is_empty();
        (self.g.is_empty() && is_empty_edge(&self.h))
            || (self.h.is_empty() && is_empty_edge(&self.g))
    }

    /// True iff `t` is a transversal of `G` and an independent set of `H`.
    pub fn is_new_transversal(&self, t: &VertexSet) -> bool {
        self.g.is_transversal(t) && self.h.is_independent_set(t)
    }
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Instance")
            .field("g", &self.g)
            .field("h", &self.h)
            .finish()
    }
}
