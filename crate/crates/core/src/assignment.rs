//! Partial assignments of vertices and the edge classes they induce.
//!
//! An [`Assignment`] is a pair of disjoint vertex sets `⟨In, Ex⟩`: the
//! vertices placed inside and outside an attempted new transversal of `G`.
//! A [`LoosePair`] has the same shape but may overlap; it is what a guessed
//! label set evaluates to. Both implement [`Pair`], and the edge classes
//! `Sep`, `Com`, `Mis` and `Cov` are defined for any `Pair`:
//!
//! * `Sep`: edges of `G` not met by `In`;
//! * `Com`: edges of `H` not met by `Ex`;
//! * `Mis`: edges of `G` inside `Ex`;
//! * `Cov`: edges of `H` inside `In`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, Instance, VertexId};
use crate::vertex_set::VertexSet;

/// Read access to an `⟨In, Ex⟩` pair.
pub trait Pair {
    fn included(&self) -> &VertexSet;
    fn excluded(&self) -> &VertexSet;

    /// Vertices in neither side.
    fn free(&self) -> VertexSet {
        self.included().union(self.excluded()).complement()
    }
}

/// Disjoint pair `⟨In, Ex⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    included: VertexSet,
    excluded: VertexSet,
}

/// `⟨In, Ex⟩` with no disjointness requirement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoosePair {
    pub included: VertexSet,
    pub excluded: VertexSet,
}

/// `⟨In ∪ Freq, Ex ∪ Infreq⟩` for some source pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AugmentedPair {
    pub a: VertexSet,
    pub b: VertexSet,
}

/// One of the four ways to extend an assignment by a free vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Extension {
    /// `⟨In ∪ {v}, Ex⟩`.
    Include(VertexId),
    /// `⟨In ∪ {v}, Ex ∪ (G ∖ {v})⟩` for an edge `G` of `Sep(σ)` containing `v`.
    IncludeCritical(VertexId, EdgeId),
    /// `⟨In, Ex ∪ {v}⟩`.
    Exclude(VertexId),
    /// `⟨In ∪ (H ∖ {v}), Ex ∪ {v}⟩` for an edge `H` of `Com(σ)` containing `v`.
    ExcludeCritical(VertexId, EdgeId),
}

/// Which half of the witnessing condition holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Disjunct {
    /// `Sep = ∅ ∧ Cov = ∅`: the included side is a new transversal of `G`.
    Included,
    /// `Com = ∅ ∧ Mis = ∅`: the complement of the excluded side is a new
    /// transversal of `G`.
    Excluded,
}

impl Pair for Assignment {
    fn included(&self) -> &VertexSet {
        &self.included
    }
    fn excluded(&self) -> &VertexSet {
        &self.excluded
    }
}

impl Pair for LoosePair {
    fn included(&self) -> &VertexSet {
        &self.included
    }
    fn excluded(&self) -> &VertexSet {
        &self.excluded
    }
}

impl Pair for AugmentedPair {
    fn included(&self) -> &VertexSet {
        &self.a
    }
    fn excluded(&self) -> &VertexSet {
        &self.b
    }
}

impl Assignment {
    /// The empty assignment `⟨∅, ∅⟩`.
    pub fn empty(universe: usize) -> Self {
        Self {
            included: VertexSet::empty(universe),
            excluded: VertexSet::empty(universe),
        }
    }

    pub fn new(included: VertexSet, excluded: VertexSet) -> Result<Self> {
        if included.universe() != excluded.universe() {
            return Err(Error::UniverseMismatch {
                left: included.universe(),
                right: excluded.universe(),
            });
        }
        if included.intersects(&excluded) {
            return Err(Error::Overlap);
        }
        Ok(Self { included, excluded })
    }

    /// The assignment `⟨S, V ∖ S⟩`.
    pub fn total(s: &VertexSet) -> Self {
        Self {
            included: s.clone(),
            excluded: s.complement(),
        }
    }

    pub fn universe(&self) -> usize {
        self.included.universe()
    }

    pub fn into_parts(self) -> (VertexSet, VertexSet) {
        (self.included, self.excluded)
    }

    pub fn is_free(&self, v: usize) -> bool {
        !self.included.contains(v) && !self.excluded.contains(v)
    }

    /// `In ⊆ t` and `Ex ∩ t = ∅`.
    pub fn coherent_with(&self, t: &VertexSet) -> bool {
        self.included.is_subset(t) && self.excluded.is_disjoint(t)
    }

    /// `In ⊆ In'` and `Ex ⊆ Ex'`.
    pub fn is_extended_by(&self, other: &Assignment) -> bool {
        self.included.is_subset(&other.included) && self.excluded.is_subset(&other.excluded)
    }

    /// Applies one extension, checking that `v` is free and the edge applies.
    pub fn extend(&self, inst: &Instance, ext: Extension) -> Result<Assignment> {
        let v = match ext {
            Extension::Include(v)
            | Extension::IncludeCritical(v, _)
            | Extension::Exclude(v)
            | Extension::ExcludeCritical(v, _) => v,
        };
        if v.0 >= self.universe() {
            return Err(Error::VertexOutOfRange {
                vertex: v.0,
                universe: self.universe(),
            });
        }
        if !self.is_free(v.0) {
            return Err(Error::Extension(format!("vertex {v} is not free")));
        }
        let mut out = self.clone();
        match ext {
            Extension::Include(_) => {
                out.included.insert(v.0);
            }
            Extension::Exclude(_) => {
                out.excluded.insert(v.0);
            }
            Extension::IncludeCritical(_, e) => {
                let edge = inst.g().edge(e).ok_or(Error::EdgeOutOfRange(e))?;
                if !edge.contains(v.0) {
                    return Err(Error::Extension(format!(
                        "edge {e} of G does not contain {v}"
                    )));
                }
                if edge.intersects(&self.included) {
                    return Err(Error::Extension(format!("edge {e} of G is not separated")));
                }
                out.included.insert(v.0);
                let mut rest = edge.clone();
                rest.remove(v.0);
                out.excluded.union_with(&rest);
            }
            Extension::ExcludeCritical(_, e) => {
                let edge = inst.h().edge(e).ok_or(Error::EdgeOutOfRange(e))?;
                if !edge.contains(v.0) {
                    return Err(Error::Extension(format!(
                        "edge {e} of H does not contain {v}"
                    )));
                }
                if edge.intersects(&self.excluded) {
                    return Err(Error::Extension(format!("edge {e} of H is not compatible")));
                }
                out.excluded.insert(v.0);
                let mut rest = edge.clone();
                rest.remove(v.0);
                out.included.union_with(&rest);
            }
        }
        debug_assert!(out.included.is_disjoint(&out.excluded));
        Ok(out)
    }

    /// True iff `Mis ≠ ∅` or `Cov ≠ ∅`.
    pub fn is_covering(&self, inst: &Instance) -> bool {
        !inst.g().is_independent_set(&self.excluded) || !inst.h().is_independent_set(&self.included)
    }
}

impl From<&Assignment> for LoosePair {
    fn from(a: &Assignment) -> Self {
        Self {
            included: a.included.clone(),
            excluded: a.excluded.clone(),
        }
    }
}

impl From<Assignment> for LoosePair {
    fn from(a: Assignment) -> Self {
        Self {
            included: a.included,
            excluded: a.excluded,
        }
    }
}

impl LoosePair {
    pub fn empty(universe: usize) -> Self {
        Self {
            included: VertexSet::empty(universe),
            excluded: VertexSet::empty(universe),
        }
    }

    /// True iff the two sides are disjoint.
    pub fn is_consistent(&self) -> bool {
        self.included.is_disjoint(&self.excluded)
    }

    /// The pair as an [`Assignment`], if consistent.
    pub fn to_assignment(&self) -> Option<Assignment> {
        Assignment::new(self.included.clone(), self.excluded.clone()).ok()
    }
}

fn edges_where(hg: &Hypergraph, pred: impl Fn(&VertexSet) -> bool) -> Vec<EdgeId> {
    hg.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| pred(e))
        .map(|(i, _)| EdgeId(i))
        .collect()
}

/// Edges of `G` disjoint from `In`.
pub fn sep<P: Pair + ?Sized>(inst: &Instance, p: &P) -> Vec<EdgeId> {
    edges_where(inst.g(), |e| e.is_disjoint(p.included()))
}

/// Edges of `H` disjoint from `Ex`.
pub fn com<P: Pair + ?Sized>(inst: &Instance, p: &P) -> Vec<EdgeId> {
    edges_where(inst.h(), |e| e.is_disjoint(p.excluded()))
}

/// Edges of `G` contained in `Ex`.
pub fn mis<P: Pair + ?Sized>(inst: &Instance, p: &P) -> Vec<EdgeId> {
    edges_where(inst.g(), |e| e.is_subset(p.excluded()))
}

/// Edges of `H` contained in `In`.
pub fn cov<P: Pair + ?Sized>(inst: &Instance, p: &P) -> Vec<EdgeId> {
    edges_where(inst.h(), |e| e.is_subset(p.included()))
}

/// Splits the free vertices of `p` into frequent and infrequent ones.
///
/// A free vertex is frequent when it lies in at least `⌈|Com|/2⌉` edges of
/// `Com(p)`; with `Com = ∅` every free vertex is frequent.
pub fn frequent_vertices<P: Pair + ?Sized>(inst: &Instance, p: &P) -> (VertexSet, VertexSet) {
    let free = p.free();
    let universe = inst.universe();
    let mut counts = vec![0usize; universe];
    let mut com_len = 0usize;
    for e in inst.h().edges() {
        if e.is_disjoint(p.excluded()) {
            com_len += 1;
            for v in e.iter() {
                counts[v] += 1;
            }
        }
    }
    let threshold = com_len.div_ceil(2);
    let mut freq = VertexSet::empty(universe);
    let mut infreq = VertexSet::empty(universe);
    for v in free.iter() {
        if counts[v] >= threshold {
            freq.insert(v);
        } else {
            infreq.insert(v);
        }
    }
    (freq, infreq)
}

/// `⟨In ∪ Freq(p), Ex ∪ Infreq(p)⟩`.
pub fn augment<P: Pair + ?Sized>(inst: &Instance, p: &P) -> AugmentedPair {
    let (freq, infreq) = frequent_vertices(inst, p);
    AugmentedPair {
        a: p.included().union(&freq),
        b: p.excluded().union(&infreq),
    }
}

/// Which disjunct of the witnessing condition `p` satisfies, preferring the
/// first: `(Sep = ∅ ∧ Cov = ∅) ∨ (Com = ∅ ∧ Mis = ∅)`.
pub fn witness_disjunct<P: Pair + ?Sized>(inst: &Instance, p: &P) -> Option<Disjunct> {
    // Sep = ∅ iff In meets every G-edge; Cov = ∅ iff no H-edge lies in In.
    if inst.g().is_transversal(p.included()) && inst.h().is_independent_set(p.included()) {
        return Some(Disjunct::Included);
    }
    if inst.h().is_transversal(p.excluded()) && inst.g().is_independent_set(p.excluded()) {
        return Some(Disjunct::Excluded);
    }
    None
}

pub fn is_witness<P: Pair + ?Sized>(inst: &Instance, p: &P) -> bool {
    witness_disjunct(inst, p).is_some()
}

/// The new transversal of `G` certified by a witness pair.
pub fn witnessed_transversal<P: Pair + ?Sized>(p: &P, disjunct: Disjunct) -> VertexSet {
    match disjunct {
        Disjunct::Included => p.included().clone(),
        Disjunct::Excluded => p.excluded().complement(),
    }
}

/// The sub-instance induced by `σ`: separated `G`-edges and compatible
/// `H`-edges, each projected onto the free vertices.
pub fn reduced_instance(inst: &Instance, sigma: &Assignment) -> Instance {
    let free = sigma.free();
    let g = inst
        .g()
        .restrict(&sigma.included.complement())
        .project(&free);
    let h = inst
        .h()
        .restrict(&sigma.excluded.complement())
        .project(&free);
    Instance::new(g, h).expect("same universe")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;
    const F: usize = 5;

    fn assignment(inc: &[usize], exc: &[usize]) -> Assignment {
        Assignment::new(set(inc), set(exc)).unwrap()
    }

    #[test]
    fn extension_kinds() {
        let i = missing_bdf();
        let eps = Assignment::empty(6);
        let inc_d = eps
            .extend(&i, Extension::IncludeCritical(VertexId(D), EdgeId(0)))
            .unwrap();
        assert_eq!(inc_d, assignment(&[D], &[A, C]));
        assert_eq!(
            eps.extend(&i, Extension::Exclude(VertexId(A))).unwrap(),
            assignment(&[], &[A])
        );
        assert_eq!(
            eps.extend(&i, Extension::Include(VertexId(B))).unwrap(),
            assignment(&[B], &[])
        );
        // H edge 0 = {a, b}
        assert_eq!(
            eps.extend(&i, Extension::ExcludeCritical(VertexId(A), EdgeId(0)))
                .unwrap(),
            assignment(&[B], &[A])
        );
        assert!(matches!(
            inc_d.extend(&i, Extension::Exclude(VertexId(D))),
            Err(Error::Extension(_))
        ));
    }

    #[test]
    fn extension_preconditions() {
        let i = missing_bdf();
        let eps = Assignment::empty(6);
        // b is not in G edge 0 = {a, c, d}
        assert!(eps
            .extend(&i, Extension::IncludeCritical(VertexId(B), EdgeId(0)))
            .is_err());
        // edge 0 no longer separated once a is included
        let inc_a = assignment(&[A], &[]);
        assert!(inc_a
            .extend(&i, Extension::IncludeCritical(VertexId(C), EdgeId(0)))
            .is_err());
        assert!(matches!(
            eps.extend(&i, Extension::IncludeCritical(VertexId(C), EdgeId(9))),
            Err(Error::EdgeOutOfRange(EdgeId(9)))
        ));
        assert!(Assignment::new(set(&[A]), set(&[A])).is_err());
    }

    #[test]
    fn edge_classes_at_root() {
        let i = missing_bdf();
        let eps = Assignment::empty(6);
        assert_eq!(sep(&i, &eps).len(), 4);
        assert_eq!(com(&i, &eps).len(), 4);
        assert!(mis(&i, &eps).is_empty());
        assert!(cov(&i, &eps).is_empty());
        let all_in = LoosePair {
            included: VertexSet::full(6),
            excluded: VertexSet::empty(6),
        };
        assert_eq!(cov(&i, &all_in).len(), 4);
        assert!(sep(&i, &all_in).is_empty());
    }

    #[test]
    fn edge_classes_along_the_bdf_path() {
        let i = missing_bdf();
        let inc_d = assignment(&[D], &[A, C]);
        assert_eq!(sep(&i, &inc_d), vec![EdgeId(1), EdgeId(2), EdgeId(3)]);
        let node = assignment(&[D], &[A, C, E]);
        assert!(com(&i, &node).is_empty());
        // excluding a, c then e and b leaves G edge {e, b} entirely missed
        let leaf = assignment(&[D], &[A, C, E, B]);
        assert!(mis(&i, &leaf).contains(&EdgeId(3)));
    }

    #[test]
    fn frequency_split() {
        let i = missing_bdf();
        let (freq, infreq) = frequent_vertices(&i, &Assignment::empty(6));
        assert!(freq.contains(C));
        assert!(infreq.contains(D));
        // counts in H': a1 b3 c2 d1 e2 f1, threshold 2
        assert_eq!(freq, set(&[B, C, E]));
        assert_eq!(infreq, set(&[A, D, F]));

        let node = assignment(&[D], &[A, C, E]);
        let (freq, infreq) = frequent_vertices(&i, &node);
        assert_eq!(freq, set(&[B, F]));
        assert!(infreq.is_empty());

        let total = Assignment::total(&set(&[A, B]));
        let (freq, infreq) = frequent_vertices(&i, &total);
        assert!(freq.is_empty() && infreq.is_empty());
    }

    #[test]
    fn augmentation_and_witness() {
        let i = missing_bdf();
        let node = assignment(&[D], &[A, C, E]);
        let aug = augment(&i, &node);
        assert_eq!(aug.a, set(&[D, B, F]));
        assert_eq!(aug.b, set(&[A, C, E]));
        assert!(is_witness(&i, &aug));
        assert_eq!(witness_disjunct(&i, &aug), Some(Disjunct::Included));

        let total = Assignment::total(&set(&[A, B]));
        let aug = augment(&i, &total);
        assert_eq!((aug.a, aug.b), (set(&[A, B]), set(&[A, B]).complement()));

        assert!(!is_witness(&dual_six(), &Assignment::empty(6)));
        let all_in = LoosePair {
            included: VertexSet::full(6),
            excluded: VertexSet::empty(6),
        };
        assert!(!is_witness(&dual_six(), &all_in));
    }

    #[test]
    fn augmented_root_of_the_dual_pair() {
        // counts in H: a1 b4 c2 d2 e2 f2, threshold 3
        let aug = augment(&dual_six(), &Assignment::empty(6));
        assert_eq!(aug.a, set(&[B]));
        assert_eq!(aug.b, set(&[A, C, D, E, F]));
    }

    #[test]
    fn reduced_instances() {
        let i = dual_six();
        let eps = Assignment::empty(6);
        assert_eq!(reduced_instance(&i, &eps), i);

        // In = {a, b} contains the H edge {a, b}: covering.
        let covering = assignment(&[A, B], &[]);
        let r = reduced_instance(&i, &covering);
        assert!(r.is_trivially_dual());
        assert!(r.g().is_empty());

        // In = {c, e} meets every G-edge: G(σ) = ∅.
        let r = reduced_instance(&i, &assignment(&[C, E], &[]));
        assert!(r.g().is_empty());
    }

    #[test]
    fn coherence() {
        let sigma = assignment(&[D], &[A, C]);
        assert!(sigma.coherent_with(&set(&[D, B, F])));
        assert!(Assignment::empty(6).coherent_with(&set(&[A])));
        assert!(!assignment(&[A], &[]).coherent_with(&set(&[B])));
        assert!(!sigma.coherent_with(&set(&[D, A])));
    }

    #[test]
    fn loose_pairs_may_overlap() {
        let p = LoosePair {
            included: set(&[A]),
            excluded: set(&[A, C]),
        };
        assert!(!p.is_consistent());
        assert!(p.to_assignment().is_none());
        assert!(p.free().contains(B) && !p.free().contains(A));
    }
}
