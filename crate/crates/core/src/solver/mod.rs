//! Duality decision, new-transversal search and dualization.

mod enumerate;
mod random;
mod recursive;

use serde::Serialize;

use crate::assignment::{witnessed_transversal, Assignment, Disjunct};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, Instance};
use crate::vertex_set::VertexSet;

pub use enumerate::{
    check_witness_aug, compute_new_transversal, compute_new_transversal_with, evaluate_guess,
    witness_aug_disjunct, EnumHit, EnumOptions,
};
pub use random::{nd_check_random, nd_check_random_with, NdOutcome};
pub use recursive::det_new_transversal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Dual,
    NotDual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    NotSimpleG,
    NotSimpleH,
    NoIntersectionProperty,
    NewTransversalFound,
    TriviallyDual,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::NotSimpleG => "not_simple_g",
            Reason::NotSimpleH => "not_simple_h",
            Reason::NoIntersectionProperty => "no_intersection_property",
            Reason::NewTransversalFound => "new_transversal_found",
            Reason::TriviallyDual => "trivially_dual",
        }
    }
}

/// A failed simplicity or intersection check, with the edges that show it.
///
/// For simplicity failures `edges` is (contained, container) within the
/// same hypergraph; for the intersection property it is (G-edge, H-edge).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckFailure {
    pub reason: Reason,
    pub edges: (EdgeId, EdgeId),
}

/// An assignment satisfying the witnessing condition, and which side of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub assignment: Assignment,
    pub disjunct: Disjunct,
}

impl Witness {
    /// `In` for an included witness, `V ∖ Ex` for an excluded one.
    pub fn transversal(&self) -> VertexSet {
        witnessed_transversal(&self.assignment, self.disjunct)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Certificate {
    pub witness: Option<Witness>,
    /// A minimal transversal of `G` that is independent in `H`.
    pub new_transversal: Option<VertexSet>,
    pub offending_edges: Option<(EdgeId, EdgeId)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub reason: Option<Reason>,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    pub fn is_dual(&self) -> bool {
        self.status == Status::Dual
    }

    fn dual(reason: Option<Reason>) -> Self {
        Self {
            status: Status::Dual,
            reason,
            certificate: None,
        }
    }

    fn not_dual(reason: Reason, certificate: Certificate) -> Self {
        Self {
            status: Status::NotDual,
            reason: Some(reason),
            certificate: Some(certificate),
        }
    }
}

/// Counters collected by the searches.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub calls: u64,
    /// Deepest recursive call, the root being depth 1.
    pub recursion_depth_max: usize,
    /// Largest number of compatible `H`-edges seen at each depth.
    pub com_sizes_per_level: Vec<usize>,
    /// Recursive calls whose compatible `H`-edges exceed half the parent's.
    pub halving_violations: u64,
    pub label_sets_tried: u64,
    /// Every (parent, child) pair of compatible edge counts, when enabled.
    #[serde(skip)]
    pub com_transitions: Option<Vec<(usize, usize)>>,
}

impl SearchStats {
    /// Stats that also record every parent/child transition.
    pub fn traced() -> Self {
        Self {
            com_transitions: Some(Vec::new()),
            ..Self::default()
        }
    }

    pub(crate) fn record_call(&mut self, depth: usize, com: usize, parent_com: Option<usize>) {
        self.calls += 1;
        self.recursion_depth_max = self.recursion_depth_max.max(depth);
        if self.com_sizes_per_level.len() < depth {
            self.com_sizes_per_level.resize(depth, 0);
        }
        let slot = &mut self.com_sizes_per_level[depth - 1];
        *slot = (*slot).max(com);
        if let Some(parent) = parent_com {
            if com > parent / 2 {
                self.halving_violations += 1;
            }
            if let Some(trace) = self.com_transitions.as_mut() {
                trace.push((parent, com));
            }
        }
    }
}

/// First failure among: `G` simple, `H` simple, intersection property.
pub fn check_simple_ip(inst: &Instance) -> Option<CheckFailure> {
    if let Some(edges) = inst.g().find_containment() {
        return Some(CheckFailure {
            reason: Reason::NotSimpleG,
            edges,
        });
    }
    if let Some(edges) = inst.h().find_containment() {
        return Some(CheckFailure {
            reason: Reason::NotSimpleH,
            edges,
        });
    }
    inst.find_disjoint_pair().map(|edges| CheckFailure {
        reason: Reason::NoIntersectionProperty,
        edges,
    })
}

/// Decides whether `H = tr(G)`.
pub fn check_dual(inst: &Instance) -> Verdict {
    check_dual_with(inst, &mut SearchStats::default())
}

pub fn check_dual_with(inst: &Instance, stats: &mut SearchStats) -> Verdict {
    if let Some(failure) = check_simple_ip(inst) {
        return Verdict::not_dual(
            failure.reason,
            Certificate {
                offending_edges: Some(failure.edges),
                ..Certificate::default()
            },
        );
    }
    if inst.is_trivially_dual() {
        return Verdict::dual(Some(Reason::TriviallyDual));
    }
    match det_new_transversal(inst, &Assignment::empty(inst.universe()), stats) {
        None => Verdict::dual(None),
        Some(w) => {
            let t = minimize_transversal(inst.g(), &w.transversal())
                .expect("witness side is a transversal");
            Verdict::not_dual(
                Reason::NewTransversalFound,
                Certificate {
                    witness: Some(w),
                    new_transversal: Some(t),
                    offending_edges: None,
                },
            )
        }
    }
}

/// Drops vertices in ascending order while `t` stays a transversal of `g`.
pub fn minimize_transversal(g: &Hypergraph, t: &VertexSet) -> Result<VertexSet> {
    if !g.is_transversal(t) {
        return Err(Error::NotTransversal);
    }
    let mut out = t.clone();
    for v in t.iter() {
        out.remove(v);
        if !g.is_transversal(&out) {
            out.insert(v);
        }
    }
    Ok(out)
}

/// All minimal transversals of a simple hypergraph, in canonical order.
pub fn dualize(g: &Hypergraph) -> Result<Hypergraph> {
    dualize_with(g, &mut SearchStats::default())
}

pub fn dualize_with(g: &Hypergraph, stats: &mut SearchStats) -> Result<Hypergraph> {
    if let Some((contained, container)) = g.find_containment() {
        return Err(Error::NotSimple {
            contained,
            container,
        });
    }
    let n = g.universe();
    let mut inst = Instance::new(g.clone(), Hypergraph::empty(n))?;
    // every edge added is a transversal of G, so the pair keeps the
    // intersection property throughout
    while let Some(w) = det_new_transversal(&inst, &Assignment::empty(n), stats) {
        let t = minimize_transversal(g, &w.transversal())?;
        let (g, mut h) = inst.into_parts();
        h.push(t);
        inst = Instance::new(g, h)?;
    }
    Ok(inst.h().canonical())
}
