//! Exhaustive reference implementations used as ground truth in tests.
//!
//! Two independent ways to compute `tr(G)` are provided: subset enumeration
//! over all `2^|V|` vertex sets, and edge-by-edge multiplication with
//! minimization after each step. Neither shares code with the solver beyond
//! the bitset type.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Instance};
use crate::vertex_set::VertexSet;

pub const ENV_MAX_VERTICES: &str = "HGDUAL_ORACLE_MAX_VERTICES";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimit {
    pub max_vertices: usize,
}

impl OracleLimit {
    pub const SUBSETS: OracleLimit = OracleLimit { max_vertices: 20 };
    pub const MULTIPLICATION: OracleLimit = OracleLimit { max_vertices: 64 };

    /// `default` unless `HGDUAL_ORACLE_MAX_VERTICES` holds a number.
    pub fn from_env(default: OracleLimit) -> OracleLimit {
        std::env::var(ENV_MAX_VERTICES)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(|max_vertices| OracleLimit { max_vertices })
            .unwrap_or(default)
    }

    fn check(self, vertices: usize) -> Result<()> {
        if vertices > self.max_vertices || vertices > 64 {
            return Err(Error::OracleLimit {
                vertices,
                limit: self.max_vertices,
            });
        }
        Ok(())
    }
}

fn masks(hg: &Hypergraph) -> Vec<u64> {
    hg.edges().iter().map(|e| e.to_mask()).collect()
}

fn is_transversal(edges: &[u64], t: u64) -> bool {
    edges.iter().all(|&e| e & t != 0)
}

fn from_masks(universe: usize, mut sets: Vec<u64>) -> Hypergraph {
    sets.sort_unstable();
    Hypergraph::new(
        universe,
        sets.into_iter()
            .map(|m| VertexSet::from_mask(universe, m))
            .collect(),
    )
    .expect("masks fit the universe")
}

/// Keeps the inclusion-minimal masks, dropping duplicates.
fn minimal_masks(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|m| (m.count_ones(), *m));
    sets.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(sets.len());
    for m in sets {
        if !out.iter().any(|&k| k & !m == 0) {
            out.push(m);
        }
    }
    out
}

/// `tr(g)` by testing every vertex subset, in canonical edge order.
pub fn brute_force_tr(g: &Hypergraph) -> Result<Hypergraph> {
    brute_force_tr_limited(g, OracleLimit::from_env(OracleLimit::SUBSETS))
}

pub fn brute_force_tr_limited(g: &Hypergraph, limit: OracleLimit) -> Result<Hypergraph> {
    let n = g.universe();
    limit.check(n)?;
    let edges = masks(g);
    let transversals: Vec<u64> = (0..1u64 << n)
        .filter(|&t| is_transversal(&edges, t))
        .collect();
    // a transversal is minimal iff dropping any single vertex breaks it
    let minimal = transversals
        .into_iter()
        .filter(|&t| {
            let mut bits = t;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                if is_transversal(&edges, t & !v) {
                    return false;
                }
                bits &= bits - 1;
            }
            true
        })
        .collect();
    Ok(from_masks(n, minimal))
}

/// `tr(g)` by multiplying out the edges one at a time.
pub fn berge_tr(g: &Hypergraph) -> Result<Hypergraph> {
    berge_tr_limited(g, OracleLimit::from_env(OracleLimit::MULTIPLICATION))
}

pub fn berge_tr_limited(g: &Hypergraph, limit: OracleLimit) -> Result<Hypergraph> {
    let n = g.universe();
    limit.check(n)?;
    let mut current: Vec<u64> = vec![0];
    for e in masks(g) {
        let mut next = Vec::new();
        for &t in &current {
            if t & e != 0 {
                next.push(t);
            } else {
                let mut bits = e;
                while bits != 0 {
                    next.push(t | (bits & bits.wrapping_neg()));
                    bits &= bits - 1;
                }
            }
        }
        current = minimal_masks(next);
    }
    Ok(from_masks(n, current))
}

/// The least subset, read as a binary number, that is a transversal of `G`
/// and independent in `H`.
pub fn brute_force_new_transversal(inst: &Instance) -> Result<Option<VertexSet>> {
    let n = inst.universe();
    OracleLimit::from_env(OracleLimit::SUBSETS).check(n)?;
    let g = masks(inst.g());
    let h = masks(inst.h());
    Ok((0..1u64 << n)
        .find(|&t| is_transversal(&g, t) && h.iter().all(|&e| e & !t != 0))
        .map(|t| VertexSet::from_mask(n, t)))
}

/// Every minimal transversal of `G` that is not an edge of `H`.
///
/// When `G` and `H` have the intersection property these are exactly the
/// minimal new transversals.
pub fn minimal_new_transversals(inst: &Instance) -> Result<Vec<VertexSet>> {
    let tr = brute_force_tr(inst.g())?;
    let h = masks(inst.h());
    Ok(tr
        .into_edges()
        .into_iter()
        .filter(|t| !h.contains(&t.to_mask()))
        .collect())
}
