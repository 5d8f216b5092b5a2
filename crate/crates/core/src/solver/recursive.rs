//! Deterministic recursive search for a new transversal.
//!
//! Each call receives its own copies of the included, excluded and free
//! sets. A call first rejects covering assignments and accepts witnesses.
//! Otherwise it tries to exclude, one at a time, every free vertex that is
//! frequent among the compatible `H`-edges; if none of those branches
//! succeeds it includes all of them at once, re-tests, and then tries every
//! critical inclusion of a free vertex through a separated `G`-edge. Under
//! the intersection property every recursive call at most halves the number
//! of compatible `H`-edges, which bounds the recursion depth
//! logarithmically in `|H|`.

use crate::assignment::{Assignment, Disjunct};
use crate::hypergraph::Instance;
use crate::vertex_set::VertexSet;

use super::{SearchStats, Witness};

/// Searches for a new transversal of `G` w.r.t. `H` coherent with `sigma`.
///
/// Returns the assignment at which the search stopped, which satisfies the
/// witnessing condition. The caller is responsible for checking the
/// intersection property; without it the search is still sound and complete
/// but the halving bound does not apply.
pub fn det_new_transversal(
    inst: &Instance,
    sigma: &Assignment,
    stats: &mut SearchStats,
) -> Option<Witness> {
    let (included, excluded) = sigma.clone().into_parts();
    let free = included.union(&excluded).complement();
    recurse(inst, included, excluded, free, 1, None, stats)
}

fn witness(included: VertexSet, excluded: VertexSet, disjunct: Disjunct) -> Witness {
    Witness {
        assignment: Assignment::new(included, excluded).expect("search keeps sides disjoint"),
        disjunct,
    }
}

fn recurse(
    inst: &Instance,
    mut included: VertexSet,
    excluded: VertexSet,
    mut free: VertexSet,
    depth: usize,
    parent_com: Option<usize>,
    stats: &mut SearchStats,
) -> Option<Witness> {
    let g = inst.g();
    let h = inst.h();

    let com: Vec<&VertexSet> = h
        .edges()
        .iter()
        .filter(|e| e.is_disjoint(&excluded))
        .collect();
    stats.record_call(depth, com.len(), parent_com);

    // covering: some G-edge inside Ex, or some H-edge inside In
    if !g.is_independent_set(&excluded) || !h.is_independent_set(&included) {
        return None;
    }
    if g.is_transversal(&included) {
        return Some(witness(included, excluded, Disjunct::Included));
    }
    if com.is_empty() {
        return Some(witness(included, excluded, Disjunct::Excluded));
    }

    let threshold = com.len().div_ceil(2);
    let frequent: Vec<usize> = free
        .iter()
        .filter(|&v| com.iter().filter(|e| e.contains(v)).count() >= threshold)
        .collect();

    for &v in &frequent {
        let mut exc = excluded.clone();
        exc.insert(v);
        let mut fr = free.clone();
        fr.remove(v);
        if let Some(w) = recurse(
            inst,
            included.clone(),
            exc,
            fr,
            depth + 1,
            Some(com.len()),
            stats,
        ) {
            return Some(w);
        }
    }

    for &v in &frequent {
        included.insert(v);
        free.remove(v);
    }
    if !h.is_independent_set(&included) {
        return None;
    }
    if g.is_transversal(&included) {
        return Some(witness(included, excluded, Disjunct::Included));
    }

    for edge in g.edges().iter().filter(|e| e.is_disjoint(&included)) {
        for v in edge.intersection(&free).iter() {
            let mut inc = included.clone();
            inc.insert(v);
            let mut rest = edge.clone();
            rest.remove(v);
            let exc = excluded.union(&rest);
            let fr = free.difference(edge);
            if let Some(w) = recurse(inst, inc, exc, fr, depth + 1, Some(com.len()), stats) {
                return Some(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assignment::{is_witness, Pair};
    use crate::hypergraph::fixtures::*;
    use crate::hypergraph::Hypergraph;

    #[test]
    fn dual_pair_has_no_new_transversal() {
        let mut stats = SearchStats::default();
        assert!(det_new_transversal(&dual_six(), &Assignment::empty(6), &mut stats).is_none());
        assert!(stats.calls > 1);
        assert_eq!(stats.halving_violations, 0);
    }

    #[test]
    fn missing_bdf_witness_is_coherent_with_dbf() {
        let i = missing_bdf();
        let mut stats = SearchStats::default();
        let w = det_new_transversal(&i, &Assignment::empty(6), &mut stats).unwrap();
        assert!(is_witness(&i, &w.assignment));
        let t = w.transversal();
        assert!(i.is_new_transversal(&t));
        // d=3 b=1 f=5 is the only missing minimal transversal
        assert!(w.assignment.coherent_with(&set(&[1, 3, 5])));
        assert_eq!(stats.halving_violations, 0);
    }

    #[test]
    fn witness_input_returns_immediately() {
        let i = missing_bdf();
        let sigma = Assignment::new(set(&[1, 3, 5]), set(&[0, 2, 4])).unwrap();
        let mut stats = SearchStats::default();
        let w = det_new_transversal(&i, &sigma, &mut stats).unwrap();
        assert_eq!(stats.calls, 1);
        assert_eq!(w.assignment, sigma);
        assert_eq!(w.assignment.included(), &set(&[1, 3, 5]));
    }

    #[test]
    fn covering_input_returns_none() {
        let i = dual_six();
        let sigma = Assignment::new(set(&[0, 1]), set(&[])).unwrap();
        let mut stats = SearchStats::default();
        assert!(det_new_transversal(&i, &sigma, &mut stats).is_none());
        assert_eq!(stats.calls, 1);
    }

    #[test]
    fn empty_hypergraphs() {
        let n = 3;
        let mut stats = SearchStats::default();
        let both_empty = Instance::new(Hypergraph::empty(n), Hypergraph::empty(n)).unwrap();
        let w = det_new_transversal(&both_empty, &Assignment::empty(n), &mut stats).unwrap();
        assert!(w.transversal().is_empty());

        let trivial = Instance::new(Hypergraph::empty(n), Hypergraph::empty_edge(n)).unwrap();
        assert!(det_new_transversal(&trivial, &Assignment::empty(n), &mut stats).is_none());
        assert!(
            det_new_transversal(&trivial.swapped(), &Assignment::empty(n), &mut stats).is_none()
        );
    }
}
