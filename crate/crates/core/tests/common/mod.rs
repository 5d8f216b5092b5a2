#![allow(dead_code)]

use hgdual::oracle::brute_force_tr;
use hgdual::{Assignment, Hypergraph, Instance, VertexSet};
use proptest::prelude::*;

pub fn low_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn vertex_set(n: usize) -> impl Strategy<Value = VertexSet> {
    any::<u64>().prop_map(move |m| VertexSet::from_mask(n, m & low_mask(n)))
}

/// A minimized hypergraph on `n` vertices with up to `max_edges` non-empty
/// edges, all of size `k` or `k + 1` for a random `k ≤ ⌈n/2⌉`.
pub fn simple_on(n: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=n.div_ceil(2))
        .prop_flat_map(move |k| {
            let edge = prop::sample::subsequence((0..n).collect::<Vec<_>>(), k..=(k + 1).min(n));
            prop::collection::vec(edge, 1..=max_edges)
        })
        .prop_map(move |es| Hypergraph::from_edges(n, es).unwrap().minimize())
}

pub fn simple_hypergraph(max_n: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| simple_on(n, max_edges))
}

/// Extends `seed` to a transversal of `g` by adding the lowest vertex of each
/// edge it misses, then minimizes it greedily.
pub fn transversal_from(g: &Hypergraph, seed: &VertexSet) -> VertexSet {
    let mut t = seed.clone();
    for e in g.edges() {
        if !e.intersects(&t) {
            t.insert(e.iter().next().expect("non-empty edge"));
        }
    }
    hgdual::minimize_transversal(g, &t).unwrap()
}

/// `⟨G, tr(G)⟩` for a random simple `G`.
pub fn dual_pair(max_n: usize, max_edges: usize) -> impl Strategy<Value = Instance> {
    simple_hypergraph(max_n, max_edges).prop_map(|g| {
        let h = brute_force_tr(&g).unwrap();
        Instance::new(g, h).unwrap()
    })
}

/// A simple pair with the intersection property: `H` is made of minimal
/// transversals of `G`, so it may or may not be all of `tr(G)`.
pub fn ip_pair(max_n: usize, max_edges: usize) -> impl Strategy<Value = Instance> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            (
                simple_on(n, max_edges),
                prop::collection::vec(vertex_set(n), 0..=max_edges),
                any::<bool>(),
            )
        })
        .prop_map(|(g, seeds, complete)| {
            let h = if complete {
                brute_force_tr(&g).unwrap()
            } else {
                let edges = seeds.iter().map(|s| transversal_from(&g, s)).collect();
                Hypergraph::new(g.universe(), edges).unwrap().minimize()
            };
            Instance::new(g, h).unwrap()
        })
}

/// A pair of independent random simple hypergraphs on the same vertices.
pub fn any_pair(max_n: usize, max_edges: usize) -> impl Strategy<Value = Instance> {
    (1..=max_n)
        .prop_flat_map(move |n| (simple_on(n, max_edges), simple_on(n, max_edges)))
        .prop_map(|(g, h)| Instance::new(g, h).unwrap())
}

/// A random assignment from a vector of per-vertex choices.
pub fn assignment_from(n: usize, choice: &[u8]) -> Assignment {
    let mut inc = VertexSet::empty(n);
    let mut exc = VertexSet::empty(n);
    for (v, c) in choice.iter().enumerate().take(n) {
        match c % 3 {
            0 => {
                inc.insert(v);
            }
            1 => {
                exc.insert(v);
            }
            _ => {}
        }
    }
    Assignment::new(inc, exc).unwrap()
}

pub fn with_assignment<S: Strategy<Value = Instance>>(
    inst: S,
) -> impl Strategy<Value = (Instance, Assignment)> {
    inst.prop_flat_map(|i| {
        let n = i.universe();
        (Just(i), prop::collection::vec(any::<u8>(), n))
    })
    .prop_map(|(i, c)| {
        let a = assignment_from(i.universe(), &c);
        (i, a)
    })
}
