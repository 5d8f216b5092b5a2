//! Instance generators.

use hgdual::{Hypergraph, Instance, VertexSet};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::{NamedHypergraph, NamedPair};

/// `v0`, `v1`, … zero-padded so that sorting the tokens keeps index order.
pub fn numbered_names(prefix: &str, n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("{prefix}{i:0width$}")).collect()
}

/// A simple hypergraph from `edges` random subsets of `vertices` vertices
/// with at most `⌈vertices/2⌉` elements each, minimized.
pub fn random_simple<R: Rng>(rng: &mut R, vertices: usize, edges: usize) -> Hypergraph {
    let max_size = vertices.div_ceil(2).max(1);
    let sets = (0..edges)
        .map(|_| {
            let size = rng.gen_range(1..=max_size);
            VertexSet::from_indices(vertices, sample(rng, vertices, size))
        })
        .collect();
    Hypergraph::new(vertices, sets)
        .expect("indices are in range")
        .minimize()
}

pub fn random_hypergraph(vertices: usize, edges: usize, seed: u64) -> NamedHypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    NamedHypergraph {
        names: numbered_names("v", vertices),
        hypergraph: random_simple(&mut rng, vertices, edges),
    }
}

/// `G_i = {{x_j, y_j}}` and `H_i = {{x_1..x_i}, {y_1..y_i}}`.
///
/// Vertex `x_j` has index `j - 1` and `y_j` has index `i + j - 1`.
pub fn exp_family(i: usize) -> Instance {
    let g = Hypergraph::from_edges(2 * i, (0..i).map(|j| [j, i + j])).expect("in range");
    let h = Hypergraph::from_edges(2 * i, [0..i, i..2 * i]).expect("in range");
    Instance::new(g, h).expect("shared universe")
}

pub fn exp_family_names(i: usize) -> Vec<String> {
    let width = i.to_string().len();
    let xs = (1..=i).map(|j| format!("x{j:0width$}"));
    let ys = (1..=i).map(|j| format!("y{j:0width$}"));
    xs.chain(ys).collect()
}

pub fn exp_family_pair(i: usize) -> NamedPair {
    NamedPair {
        names: exp_family_names(i),
        instance: exp_family(i),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{emit_pair, parse_pair};

    #[test]
    fn names_sort_in_index_order() {
        let names = numbered_names("v", 12);
        assert_eq!(names[0], "v00");
        assert_eq!(names[11], "v11");
        assert!(names.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(numbered_names("v", 1), ["v0"]);
        assert!(exp_family_names(12).windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn exp_family_two() {
        let p = exp_family_pair(2);
        assert_eq!(
            emit_pair(&p.names, &p.instance),
            "x1 y1\nx2 y2\n\nx1 x2\ny1 y2\n"
        );
        assert_eq!(parse_pair(&emit_pair(&p.names, &p.instance)).unwrap(), p);
    }

    #[test]
    fn random_is_deterministic_and_simple() {
        let a = random_hypergraph(10, 8, 5);
        assert_eq!(a, random_hypergraph(10, 8, 5));
        assert!(a.hypergraph.is_simple());
        assert!(!a.hypergraph.has_empty_edge());
    }
}
