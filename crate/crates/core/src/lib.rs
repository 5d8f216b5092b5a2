//! Hypergraph duality: decide whether `H` is the transversal hypergraph of
//! `G`, find a transversal of `G` missing from `H`, and dualize.
//!
//! ```
//! use hgdual::{check_dual, dualize, Hypergraph, Instance, Status};
//!
//! let g = Hypergraph::from_edges(3, [vec![0, 1], vec![1, 2]]).unwrap();
//! let h = dualize(&g).unwrap();
//! assert_eq!(h.len(), 2);
//! let inst = Instance::new(g, h).unwrap();
//! assert_eq!(check_dual(&inst).status, Status::Dual);
//! ```

pub mod assignment;
pub mod error;
pub mod hypergraph;
pub mod labels;
pub mod oracle;
pub mod solver;
pub mod vertex_set;

pub use assignment::{Assignment, AugmentedPair, Disjunct, Extension, LoosePair, Pair};
pub use error::{Error, Result};
pub use hypergraph::{EdgeId, Hypergraph, Instance, VertexId};
pub use labels::{Label, LabelSet, Path};
pub use solver::{
    check_dual, check_dual_with, check_simple_ip, check_witness_aug, compute_new_transversal,
    compute_new_transversal_with, det_new_transversal, dualize, dualize_with, evaluate_guess,
    minimize_transversal, nd_check_random, nd_check_random_with, Certificate, CheckFailure,
    EnumHit, EnumOptions, NdOutcome, Reason, SearchStats, Status, Verdict, Witness,
};
pub use vertex_set::{VertexSet, MAX_VERTICES};
