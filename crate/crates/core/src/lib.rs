//! Independent domination of k-trees.
//!
//! The crate builds and recognizes k-trees, computes a proper `(k+2)`-coloring
//! in which every vertex of degree at least `k+1` sees all colors in its
//! closed neighborhood, and turns that coloring into an independent
//! dominating set of size at most `(n + |V_k|) / (k+2)`, where `V_k` is the
//! set of degree-`k` vertices. An exact branch-and-bound oracle provides
//! ground truth on small instances, and the generators produce the families
//! on which the bound is attained.
//!
//! ```
//! use ktree_domination::{domination, generators};
//!
//! let tree = generators::gen_tight(3, 4).unwrap();
//! let cert = domination::construct_independent_dominating_set(&tree).unwrap();
//! assert_eq!(cert.chosen_set.len(), 4);
//! assert_eq!(cert.bound.floor(), 4);
//! ```

pub mod bench;
pub mod cli;
pub mod coloring;
pub mod domination;
pub mod error;
pub mod generators;
pub mod graph;
pub mod instance;
pub mod ktree;
pub mod oracle;

pub use coloring::{rainbow_coloring, verify_rainbow, Coloring, RainbowReport};
pub use domination::{
    bound_value, construct_independent_dominating_set, verify_certificate, Bound,
    DominationCertificate,
};
pub use error::{Error, NotKTree, Result};
pub use graph::{Graph, VertexSet};
pub use ktree::{recognize, Attachment, EliminationOrder, KTree};
pub use oracle::{exact_gamma, exact_gamma_i, OracleResult};
