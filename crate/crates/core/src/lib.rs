//! Entropy-compressed static ordered trees.
//!
//! An ordered tree with degree distribution (n_0, ..., n_{n-1}) is stored in
//! space governed by its degree entropy while answering the full navigation
//! query suite (depth, height, subtree size, parent, lca, level ancestor,
//! degree, child rank/select, preorder rank/select). The construction covers
//! the tree with small subtree pieces, summarizes each piece by a small
//! vector `f` and a recombination code `g`, and stores piece payloads with
//! either an exact enumerative (ranking) code or a static arithmetic code
//! whose symbol costs follow the rounded model.
//!
//! Everything is validated against naive traversal oracles; see the
//! `acceptance` integration test for the property gates.

pub mod ab_tree;
pub mod bits;
pub mod decomposition;
pub mod entropy;
pub mod error;
pub mod gen;
pub mod ingest;
pub mod oracle;
pub mod succinct;
pub mod tree;

pub use error::{Error, Result};
pub use oracle::{oracle_query, QueryKind};
pub use tree::{NodeId, OrderedTree};
