//! Executable ordinal notation systems, well-partial-order combinators,
//! tree-term orders, gap embeddings and the ordinal-to-tree collapsing map,
//! with brute-force oracles for checking them against each other.

pub mod collapse;
pub mod gap;
pub mod ordinal;
pub mod text;
pub mod tree;
pub mod verify;
pub mod wpo;
