//! Type C₂ crystal graphs in the Kashiwara–Nakashima tableau model.
//!
//! The crate builds crystals of two-row tableaux over `1 < 2 < 2̄ < 1̄`,
//! applies the raising and lowering operators through the signature rule,
//! and checks the local relations (of degree 2, 4, 5 and 7) above every
//! vertex by exhaustive search over operator words.

pub mod cli;
pub mod error;
pub mod graph;
pub mod operators;
pub mod relation;
pub mod signature;
pub mod tableau;

pub use error::{GraphError, ParseError};
pub use graph::{CrystalGraph, GraphDocument, GraphEdge};
pub use operators::{action_side, apply_e, apply_f, Operator};
pub use relation::{
    apply_word, classify_by_stats, detect_relation, expected_witnesses, verify_crystal, verify_vertex, OperatorWord,
    RelationDegree, RelationReport,
};
pub use signature::{block_layout, epsilon, letter_signature, phi, signature, BlockLayout, Color, Side};
pub use tableau::{enumerate_tableaux, AbcdStats, Cell, Letter, Shape, Tableau};
