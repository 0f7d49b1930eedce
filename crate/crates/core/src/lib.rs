//! Exact counting of graph homomorphisms to trees, Potts partition functions
//! and weight enumerators, together with builders and checkers for the
//! reduction gadgets that relate them.

pub mod arith;
pub mod cli;
pub mod code;
pub mod convex;
pub mod csp;
pub mod error;
pub mod formats;
pub mod graph;
pub mod hardness;
pub mod hom;
pub mod pattern;
pub mod potts;
pub mod target;

pub use error::{Error, Result};
pub use graph::{Graph, Hypergraph};
