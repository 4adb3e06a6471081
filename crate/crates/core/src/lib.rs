//! Constructive edge colorings, Hamiltonian paths and Keller-graph
//! certificates, each paired with an independent verifier.
//!
//! Every constructor in this crate returns a plain value (a coloring, a
//! vertex sequence, a cover) that can be checked with [`verify`] without
//! trusting the code that produced it.

pub mod bishop_rook;
pub mod chess;
pub mod clique;
pub mod error;
pub mod graph;
pub mod hamilton;
pub mod io;
pub mod keller;
pub mod kempe;
pub mod matching;
pub mod multicycle;
pub mod mycielski;
pub mod queen;
mod state;
pub mod verify;
pub mod vizing;

pub use error::{Error, Result};
pub use graph::{fournier_forest_check, Color, EdgeColoring, Graph, VerificationReport, Vertex};
