//! Encodes the Hamiltonian cycle problem on undirected graphs as a Boolean
//! formula `F = F1 & F2`, solves or exports it, and checks the encoding
//! against brute-force oracles.
//!
//! `F1` forces every vertex to have exactly two chosen incident edges, so
//! its models are the 2-factors of the graph. `F2` adds, for every vertex set
//! of a non-spanning simple cycle, a clause requiring two chosen boundary
//! edges with distinct endpoints in the set. Together the models are exactly
//! the Hamiltonian cycles.

pub mod bench;
pub mod cli;
pub mod cycles;
pub mod encoder;
pub mod error;
pub mod families;
pub mod formula;
pub mod graph;
pub mod oracle;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{parse_edge_list, Graph};
