//! Exact verification of determinant and Pfaffian identities for weighted
//! combinatorial objects: path families and loop-erased walk families on
//! directed graphs, groves on graphs with boundary, and alternating flows on
//! planar circular networks. Every identity is checked against brute-force
//! enumeration over the field of rational functions in the edge weights.

pub mod det2pf;
pub mod digraph;
pub mod error;
pub mod flows;
pub mod graphfile;
pub mod groves;
pub mod limits;
pub mod random;
pub mod report;
pub mod ring;
pub mod suite;

pub use error::Error;
