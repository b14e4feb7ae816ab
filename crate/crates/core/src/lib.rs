//! Recognizers, constructions and exhaustive verifiers for graph classes
//! defined by forbidden induced subgraphs containing the claw `K1,3`.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] / [`graph6`]: the bitset graph type and its interchange format;
//! * [`canon`] / [`enumerate`]: canonical labelling and generation of all
//!   connected graphs of a given order;
//! * [`patterns`]: the named forbidden subgraphs and induced-subgraph search;
//! * [`structures`]: generalized combs, the `H_i` families, fat paths and cycles;
//! * [`characterize`]: executable checks of the characterization theorems;
//! * [`halin`]: fan-cycle systems and spanning Halin subgraphs;
//! * [`indep`]: independence numbers.

pub mod canon;
pub mod characterize;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod halin;
pub mod indep;
pub mod patterns;
pub mod structures;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use graph6::{parse_graph6, read_graph6, write_graph6};
