//! Construction and symmetry analysis of DCell network topologies.
//!
//! A DCell of depth k over n-port switches, written D_{k,n}, is built
//! recursively: D_{0,n} is a complete graph on n servers, and D_{k,n} takes
//! t_{k-1} + 1 copies of D_{k-1,n} and joins every pair of copies with
//! exactly one edge. Vertices carry labels (a_k, ..., a_0); the crate works
//! either on labels alone, so instances far too large to materialize can
//! still be explored, or on fully materialized graphs.
//!
//! On top of the construction sit the symmetry tools: cycle counting around
//! a vertex, transitivity certificates for depths 0 and 1 (verified
//! automorphism maps, one per ordered vertex pair), six-cycle-count
//! witnesses refuting transitivity for every depth k >= 2, exact
//! automorphism orbits for small instances, and a battery of cross-checks
//! over the documented figures.
//!
//! ```
//! use dcell::{Params, Topology};
//! use dcell::topology::DEFAULT_VERTEX_BUDGET;
//!
//! let params = Params::new(1, 2)?;
//! let hexagon = Topology::build(&params, DEFAULT_VERTEX_BUDGET)?;
//! assert_eq!(hexagon.vertex_count(), 6);
//! assert_eq!(hexagon.graph().edge_count(), 6);
//! # Ok::<(), dcell::Error>(())
//! ```

pub mod adjacency;
pub mod certify;
pub mod claims;
pub mod cycles;
pub mod error;
pub mod export;
pub mod graph;
pub mod label;
pub mod params;
pub mod symmetry;
pub mod topology;

pub use error::{Error, Result};
pub use label::VertexLabel;
pub use params::Params;
pub use topology::Topology;
