//! Discrete Morse theory on hypergraphs.
//!
//! The crate is layered bottom-up:
//!
//! * [`hypercore`]: hypergraphs, associated complexes Δℋ and lower-associated complexes δℋ.
//! * [`chains`]: exact linear algebra over ℤ, ℚ and ℤ/p, infimum/supremum chain complexes
//!   and embedded homology.
//! * [`morse`]: discrete Morse functions, critical hyperedges, gradient vector fields and
//!   extension analysis.
//! * [`morphisms`]: hypergraph morphisms and the homology maps they induce.
//! * [`cli`]: JSON documents, report assembly and the command implementations used by the
//!   `hypermorse` binary and the C bindings.
//!
//! ```
//! use std::sync::Arc;
//! use hypermorse::chains::{embedded_homology, CoeffSpec};
//! use hypermorse::hypercore::{Hypergraph, VertexSet};
//!
//! let vs = Arc::new(VertexSet::numbered(3));
//! let hollow = Hypergraph::from_labels(vs, &[&["v0", "v1"], &["v1", "v2"], &["v0", "v2"]]).unwrap();
//! let h = embedded_homology(&hollow, CoeffSpec::Integers).unwrap();
//! assert_eq!(h.bettis(), vec![0, 1]);
//! ```

pub mod chains;
pub mod cli;
pub mod error;
pub mod hypercore;
pub mod morphisms;
pub mod morse;

pub use error::{Error, Result};

/// Tool name reported in every JSON report.
pub const TOOL_NAME: &str = "hypermorse";
/// Crate version reported in every JSON report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
