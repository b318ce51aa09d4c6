//! Finding homeomorphic copies of a fixed 2-complex inside a dense 3-partite
//! 3-graph, and checking the resulting certificates without re-running the
//! search.
//!
//! The search picks a vertex `z` whose link graph is dense and has few
//! poorly-covered 4-cycles, narrows the `Y` side to the neighbourhood of a
//! well-chosen `x`, embeds the auxiliary graph of the target there, and glues
//! a 4-disk with its own centre onto every special 4-cycle.
//!
//! ```
//! use homeomorph::{builtin, find_homeomorph, verify_certificate, Config, TripartiteHost};
//!
//! let target = builtin::triangle();
//! let host = TripartiteHost::complete([12, 12, 12]);
//! let cfg = Config::desk_scale(&target);
//! let cert = find_homeomorph(&host, &target, &cfg).unwrap();
//! assert_eq!(cert.host_faces().len(), 12);
//! assert!(verify_certificate(&cert, &host).is_ok());
//! ```

pub mod auxiliary;
pub mod builtin;
pub mod complex;
pub mod config;
pub mod embed;
pub mod error;
pub mod format;
pub mod harness;
pub mod link;
pub mod reduce;
pub mod seed;
pub mod subdivision;
pub mod verify;

pub use auxiliary::{build_aux_graph, AuxGraph, AuxVertex, SpecialCycle};
pub use complex::{covered_pairs, euler_characteristic, Class, ThreeGraph, TripartiteHost};
pub use config::{Config, Rational};
pub use embed::{find_homeomorph, HomeomorphCertificate, PipelineError, Stage};
pub use reduce::tripartite_reduce;
pub use subdivision::{build_triple_subdivision, SubdividedComplex};
pub use verify::{verify_certificate, Violation};
