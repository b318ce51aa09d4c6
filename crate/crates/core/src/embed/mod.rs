//! Embedding the auxiliary graph into a dense link and gluing disks.

mod certificate;
mod core_set;
mod error;
mod pipeline;
mod place;
mod problem;
mod stats;

pub use certificate::{disk_faces, Disk, HomeomorphCertificate, Provenance};
pub use core_set::{count_bad, select_core_set, CoreSet};
pub use error::{EmbedError, PipelineError, Stage, StageError};
pub use pipeline::{find_homeomorph, find_homeomorph_traced, Trace};
pub use place::{assign_centers, cycle_image, embed_v2, Embedding, V2Placement};
pub use problem::{build_problem_graph, find_complete_subgraph, ProblemGraph};
pub use stats::{
    classify_pairs_triples, ForbiddenIndex, PairStats, StatsTable, Thresholds, TripleStats,
};
