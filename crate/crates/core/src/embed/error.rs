use thiserror::Error;

use crate::config::ConfigError;
use crate::link::LinkError;

/// Failures inside the embedding stages.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmbedError {
    #[error(
        "no x qualifies among {scanned}: need |Γ(x)| >= {size_required:.2} (largest {largest})"
    )]
    NoQualifyingX {
        scanned: usize,
        size_required: f64,
        largest: usize,
    },
    #[error(
        "core set of size {size} exceeds bounds: {bad_pairs} bad pairs (max {pair_bound:.2}), \
         {bad_triples} bad triples (max {triple_bound:.2})"
    )]
    CoreSetBounds {
        size: usize,
        bad_pairs: usize,
        pair_bound: f64,
        bad_triples: usize,
        triple_bound: f64,
    },
    #[error("no {t} vertices of the core set avoid every problematic pair and triple (core size {ground})")]
    NotFound { t: usize, ground: usize },
    #[error("V2 vertex {v2_index} has no candidate image")]
    EmptyCandidateSet { v2_index: usize },
    #[error("every one of {attempts} V2 draws had a collision")]
    RetriesExhausted { attempts: usize, collisions: usize },
    #[error("special cycle {cycle} maps to a forbidden 4-cycle ({disk_count} disks, need > {k})")]
    AdmissibilityViolation {
        cycle: usize,
        disk_count: usize,
        k: usize,
    },
    #[error("admissibility failed in all {attempts} re-randomized embeddings (last: cycle {cycle}, {disk_count} disks, need > {k})")]
    AdmissibilityExhausted {
        attempts: usize,
        cycle: usize,
        disk_count: usize,
        k: usize,
    },
    #[error("no unused centre left for special cycle {cycle}")]
    CentersExhausted { cycle: usize },
}

/// Pipeline stage that produced a failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    Config,
    PickLinkVertex,
    SelectCoreSet,
    CoreSetBounds,
    CompleteSubgraph,
    EmbedV2,
    AssignCenters,
}

impl Stage {
    pub const ALL: [Stage; 7] = [
        Stage::Config,
        Stage::PickLinkVertex,
        Stage::SelectCoreSet,
        Stage::CoreSetBounds,
        Stage::CompleteSubgraph,
        Stage::EmbedV2,
        Stage::AssignCenters,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Config => "config",
            Stage::PickLinkVertex => "pick_link_vertex",
            Stage::SelectCoreSet => "select_core_set",
            Stage::CoreSetBounds => "core_set_bounds",
            Stage::CompleteSubgraph => "find_complete_subgraph",
            Stage::EmbedV2 => "embed_v2",
            Stage::AssignCenters => "assign_centers",
        }
    }
}

impl std::fmt::Display for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StageError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// A failed search, tagged with the stage that gave up.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("stage {stage}: {cause}")]
pub struct PipelineError {
    pub stage: Stage,
    #[source]
    pub cause: StageError,
}

impl PipelineError {
    pub(crate) fn at(stage: Stage, cause: impl Into<StageError>) -> Self {
        Self {
            stage,
            cause: cause.into(),
        }
    }
}
