use crate::auxiliary::build_aux_graph;
use crate::complex::{ThreeGraph, TripartiteHost};
use crate::config::Config;
use crate::link::{pick_link_vertex, HostIndex};
use crate::seed::derive_seed;

use super::certificate::HomeomorphCertificate;
use super::core_set::{select_core_set, CoreSet};
use super::error::{EmbedError, PipelineError, Stage};
use super::place::{assign_centers, embed_v2, Embedding};
use super::problem::{build_problem_graph, find_complete_subgraph};
use super::stats::{classify_pairs_triples, ForbiddenIndex, Thresholds};

/// What a successful search went through.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub z: usize,
    pub link_edges: usize,
    pub forbidden_cycles: usize,
    pub epsilon_realized: f64,
    pub thresholds: Thresholds,
    pub core: CoreSet,
    pub problem_triples: usize,
    pub problem_density: f64,
    pub v1_images: Vec<usize>,
    /// Re-randomized embeddings tried before every image cycle was admissible.
    pub embed_rounds: usize,
    /// `V₂` draws across all rounds.
    pub v2_draws: usize,
}

/// Find a homeomorph of `target` in `host`.
pub fn find_homeomorph(
    host: &TripartiteHost,
    target: &ThreeGraph,
    cfg: &Config,
) -> Result<HomeomorphCertificate, PipelineError> {
    find_homeomorph_traced(host, target, cfg).map(|(cert, _)| cert)
}

/// [`find_homeomorph`] that also reports the intermediate choices.
///
/// Stages run in order: pick the link vertex `z`, classify `Y`-pairs and
/// triples of its link, take the core set `Y' = Γ(x)`, pick `v(H)` vertices
/// of `Y'` spanning nothing problematic, then draw `V₂` images and glue
/// disks. A draw whose image cycles are not all admissible is thrown away
/// and redrawn with a fresh seed, up to `retry_limit` rounds.
pub fn find_homeomorph_traced(
    host: &TripartiteHost,
    target: &ThreeGraph,
    cfg: &Config,
) -> Result<(HomeomorphCertificate, Trace), PipelineError> {
    cfg.validate(target)
        .map_err(|e| PipelineError::at(Stage::Config, e))?;
    let index = HostIndex::new(host);
    let choice =
        pick_link_vertex(&index, cfg).map_err(|e| PipelineError::at(Stage::PickLinkVertex, e))?;
    let link = &choice.link;
    let th = Thresholds::for_link(&choice, cfg);

    let forbidden = ForbiddenIndex::new(&index, link, cfg.k_threshold);
    let all_y: Vec<usize> = (0..link.ny()).collect();
    let stats = classify_pairs_triples(link, &forbidden, &th, &all_y);
    let core = select_core_set(link, &stats, &th)
        .map_err(|e| PipelineError::at(Stage::SelectCoreSet, e))?;
    if !(core.within_pair_bound() && core.within_weak_triple_bound()) {
        return Err(PipelineError::at(
            Stage::CoreSetBounds,
            EmbedError::CoreSetBounds {
                size: core.size(),
                bad_pairs: core.bad_pairs,
                pair_bound: core.pair_bound,
                bad_triples: core.bad_triples,
                triple_bound: core.triple_bound_weak,
            },
        ));
    }

    let problem = build_problem_graph(&core.members, &stats);
    let v1_map = find_complete_subgraph(&problem, target.vertex_count())
        .map_err(|e| PipelineError::at(Stage::CompleteSubgraph, e))?;

    let aux = build_aux_graph(target);
    let mut v2_draws = 0;
    let mut last_violation = None;
    for round in 0..cfg.retry_limit {
        let seed = derive_seed(cfg.rng_seed, &[round as u64]);
        let placed = embed_v2(&aux, &v1_map, link, seed, cfg.retry_limit)
            .map_err(|e| PipelineError::at(Stage::EmbedV2, e))?;
        v2_draws += placed.attempts;
        match assign_centers(
            &index,
            &aux,
            &v1_map,
            &placed.v2_map,
            choice.z,
            cfg.k_threshold,
        ) {
            Ok(center_map) => {
                let embedding = Embedding {
                    v1_map: v1_map.clone(),
                    v2_map: placed.v2_map,
                    center_map,
                };
                let cert = HomeomorphCertificate::assemble(
                    target,
                    &aux,
                    embedding,
                    host.origin().cloned(),
                );
                let trace = Trace {
                    z: choice.z,
                    link_edges: link.edge_count(),
                    forbidden_cycles: choice.forbidden_count,
                    epsilon_realized: choice.epsilon_realized,
                    thresholds: th,
                    problem_triples: problem.bad_triples.len(),
                    problem_density: problem.density(),
                    core,
                    v1_images: v1_map,
                    embed_rounds: round + 1,
                    v2_draws,
                };
                return Ok((cert, trace));
            }
            Err(EmbedError::AdmissibilityViolation {
                cycle,
                disk_count,
                k,
            }) => last_violation = Some((cycle, disk_count, k)),
            Err(e) => return Err(PipelineError::at(Stage::AssignCenters, e)),
        }
    }
    let (cycle, disk_count, k) = last_violation.expect("retry_limit is positive");
    Err(PipelineError::at(
        Stage::AssignCenters,
        EmbedError::AdmissibilityExhausted {
            attempts: cfg.retry_limit,
            cycle,
            disk_count,
            k,
        },
    ))
}
