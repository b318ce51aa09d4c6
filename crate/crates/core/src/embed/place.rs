use fixedbitset::FixedBitSet;
use rand::Rng;

use crate::auxiliary::AuxGraph;
use crate::link::{FourCycle, HostIndex, LinkGraph};
use crate::seed::rng_from_seed;

use super::EmbedError;

/// Images of the auxiliary graph in the host: `V₁` into `Y`, `V₂` into `X`,
/// and one centre in `Z` per special cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub v1_map: Vec<usize>,
    pub v2_map: Vec<usize>,
    pub center_map: Vec<usize>,
}

/// Host 4-cycle that special cycle `i` maps onto, as `(a, u, b, w)` with
/// `a, b` in `Y` and `u, w` in `X`.
pub fn cycle_image(aux: &AuxGraph, v1_map: &[usize], v2_map: &[usize], i: usize) -> [usize; 4] {
    let c = &aux.special_cycles[i];
    [
        v1_map[c.a],
        v2_map[c.pair_vertex],
        v1_map[c.b],
        v2_map[c.face_vertex],
    ]
}

fn as_four_cycle([a, u, b, w]: [usize; 4]) -> FourCycle {
    FourCycle::new(u, w, a, b)
}

/// Outcome of [`embed_v2`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct V2Placement {
    pub v2_map: Vec<usize>,
    /// Draws made, including the successful one.
    pub attempts: usize,
    /// Draws rejected for a collision.
    pub collisions: usize,
}

/// Place every `V₂` vertex on a uniformly random common neighbour (in the
/// link) of the images of its `V₁` neighbours. The whole draw is repeated
/// until no two `V₂` vertices share an image, at most `retry_limit` times.
pub fn embed_v2(
    aux: &AuxGraph,
    v1_map: &[usize],
    link: &LinkGraph,
    seed: u64,
    retry_limit: usize,
) -> Result<V2Placement, EmbedError> {
    let mut candidates = Vec::with_capacity(aux.v2.len());
    for (i, u) in aux.v2.iter().enumerate() {
        let ys: Vec<usize> = u.neighbors().iter().map(|&a| v1_map[a]).collect();
        let cands: Vec<usize> = link.common_x(&ys).ones().collect();
        if cands.is_empty() {
            return Err(EmbedError::EmptyCandidateSet { v2_index: i });
        }
        candidates.push(cands);
    }

    let mut rng = rng_from_seed(seed);
    let mut used = FixedBitSet::with_capacity(link.nx());
    let mut v2_map = vec![0; aux.v2.len()];
    let mut collisions = 0;
    for attempt in 1..=retry_limit.max(1) {
        used.clear();
        let mut clash = false;
        for (slot, cands) in v2_map.iter_mut().zip(&candidates) {
            let x = cands[rng.gen_range(0..cands.len())];
            clash |= used.put(x);
            *slot = x;
        }
        if !clash {
            return Ok(V2Placement {
                v2_map,
                attempts: attempt,
                collisions,
            });
        }
        collisions += 1;
    }
    Err(EmbedError::RetriesExhausted {
        attempts: retry_limit.max(1),
        collisions,
    })
}

/// Give every special cycle its own disk centre.
///
/// All image cycles must bound more than `k` disks. Cycles are then handled
/// in order, each taking the smallest unused `z` other than `link_z` whose
/// link contains it; with more than `k >= 3e(H)` disks per cycle this never
/// runs out.
pub fn assign_centers(
    host: &HostIndex,
    aux: &AuxGraph,
    v1_map: &[usize],
    v2_map: &[usize],
    link_z: usize,
    k: usize,
) -> Result<Vec<usize>, EmbedError> {
    let images: Vec<FourCycle> = (0..aux.special_cycles.len())
        .map(|i| as_four_cycle(cycle_image(aux, v1_map, v2_map, i)))
        .collect();
    for (cycle, image) in images.iter().enumerate() {
        let disk_count = host.disk_count(image);
        if disk_count <= k {
            return Err(EmbedError::AdmissibilityViolation {
                cycle,
                disk_count,
                k,
            });
        }
    }
    let mut used = FixedBitSet::with_capacity(host.sizes()[2]);
    used.insert(link_z);
    let mut centers = Vec::with_capacity(images.len());
    for (cycle, image) in images.iter().enumerate() {
        let z = host
            .disk_centers(image)
            .into_iter()
            .find(|&z| !used.contains(z))
            .ok_or(EmbedError::CentersExhausted { cycle })?;
        used.insert(z);
        centers.push(z);
    }
    Ok(centers)
}
