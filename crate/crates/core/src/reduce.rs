//! Passing from an arbitrary 3-graph to a balanced 3-partite host.

use rand::seq::SliceRandom;
use thiserror::Error;

use crate::complex::{ThreeGraph, TripartiteHost};
use crate::seed::{derive_seed, rng_from_seed};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "no balanced partition kept {required} of {faces} faces in {attempts} attempts (best {best})"
)]
pub struct ReduceError {
    pub faces: usize,
    pub required: usize,
    pub best: usize,
    pub attempts: usize,
}

/// A balanced 3-partition of a 3-graph and the crossing faces it keeps.
#[derive(Debug, Clone)]
pub struct TripartiteReduction {
    /// Host whose origin map sends class vertices back to the source graph.
    /// Labels `>= v(source)` are padding vertices.
    pub host: TripartiteHost,
    /// `ceil(2m/9)` for the source's `m` faces.
    pub required: usize,
    /// Partitions sampled, including the accepted one.
    pub attempts: usize,
}

/// Smallest face count every reduction is guaranteed to keep.
pub fn required_faces(m: usize) -> usize {
    (2 * m).div_ceil(9)
}

/// Split the vertices of `h` into three equal classes so that at least
/// `ceil(2m/9)` faces cross all three classes.
///
/// Up to two isolated vertices are appended first so the vertex count is a
/// multiple of three. Partitions are drawn uniformly at random (seeded) until
/// one reaches the bound; a random balanced partition keeps each face with
/// probability at least `2/9`, so some partition always does.
pub fn tripartite_reduce(
    h: &ThreeGraph,
    seed: u64,
    retry_limit: usize,
) -> Result<TripartiteReduction, ReduceError> {
    let m = h.face_count();
    let required = required_faces(m);
    let padded = h.vertex_count().div_ceil(3) * 3;
    let part = padded / 3;

    let mut order: Vec<usize> = (0..padded).collect();
    let mut best = 0;
    for attempt in 0..retry_limit.max(1) {
        let mut rng = rng_from_seed(derive_seed(seed, &[attempt as u64]));
        order.shuffle(&mut rng);
        let mut classes: [Vec<usize>; 3] = [
            order[..part].to_vec(),
            order[part..2 * part].to_vec(),
            order[2 * part..].to_vec(),
        ];
        for c in classes.iter_mut() {
            c.sort_unstable();
        }
        // class and class-local position of every vertex
        let mut slot = vec![(0usize, 0usize); padded];
        for (ci, class) in classes.iter().enumerate() {
            for (pos, &v) in class.iter().enumerate() {
                slot[v] = (ci, pos);
            }
        }
        let mut faces = Vec::new();
        for f in h.faces() {
            let mut local = [usize::MAX; 3];
            for &v in f {
                let (ci, pos) = slot[v];
                local[ci] = pos;
            }
            if local.iter().all(|&p| p != usize::MAX) {
                faces.push(local);
            }
        }
        best = best.max(faces.len());
        if faces.len() >= required {
            let host = TripartiteHost::new([part; 3], faces)
                .expect("crossing faces are distinct and in range")
                .with_origin(classes);
            return Ok(TripartiteReduction {
                host,
                required,
                attempts: attempt + 1,
            });
        }
    }
    Err(ReduceError {
        faces: m,
        required,
        best,
        attempts: retry_limit.max(1),
    })
}
