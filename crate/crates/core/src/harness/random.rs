use rand::Rng;

use crate::complex::TripartiteHost;
use crate::seed::rng_from_seed;

/// Binomial random 3-partite host: each of the `n_x n_y n_z` possible faces
/// is present independently with probability `p`, drawn in `(x, y, z)`
/// lexicographic order from a stream seeded by `seed`.
///
/// Panics unless `0 <= p <= 1`.
pub fn gen_random_host(nx: usize, ny: usize, nz: usize, p: f64, seed: u64) -> TripartiteHost {
    assert!(
        (0.0..=1.0).contains(&p),
        "face probability {p} outside [0, 1]"
    );
    let mut rng = rng_from_seed(seed);
    let mut faces = Vec::new();
    for x in 0..nx {
        for y in 0..ny {
            for z in 0..nz {
                if rng.gen_bool(p) {
                    faces.push([x, y, z]);
                }
            }
        }
    }
    TripartiteHost::new([nx, ny, nz], faces).expect("generated faces are distinct and in range")
}
