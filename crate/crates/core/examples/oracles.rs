//! The exact averaging identities behind the choice of link vertex.

use homeomorph::harness::gen_random_host;
use homeomorph::verify::{expectation_oracle, forbidden_expectation_oracle};

fn main() {
    for (seed, p) in [(1, 0.3), (2, 0.6), (3, 0.9)] {
        let host = gen_random_host(14, 14, 10, p, seed);
        let mean = expectation_oracle(&host).unwrap();
        let r = forbidden_expectation_oracle(&host, 4).unwrap();
        println!(
            "p = {p}: e(G) = {}, mean link size = {mean}, mean B_z = {} <= {} ({} forbidden cycles)",
            host.face_count(),
            r.average,
            r.bound,
            r.forbidden_cycles
        );
    }
}
