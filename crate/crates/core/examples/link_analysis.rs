//! Link graphs of a random host: sizes, forbidden 4-cycles, and the link
//! vertex the search would pick.

use homeomorph::harness::gen_random_host;
use homeomorph::link::{classify_cycles, link_profile, pick_link_vertex, CycleLabel, HostIndex};
use homeomorph::{builtin, Config};

fn main() {
    let n = 24;
    let host = gen_random_host(n, n, n, 0.6, 5);
    let idx = HostIndex::new(&host);
    let target = builtin::triangle();
    let cfg = Config::desk_scale(&target);
    println!(
        "host {n}^3, {} faces, K = {}",
        host.face_count(),
        cfg.k_threshold
    );

    for s in link_profile(&idx, cfg.k_threshold).iter().take(8) {
        println!(
            "  z = {:>2}: e(L_z) = {:>3}, forbidden = {:>5}",
            s.z, s.edges, s.forbidden
        );
    }

    match pick_link_vertex(&idx, &cfg) {
        Ok(choice) => {
            let cycles = classify_cycles(&idx, &choice.link, cfg.k_threshold);
            let admissible = cycles
                .iter()
                .filter(|c| c.label == CycleLabel::Admissible)
                .count();
            let max = cycles.iter().map(|c| c.disk_count).max().unwrap_or(0);
            println!(
                "picked z = {} (rho = {:.3}, eps = {:.3}): {} cycles, {} admissible, up to {} disks",
                choice.z,
                choice.rho,
                choice.epsilon_realized,
                cycles.len(),
                admissible,
                max
            );
        }
        Err(e) => println!("no link vertex: {e}"),
    }
}
