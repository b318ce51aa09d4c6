//! Run the whole search on a dense random host, show what each stage chose,
//! and check the certificate.

use homeomorph::embed::find_homeomorph_traced;
use homeomorph::harness::gen_random_host;
use homeomorph::{builtin, verify_certificate, Config};

fn main() {
    let host = gen_random_host(30, 30, 30, 0.97, 17);
    for name in builtin::NAMES {
        let target = builtin::by_name(name).unwrap();
        let cfg = Config::desk_scale(&target).with_seed(3);
        match find_homeomorph_traced(&host, &target, &cfg) {
            Ok((cert, trace)) => {
                println!(
                    "{name}: link z = {}, {} link edges, {} forbidden cycles",
                    trace.z, trace.link_edges, trace.forbidden_cycles
                );
                println!(
                    "  core set Γ(x{}) of size {}, {} bad pairs, {} bad triples",
                    trace.core.x,
                    trace.core.size(),
                    trace.core.bad_pairs,
                    trace.core.bad_triples
                );
                println!("  V1 -> {:?}", trace.v1_images);
                println!(
                    "  {} embedding rounds, {} V2 draws",
                    trace.embed_rounds, trace.v2_draws
                );
                println!(
                    "  {} faces, verifier: {:?}",
                    cert.host_faces().len(),
                    verify_certificate(&cert, &host)
                );
            }
            Err(e) => println!("{name}: failed at {}: {}", e.stage, e.cause),
        }
    }
}
