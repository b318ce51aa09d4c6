//! Write a certificate, read it back, and watch the verifier reject
//! corrupted copies.

use homeomorph::format::{parse_certificate, write_certificate};
use homeomorph::{builtin, find_homeomorph, verify_certificate, Config, TripartiteHost};

fn main() {
    let target = builtin::triangle();
    let host = TripartiteHost::complete([10, 10, 10]);
    let cert = find_homeomorph(&host, &target, &Config::desk_scale(&target)).unwrap();
    let text = write_certificate(&cert);
    print!("{text}");

    let back = parse_certificate(&text).unwrap();
    println!("# reread: {:?}", verify_certificate(&back, &host));

    let mut dropped = back.clone();
    dropped.disks[0].faces.pop();
    println!(
        "# face dropped: {}",
        verify_certificate(&dropped, &host).unwrap_err()
    );

    let mut shared = back.clone();
    shared.embedding.center_map[1] = shared.embedding.center_map[0];
    println!(
        "# centre shared: {}",
        verify_certificate(&shared, &host).unwrap_err()
    );
}
