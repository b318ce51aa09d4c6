use std::path::Path;
use std::process::{Command, Output};

use homeomorph::format::write_host;
use homeomorph::TripartiteHost;

fn homeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homeo"))
        .args(args)
        .output()
        .unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn find_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("host.tph");
    let cert = dir.path().join("cert.txt");
    std::fs::write(&host, write_host(&TripartiteHost::complete([16, 16, 16]))).unwrap();
    let out = homeo(&[
        "find",
        "--target",
        "builtin:k4",
        "--host",
        path(&host),
        "--out",
        path(&cert),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = homeo(&["verify", "--cert", path(&cert), "--host", path(&host)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "pass");

    // a host missing one certificate face rejects it
    let text = std::fs::read_to_string(&cert).unwrap();
    let hf = text.lines().find(|l| l.starts_with("hf ")).unwrap();
    let f: Vec<usize> = hf[3..].split(' ').map(|w| w.parse().unwrap()).collect();
    let full = TripartiteHost::complete([16, 16, 16]);
    let thin = TripartiteHost::new(
        [16, 16, 16],
        full.faces().copied().filter(|g| g[..] != f[..]),
    )
    .unwrap();
    std::fs::write(&host, write_host(&thin)).unwrap();
    let out = homeo(&["verify", "--cert", path(&cert), "--host", path(&host)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("check 1"));
}

#[test]
fn plain_host_is_reduced_and_checked() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("host.tg");
    let cert = dir.path().join("cert.txt");
    let g = homeomorph::ThreeGraph::complete(36);
    std::fs::write(&host, homeomorph::format::write_three_graph(&g)).unwrap();
    let out = homeo(&[
        "find",
        "--target",
        "builtin:triangle",
        "--host",
        path(&host),
        "--out",
        path(&cert),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(std::fs::read_to_string(&cert)
        .unwrap()
        .contains("\npart x "));
    let out = homeo(&["verify", "--cert", path(&cert), "--host", path(&host)]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn not_found_reports_stage() {
    let dir = tempfile::tempdir().unwrap();
    let host = dir.path().join("host.tph");
    std::fs::write(&host, "tph 5 5 5\n").unwrap();
    let out = homeo(&[
        "find",
        "--target",
        "builtin:triangle",
        "--host",
        path(&host),
        "--out",
        path(&dir.path().join("c")),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("stage pick_link_vertex"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(homeo(&["find"]).status.code(), Some(2));
    assert_eq!(
        homeo(&["inspect", "--target", "builtin:nothing"])
            .status
            .code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h");
    assert_eq!(
        homeo(&[
            "gen",
            "--nx",
            "2",
            "--ny",
            "2",
            "--nz",
            "2",
            "--p",
            "3/2",
            "--out",
            path(&out)
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn inspect_prints_counts() {
    let out = homeo(&["inspect", "--target", "builtin:torus7"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("faces\t14"));
    assert!(text.contains("euler_characteristic\t0"));
    assert!(text.contains("special_cycles\t42"));
    assert!(text.contains("subdivision\t84 vertices, 252 edges, 168 faces, chi 0"));
}
