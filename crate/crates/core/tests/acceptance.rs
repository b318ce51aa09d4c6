//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every line is printed; the process fails if any criterion does.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::{Duration, Instant};

use homeomorph::embed::{find_complete_subgraph, ProblemGraph};
use homeomorph::format::{write_certificate, write_host};
use homeomorph::harness::{gen_random_host, run_sweep, Overrides, SweepSpec};
use homeomorph::link::{classify_cycles, link_graph, CycleLabel, HostIndex};
use homeomorph::seed::rng_from_seed;
use homeomorph::verify::{
    canonical_glued_subdivision, clique_oracle, expectation_oracle, forbidden_expectation_oracle,
    Check,
};
use homeomorph::{
    build_aux_graph, build_triple_subdivision, builtin, find_homeomorph, verify_certificate,
    AuxVertex, Config, Rational, ThreeGraph, TripartiteHost,
};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.1?}, limit {limit:?}"))
}

fn random_target(rng: &mut impl Rng) -> ThreeGraph {
    let v = rng.gen_range(3..=9);
    let mut all = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                all.push([a, b, c]);
            }
        }
    }
    all.shuffle(rng);
    let e = rng.gen_range(0..=12.min(all.len()));
    ThreeGraph::new(v, all[..e].iter().copied()).unwrap()
}

/// `(vertices, 1-cells, faces)` counted from the face list.
fn cell_counts(g: &ThreeGraph) -> (usize, usize, usize) {
    let edges: BTreeSet<(usize, usize)> = g
        .faces()
        .flat_map(|&[a, b, c]| [(a, b), (a, c), (b, c)])
        .collect();
    (g.vertex_count(), edges.len(), g.face_count())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(1);
    for i in 0..200 {
        let h = random_target(&mut rng);
        let (v, e) = (h.vertex_count(), h.face_count());
        let pairs: BTreeSet<(usize, usize)> = h
            .faces()
            .flat_map(|&[a, b, c]| [(a, b), (a, c), (b, c)])
            .collect();
        let p = pairs.len();

        let aux = build_aux_graph(&h);
        ensure(aux.special_cycles.len() == 3 * e, || {
            format!("target {i}: special cycles")
        })?;
        ensure(
            (0..aux.v2.len()).all(|u| matches!(aux.degree(u), 2 | 3)),
            || format!("target {i}: V2 degree"),
        )?;

        let expected = (v + p + 4 * e, 2 * p + 15 * e, 12 * e);
        let chi = v as i64 - p as i64 + e as i64;
        let sub = build_triple_subdivision(&h).underlying;
        let canon = canonical_glued_subdivision(&h).complex();
        for (name, g) in [("subdivision", &sub), ("canonical", &canon)] {
            let got = cell_counts(g);
            ensure(got == expected, || {
                format!("target {i} {name}: {got:?} != {expected:?}")
            })?;
            ensure(g.euler_characteristic() == chi, || {
                format!("target {i} {name}: chi")
            })?;
        }
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!("200 targets in {:.2?}", start.elapsed()))
}

fn random_host(rng: &mut impl Rng, max: usize) -> TripartiteHost {
    let sizes = [(); 3].map(|_| rng.gen_range(1..=max));
    let p = rng.gen_range(0.05..0.95);
    gen_random_host(sizes[0], sizes[1], sizes[2], p, rng.gen())
}

fn criterion_2() -> Outcome {
    let mut rng = rng_from_seed(2);
    for i in 0..100 {
        let host = random_host(&mut rng, 30);
        let nz = host.sizes()[2];
        let idx = HostIndex::new(&host);
        let sum: usize = (0..nz)
            .map(|z| link_graph(&idx, z).unwrap().edge_count())
            .sum();
        ensure(sum == host.face_count(), || {
            format!("host {i}: sum {sum} != e(G)")
        })?;
        let mean = expectation_oracle(&host).map_err(|e| format!("host {i}: {e}"))?;
        ensure(
            mean == Rational::new(host.face_count() as i64, nz as i64),
            || format!("host {i}: mean {mean}"),
        )?;
        let k = rng.gen_range(1..=12);
        forbidden_expectation_oracle(&host, k).map_err(|e| format!("host {i}: {e}"))?;
    }
    Ok("100 hosts, both identities exact".into())
}

fn criterion_3() -> Outcome {
    let mut rng = rng_from_seed(3);
    for i in 0..50 {
        let host = random_host(&mut rng, 12);
        let [nx, ny, nz] = host.sizes();
        let k = rng.gen_range(0..=nz);
        let idx = HostIndex::new(&host);
        let has = |x, y, z| host.contains(&[x, y, z]);
        for z in 0..nz {
            let got: BTreeMap<_, _> = classify_cycles(&idx, &link_graph(&idx, z).unwrap(), k)
                .into_iter()
                .map(|c| {
                    (
                        (c.cycle.x1, c.cycle.x2, c.cycle.y1, c.cycle.y2),
                        (c.disk_count, c.label),
                    )
                })
                .collect();
            let mut want = BTreeMap::new();
            for x1 in 0..nx {
                for x2 in x1 + 1..nx {
                    for y1 in 0..ny {
                        for y2 in y1 + 1..ny {
                            let disk = |w| {
                                has(x1, y1, w) && has(x1, y2, w) && has(x2, y1, w) && has(x2, y2, w)
                            };
                            if !disk(z) {
                                continue;
                            }
                            let d = (0..nz).filter(|&w| disk(w)).count();
                            let label = if d > k {
                                CycleLabel::Admissible
                            } else {
                                CycleLabel::Forbidden
                            };
                            want.insert((x1, x2, y1, y2), (d, label));
                        }
                    }
                }
            }
            ensure(got == want, || {
                format!("host {i}, z = {z}: classification differs")
            })?;
        }
    }

    for i in 0..200 {
        let s = rng.gen_range(0..=20);
        let t = rng.gen_range(0..=7);
        let (pp, pt) = (rng.gen_range(0.0..0.3), rng.gen_range(0.0..0.4));
        let mut pairs = Vec::new();
        let mut triples = Vec::new();
        for a in 0..s {
            for b in a + 1..s {
                if rng.gen_bool(pp) {
                    pairs.push((a, b));
                }
                for c in b + 1..s {
                    if rng.gen_bool(pt) {
                        triples.push([a, b, c]);
                    }
                }
            }
        }
        let p = ProblemGraph::new((0..s).collect(), pairs, triples);
        let exists = clique_oracle(&p, t).map_err(|e| e.to_string())?;
        match find_complete_subgraph(&p, t) {
            Ok(set) => ensure(exists && set.len() == t && p.is_independent(&set), || {
                format!("instance {i}: bad set {set:?}")
            })?,
            Err(_) => ensure(!exists, || {
                format!("instance {i}: missed an independent {t}-set")
            })?,
        }
    }
    Ok("50 hosts and 200 problem graphs agree".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let host = TripartiteHost::complete([30, 30, 30]);
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for (name, faces) in [("triangle", 12), ("k4", 48), ("torus7", 168)] {
        let target = builtin::by_name(name).unwrap();
        match find_homeomorph(&host, &target, &Config::desk_scale(&target)) {
            Ok(cert) => {
                let n = cert.host_faces().len();
                match verify_certificate(&cert, &host) {
                    Ok(()) if n == faces => report.push(format!("{name} {n}")),
                    Ok(()) => failures.push(format!("{name}: {n} faces, expected {faces}")),
                    Err(v) => failures.push(format!("{name}: {v}")),
                }
            }
            Err(e) => failures.push(format!("{name}: stage {}: {}", e.stage, e.cause)),
        }
    }
    within(Duration::from_secs(60), start)?;
    if failures.is_empty() {
        Ok(report.join(", "))
    } else {
        Err(format!(
            "{} (passed: {})",
            failures.join("; "),
            report.join(", ")
        ))
    }
}

fn criterion_5() -> Outcome {
    let target = builtin::triangle();
    let classes = [
        (0..12).collect::<Vec<_>>(),
        (12..24).collect(),
        (24..36).collect(),
    ];
    let ambient = ThreeGraph::complete(36);
    let host = TripartiteHost::induced(&ambient, classes.clone()).unwrap();
    let cert = find_homeomorph(&host, &target, &Config::desk_scale(&target)).unwrap();
    verify_certificate(&cert, &host).map_err(|v| format!("clean certificate: {v}"))?;

    let nz = host.sizes()[2];
    let mut mutants: Vec<(Check, _, TripartiteHost)> = Vec::new();

    let mut c = cert.clone();
    c.disks[0].faces[0][2] = nz;
    mutants.push((Check::FacesInHost, c, host.clone()));

    let mut c = cert.clone();
    c.disks[1].faces.pop();
    mutants.push((Check::FaceCount, c, host.clone()));

    let mut c = cert.clone();
    c.embedding.v2_map[1] = c.embedding.v2_map[0];
    mutants.push((Check::Embedding, c, host.clone()));

    let mut c = cert.clone();
    c.embedding.center_map[2] = c.embedding.center_map[0];
    mutants.push((Check::Centers, c, host.clone()));

    let mut c = cert.clone();
    let (a, b) = (c.disks[0].faces[1], c.disks[2].faces[1]);
    c.disks[0].faces[1] = b;
    c.disks[2].faces[1] = a;
    mutants.push((Check::Pattern, c, host.clone()));

    // identify disk 0's centre with the X image of the pair vertex of disk
    // 2, which never shares a face with it
    let aux = build_aux_graph(&target);
    let u = aux
        .v2
        .iter()
        .position(|v| *v == AuxVertex::Pair((0, 2)))
        .unwrap();
    let mut part = classes.clone();
    part[2][cert.embedding.center_map[0]] = part[0][cert.embedding.v2_map[u]];
    let mut c = cert.clone();
    c.partition = Some(part.clone());
    let overlapping = TripartiteHost::induced(&ambient, part).unwrap();
    mutants.push((Check::EulerCharacteristic, c, overlapping));

    let mut detected = 0;
    for (check, c, h) in &mutants {
        match verify_certificate(c, h) {
            Err(v) if v.check == *check => detected += 1,
            other => return Err(format!("mutant for check {}: {other:?}", check.number())),
        }
    }
    Ok(format!("{detected}/6 detected"))
}

fn criterion_6() -> Outcome {
    let spec = |a: &[&str], b: &str| SweepSpec {
        target: "builtin:triangle".into(),
        n: vec![40],
        a: a.iter().map(|s| s.to_string()).collect(),
        b: b.into(),
        trials: 50,
        seed: 6,
        overrides: Overrides::default(),
    };
    let graded = run_sweep(&spec(&["1/5", "1/2", "1"], "1/5")).map_err(|e| e.to_string())?;
    let ends = run_sweep(&spec(&["0", "1"], "0")).map_err(|e| e.to_string())?;
    let rates: Vec<usize> = graded.iter().map(|r| r.successes).collect();
    ensure(rates.windows(2).all(|w| w[0] <= w[1]), || {
        format!("successes {rates:?} decrease")
    })?;
    ensure(ends[0].successes == 0, || {
        format!("p = 0: {}/50", ends[0].successes)
    })?;
    ensure(ends[1].successes == 50, || {
        format!("p = 1: {}/50", ends[1].successes)
    })?;
    Ok(format!(
        "a = 0.2, 0.5, 1.0 -> {rates:?}/50; p = 0 -> 0/50; p = 1 -> 50/50"
    ))
}

fn criterion_7() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_homeo");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let host = dir.path().join("host.tph");
    let spec = dir.path().join("spec.toml");
    std::fs::write(
        &spec,
        "target = \"builtin:triangle\"\nn = [16]\na = [\"1/2\", \"1\"]\nb = \"1/5\"\ntrials = 6\nseed = 3\n",
    )
    .unwrap();

    let run = |args: &[&str]| -> Result<(), String> {
        let out = Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr))
        })
    };
    run(&[
        "gen",
        "--nx",
        "30",
        "--ny",
        "30",
        "--nz",
        "30",
        "--p",
        "97/100",
        "--seed",
        "11",
        "--out",
        host.to_str().unwrap(),
    ])?;
    ensure(
        std::fs::read_to_string(&host).unwrap()
            == write_host(&gen_random_host(30, 30, 30, 0.97, 11)),
        || "gen output differs from the library".into(),
    )?;
    let mut finds = Vec::new();
    let mut sweeps = Vec::new();
    for rep in 0..3 {
        let cert = dir.path().join(format!("cert{rep}.txt"));
        let out = dir.path().join(format!("sweep{rep}"));
        run(&[
            "find",
            "--target",
            "builtin:k4",
            "--host",
            host.to_str().unwrap(),
            "--seed",
            "42",
            "--out",
            cert.to_str().unwrap(),
        ])?;
        run(&[
            "sweep",
            "--spec",
            spec.to_str().unwrap(),
            "--out-dir",
            out.to_str().unwrap(),
        ])?;
        finds.push(std::fs::read(&cert).unwrap());
        let mut files = BTreeMap::new();
        for entry in std::fs::read_dir(&out).unwrap() {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            if name != "timings.tsv" {
                files.insert(name, std::fs::read(&path).unwrap());
            }
        }
        sweeps.push(files);
    }
    ensure(finds.windows(2).all(|w| w[0] == w[1]), || {
        "find output differs".into()
    })?;
    ensure(sweeps.windows(2).all(|w| w[0] == w[1]), || {
        "sweep output differs".into()
    })?;
    // the in-process pipeline writes the same bytes as the binary
    let lib_cert = {
        let h = homeomorph::format::read_host_file(&host).unwrap();
        let homeomorph::format::HostFile::Tripartite(h) = h else {
            unreachable!()
        };
        let t = builtin::k4();
        write_certificate(&find_homeomorph(&h, &t, &Config::desk_scale(&t).with_seed(42)).unwrap())
    };
    ensure(lib_cert.as_bytes() == finds[0].as_slice(), || {
        "binary and library disagree".into()
    })?;
    Ok(format!(
        "3 runs each, {} sweep files identical",
        sweeps[0].len()
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("structural identities", criterion_1),
        ("link expectation identities", criterion_2),
        ("oracle equivalence", criterion_3),
        ("end-to-end on complete hosts", criterion_4),
        ("verifier mutation suite", criterion_5),
        ("threshold behaviour", criterion_6),
        ("determinism", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} [{t:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail} [{t:.2?}]", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
