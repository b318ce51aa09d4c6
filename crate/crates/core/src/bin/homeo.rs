use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use homeomorph::format::{self, HostFile};
use homeomorph::harness::{gen_random_host, run_sweep_to_dir, SweepSpec};
use homeomorph::reduce::tripartite_reduce;
use homeomorph::{
    build_aux_graph, build_triple_subdivision, builtin, find_homeomorph, verify_certificate,
    AuxVertex, Config, Rational, TripartiteHost,
};

#[derive(Parser)]
#[command(
    name = "homeo",
    version,
    about = "Find and check homeomorphs of 2-complexes in 3-partite 3-graphs"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Search a host for a homeomorph of the target and write a certificate.
    Find(FindArgs),
    /// Check a certificate against a host.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        host: PathBuf,
    },
    /// Write a binomial random 3-partite host.
    Gen {
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
        #[arg(long)]
        nz: usize,
        #[arg(long)]
        p: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a density sweep described by a TOML file.
    Sweep {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Print statistics of a target.
    Inspect {
        #[arg(long)]
        target: String,
    },
}

#[derive(Args)]
struct FindArgs {
    /// `builtin:NAME` or a `tg` file.
    #[arg(long)]
    target: String,
    /// A `tph` file, or a `tg` file to be split into three classes first.
    #[arg(long)]
    host: PathBuf,
    #[arg(long = "C")]
    c: Option<Rational>,
    #[arg(long)]
    delta: Option<Rational>,
    #[arg(long)]
    eps: Option<Rational>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    retries: Option<usize>,
    #[arg(long)]
    out: PathBuf,
}

/// Failure with its exit code.
struct Exit(u8, String);

fn usage(e: impl std::fmt::Display) -> Exit {
    Exit(2, e.to_string())
}

fn write(path: &Path, text: &str) -> Result<(), Exit> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn find(args: FindArgs) -> Result<(), Exit> {
    let target = builtin::resolve(&args.target).map_err(usage)?;
    let mut cfg = Config::desk_scale(&target).with_seed(args.seed);
    if let Some(c) = args.c {
        cfg.c = c;
    }
    if let Some(d) = args.delta {
        cfg.delta = d;
    }
    cfg.epsilon = args.eps;
    if let Some(k) = args.k {
        cfg.k_threshold = k;
    }
    if let Some(r) = args.retries {
        cfg.retry_limit = r;
    }
    let host = match format::read_host_file(&args.host).map_err(usage)? {
        HostFile::Tripartite(h) => h,
        HostFile::Plain(g) => {
            tripartite_reduce(&g, args.seed, cfg.retry_limit)
                .map_err(|e| Exit(1, format!("stage reduce: {e}")))?
                .host
        }
    };
    let cert = find_homeomorph(&host, &target, &cfg)
        .map_err(|e| Exit(1, format!("stage {}: {}", e.stage, e.cause)))?;
    write(&args.out, &format::write_certificate(&cert))?;
    println!("found: {} faces", cert.host_faces().len());
    Ok(())
}

fn verify(cert: &Path, host: &Path) -> Result<(), Exit> {
    let cert = format::read_certificate(cert).map_err(usage)?;
    let host: TripartiteHost = match format::read_host_file(host).map_err(usage)? {
        HostFile::Tripartite(h) => h,
        HostFile::Plain(g) => {
            let part = cert
                .partition
                .clone()
                .ok_or_else(|| usage("a tg host needs a certificate with `part` lines"))?;
            TripartiteHost::induced(&g, part).map_err(usage)?
        }
    };
    verify_certificate(&cert, &host).map_err(|v| Exit(1, format!("stage verify: {v}")))?;
    println!("pass");
    Ok(())
}

fn inspect(spec: &str) -> Result<(), Exit> {
    let h = builtin::resolve(spec).map_err(usage)?;
    let aux = build_aux_graph(&h);
    let sub = build_triple_subdivision(&h);
    let pair_vertices = aux
        .v2
        .iter()
        .filter(|u| matches!(u, AuxVertex::Pair(_)))
        .count();
    let sub_edges: std::collections::BTreeSet<(usize, usize)> = sub
        .underlying
        .faces()
        .flat_map(|&[a, b, c]| [(a, b), (a, c), (b, c)])
        .collect();
    println!("vertices\t{}", h.vertex_count());
    println!("faces\t{}", h.face_count());
    println!("covered_pairs\t{}", h.covered_pairs().len());
    println!("euler_characteristic\t{}", h.euler_characteristic());
    println!("aux_v1\t{}", aux.v1.len());
    println!(
        "aux_v2\t{} ({} pair, {} face)",
        aux.v2.len(),
        pair_vertices,
        aux.v2.len() - pair_vertices
    );
    println!("aux_edges\t{}", aux.edges.len());
    println!("special_cycles\t{}", aux.special_cycles.len());
    println!(
        "subdivision\t{} vertices, {} edges, {} faces, chi {}",
        sub.underlying.vertex_count(),
        sub_edges.len(),
        sub.underlying.face_count(),
        sub.underlying.euler_characteristic()
    );
    Ok(())
}

fn run(cli: Cli) -> Result<(), Exit> {
    match cli.verb {
        Verb::Find(args) => find(args),
        Verb::Verify { cert, host } => verify(&cert, &host),
        Verb::Gen {
            nx,
            ny,
            nz,
            p,
            seed,
            out,
        } => {
            let pf = *p.numer() as f64 / *p.denom() as f64;
            if !(0.0..=1.0).contains(&pf) {
                return Err(usage(format!("p = {p} is outside [0, 1]")));
            }
            write(
                &out,
                &format::write_host(&gen_random_host(nx, ny, nz, pf, seed)),
            )
        }
        Verb::Sweep { spec, out_dir } => {
            let text =
                fs::read_to_string(&spec).map_err(|e| usage(format!("{}: {e}", spec.display())))?;
            let spec = SweepSpec::from_toml(&text).map_err(usage)?;
            let rows = run_sweep_to_dir(&spec, &out_dir).map_err(usage)?;
            for r in rows {
                println!(
                    "n={} a={} p={:.4}: {}/{}",
                    r.n, r.a, r.p, r.successes, r.trials
                );
            }
            Ok(())
        }
        Verb::Inspect { target } => inspect(&target),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
