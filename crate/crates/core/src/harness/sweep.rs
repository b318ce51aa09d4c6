use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Deserialize;
use thiserror::Error;

use crate::builtin;
use crate::config::{rational_to_f64, Config, Rational};
use crate::embed::find_homeomorph;
use crate::error::ParseError;
use crate::format::write_certificate;
use crate::seed::derive_seed;
use crate::verify::verify_certificate;

use super::gen_random_host;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("sweep spec: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("`{0}` is not a rational")]
    BadRational(String),
    #[error("density {p} at n = {n}, a = {a} is outside [0, 1]")]
    DensityOutOfRange { n: usize, a: Rational, p: f64 },
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("target: {0}")]
    Target(#[from] ParseError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Config fields a sweep may override; the rest come from
/// [`Config::desk_scale`].
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    pub c: Option<String>,
    pub delta: Option<String>,
    pub eps: Option<String>,
    pub k: Option<usize>,
    pub retries: Option<usize>,
}

/// A grid of `(n, a)` points with `p = a n^(-b)`, `trials` random hosts per
/// point.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    /// `builtin:NAME` or a path.
    pub target: String,
    pub n: Vec<usize>,
    /// Rationals such as `"1/2"`.
    pub a: Vec<String>,
    pub b: String,
    pub trials: usize,
    pub seed: u64,
    #[serde(default)]
    pub overrides: Overrides,
}

fn rational(s: &str) -> Result<Rational, SweepError> {
    s.trim()
        .parse()
        .map_err(|_| SweepError::BadRational(s.to_string()))
}

impl SweepSpec {
    pub fn from_toml(text: &str) -> Result<Self, SweepError> {
        let spec: Self = toml::from_str(text)?;
        if spec.trials == 0 {
            return Err(SweepError::NoTrials);
        }
        Ok(spec)
    }

    fn config(&self, target: &crate::ThreeGraph) -> Result<Config, SweepError> {
        let mut cfg = Config::desk_scale(target);
        let o = &self.overrides;
        if let Some(c) = &o.c {
            cfg.c = rational(c)?;
        }
        if let Some(d) = &o.delta {
            cfg.delta = rational(d)?;
        }
        if let Some(e) = &o.eps {
            cfg.epsilon = Some(rational(e)?);
        }
        if let Some(k) = o.k {
            cfg.k_threshold = k;
        }
        if let Some(r) = o.retries {
            cfg.retry_limit = r;
        }
        Ok(cfg)
    }
}

/// `a n^(-b)`.
pub fn density(a: Rational, b: Rational, n: usize) -> f64 {
    rational_to_f64(a) * (n as f64).powf(-rational_to_f64(b))
}

/// Outcome of one random host.
#[derive(Debug, Clone)]
pub struct Trial {
    pub n: usize,
    pub point: usize,
    pub trial: usize,
    pub seed: u64,
    pub host_faces: usize,
    /// Certificate text on success, failing stage name otherwise.
    pub outcome: Result<String, &'static str>,
    pub elapsed: Duration,
}

/// Aggregate over the trials of one `(n, a)` point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub a: Rational,
    pub p: f64,
    pub trials: usize,
    pub successes: usize,
    pub mean_host_faces: f64,
    pub mean_runtime: Duration,
    /// Failing stage name to count.
    pub failures: BTreeMap<&'static str, usize>,
}

/// Per-trial seed: `derive_seed(master, [n, trial])`. Points sharing `n`
/// share seeds, so hosts at a larger `a` contain those at a smaller one.
pub fn trial_seed(master: u64, n: usize, trial: usize) -> u64 {
    derive_seed(master, &[n as u64, trial as u64])
}

fn run_trial(
    target: &crate::ThreeGraph,
    cfg: &Config,
    n: usize,
    point: usize,
    p: f64,
    trial: usize,
    master: u64,
) -> Trial {
    let start = Instant::now();
    let seed = trial_seed(master, n, trial);
    let host = gen_random_host(n, n, n, p, seed);
    let cfg = cfg.clone().with_seed(seed);
    let outcome = match find_homeomorph(&host, target, &cfg) {
        Ok(cert) => match verify_certificate(&cert, &host) {
            Ok(()) => Ok(write_certificate(&cert)),
            Err(_) => Err("verify"),
        },
        Err(e) => Err(e.stage.name()),
    };
    Trial {
        n,
        point,
        trial,
        seed,
        host_faces: host.face_count(),
        outcome,
        elapsed: start.elapsed(),
    }
}

/// Every trial of the sweep, in `(n, a, trial)` order. Trials run in
/// parallel; failures are recorded, never propagated.
pub fn run_trials(spec: &SweepSpec) -> Result<Vec<Trial>, SweepError> {
    let target = builtin::resolve(&spec.target)?;
    let cfg = spec.config(&target)?;
    let b = rational(&spec.b)?;
    let mut jobs = Vec::new();
    for &n in &spec.n {
        for (point, a) in spec.a.iter().enumerate() {
            let a = rational(a)?;
            let p = density(a, b, n);
            if !(0.0..=1.0).contains(&p) {
                return Err(SweepError::DensityOutOfRange { n, a, p });
            }
            jobs.extend((0..spec.trials).map(|t| (n, point, p, t)));
        }
    }
    Ok(jobs
        .into_par_iter()
        .map(|(n, point, p, t)| run_trial(&target, &cfg, n, point, p, t, spec.seed))
        .collect())
}

/// Fold trials into one row per `(n, a)`, in spec order.
pub fn aggregate(spec: &SweepSpec, trials: &[Trial]) -> Result<Vec<SweepRow>, SweepError> {
    let b = rational(&spec.b)?;
    let mut rows = Vec::new();
    for &n in &spec.n {
        for (point, a) in spec.a.iter().enumerate() {
            let a = rational(a)?;
            let mine: Vec<&Trial> = trials
                .iter()
                .filter(|t| t.n == n && t.point == point)
                .collect();
            let count = mine.len().max(1);
            let mut failures = BTreeMap::new();
            for t in &mine {
                if let Err(stage) = t.outcome {
                    *failures.entry(stage).or_insert(0) += 1;
                }
            }
            rows.push(SweepRow {
                n,
                a,
                p: density(a, b, n),
                trials: mine.len(),
                successes: mine.iter().filter(|t| t.outcome.is_ok()).count(),
                mean_host_faces: mine.iter().map(|t| t.host_faces as f64).sum::<f64>()
                    / count as f64,
                mean_runtime: mine.iter().map(|t| t.elapsed).sum::<Duration>() / count as u32,
                failures,
            });
        }
    }
    Ok(rows)
}

pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>, SweepError> {
    aggregate(spec, &run_trials(spec)?)
}

/// Rows as tab-separated text. Runtimes are left out so that the table
/// depends only on the spec.
pub fn rows_to_tsv(rows: &[SweepRow]) -> String {
    let mut out = String::from("n\ta\tp\ttrials\tsuccesses\tmean_host_faces\tfailures\n");
    for r in rows {
        let failures = if r.failures.is_empty() {
            "-".to_string()
        } else {
            r.failures
                .iter()
                .map(|(s, c)| format!("{s}:{c}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(
            out,
            "{}\t{}\t{:.6}\t{}\t{}\t{:.3}\t{failures}",
            r.n, r.a, r.p, r.trials, r.successes, r.mean_host_faces
        )
        .unwrap();
    }
    out
}

pub fn timings_to_tsv(rows: &[SweepRow]) -> String {
    let mut out = String::from("n\ta\tmean_runtime_ms\n");
    for r in rows {
        writeln!(
            out,
            "{}\t{}\t{:.3}",
            r.n,
            r.a,
            r.mean_runtime.as_secs_f64() * 1e3
        )
        .unwrap();
    }
    out
}

/// File name of a successful trial's certificate.
pub fn certificate_name(t: &Trial) -> String {
    format!("cert_n{}_a{}_t{}_s{}.txt", t.n, t.point, t.trial, t.seed)
}

/// Run the sweep and write `sweep.tsv`, `timings.tsv` and one certificate
/// per success into `dir`.
pub fn run_sweep_to_dir(spec: &SweepSpec, dir: &Path) -> Result<Vec<SweepRow>, SweepError> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| SweepError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    let trials = run_trials(spec)?;
    for t in &trials {
        if let Ok(text) = &t.outcome {
            let path = dir.join(certificate_name(t));
            fs::write(&path, text).map_err(io(&path))?;
        }
    }
    let rows = aggregate(spec, &trials)?;
    let sweep = dir.join("sweep.tsv");
    fs::write(&sweep, rows_to_tsv(&rows)).map_err(io(&sweep))?;
    let timings = dir.join("timings.tsv");
    fs::write(&timings, timings_to_tsv(&rows)).map_err(io(&timings))?;
    Ok(rows)
}
