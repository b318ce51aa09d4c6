use crate::config::Config;

use super::{forbidden_count, link_graph, HostIndex, LinkError, LinkGraph};

/// The link vertex chosen for the embedding, with the quantities that made
/// it qualify.
#[derive(Debug, Clone)]
pub struct LinkChoice {
    pub z: usize,
    pub link: LinkGraph,
    /// `B_z`, the number of forbidden 4-cycles in the link.
    pub forbidden_count: usize,
    /// `n = max(n_x, n_y, n_z)`.
    pub n: usize,
    /// `ε` with `e(L_z) = (C/2) n^(2-ε)`.
    pub epsilon_realized: f64,
    /// `n^(-ε) = 2 e(L_z) / (C n²)`, computed without logarithms.
    pub rho: f64,
}

/// Per-vertex link statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkStats {
    pub z: usize,
    pub edges: usize,
    pub forbidden: usize,
}

fn edges_required(n: f64, cfg: &Config) -> f64 {
    cfg.c_f64() / 2.0 * n.powf(2.0 - cfg.delta_f64())
}

fn forbidden_bound(n: f64, edges: usize, cfg: &Config) -> f64 {
    2.0 * cfg.k_threshold as f64 / cfg.c_f64() * n.powf(1.0 + cfg.delta_f64()) * edges as f64
}

/// Scan `Z` in index order and return the first vertex whose link has
/// `e(L_z) >= (C/2) n^(2-δ)` and at most `(2K/C) n^(1+δ) e(L_z)` forbidden
/// 4-cycles.
pub fn pick_link_vertex(host: &HostIndex, cfg: &Config) -> Result<LinkChoice, LinkError> {
    let [_, _, nz] = host.sizes();
    let n = host.max_class_size();
    let nf = n as f64;
    let required = edges_required(nf, cfg);
    let mut best_edges = 0;
    let mut best_ratio = f64::INFINITY;
    for z in 0..nz {
        let link = link_graph(host, z)?;
        let edges = link.edge_count();
        best_edges = best_edges.max(edges);
        if (edges as f64) < required || edges == 0 {
            continue;
        }
        let forbidden = forbidden_count(host, &link, cfg.k_threshold);
        let bound = forbidden_bound(nf, edges, cfg);
        if forbidden as f64 <= bound {
            let rho = 2.0 * edges as f64 / (cfg.c_f64() * nf * nf);
            let epsilon_realized = if n > 1 {
                2.0 - (2.0 * edges as f64 / cfg.c_f64()).ln() / nf.ln()
            } else {
                0.0
            };
            return Ok(LinkChoice {
                z,
                link,
                forbidden_count: forbidden,
                n,
                epsilon_realized,
                rho,
            });
        }
        best_ratio = best_ratio.min(forbidden as f64 / bound);
    }
    Err(LinkError::NoQualifyingVertex {
        scanned: nz,
        edges_required: required,
        best_edges,
        best_forbidden_ratio: best_ratio,
    })
}

/// `e(L_z)` and `B_z` for every `z`.
pub fn link_profile(host: &HostIndex, k: usize) -> Vec<LinkStats> {
    (0..host.sizes()[2])
        .map(|z| {
            let link = link_graph(host, z).expect("z in range");
            LinkStats {
                z,
                edges: link.edge_count(),
                forbidden: forbidden_count(host, &link, k),
            }
        })
        .collect()
}
