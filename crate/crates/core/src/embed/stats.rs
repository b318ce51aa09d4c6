use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::config::{rational_to_f64, Config};
use crate::link::{FourCycle, HostIndex, LinkChoice, LinkGraph};

/// Numeric thresholds for one link, all expressed through `ρ = n^(-ε)` so
/// that `n^(1-kε) = n ρ^k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub n: usize,
    pub rho: f64,
    pub c: f64,
    pub k: usize,
}

impl Thresholds {
    /// Use the exponent realized by the link unless the config fixes one.
    pub fn for_link(choice: &LinkChoice, cfg: &Config) -> Self {
        let rho = match cfg.epsilon {
            Some(eps) => (choice.n as f64).powf(-rational_to_f64(eps)),
            None => choice.rho,
        };
        Self {
            n: choice.n,
            rho,
            c: cfg.c_f64(),
            k: cfg.k_threshold,
        }
    }

    fn n_rho(&self, power: i32) -> f64 {
        self.n as f64 * self.rho.powi(power)
    }

    /// `n^(1-2ε)`.
    pub fn pair_codegree_min(&self) -> f64 {
        self.n_rho(2)
    }

    /// `n^(1-3ε)`.
    pub fn triple_codegree_min(&self) -> f64 {
        self.n_rho(3)
    }

    /// `(K/C) n^(1-3ε) |Γ(y1,y2)|`.
    pub fn pair_forbidden_max(&self, codegree: usize) -> f64 {
        self.k as f64 / self.c * self.n_rho(3) * codegree as f64
    }

    pub fn pair_is_good(&self, codegree: usize, forbidden_through: usize) -> bool {
        codegree as f64 >= self.pair_codegree_min()
            && forbidden_through as f64 <= self.pair_forbidden_max(codegree)
    }

    pub fn triple_is_good(&self, codegree: usize) -> bool {
        codegree as f64 >= self.triple_codegree_min()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairStats {
    pub pair: (usize, usize),
    /// `|Γ(y1, y2)|` in the link.
    pub common_degree: usize,
    /// Forbidden 4-cycles of the link whose `Y`-side is `{y1, y2}`.
    pub forbidden_through: usize,
    pub good: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleStats {
    pub triple: [usize; 3],
    pub common_degree: usize,
    pub good: bool,
}

/// Forbidden-cycle count for every `Y`-pair of one link.
#[derive(Debug, Clone)]
pub struct ForbiddenIndex {
    ny: usize,
    counts: Vec<u32>,
}

impl ForbiddenIndex {
    /// For each `y1 < y2`, count pairs `x1 < x2` in `Γ(y1, y2)` whose cycle
    /// bounds at most `k` disks.
    pub fn new(host: &HostIndex, link: &LinkGraph, k: usize) -> Self {
        let ny = link.ny();
        let mut counts = vec![0u32; ny * ny];
        let mut xs = Vec::new();
        for y1 in 0..ny {
            for y2 in y1 + 1..ny {
                let mut common = link.y_neighbors(y1).clone();
                common.intersect_with(link.y_neighbors(y2));
                xs.clear();
                xs.extend(common.ones());
                let mut count = 0;
                for (i, &x1) in xs.iter().enumerate() {
                    for &x2 in &xs[i + 1..] {
                        if host.disk_count(&FourCycle { x1, x2, y1, y2 }) <= k {
                            count += 1;
                        }
                    }
                }
                counts[y1 * ny + y2] = count;
                counts[y2 * ny + y1] = count;
            }
        }
        Self { ny, counts }
    }

    pub fn get(&self, y1: usize, y2: usize) -> usize {
        self.counts[y1 * self.ny + y2] as usize
    }
}

/// Pair and triple statistics over a set of `Y`-vertices.
#[derive(Debug, Clone)]
pub struct StatsTable {
    pub pairs: Vec<PairStats>,
    pub triples: Vec<TripleStats>,
    pair_pos: HashMap<(usize, usize), usize>,
    triple_pos: HashMap<[usize; 3], usize>,
}

impl StatsTable {
    pub fn pair(&self, a: usize, b: usize) -> Option<&PairStats> {
        self.pair_pos
            .get(&(a.min(b), a.max(b)))
            .map(|&i| &self.pairs[i])
    }

    pub fn triple(&self, a: usize, b: usize, c: usize) -> Option<&TripleStats> {
        let t = crate::complex::sorted_triple(a, b, c);
        self.triple_pos.get(&t).map(|&i| &self.triples[i])
    }

    /// Unknown pairs count as bad.
    pub fn pair_good(&self, a: usize, b: usize) -> bool {
        self.pair(a, b).is_some_and(|p| p.good)
    }

    pub fn triple_good(&self, a: usize, b: usize, c: usize) -> bool {
        self.triple(a, b, c).is_some_and(|t| t.good)
    }
}

/// Exact statistics for every pair and triple of `yset`.
pub fn classify_pairs_triples(
    link: &LinkGraph,
    forbidden: &ForbiddenIndex,
    th: &Thresholds,
    yset: &[usize],
) -> StatsTable {
    let mut ys = yset.to_vec();
    ys.sort_unstable();
    ys.dedup();
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    let mut common = FixedBitSet::with_capacity(link.nx());
    for (i, &y1) in ys.iter().enumerate() {
        for (j, &y2) in ys.iter().enumerate().skip(i + 1) {
            common.clone_from(link.y_neighbors(y1));
            common.intersect_with(link.y_neighbors(y2));
            let codegree = common.count_ones(..);
            let through = forbidden.get(y1, y2);
            pairs.push(PairStats {
                pair: (y1, y2),
                common_degree: codegree,
                forbidden_through: through,
                good: th.pair_is_good(codegree, through),
            });
            for &y3 in &ys[j + 1..] {
                let codegree3 = common.intersection_count(link.y_neighbors(y3));
                triples.push(TripleStats {
                    triple: [y1, y2, y3],
                    common_degree: codegree3,
                    good: th.triple_is_good(codegree3),
                });
            }
        }
    }
    let pair_pos = pairs.iter().enumerate().map(|(i, p)| (p.pair, i)).collect();
    let triple_pos = triples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.triple, i))
        .collect();
    StatsTable {
        pairs,
        triples,
        pair_pos,
        triple_pos,
    }
}
