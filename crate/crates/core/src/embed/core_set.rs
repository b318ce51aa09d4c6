use crate::link::LinkGraph;

use super::stats::{StatsTable, Thresholds};
use super::EmbedError;

/// `Y' = Γ(x)` for the chosen `x`, with the bad-pair and bad-triple counts
/// inside it and the bounds they are compared against.
#[derive(Debug, Clone, PartialEq)]
pub struct CoreSet {
    pub x: usize,
    pub members: Vec<usize>,
    /// `P_x`.
    pub bad_pairs: usize,
    /// `T_x`, triples with too small a common neighbourhood.
    pub bad_triples: usize,
    /// `(400/C) binom(|Y'|, 2)`.
    pub pair_bound: f64,
    /// `(600/C) binom(|Y'|, 3)`.
    pub triple_bound_weak: f64,
    /// `(600/C³) binom(|Y'|, 3)`.
    pub triple_bound_strong: f64,
}

impl CoreSet {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn within_pair_bound(&self) -> bool {
        self.bad_pairs as f64 <= self.pair_bound
    }

    pub fn within_weak_triple_bound(&self) -> bool {
        self.bad_triples as f64 <= self.triple_bound_weak
    }

    pub fn within_strong_triple_bound(&self) -> bool {
        self.bad_triples as f64 <= self.triple_bound_strong
    }
}

fn binom2(s: usize) -> f64 {
    (s * s.saturating_sub(1) / 2) as f64
}

fn binom3(s: usize) -> f64 {
    (s * s.saturating_sub(1) * s.saturating_sub(2) / 6) as f64
}

/// Count bad pairs and bad triples inside `members`.
pub fn count_bad(stats: &StatsTable, members: &[usize]) -> (usize, usize) {
    let mut pairs = 0;
    let mut triples = 0;
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate().skip(i + 1) {
            if !stats.pair_good(a, b) {
                pairs += 1;
            }
            for &c in &members[j + 1..] {
                if !stats.triple_good(a, b, c) {
                    triples += 1;
                }
            }
        }
    }
    (pairs, triples)
}

/// Scan `X` in index order for the first `x` with a non-empty neighbourhood
/// satisfying
///
/// * (A) `|Γ(x)| >= C n^(1-ε) / 4`,
/// * (B) `|Γ(x)| >= C P_x / (12 (1+C) n^(1-ε))`,
/// * (C) `|Γ(x)| >= C T_x / (6 n^(2-2ε))`,
///
/// and return `Γ(x)`.
pub fn select_core_set(
    link: &LinkGraph,
    stats: &StatsTable,
    th: &Thresholds,
) -> Result<CoreSet, EmbedError> {
    let c = th.c;
    let n1 = th.n as f64 * th.rho;
    let n2 = n1 * n1;
    let size_required = c * n1 / 4.0;
    let mut largest = 0;
    for x in 0..link.nx() {
        let members: Vec<usize> = link.x_neighbors(x).ones().collect();
        let s = members.len();
        largest = largest.max(s);
        if s == 0 || (s as f64) < size_required {
            continue;
        }
        let (p_x, t_x) = count_bad(stats, &members);
        let sf = s as f64;
        let ok_b = sf >= c * p_x as f64 / (12.0 * (1.0 + c) * n1);
        let ok_c = sf >= c * t_x as f64 / (6.0 * n2);
        if ok_b && ok_c {
            return Ok(CoreSet {
                x,
                members,
                bad_pairs: p_x,
                bad_triples: t_x,
                pair_bound: 400.0 / c * binom2(s),
                triple_bound_weak: 600.0 / c * binom3(s),
                triple_bound_strong: 600.0 / (c * c * c) * binom3(s),
            });
        }
    }
    Err(EmbedError::NoQualifyingX {
        scanned: link.nx(),
        size_required,
        largest,
    })
}
