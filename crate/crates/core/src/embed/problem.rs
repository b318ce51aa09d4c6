use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::complex::Triple;

use super::stats::StatsTable;
use super::EmbedError;

/// The 3-graph of problematic triples on the core set: triples that are bad
/// themselves or contain a bad pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemGraph {
    pub ground_set: Vec<usize>,
    pub bad_pairs: BTreeSet<(usize, usize)>,
    pub bad_triples: BTreeSet<Triple>,
}

impl ProblemGraph {
    /// Build directly from bad triples; every triple containing a listed bad
    /// pair is added as well.
    pub fn new(
        ground_set: Vec<usize>,
        bad_pairs: impl IntoIterator<Item = (usize, usize)>,
        bad_triples: impl IntoIterator<Item = Triple>,
    ) -> Self {
        let mut ground_set = ground_set;
        ground_set.sort_unstable();
        ground_set.dedup();
        let bad_pairs: BTreeSet<(usize, usize)> = bad_pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let mut triples: BTreeSet<Triple> = bad_triples
            .into_iter()
            .map(|[a, b, c]| crate::complex::sorted_triple(a, b, c))
            .collect();
        for &(a, b) in &bad_pairs {
            for &c in &ground_set {
                if c != a && c != b {
                    triples.insert(crate::complex::sorted_triple(a, b, c));
                }
            }
        }
        Self {
            ground_set,
            bad_pairs,
            bad_triples: triples,
        }
    }

    /// `|D| / binom(|Y'|, 3)`, zero for fewer than three vertices.
    pub fn density(&self) -> f64 {
        let s = self.ground_set.len();
        if s < 3 {
            return 0.0;
        }
        self.bad_triples.len() as f64 / (s * (s - 1) * (s - 2) / 6) as f64
    }

    /// True when `set` contains no bad pair and no bad triple.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        for (i, &a) in set.iter().enumerate() {
            for (j, &b) in set.iter().enumerate().skip(i + 1) {
                if self.bad_pairs.contains(&(a.min(b), a.max(b))) {
                    return false;
                }
                for &c in &set[j + 1..] {
                    if self
                        .bad_triples
                        .contains(&crate::complex::sorted_triple(a, b, c))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn build_problem_graph(core: &[usize], stats: &StatsTable) -> ProblemGraph {
    let mut ys = core.to_vec();
    ys.sort_unstable();
    let mut bad_pairs = Vec::new();
    let mut bad_triples = Vec::new();
    for (i, &a) in ys.iter().enumerate() {
        for (j, &b) in ys.iter().enumerate().skip(i + 1) {
            if !stats.pair_good(a, b) {
                bad_pairs.push((a, b));
            }
            for &c in &ys[j + 1..] {
                if !stats.triple_good(a, b, c) {
                    bad_triples.push([a, b, c]);
                }
            }
        }
    }
    ProblemGraph::new(ys, bad_pairs, bad_triples)
}

/// Dense form of the problem graph over ground-set positions.
struct Conflicts {
    /// `pair[i]`: positions forming a bad pair with `i`.
    pair: Vec<FixedBitSet>,
    /// `triple[i * s + j]`: positions `k` with `{i, j, k}` problematic.
    triple: Vec<FixedBitSet>,
}

impl Conflicts {
    fn new(p: &ProblemGraph) -> Self {
        let s = p.ground_set.len();
        let pos = |v: usize| p.ground_set.binary_search(&v).ok();
        let mut pair = vec![FixedBitSet::with_capacity(s); s];
        for &(a, b) in &p.bad_pairs {
            if let (Some(i), Some(j)) = (pos(a), pos(b)) {
                pair[i].insert(j);
                pair[j].insert(i);
            }
        }
        let mut triple = vec![FixedBitSet::with_capacity(s); s * s];
        for &[a, b, c] in &p.bad_triples {
            if let (Some(i), Some(j), Some(k)) = (pos(a), pos(b), pos(c)) {
                for (u, v, w) in [(i, j, k), (i, k, j), (j, k, i)] {
                    triple[u * s + v].insert(w);
                    triple[v * s + u].insert(w);
                }
            }
        }
        Self { pair, triple }
    }
}

/// Find `t` vertices of the ground set spanning no problematic pair or
/// triple.
///
/// Deterministic backtracking: vertices are tried in increasing order, the
/// candidate set is narrowed by every choice, and a branch is cut as soon as
/// the chosen vertices plus remaining candidates fall short of `t`. The first
/// set found is the lexicographically smallest.
pub fn find_complete_subgraph(p: &ProblemGraph, t: usize) -> Result<Vec<usize>, EmbedError> {
    let s = p.ground_set.len();
    let not_found = EmbedError::NotFound { t, ground: s };
    if t > s {
        return Err(not_found);
    }
    let conflicts = Conflicts::new(p);
    let mut all = FixedBitSet::with_capacity(s);
    all.insert_range(..);
    let mut chosen = Vec::with_capacity(t);
    if search(&conflicts, s, t, &mut chosen, &all) {
        Ok(chosen.into_iter().map(|i| p.ground_set[i]).collect())
    } else {
        Err(not_found)
    }
}

fn search(
    conflicts: &Conflicts,
    s: usize,
    t: usize,
    chosen: &mut Vec<usize>,
    candidates: &FixedBitSet,
) -> bool {
    if chosen.len() == t {
        return true;
    }
    if chosen.len() + candidates.count_ones(..) < t {
        return false;
    }
    let order: Vec<usize> = candidates.ones().collect();
    for (idx, &v) in order.iter().enumerate() {
        if chosen.len() + (order.len() - idx) < t {
            break;
        }
        let mut next = FixedBitSet::with_capacity(s);
        for &w in &order[idx + 1..] {
            next.insert(w);
        }
        next.difference_with(&conflicts.pair[v]);
        for &u in chosen.iter() {
            next.difference_with(&conflicts.triple[u * s + v]);
        }
        chosen.push(v);
        if search(conflicts, s, t, chosen, &next) {
            return true;
        }
        chosen.pop();
    }
    false
}
