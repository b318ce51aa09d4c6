//! Exhaustive reference computations.

use thiserror::Error;

use crate::complex::TripartiteHost;
use crate::config::Rational;
use crate::embed::ProblemGraph;
use crate::link::{forbidden_count, link_graph, HostIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("host has no Z vertices")]
    EmptyZ,
    #[error("{what}: {lhs} != {rhs}")]
    Mismatch {
        what: &'static str,
        lhs: Rational,
        rhs: Rational,
    },
    #[error("average forbidden count {average} exceeds bound {bound}")]
    BoundViolated { average: Rational, bound: Rational },
    #[error("ground set of {size} exceeds the exhaustive limit {limit}")]
    TooLarge { size: usize, limit: usize },
}

fn ratio(a: usize, b: usize) -> Rational {
    Rational::new(a as i64, b as i64)
}

/// Average link size over `Z`, checked against `e(G) / n_Z`.
pub fn expectation_oracle(host: &TripartiteHost) -> Result<Rational, OracleError> {
    let nz = host.sizes()[2];
    if nz == 0 {
        return Err(OracleError::EmptyZ);
    }
    let idx = HostIndex::new(host);
    let total: usize = (0..nz)
        .map(|z| link_graph(&idx, z).expect("z in range").edge_count())
        .sum();
    let lhs = ratio(total, nz);
    let rhs = ratio(host.face_count(), nz);
    if lhs != rhs {
        return Err(OracleError::Mismatch {
            what: "sum of link sizes",
            lhs,
            rhs,
        });
    }
    Ok(lhs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenReport {
    /// Mean of `B_z` over `Z`.
    pub average: Rational,
    /// `K / n_Z` times the number of forbidden cycles.
    pub bound: Rational,
    /// 4-cycles bounding between `1` and `K` disks.
    pub forbidden_cycles: usize,
    /// Sum of their disk counts.
    pub disk_total: usize,
}

/// Mean forbidden count over `Z` against its upper bound.
///
/// A forbidden cycle with `d` disks lies in exactly `d` links, so
/// `Σ_z B_z` equals the sum of `d` over forbidden cycles; this is checked
/// exactly, with disks counted by a direct scan of a dense face table.
pub fn forbidden_expectation_oracle(
    host: &TripartiteHost,
    k: usize,
) -> Result<ForbiddenReport, OracleError> {
    let [nx, ny, nz] = host.sizes();
    if nz == 0 {
        return Err(OracleError::EmptyZ);
    }
    let mut cube = vec![false; nx * ny * nz];
    for &[x, y, z] in host.faces() {
        cube[(x * ny + y) * nz + z] = true;
    }
    let has = |x: usize, y: usize, z: usize| cube[(x * ny + y) * nz + z];

    let mut forbidden_cycles = 0;
    let mut disk_total = 0;
    for x1 in 0..nx {
        for x2 in x1 + 1..nx {
            for y1 in 0..ny {
                for y2 in y1 + 1..ny {
                    let d = (0..nz)
                        .filter(|&z| {
                            has(x1, y1, z) && has(x1, y2, z) && has(x2, y1, z) && has(x2, y2, z)
                        })
                        .count();
                    if (1..=k).contains(&d) {
                        forbidden_cycles += 1;
                        disk_total += d;
                    }
                }
            }
        }
    }

    let idx = HostIndex::new(host);
    let b_total: usize = (0..nz)
        .map(|z| forbidden_count(&idx, &link_graph(&idx, z).expect("z in range"), k))
        .sum();
    let average = ratio(b_total, nz);
    let direct = ratio(disk_total, nz);
    if average != direct {
        return Err(OracleError::Mismatch {
            what: "sum of forbidden counts",
            lhs: average,
            rhs: direct,
        });
    }
    let bound = Rational::new((k * forbidden_cycles) as i64, nz as i64);
    if average > bound {
        return Err(OracleError::BoundViolated { average, bound });
    }
    Ok(ForbiddenReport {
        average,
        bound,
        forbidden_cycles,
        disk_total,
    })
}

pub const CLIQUE_ORACLE_LIMIT: usize = 40;

/// Whether some `t`-subset of the ground set spans no problematic pair or
/// triple, by trying every subset.
pub fn clique_oracle(p: &ProblemGraph, t: usize) -> Result<bool, OracleError> {
    let s = p.ground_set.len();
    if s > CLIQUE_ORACLE_LIMIT {
        return Err(OracleError::TooLarge {
            size: s,
            limit: CLIQUE_ORACLE_LIMIT,
        });
    }
    if t > s {
        return Ok(false);
    }
    let mut pick: Vec<usize> = (0..t).collect();
    let mut set = Vec::with_capacity(t);
    loop {
        set.clear();
        set.extend(pick.iter().map(|&i| p.ground_set[i]));
        if p.is_independent(&set) {
            return Ok(true);
        }
        // next combination in lexicographic order
        let Some(i) = (0..t).rev().find(|&i| pick[i] < s - t + i) else {
            return Ok(false);
        };
        pick[i] += 1;
        for j in i + 1..t {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_faces_over_three_z() {
        let faces = [
            [0, 0, 0],
            [1, 0, 0],
            [0, 1, 1],
            [1, 1, 1],
            [0, 0, 2],
            [1, 1, 2],
        ];
        let host = TripartiteHost::new([2, 2, 3], faces).unwrap();
        assert_eq!(
            expectation_oracle(&host).unwrap(),
            Rational::from_integer(2)
        );
    }

    #[test]
    fn empty_host() {
        let host = TripartiteHost::new([3, 3, 3], []).unwrap();
        assert_eq!(
            expectation_oracle(&host).unwrap(),
            Rational::from_integer(0)
        );
        let r = forbidden_expectation_oracle(&host, 5).unwrap();
        assert_eq!(
            (r.average, r.bound),
            (Rational::from_integer(0), Rational::from_integer(0))
        );
        assert_eq!(
            expectation_oracle(&TripartiteHost::complete([2, 2, 0])),
            Err(OracleError::EmptyZ)
        );
    }

    #[test]
    fn complete_host_every_cycle_forbidden() {
        let host = TripartiteHost::complete([4, 5, 3]);
        let r = forbidden_expectation_oracle(&host, 3).unwrap();
        assert_eq!(r.forbidden_cycles, 6 * 10);
        assert_eq!(r.disk_total, 6 * 10 * 3);
        // every cycle has exactly K disks: the bound is tight
        assert_eq!(r.average, r.bound);
        assert_eq!(r.average, Rational::from_integer(60));
    }

    #[test]
    fn clique_oracle_trivial_cases() {
        let empty = ProblemGraph::new((0..6).collect(), [], []);
        assert!((0..=6).all(|t| clique_oracle(&empty, t).unwrap()));
        assert!(!clique_oracle(&empty, 7).unwrap());
        let mut all = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    all.push([a, b, c]);
                }
            }
        }
        let full = ProblemGraph::new((0..6).collect(), [], all);
        assert!(!clique_oracle(&full, 3).unwrap());
        let big = ProblemGraph::new((0..41).collect(), [], []);
        assert!(matches!(
            clique_oracle(&big, 2),
            Err(OracleError::TooLarge { .. })
        ));
    }
}
