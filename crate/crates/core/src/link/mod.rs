//! Link graphs of `Z`-vertices, their 4-cycles, and how many 4-disks each
//! cycle bounds in the host.

mod index;
mod select;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::complex::TripartiteHost;

pub use index::HostIndex;
pub use select::{link_profile, pick_link_vertex, LinkChoice, LinkStats};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinkError {
    #[error("z = {z} out of range (n_z = {n_z})")]
    ZOutOfRange { z: usize, n_z: usize },
    #[error(
        "no z qualifies among {scanned}: need e(L_z) >= {edges_required:.2} \
         (best {best_edges}) and forbidden <= bound (best ratio {best_forbidden_ratio:.3})"
    )]
    NoQualifyingVertex {
        scanned: usize,
        edges_required: f64,
        best_edges: usize,
        /// Smallest `B_z / bound` among vertices passing the edge condition,
        /// infinite when none did.
        best_forbidden_ratio: f64,
    },
}

/// The bipartite graph between `X` and `Y` of pairs completing a face with `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkGraph {
    pub z: usize,
    x_adj: Vec<FixedBitSet>,
    y_adj: Vec<FixedBitSet>,
    edge_count: usize,
}

impl LinkGraph {
    /// Build directly from an edge list; mainly for tests and examples.
    pub fn from_edges(z: usize, nx: usize, ny: usize, edges: &[(usize, usize)]) -> Self {
        let mut x_adj = vec![FixedBitSet::with_capacity(ny); nx];
        let mut y_adj = vec![FixedBitSet::with_capacity(nx); ny];
        for &(x, y) in edges {
            x_adj[x].insert(y);
            y_adj[y].insert(x);
        }
        let edge_count = x_adj.iter().map(|s| s.count_ones(..)).sum();
        Self {
            z,
            x_adj,
            y_adj,
            edge_count,
        }
    }

    pub fn nx(&self) -> usize {
        self.x_adj.len()
    }

    pub fn ny(&self) -> usize {
        self.y_adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.x_adj[x].contains(y)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.x_adj
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.ones().map(move |y| (x, y)))
    }

    /// `Γ(x)`: neighbours of `x` in `Y`.
    pub fn x_neighbors(&self, x: usize) -> &FixedBitSet {
        &self.x_adj[x]
    }

    /// Neighbours of `y` in `X`.
    pub fn y_neighbors(&self, y: usize) -> &FixedBitSet {
        &self.y_adj[y]
    }

    /// Common `X`-neighbourhood of a set of `Y`-vertices.
    pub fn common_x(&self, ys: &[usize]) -> FixedBitSet {
        let mut iter = ys.iter();
        let Some(&first) = iter.next() else {
            let mut all = FixedBitSet::with_capacity(self.nx());
            all.insert_range(..);
            return all;
        };
        let mut acc = self.y_adj[first].clone();
        for &y in iter {
            acc.intersect_with(&self.y_adj[y]);
        }
        acc
    }

    /// `|Γ(y1, y2)|` without allocating.
    pub fn codegree_y(&self, y1: usize, y2: usize) -> usize {
        self.y_adj[y1].intersection_count(&self.y_adj[y2])
    }

    /// Visit every 4-cycle once, grouped by `X`-pair: for `x1 < x2` the
    /// cycles are the pairs of `Γ(x1) ∩ Γ(x2)`.
    pub fn for_each_cycle(&self, mut visit: impl FnMut(FourCycle)) {
        let mut common = FixedBitSet::with_capacity(self.ny());
        let mut ys = Vec::with_capacity(self.ny());
        for x1 in 0..self.nx() {
            for x2 in x1 + 1..self.nx() {
                common.clone_from(&self.x_adj[x1]);
                common.intersect_with(&self.x_adj[x2]);
                ys.clear();
                ys.extend(common.ones());
                for (i, &y1) in ys.iter().enumerate() {
                    for &y2 in &ys[i + 1..] {
                        visit(FourCycle { x1, x2, y1, y2 });
                    }
                }
            }
        }
    }

    pub fn cycle_count(&self) -> usize {
        let mut count = 0;
        self.for_each_cycle(|_| count += 1);
        count
    }

    pub fn contains_cycle(&self, c: &FourCycle) -> bool {
        self.has_edge(c.x1, c.y1)
            && self.has_edge(c.x1, c.y2)
            && self.has_edge(c.x2, c.y1)
            && self.has_edge(c.x2, c.y2)
    }
}

/// A 4-cycle between `X` and `Y`, stored with `x1 < x2` and `y1 < y2`; its
/// edges are the four pairs `x_i y_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FourCycle {
    pub x1: usize,
    pub x2: usize,
    pub y1: usize,
    pub y2: usize,
}

impl FourCycle {
    /// Canonical form of the cycle on `{xa, xb} × {ya, yb}`.
    ///
    /// Panics if either side repeats a vertex.
    pub fn new(xa: usize, xb: usize, ya: usize, yb: usize) -> Self {
        assert!(
            xa != xb && ya != yb,
            "a 4-cycle needs two distinct vertices per side"
        );
        Self {
            x1: xa.min(xb),
            x2: xa.max(xb),
            y1: ya.min(yb),
            y2: ya.max(yb),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleLabel {
    /// Bounds more than `K` disks.
    Admissible,
    /// Bounds at most `K` disks.
    Forbidden,
}

impl CycleLabel {
    pub fn for_count(disk_count: usize, k: usize) -> Self {
        if disk_count > k {
            CycleLabel::Admissible
        } else {
            CycleLabel::Forbidden
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleClassification {
    pub cycle: FourCycle,
    pub disk_count: usize,
    pub label: CycleLabel,
}

pub fn link_graph(host: &HostIndex, z: usize) -> Result<LinkGraph, LinkError> {
    let [nx, ny, nz] = host.sizes();
    if z >= nz {
        return Err(LinkError::ZOutOfRange { z, n_z: nz });
    }
    let mut x_adj = vec![FixedBitSet::with_capacity(ny); nx];
    let mut y_adj = vec![FixedBitSet::with_capacity(nx); ny];
    let mut edge_count = 0;
    for (x, ys) in x_adj.iter_mut().enumerate() {
        for (y, xs) in y_adj.iter_mut().enumerate() {
            if host.column(x, y).contains(z) {
                ys.insert(y);
                xs.insert(x);
                edge_count += 1;
            }
        }
    }
    Ok(LinkGraph {
        z,
        x_adj,
        y_adj,
        edge_count,
    })
}

/// Number of `z` such that all four faces `(x_i, y_j, z)` are in the host,
/// by a direct scan of `Z`.
pub fn count_disks(host: &TripartiteHost, c: &FourCycle) -> usize {
    (0..host.class_size(crate::complex::Class::Z))
        .filter(|&z| {
            [
                [c.x1, c.y1, z],
                [c.x1, c.y2, z],
                [c.x2, c.y1, z],
                [c.x2, c.y2, z],
            ]
            .iter()
            .all(|f| host.contains(f))
        })
        .count()
}

/// Classify every 4-cycle of `link` against threshold `k`.
pub fn classify_cycles(host: &HostIndex, link: &LinkGraph, k: usize) -> Vec<CycleClassification> {
    let mut out = Vec::new();
    link.for_each_cycle(|cycle| {
        let disk_count = host.disk_count(&cycle);
        out.push(CycleClassification {
            cycle,
            disk_count,
            label: CycleLabel::for_count(disk_count, k),
        });
    });
    out
}

/// Number of forbidden 4-cycles in `link`.
pub fn forbidden_count(host: &HostIndex, link: &LinkGraph, k: usize) -> usize {
    let mut count = 0;
    link.for_each_cycle(|c| {
        if host.disk_count(&c) <= k {
            count += 1;
        }
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::gen_random_host;

    fn square_host() -> TripartiteHost {
        TripartiteHost::new([2, 2, 2], [[0, 0, 0], [0, 1, 0], [1, 0, 0], [1, 1, 0]]).unwrap()
    }

    #[test]
    fn link_of_square_is_a_four_cycle() {
        let idx = HostIndex::new(&square_host());
        let l0 = link_graph(&idx, 0).unwrap();
        assert_eq!(l0.edge_count(), 4);
        assert_eq!(l0.cycle_count(), 1);
        let l1 = link_graph(&idx, 1).unwrap();
        assert_eq!(l1.edge_count(), 0);
        assert_eq!(
            link_graph(&idx, 2),
            Err(LinkError::ZOutOfRange { z: 2, n_z: 2 })
        );
    }

    #[test]
    fn link_matches_face_filter() {
        let host = gen_random_host(7, 6, 5, 0.4, 11);
        let idx = HostIndex::new(&host);
        for z in 0..5 {
            let link = link_graph(&idx, z).unwrap();
            let mut expected: Vec<(usize, usize)> = host
                .faces()
                .filter(|f| f[2] == z)
                .map(|f| (f[0], f[1]))
                .collect();
            expected.sort();
            assert_eq!(link.edges().collect::<Vec<_>>(), expected);
        }
    }

    #[test]
    fn disk_counts() {
        let host = square_host();
        let c = FourCycle::new(0, 1, 0, 1);
        assert_eq!(count_disks(&host, &c), 1);
        let full = TripartiteHost::complete([2, 2, 7]);
        assert_eq!(count_disks(&full, &c), 7);
        assert_eq!(HostIndex::new(&full).disk_count(&c), 7);
        assert_eq!(
            HostIndex::new(&full).disk_centers(&c),
            (0..7).collect::<Vec<_>>()
        );
    }

    #[test]
    fn disk_count_paths_agree_on_random_hosts() {
        for seed in 0..5 {
            let host = gen_random_host(6, 6, 9, 0.6, seed);
            let idx = HostIndex::new(&host);
            for x1 in 0..6 {
                for x2 in x1 + 1..6 {
                    for y1 in 0..6 {
                        for y2 in y1 + 1..6 {
                            let c = FourCycle::new(x1, x2, y1, y2);
                            assert_eq!(idx.disk_count(&c), count_disks(&host, &c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn threshold_boundary() {
        let host = TripartiteHost::complete([2, 2, 3]);
        let idx = HostIndex::new(&host);
        let link = link_graph(&idx, 0).unwrap();
        let at = classify_cycles(&idx, &link, 3);
        assert_eq!(at.len(), 1);
        assert_eq!(at[0].disk_count, 3);
        assert_eq!(at[0].label, CycleLabel::Forbidden);
        let below = classify_cycles(&idx, &link, 2);
        assert_eq!(below[0].label, CycleLabel::Admissible);
    }

    #[test]
    fn no_cycles_no_classifications() {
        let host = TripartiteHost::new([3, 3, 1], [[0, 0, 0], [1, 1, 0], [2, 2, 0]]).unwrap();
        let idx = HostIndex::new(&host);
        let link = link_graph(&idx, 0).unwrap();
        assert!(classify_cycles(&idx, &link, 0).is_empty());
    }

    #[test]
    fn four_cycle_is_canonical() {
        assert_eq!(FourCycle::new(3, 1, 5, 2), FourCycle::new(1, 3, 2, 5));
    }

    #[test]
    fn common_x_of_empty_set_is_everything() {
        let l = LinkGraph::from_edges(0, 3, 2, &[(0, 0)]);
        assert_eq!(l.common_x(&[]).count_ones(..), 3);
        assert_eq!(l.common_x(&[0]).ones().collect::<Vec<_>>(), vec![0]);
    }
}
