//! The bipartite auxiliary graph whose special 4-cycles mark where 4-disks
//! are glued.

use std::collections::BTreeMap;

use crate::complex::{Pair, ThreeGraph, Triple};

/// A vertex of the added side `V₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuxVertex {
    /// One per covered pair; adjacent to both ends.
    Pair(Pair),
    /// One per face; adjacent to its three corners.
    Face(Triple),
}

impl AuxVertex {
    /// Neighbours in `V₁`, in increasing order.
    pub fn neighbors(&self) -> Vec<usize> {
        match *self {
            AuxVertex::Pair((a, b)) => vec![a, b],
            AuxVertex::Face(f) => f.to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            AuxVertex::Pair(_) => 2,
            AuxVertex::Face(_) => 3,
        }
    }
}

/// A special 4-cycle `a, u_ab, b, u_f` of the auxiliary graph. `pair_vertex`
/// and `face_vertex` index into [`AuxGraph::v2`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpecialCycle {
    pub face: Triple,
    pub a: usize,
    pub pair_vertex: usize,
    pub b: usize,
    pub face_vertex: usize,
}

#[derive(Debug, Clone)]
pub struct AuxGraph {
    /// Original vertices of the target.
    pub v1: Vec<usize>,
    /// Pair vertices in lexicographic order of their pairs, then face
    /// vertices in lexicographic order of their faces.
    pub v2: Vec<AuxVertex>,
    /// `(v1 vertex, v2 index)`.
    pub edges: Vec<(usize, usize)>,
    /// Three per face, in face order; for a face `x < y < z` they run
    /// through the pairs `xy`, `yz`, `zx`.
    pub special_cycles: Vec<SpecialCycle>,
}

impl AuxGraph {
    pub fn degree(&self, v2_index: usize) -> usize {
        self.edges.iter().filter(|&&(_, u)| u == v2_index).count()
    }
}

pub fn build_aux_graph(h: &ThreeGraph) -> AuxGraph {
    let mut v2 = Vec::new();
    let mut edges = Vec::new();
    let mut pair_index = BTreeMap::new();
    for (a, b) in h.covered_pairs() {
        let u = v2.len();
        pair_index.insert((a, b), u);
        v2.push(AuxVertex::Pair((a, b)));
        edges.push((a, u));
        edges.push((b, u));
    }
    let mut special_cycles = Vec::with_capacity(3 * h.face_count());
    for &f in h.faces() {
        let w = v2.len();
        v2.push(AuxVertex::Face(f));
        for &x in &f {
            edges.push((x, w));
        }
        let [x, y, z] = f;
        for (a, b) in [(x, y), (y, z), (z, x)] {
            special_cycles.push(SpecialCycle {
                face: f,
                a,
                pair_vertex: pair_index[&(a.min(b), a.max(b))],
                b,
                face_vertex: w,
            });
        }
    }
    AuxGraph {
        v1: (0..h.vertex_count()).collect(),
        v2,
        edges,
        special_cycles,
    }
}
