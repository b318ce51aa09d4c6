//! A 3-partite 3-graph homeomorphic to a given one: every face is cut into
//! twelve faces, three-coloured so that each new face sees every colour once.

use std::collections::BTreeMap;

use crate::complex::{Pair, ThreeGraph, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
    Green,
}

/// Where a vertex of the subdivision comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    /// A vertex of the source.
    Original(usize),
    /// Midpoint of a covered pair, shared by all faces through it.
    Edge(Pair),
    /// Centre of a face.
    FaceCenter(Triple),
    /// The vertex between a face's centre and one of its corners.
    Corner { face: Triple, corner: usize },
}

impl Origin {
    pub fn color(self) -> Color {
        match self {
            Origin::Original(_) | Origin::FaceCenter(_) => Color::Red,
            Origin::Edge(_) => Color::Blue,
            Origin::Corner { .. } => Color::Green,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SubdividedComplex {
    pub underlying: ThreeGraph,
    pub color: Vec<Color>,
    pub provenance: Vec<Origin>,
}

impl SubdividedComplex {
    /// True when no face repeats a colour.
    pub fn is_properly_colored(&self) -> bool {
        self.underlying.faces().all(|f| {
            let [a, b, c] = f.map(|v| self.color[v]);
            a != b && b != c && a != c
        })
    }
}

/// Subdivide every face of `h` into twelve faces.
///
/// Vertices are numbered originals first, then one edge vertex per covered
/// pair (lexicographic), then per face its centre followed by its three corner
/// vertices. For a face `f` with corner `x` and the two pairs `e1, e2` of `f`
/// through `x`, the faces around `x` are `{x, m_e1, g}`, `{x, g, m_e2}`,
/// `{c_f, m_e1, g}` and `{c_f, g, m_e2}` with `g = g_{f,x}`.
pub fn build_triple_subdivision(h: &ThreeGraph) -> SubdividedComplex {
    let mut provenance: Vec<Origin> = (0..h.vertex_count()).map(Origin::Original).collect();
    let mut edge_vertex = BTreeMap::new();
    for p in h.covered_pairs() {
        edge_vertex.insert(p, provenance.len());
        provenance.push(Origin::Edge(p));
    }

    let mut faces = Vec::with_capacity(12 * h.face_count());
    for &f in h.faces() {
        let center = provenance.len();
        provenance.push(Origin::FaceCenter(f));
        for (k, &x) in f.iter().enumerate() {
            let g = provenance.len();
            provenance.push(Origin::Corner { face: f, corner: x });
            let others = [f[(k + 1) % 3], f[(k + 2) % 3]];
            let [m1, m2] = others.map(|o| edge_vertex[&(x.min(o), x.max(o))]);
            faces.push([x, m1, g]);
            faces.push([x, g, m2]);
            faces.push([center, m1, g]);
            faces.push([center, g, m2]);
        }
    }
    let underlying =
        ThreeGraph::new(provenance.len(), faces).expect("subdivision faces are distinct");
    let color = provenance.iter().map(|o| o.color()).collect();
    SubdividedComplex {
        underlying,
        color,
        provenance,
    }
}
