use std::collections::HashMap;

use crate::auxiliary::build_aux_graph;
use crate::complex::{Pair, ThreeGraph, Triple};

/// A vertex of the canonical glued subdivision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonVertex {
    Original(usize),
    /// `u_e` for a covered pair `e`.
    Edge(Pair),
    /// `u_f` for a face `f`.
    Face(Triple),
    /// `w_{f,e}`, the centre of the disk on special cycle `cycle`.
    Center {
        cycle: usize,
    },
}

/// The complex obtained from the target by filling each special 4-cycle
/// `(x, u_e, y, u_f)` with a disk centred at `w_{f,e}`.
#[derive(Debug, Clone)]
pub struct CanonicalGluedSubdivision {
    pub vertices: Vec<CanonVertex>,
    /// `faces[4 * cycle + role]`, with `{x, u_e, w}`, `{u_e, y, w}`,
    /// `{y, u_f, w}`, `{u_f, x, w}` as roles `0..4`.
    pub faces: Vec<[CanonVertex; 3]>,
    index: HashMap<CanonVertex, usize>,
}

impl CanonicalGluedSubdivision {
    pub fn index_of(&self, v: &CanonVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn face(&self, cycle: usize, role: usize) -> Option<&[CanonVertex; 3]> {
        (role < 4)
            .then(|| self.faces.get(4 * cycle + role))
            .flatten()
    }

    /// The faces as a 3-graph on `0..vertices.len()`.
    pub fn complex(&self) -> ThreeGraph {
        let faces = self.faces.iter().map(|f| f.map(|v| self.index[&v]));
        ThreeGraph::new(self.vertices.len(), faces).expect("canonical faces are distinct")
    }
}

pub fn canonical_glued_subdivision(h: &ThreeGraph) -> CanonicalGluedSubdivision {
    let aux = build_aux_graph(h);
    let mut vertices: Vec<CanonVertex> = (0..h.vertex_count()).map(CanonVertex::Original).collect();
    vertices.extend(h.covered_pairs().into_iter().map(CanonVertex::Edge));
    vertices.extend(h.faces().map(|&f| CanonVertex::Face(f)));
    let mut faces = Vec::with_capacity(4 * aux.special_cycles.len());
    for (cycle, c) in aux.special_cycles.iter().enumerate() {
        let w = CanonVertex::Center { cycle };
        vertices.push(w);
        let (x, y) = (CanonVertex::Original(c.a), CanonVertex::Original(c.b));
        let ue = CanonVertex::Edge((c.a.min(c.b), c.a.max(c.b)));
        let uf = CanonVertex::Face(c.face);
        faces.extend([[x, ue, w], [ue, y, w], [y, uf, w], [uf, x, w]]);
    }
    let index = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    CanonicalGluedSubdivision {
        vertices,
        faces,
        index,
    }
}
