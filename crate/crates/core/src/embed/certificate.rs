use crate::auxiliary::{build_aux_graph, AuxGraph};
use crate::complex::{HostFace, ThreeGraph, Triple};

use super::place::{cycle_image, Embedding};

/// The four host faces of the disk with boundary `(a, u, b, w)` and centre
/// `c`, as `(x, y, z)` triples: `{a,u,c}`, `{u,b,c}`, `{b,w,c}`, `{w,a,c}`.
pub fn disk_faces([a, u, b, w]: [usize; 4], c: usize) -> [HostFace; 4] {
    [[u, a, c], [u, b, c], [w, b, c], [w, a, c]]
}

/// One glued 4-disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disk {
    /// Index of the special cycle it fills.
    pub cycle: usize,
    /// `(a, u, b, w)`: `a, b` in `Y`, `u` the pair-vertex image and `w` the
    /// face-vertex image in `X`.
    pub boundary: [usize; 4],
    pub center: usize,
    /// Normally the four faces of [`disk_faces`]; a parsed certificate keeps
    /// whatever it listed.
    pub faces: Vec<HostFace>,
}

impl Disk {
    pub fn new(cycle: usize, boundary: [usize; 4], center: usize) -> Self {
        Self {
            cycle,
            boundary,
            center,
            faces: disk_faces(boundary, center).to_vec(),
        }
    }
}

/// Where a certificate face comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    pub target_face: Triple,
    pub cycle: usize,
    /// Position of the face within its disk, normally `0..4`.
    pub role: usize,
}

/// A found homeomorph: the target, the embedding of its auxiliary graph, and
/// the glued disks. When the host came from an ordinary 3-graph,
/// `partition` maps class-local indices back to that graph's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomeomorphCertificate {
    pub target: ThreeGraph,
    pub embedding: Embedding,
    pub disks: Vec<Disk>,
    pub partition: Option<[Vec<usize>; 3]>,
}

impl HomeomorphCertificate {
    pub fn assemble(
        target: &ThreeGraph,
        aux: &AuxGraph,
        embedding: Embedding,
        partition: Option<[Vec<usize>; 3]>,
    ) -> Self {
        let disks = (0..aux.special_cycles.len())
            .map(|i| {
                let boundary = cycle_image(aux, &embedding.v1_map, &embedding.v2_map, i);
                Disk::new(i, boundary, embedding.center_map[i])
            })
            .collect();
        Self {
            target: target.clone(),
            embedding,
            disks,
            partition,
        }
    }

    /// Every face of every disk, in disk order.
    pub fn host_faces(&self) -> Vec<HostFace> {
        self.disks
            .iter()
            .flat_map(|d| d.faces.iter().copied())
            .collect()
    }

    pub fn provenance(&self) -> Vec<(HostFace, Provenance)> {
        let aux = build_aux_graph(&self.target);
        let mut out = Vec::with_capacity(4 * self.disks.len());
        for d in &self.disks {
            let target_face = aux
                .special_cycles
                .get(d.cycle)
                .map(|c| c.face)
                .unwrap_or([usize::MAX; 3]);
            for (role, &f) in d.faces.iter().enumerate() {
                out.push((
                    f,
                    Provenance {
                        target_face,
                        cycle: d.cycle,
                        role,
                    },
                ));
            }
        }
        out
    }
}
