//! 3-graphs viewed as 2-dimensional simplicial complexes, and 3-partite hosts.

use std::collections::BTreeSet;

use crate::error::ComplexError;

/// A face of a [`ThreeGraph`], stored with its vertices in increasing order.
pub type Triple = [usize; 3];

/// An unordered vertex pair stored as `(low, high)`.
pub type Pair = (usize, usize);

/// Sort three vertex indices into canonical face order.
pub fn sorted_triple(a: usize, b: usize, c: usize) -> Triple {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// A finite 3-uniform hypergraph. Faces are kept sorted, so every iteration
/// over them is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThreeGraph {
    vertex_count: usize,
    faces: BTreeSet<Triple>,
}

impl ThreeGraph {
    /// Build a 3-graph, rejecting degenerate, out-of-range and repeated faces.
    pub fn new<I>(vertex_count: usize, faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = [usize; 3]>,
    {
        let mut set = BTreeSet::new();
        for [a, b, c] in faces {
            if a == b || b == c || a == c {
                return Err(ComplexError::DegenerateFace([a, b, c]));
            }
            if let Some(&v) = [a, b, c].iter().find(|&&v| v >= vertex_count) {
                return Err(ComplexError::VertexOutOfRange {
                    vertex: v,
                    bound: vertex_count,
                });
            }
            let t = sorted_triple(a, b, c);
            if !set.insert(t) {
                return Err(ComplexError::DuplicateFace(t));
            }
        }
        Ok(Self {
            vertex_count,
            faces: set,
        })
    }

    /// The 3-graph on `vertex_count` vertices with no faces.
    pub fn empty(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            faces: BTreeSet::new(),
        }
    }

    /// All `binom(n, 3)` triples on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut faces = BTreeSet::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    faces.insert([a, b, c]);
                }
            }
        }
        Self {
            vertex_count: n,
            faces,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> impl ExactSizeIterator<Item = &Triple> + '_ {
        self.faces.iter()
    }

    /// Face membership; vertices outside the graph are simply absent.
    pub fn contains_face(&self, a: usize, b: usize, c: usize) -> bool {
        self.faces.contains(&sorted_triple(a, b, c))
    }

    /// Position of a face in lexicographic order.
    pub fn face_index(&self, face: &Triple) -> Option<usize> {
        if !self.faces.contains(face) {
            return None;
        }
        Some(self.faces.range(..*face).count())
    }

    /// Pairs contained in at least one face, in lexicographic order.
    pub fn covered_pairs(&self) -> BTreeSet<Pair> {
        let mut pairs = BTreeSet::new();
        for &[a, b, c] in &self.faces {
            pairs.insert((a, b));
            pairs.insert((a, c));
            pairs.insert((b, c));
        }
        pairs
    }

    /// `V - E + F` where only covered pairs count as 1-cells and isolated
    /// vertices still count toward `V`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.covered_pairs().len() as i64 + self.faces.len() as i64
    }

    /// Vertices that lie in no face.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut used = vec![false; self.vertex_count];
        for f in &self.faces {
            for &v in f {
                used[v] = true;
            }
        }
        (0..self.vertex_count).filter(|&v| !used[v]).collect()
    }
}

/// Free-function form of [`ThreeGraph::covered_pairs`].
pub fn covered_pairs(h: &ThreeGraph) -> BTreeSet<Pair> {
    h.covered_pairs()
}

/// Free-function form of [`ThreeGraph::euler_characteristic`].
pub fn euler_characteristic(h: &ThreeGraph) -> i64 {
    h.euler_characteristic()
}

/// One of the three vertex classes of a [`TripartiteHost`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    X,
    Y,
    Z,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::X, Class::Y, Class::Z];

    pub fn index(self) -> usize {
        match self {
            Class::X => 0,
            Class::Y => 1,
            Class::Z => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Class::X => "x",
            Class::Y => "y",
            Class::Z => "z",
        }
    }
}

/// Isolated vertices a reduction may add so the vertex count divides by 3.
pub const MAX_PADDING: usize = 2;

/// A host face `(x, y, z)`, one vertex per class, indices local to each class.
pub type HostFace = [usize; 3];

/// A 3-partite 3-graph with classes `X`, `Y`, `Z`.
///
/// Vertices are addressed by class-local indices. A host produced from an
/// ordinary 3-graph remembers the ambient label of every class vertex, which
/// the certificate checker uses to detect classes that overlap in the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripartiteHost {
    sizes: [usize; 3],
    faces: BTreeSet<HostFace>,
    origin: Option<[Vec<usize>; 3]>,
}

impl TripartiteHost {
    pub fn new<I>(sizes: [usize; 3], faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = HostFace>,
    {
        let mut set = BTreeSet::new();
        for f in faces {
            for class in Class::ALL {
                let i = class.index();
                if f[i] >= sizes[i] {
                    return Err(ComplexError::ClassIndexOutOfRange {
                        class: class.name(),
                        index: f[i],
                        bound: sizes[i],
                    });
                }
            }
            if !set.insert(f) {
                return Err(ComplexError::DuplicateHostFace(f));
            }
        }
        Ok(Self {
            sizes,
            faces: set,
            origin: None,
        })
    }

    /// Every one of the `n_x * n_y * n_z` possible faces.
    pub fn complete(sizes: [usize; 3]) -> Self {
        let mut faces = BTreeSet::new();
        for x in 0..sizes[0] {
            for y in 0..sizes[1] {
                for z in 0..sizes[2] {
                    faces.insert([x, y, z]);
                }
            }
        }
        Self {
            sizes,
            faces,
            origin: None,
        }
    }

    /// The 3-partite subgraph of `g` induced by the given class lists.
    ///
    /// `classes[c][i]` is the vertex of `g` playing class-local vertex `i`
    /// of class `c`. Labels `v(g)` and `v(g) + 1` stand for the isolated
    /// padding vertices added by [`crate::reduce::tripartite_reduce`]. Lists
    /// are not required to be disjoint; overlaps surface later as identified
    /// vertices when a certificate is checked.
    pub fn induced(g: &ThreeGraph, classes: [Vec<usize>; 3]) -> Result<Self, ComplexError> {
        let bound = g.vertex_count() + MAX_PADDING;
        for list in &classes {
            if let Some(&v) = list.iter().find(|&&v| v >= bound) {
                return Err(ComplexError::VertexOutOfRange { vertex: v, bound });
            }
        }
        let mut faces = BTreeSet::new();
        for (x, &gx) in classes[0].iter().enumerate() {
            for (y, &gy) in classes[1].iter().enumerate() {
                if gx == gy {
                    continue;
                }
                for (z, &gz) in classes[2].iter().enumerate() {
                    if gz != gx && gz != gy && g.contains_face(gx, gy, gz) {
                        faces.insert([x, y, z]);
                    }
                }
            }
        }
        Ok(Self {
            sizes: [classes[0].len(), classes[1].len(), classes[2].len()],
            faces,
            origin: Some(classes),
        })
    }

    pub fn sizes(&self) -> [usize; 3] {
        self.sizes
    }

    pub fn class_size(&self, class: Class) -> usize {
        self.sizes[class.index()]
    }

    /// `max(n_x, n_y, n_z)`.
    pub fn max_class_size(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0)
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> impl ExactSizeIterator<Item = &HostFace> + '_ {
        self.faces.iter()
    }

    pub fn contains(&self, face: &HostFace) -> bool {
        self.faces.contains(face)
    }

    pub fn origin(&self) -> Option<&[Vec<usize>; 3]> {
        self.origin.as_ref()
    }

    /// Label of a class vertex in the ambient vertex set. Without an origin
    /// map the classes are laid out one after another.
    pub fn ambient_label(&self, class: Class, index: usize) -> usize {
        match &self.origin {
            Some(o) => o[class.index()][index],
            None => match class {
                Class::X => index,
                Class::Y => self.sizes[0] + index,
                Class::Z => self.sizes[0] + self.sizes[1] + index,
            },
        }
    }

    pub fn with_origin(mut self, origin: [Vec<usize>; 3]) -> Self {
        self.origin = Some(origin);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> ThreeGraph {
        ThreeGraph::complete(4)
    }

    #[test]
    fn covered_pairs_of_single_face() {
        let h = ThreeGraph::new(3, [[0, 1, 2]]).unwrap();
        let pairs: Vec<_> = h.covered_pairs().into_iter().collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn covered_pairs_of_k4_are_all_pairs() {
        // every pair of 4 points lies in some triple of K4
        let expected: BTreeSet<Pair> = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
            .collect();
        assert_eq!(k4().covered_pairs(), expected);
        assert_eq!(expected.len(), 6);
    }

    #[test]
    fn covered_pairs_empty() {
        assert!(ThreeGraph::empty(5).covered_pairs().is_empty());
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(k4().euler_characteristic(), 2);
        assert_eq!(
            ThreeGraph::new(3, [[2, 0, 1]])
                .unwrap()
                .euler_characteristic(),
            1
        );
        assert_eq!(ThreeGraph::empty(5).euler_characteristic(), 5);
    }

    #[test]
    fn rejects_bad_faces() {
        assert_eq!(
            ThreeGraph::new(3, [[0, 0, 1]]),
            Err(ComplexError::DegenerateFace([0, 0, 1]))
        );
        assert!(matches!(
            ThreeGraph::new(3, [[0, 1, 3]]),
            Err(ComplexError::VertexOutOfRange { vertex: 3, .. })
        ));
        assert_eq!(
            ThreeGraph::new(3, [[0, 1, 2], [2, 1, 0]]),
            Err(ComplexError::DuplicateFace([0, 1, 2]))
        );
    }

    #[test]
    fn face_index_is_lexicographic() {
        let h = k4();
        assert_eq!(h.face_index(&[0, 1, 2]), Some(0));
        assert_eq!(h.face_index(&[1, 2, 3]), Some(3));
        assert_eq!(h.face_index(&[0, 1, 4]), None);
    }

    #[test]
    fn host_validation() {
        assert!(TripartiteHost::new([2, 2, 2], [[0, 1, 1]]).is_ok());
        assert!(matches!(
            TripartiteHost::new([2, 2, 2], [[0, 2, 1]]),
            Err(ComplexError::ClassIndexOutOfRange { class: "y", .. })
        ));
        assert!(matches!(
            TripartiteHost::new([2, 2, 2], [[0, 1, 1], [0, 1, 1]]),
            Err(ComplexError::DuplicateHostFace(_))
        ));
    }

    #[test]
    fn induced_host_keeps_only_crossing_faces() {
        let g = ThreeGraph::complete(6);
        let host = TripartiteHost::induced(&g, [vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(host.face_count(), 8);
        assert_eq!(host.ambient_label(Class::Y, 1), 3);
        let plain = TripartiteHost::complete([2, 2, 2]);
        assert_eq!(plain.ambient_label(Class::Z, 1), 5);
    }
}
