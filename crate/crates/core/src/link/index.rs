use fixedbitset::FixedBitSet;

use crate::complex::{HostFace, TripartiteHost};

use super::FourCycle;

/// Face lookup keyed by the `(x, y)` pair: for each pair, the set of `z`
/// completing it to a host face. The disks bounded by a 4-cycle are then the
/// intersection of its four edge columns.
#[derive(Debug, Clone)]
pub struct HostIndex {
    sizes: [usize; 3],
    columns: Vec<FixedBitSet>,
    face_count: usize,
}

impl HostIndex {
    pub fn new(host: &TripartiteHost) -> Self {
        let [nx, ny, nz] = host.sizes();
        let mut columns = vec![FixedBitSet::with_capacity(nz); nx * ny];
        for &[x, y, z] in host.faces() {
            columns[x * ny + y].insert(z);
        }
        Self {
            sizes: host.sizes(),
            columns,
            face_count: host.face_count(),
        }
    }

    pub fn sizes(&self) -> [usize; 3] {
        self.sizes
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    pub fn max_class_size(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0)
    }

    /// The `z` values completing `(x, y)` to a face.
    pub fn column(&self, x: usize, y: usize) -> &FixedBitSet {
        &self.columns[x * self.sizes[1] + y]
    }

    pub fn contains(&self, &[x, y, z]: &HostFace) -> bool {
        x < self.sizes[0] && y < self.sizes[1] && self.column(x, y).contains(z)
    }

    /// Number of `z` whose link contains the cycle.
    pub fn disk_count(&self, c: &FourCycle) -> usize {
        let cols = [
            self.column(c.x1, c.y1).as_slice(),
            self.column(c.x1, c.y2).as_slice(),
            self.column(c.x2, c.y1).as_slice(),
            self.column(c.x2, c.y2).as_slice(),
        ];
        (0..cols[0].len())
            .map(|i| (cols[0][i] & cols[1][i] & cols[2][i] & cols[3][i]).count_ones() as usize)
            .sum()
    }

    /// Centres of the disks bounded by the cycle, in increasing order.
    pub fn disk_centers(&self, c: &FourCycle) -> Vec<usize> {
        let mut set = self.column(c.x1, c.y1).clone();
        set.intersect_with(self.column(c.x1, c.y2));
        set.intersect_with(self.column(c.x2, c.y1));
        set.intersect_with(self.column(c.x2, c.y2));
        set.ones().collect()
    }
}
