use std::collections::{BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::auxiliary::{build_aux_graph, AuxVertex};
use crate::complex::{Class, HostFace, TripartiteHost};
use crate::embed::{cycle_image, HomeomorphCertificate};

use super::canonical::{canonical_glued_subdivision, CanonVertex};

/// The checks a certificate goes through, in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    FacesInHost = 1,
    FaceCount = 2,
    Embedding = 3,
    Centers = 4,
    Pattern = 5,
    EulerCharacteristic = 6,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::FacesInHost,
        Check::FaceCount,
        Check::Embedding,
        Check::Centers,
        Check::Pattern,
        Check::EulerCharacteristic,
    ];

    pub fn number(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Check::FacesInHost => "faces_in_host",
            Check::FaceCount => "face_count",
            Check::Embedding => "embedding",
            Check::Centers => "centers",
            Check::Pattern => "pattern",
            Check::EulerCharacteristic => "euler_characteristic",
        }
    }
}

/// The first failed check and what failed it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("check {} ({}) failed: {witness}", .check.number(), .check.name())]
pub struct Violation {
    pub check: Check,
    pub witness: String,
}

fn fail<T>(check: Check, witness: impl Into<String>) -> Result<T, Violation> {
    Err(Violation {
        check,
        witness: witness.into(),
    })
}

/// Check a certificate against a host without searching.
///
/// 1. every face is a face of the host;
/// 2. there are exactly `12 e(H)` faces;
/// 3. the `V₁` and `V₂` maps are total, in range and injective, and each
///    disk's boundary is the image of its special cycle;
/// 4. every special cycle has its own centre, matching its disk;
/// 5. relabelled through the embedding, every face is the canonical face
///    of its disk and role, and the two complexes coincide;
/// 6. in the host's ambient labels, no two class vertices used coincide and
///    the Euler characteristic equals that of the target.
pub fn verify_certificate(
    cert: &HomeomorphCertificate,
    host: &TripartiteHost,
) -> Result<(), Violation> {
    check_faces_in_host(cert, host)?;
    check_face_count(cert)?;
    check_embedding(cert, host)?;
    check_centers(cert, host)?;
    check_pattern(cert)?;
    check_euler(cert, host)
}

fn check_faces_in_host(
    cert: &HomeomorphCertificate,
    host: &TripartiteHost,
) -> Result<(), Violation> {
    for d in &cert.disks {
        if let Some(f) = d.faces.iter().find(|f| !host.contains(f)) {
            return fail(
                Check::FacesInHost,
                format!("disk {} face {f:?} is not a host face", d.cycle),
            );
        }
    }
    Ok(())
}

fn check_face_count(cert: &HomeomorphCertificate) -> Result<(), Violation> {
    let found: usize = cert.disks.iter().map(|d| d.faces.len()).sum();
    let expected = 12 * cert.target.face_count();
    if found != expected {
        return fail(
            Check::FaceCount,
            format!("{found} faces, expected {expected}"),
        );
    }
    Ok(())
}

fn injective(map: &[usize]) -> Option<(usize, usize)> {
    let mut seen = HashMap::new();
    for (i, &v) in map.iter().enumerate() {
        if let Some(j) = seen.insert(v, i) {
            return Some((j, i));
        }
    }
    None
}

fn check_embedding(cert: &HomeomorphCertificate, host: &TripartiteHost) -> Result<(), Violation> {
    let aux = build_aux_graph(&cert.target);
    let [nx, ny, _] = host.sizes();
    let e = &cert.embedding;
    let (v1, v2) = (&e.v1_map, &e.v2_map);
    if v1.len() != cert.target.vertex_count() {
        let msg = format!(
            "{} V1 images for {} vertices",
            v1.len(),
            cert.target.vertex_count()
        );
        return fail(Check::Embedding, msg);
    }
    if v2.len() != aux.v2.len() {
        let msg = format!("{} V2 images for {} vertices", v2.len(), aux.v2.len());
        return fail(Check::Embedding, msg);
    }
    if let Some((i, &y)) = v1.iter().enumerate().find(|(_, &y)| y >= ny) {
        return fail(
            Check::Embedding,
            format!("V1 vertex {i} -> y{y} out of range"),
        );
    }
    if let Some((i, &x)) = v2.iter().enumerate().find(|(_, &x)| x >= nx) {
        return fail(
            Check::Embedding,
            format!("V2 vertex {i} -> x{x} out of range"),
        );
    }
    if let Some((i, j)) = injective(v1) {
        return fail(
            Check::Embedding,
            format!("V1 vertices {i} and {j} share y{}", v1[i]),
        );
    }
    if let Some((i, j)) = injective(v2) {
        return fail(
            Check::Embedding,
            format!("V2 vertices {i} and {j} share x{}", v2[i]),
        );
    }
    for d in &cert.disks {
        if d.cycle >= aux.special_cycles.len() {
            return fail(
                Check::Embedding,
                format!("disk on unknown cycle {}", d.cycle),
            );
        }
        let image = cycle_image(&aux, v1, v2, d.cycle);
        if d.boundary != image {
            let msg = format!(
                "disk {} boundary {:?} but the embedding gives {image:?}",
                d.cycle, d.boundary
            );
            return fail(Check::Embedding, msg);
        }
    }
    Ok(())
}

fn check_centers(cert: &HomeomorphCertificate, host: &TripartiteHost) -> Result<(), Violation> {
    let centers = &cert.embedding.center_map;
    let cycles = 3 * cert.target.face_count();
    if centers.len() != cycles {
        return fail(
            Check::Centers,
            format!("{} centres for {cycles} cycles", centers.len()),
        );
    }
    let nz = host.sizes()[2];
    if let Some((i, &z)) = centers.iter().enumerate().find(|(_, &z)| z >= nz) {
        return fail(
            Check::Centers,
            format!("cycle {i} centre z{z} out of range"),
        );
    }
    if let Some((i, j)) = injective(centers) {
        return fail(
            Check::Centers,
            format!("cycles {i} and {j} share centre z{}", centers[i]),
        );
    }
    for d in &cert.disks {
        if d.center != centers[d.cycle] {
            let msg = format!(
                "disk {} centre z{} but map says z{}",
                d.cycle, d.center, centers[d.cycle]
            );
            return fail(Check::Centers, msg);
        }
    }
    Ok(())
}

fn check_pattern(cert: &HomeomorphCertificate) -> Result<(), Violation> {
    let aux = build_aux_graph(&cert.target);
    let canon = canonical_glued_subdivision(&cert.target);
    let e = &cert.embedding;
    let mut label: HashMap<(Class, usize), CanonVertex> = HashMap::new();
    for (h, &y) in e.v1_map.iter().enumerate() {
        label.insert((Class::Y, y), CanonVertex::Original(h));
    }
    for (u, &x) in e.v2_map.iter().enumerate() {
        let v = match aux.v2[u] {
            AuxVertex::Pair(p) => CanonVertex::Edge(p),
            AuxVertex::Face(f) => CanonVertex::Face(f),
        };
        label.insert((Class::X, x), v);
    }
    for (cycle, &z) in e.center_map.iter().enumerate() {
        label.insert((Class::Z, z), CanonVertex::Center { cycle });
    }
    let sorted = |mut f: [CanonVertex; 3]| {
        f.sort();
        f
    };

    let mut seen = BTreeSet::new();
    for (face, prov) in cert.provenance() {
        let relabel = |class: Class| {
            label
                .get(&(class, face[class.index()]))
                .copied()
                .ok_or_else(|| Violation {
                    check: Check::Pattern,
                    witness: format!(
                        "face {face:?} of disk {}: {} vertex {} is not in the embedding",
                        prov.cycle,
                        class.name(),
                        face[class.index()]
                    ),
                })
        };
        let got = sorted([relabel(Class::X)?, relabel(Class::Y)?, relabel(Class::Z)?]);
        let want = canon.face(prov.cycle, prov.role).map(|&f| sorted(f));
        if want != Some(got) {
            let msg = format!(
                "face {face:?} (disk {}, role {}) relabels to {got:?}, expected {want:?}",
                prov.cycle, prov.role
            );
            return fail(Check::Pattern, msg);
        }
        if !seen.insert(got) {
            return fail(
                Check::Pattern,
                format!("canonical face {got:?} appears twice"),
            );
        }
    }
    if let Some(missing) = canon
        .faces
        .iter()
        .map(|&f| sorted(f))
        .find(|f| !seen.contains(f))
    {
        return fail(
            Check::Pattern,
            format!("canonical face {missing:?} has no image"),
        );
    }
    Ok(())
}

fn check_euler(cert: &HomeomorphCertificate, host: &TripartiteHost) -> Result<(), Violation> {
    let faces: Vec<HostFace> = cert.host_faces();
    let mut class_vertices: BTreeSet<(Class, usize)> = BTreeSet::new();
    for f in &faces {
        for c in Class::ALL {
            class_vertices.insert((c, f[c.index()]));
        }
    }
    class_vertices.extend(cert.embedding.v1_map.iter().map(|&y| (Class::Y, y)));

    let mut owner: HashMap<usize, (Class, usize)> = HashMap::new();
    for &(c, i) in &class_vertices {
        let label = host.ambient_label(c, i);
        if let Some((c0, i0)) = owner.insert(label, (c, i)) {
            let msg = format!(
                "{}{i0} and {}{i} are the same vertex {label}",
                c0.name(),
                c.name()
            );
            return fail(Check::EulerCharacteristic, msg);
        }
    }

    let ambient = |f: &HostFace| {
        let mut t = [
            host.ambient_label(Class::X, f[0]),
            host.ambient_label(Class::Y, f[1]),
            host.ambient_label(Class::Z, f[2]),
        ];
        t.sort_unstable();
        t
    };
    let mut edges = HashSet::new();
    let mut triangles = HashSet::new();
    for f in &faces {
        let [a, b, c] = ambient(f);
        edges.extend([(a, b), (a, c), (b, c)]);
        triangles.insert([a, b, c]);
    }
    let chi = owner.len() as i64 - edges.len() as i64 + triangles.len() as i64;
    let expected = cert.target.euler_characteristic();
    if chi != expected {
        return fail(
            Check::EulerCharacteristic,
            format!("chi = {chi}, target has {expected}"),
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{builtin, find_homeomorph, Config, ThreeGraph};

    fn solved(target: &ThreeGraph) -> (HomeomorphCertificate, TripartiteHost) {
        let host = TripartiteHost::complete([16, 16, 16]);
        let cert = find_homeomorph(&host, target, &Config::desk_scale(target)).unwrap();
        (cert, host)
    }

    fn failed_check(cert: &HomeomorphCertificate, host: &TripartiteHost) -> Check {
        verify_certificate(cert, host).unwrap_err().check
    }

    #[test]
    fn pipeline_output_passes() {
        for t in [builtin::triangle(), builtin::k4()] {
            let (cert, host) = solved(&t);
            assert_eq!(verify_certificate(&cert, &host), Ok(()));
        }
    }

    #[test]
    fn deleted_face_fails_count() {
        let (mut cert, host) = solved(&builtin::k4());
        cert.disks[5].faces.pop();
        let v = verify_certificate(&cert, &host).unwrap_err();
        assert_eq!(v.check, Check::FaceCount);
        assert!(v.witness.starts_with("47 faces"));
    }

    #[test]
    fn face_outside_host_fails_membership() {
        let (cert, _) = solved(&builtin::triangle());
        let f = cert.disks[0].faces[0];
        let host = TripartiteHost::complete([16, 16, 16]);
        let thinner =
            TripartiteHost::new([16, 16, 16], host.faces().copied().filter(|g| *g != f)).unwrap();
        assert_eq!(failed_check(&cert, &thinner), Check::FacesInHost);
    }

    #[test]
    fn shared_v1_image_fails_embedding() {
        let (mut cert, host) = solved(&builtin::triangle());
        cert.embedding.v1_map[1] = cert.embedding.v1_map[0];
        assert_eq!(failed_check(&cert, &host), Check::Embedding);
    }

    #[test]
    fn equal_centres_fail_centres() {
        let (mut cert, host) = solved(&builtin::triangle());
        cert.embedding.center_map[1] = cert.embedding.center_map[0];
        assert_eq!(failed_check(&cert, &host), Check::Centers);
    }

    #[test]
    fn swapped_roles_fail_pattern() {
        let (mut cert, host) = solved(&builtin::triangle());
        // move one face to another disk, keeping every per-disk count
        let a = cert.disks[0].faces[0];
        let b = cert.disks[1].faces[0];
        cert.disks[0].faces[0] = b;
        cert.disks[1].faces[0] = a;
        assert_eq!(failed_check(&cert, &host), Check::Pattern);
    }
}
