//! Shape statistics of the built-in targets and their two subdivisions.

use homeomorph::verify::canonical_glued_subdivision;
use homeomorph::{build_aux_graph, build_triple_subdivision, builtin};

fn main() {
    println!(
        "{:<9} {:>2} {:>3} {:>5} {:>3}  {:>12}  {:>14}  {:>14}",
        "target", "v", "e", "pairs", "chi", "aux v1/v2/E", "subdivision", "glued"
    );
    for name in builtin::NAMES {
        let h = builtin::by_name(name).unwrap();
        let aux = build_aux_graph(&h);
        let sub = build_triple_subdivision(&h);
        let glued = canonical_glued_subdivision(&h).complex();
        println!(
            "{:<9} {:>2} {:>3} {:>5} {:>3}  {:>12}  {:>14}  {:>14}",
            name,
            h.vertex_count(),
            h.face_count(),
            h.covered_pairs().len(),
            h.euler_characteristic(),
            format!("{}/{}/{}", aux.v1.len(), aux.v2.len(), aux.edges.len()),
            format!(
                "{}v {}f chi {}",
                sub.underlying.vertex_count(),
                sub.underlying.face_count(),
                sub.underlying.euler_characteristic()
            ),
            format!(
                "{}v {}f chi {}",
                glued.vertex_count(),
                glued.face_count(),
                glued.euler_characteristic()
            ),
        );
        assert!(sub.is_properly_colored());
    }

    let t = builtin::triangle();
    println!("\nspecial cycles of the single face:");
    for c in build_aux_graph(&t).special_cycles {
        println!(
            "  {} - u{:?} - {} - u{:?}",
            c.a,
            (c.a.min(c.b), c.a.max(c.b)),
            c.b,
            c.face
        );
    }
}
