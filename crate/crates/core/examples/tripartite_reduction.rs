//! Split a random 3-graph into three balanced classes keeping at least 2/9
//! of its faces.

use homeomorph::reduce::{required_faces, tripartite_reduce};
use homeomorph::seed::rng_from_seed;
use homeomorph::ThreeGraph;
use rand::Rng;

fn main() {
    let mut rng = rng_from_seed(2024);
    let v = 20;
    let mut faces = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                if rng.gen_bool(0.3) {
                    faces.push([a, b, c]);
                }
            }
        }
    }
    let g = ThreeGraph::new(v, faces).unwrap();
    let r = tripartite_reduce(&g, 1, 32).unwrap();
    let origin = r.host.origin().unwrap();
    println!(
        "source: {} vertices, {} faces",
        g.vertex_count(),
        g.face_count()
    );
    println!("classes of size {:?}", r.host.sizes());
    for (name, class) in ["X", "Y", "Z"].iter().zip(origin) {
        println!("  {name} = {class:?}");
    }
    println!(
        "kept {} crossing faces (need {}), attempts {}",
        r.host.face_count(),
        required_faces(g.face_count()),
        r.attempts
    );
}
