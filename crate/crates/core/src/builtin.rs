//! Named targets.

use std::path::Path;

use crate::complex::ThreeGraph;
use crate::error::ParseError;
use crate::format;

const TORUS7: &str = include_str!("../data/torus7.tg");

pub const NAMES: [&str; 3] = ["triangle", "k4", "torus7"];

/// A single face.
pub fn triangle() -> ThreeGraph {
    ThreeGraph::new(3, [[0, 1, 2]]).expect("valid face")
}

/// All four faces on four vertices: the boundary of a tetrahedron.
pub fn k4() -> ThreeGraph {
    ThreeGraph::complete(4)
}

/// The 7-vertex triangulation of the torus.
pub fn torus7() -> ThreeGraph {
    format::parse_three_graph(TORUS7).expect("bundled torus7 parses")
}

pub fn by_name(name: &str) -> Result<ThreeGraph, ParseError> {
    match name {
        "triangle" => Ok(triangle()),
        "k4" => Ok(k4()),
        "torus7" => Ok(torus7()),
        other => Err(ParseError::UnknownBuiltin(other.to_string())),
    }
}

/// `builtin:NAME` or a path to a `tg` file.
pub fn resolve(spec: &str) -> Result<ThreeGraph, ParseError> {
    match spec.strip_prefix("builtin:") {
        Some(name) => by_name(name),
        None => format::read_three_graph(Path::new(spec)),
    }
}
