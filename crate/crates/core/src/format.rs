//! Text formats for 3-graphs, 3-partite hosts and certificates.
//!
//! ```text
//! tg 4              tph 2 2 1          cert v1
//! f 0 1 2           f 0 0 0            tg 3
//! f 0 1 3           f 1 1 0            f 0 1 2
//!                                      v1 0 5          # target vertex -> Y
//!                                      v2 0 7          # aux vertex -> X
//!                                      disk 0 5 7 6 9 2
//!                                      hf 7 5 2
//!                                      ...
//! ```
//!
//! Blank lines and anything after `#` are ignored. Certificate indices are
//! class-local in the host. A certificate built over a host obtained from an
//! ordinary 3-graph also carries `part x|y|z <labels>` lines recording the
//! partition.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::complex::{HostFace, ThreeGraph, TripartiteHost};
use crate::embed::{Disk, Embedding, HomeomorphCertificate};
use crate::error::ParseError;

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn numbers<const N: usize>(line: usize, words: &[&str]) -> Result<[usize; N], ParseError> {
    if words.len() != N {
        return Err(ParseError::syntax(
            line,
            format!(
                "expected {N} integers after `{}`",
                words.first().unwrap_or(&"")
            ),
        ));
    }
    let mut out = [0; N];
    for (slot, w) in out.iter_mut().zip(words) {
        *slot = w
            .parse()
            .map_err(|_| ParseError::syntax(line, format!("`{w}` is not an index")))?;
    }
    Ok(out)
}

fn read(path: &Path) -> Result<String, ParseError> {
    fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn parse_three_graph(text: &str) -> Result<ThreeGraph, ParseError> {
    let mut it = lines(text);
    let (line, header) = it
        .next()
        .ok_or_else(|| ParseError::syntax(0, "empty input"))?;
    if header[0] != "tg" {
        return Err(ParseError::syntax(line, "expected `tg <vertex_count>`"));
    }
    let [v] = numbers::<1>(line, &header[1..])?;
    let mut faces = Vec::new();
    let mut last = line;
    for (line, words) in it {
        if words[0] != "f" {
            return Err(ParseError::syntax(
                line,
                format!("unexpected `{}`", words[0]),
            ));
        }
        faces.push(numbers::<3>(line, &words[1..])?);
        last = line;
    }
    ThreeGraph::new(v, faces).map_err(|source| ParseError::Invalid { line: last, source })
}

pub fn write_three_graph(h: &ThreeGraph) -> String {
    let mut out = format!("tg {}\n", h.vertex_count());
    for [a, b, c] in h.faces() {
        writeln!(out, "f {a} {b} {c}").unwrap();
    }
    out
}

pub fn read_three_graph(path: &Path) -> Result<ThreeGraph, ParseError> {
    parse_three_graph(&read(path)?)
}

pub fn parse_host(text: &str) -> Result<TripartiteHost, ParseError> {
    let mut it = lines(text);
    let (line, header) = it
        .next()
        .ok_or_else(|| ParseError::syntax(0, "empty input"))?;
    if header[0] != "tph" {
        return Err(ParseError::syntax(line, "expected `tph <n_x> <n_y> <n_z>`"));
    }
    let sizes = numbers::<3>(line, &header[1..])?;
    let mut faces = Vec::new();
    let mut last = line;
    for (line, words) in it {
        if words[0] != "f" {
            return Err(ParseError::syntax(
                line,
                format!("unexpected `{}`", words[0]),
            ));
        }
        faces.push(numbers::<3>(line, &words[1..])?);
        last = line;
    }
    TripartiteHost::new(sizes, faces).map_err(|source| ParseError::Invalid { line: last, source })
}

pub fn write_host(host: &TripartiteHost) -> String {
    let [nx, ny, nz] = host.sizes();
    let mut out = format!("tph {nx} {ny} {nz}\n");
    for [x, y, z] in host.faces() {
        writeln!(out, "f {x} {y} {z}").unwrap();
    }
    out
}

/// Contents of a host file, which may hold either format.
#[derive(Debug, Clone)]
pub enum HostFile {
    Tripartite(TripartiteHost),
    Plain(ThreeGraph),
}

pub fn parse_host_file(text: &str) -> Result<HostFile, ParseError> {
    match lines(text).next() {
        Some((_, words)) if words[0] == "tg" => parse_three_graph(text).map(HostFile::Plain),
        _ => parse_host(text).map(HostFile::Tripartite),
    }
}

pub fn read_host_file(path: &Path) -> Result<HostFile, ParseError> {
    parse_host_file(&read(path)?)
}

const CLASS_TAGS: [&str; 3] = ["x", "y", "z"];

pub fn write_certificate(cert: &HomeomorphCertificate) -> String {
    let mut out = String::from("cert v1\n");
    out.push_str(&write_three_graph(&cert.target));
    for (h, y) in cert.embedding.v1_map.iter().enumerate() {
        writeln!(out, "v1 {h} {y}").unwrap();
    }
    for (u, x) in cert.embedding.v2_map.iter().enumerate() {
        writeln!(out, "v2 {u} {x}").unwrap();
    }
    if let Some(part) = &cert.partition {
        for (tag, labels) in CLASS_TAGS.iter().zip(part) {
            write!(out, "part {tag}").unwrap();
            for l in labels {
                write!(out, " {l}").unwrap();
            }
            out.push('\n');
        }
    }
    for d in &cert.disks {
        let [a, u, b, w] = d.boundary;
        writeln!(out, "disk {} {a} {u} {b} {w} {}", d.cycle, d.center).unwrap();
        for [x, y, z] in &d.faces {
            writeln!(out, "hf {x} {y} {z}").unwrap();
        }
    }
    out
}

/// Read a certificate back. Only the syntax is checked here; consistency is
/// the verifier's job. Map lines may come in any order but every index must
/// be listed exactly once.
pub fn parse_certificate(text: &str) -> Result<HomeomorphCertificate, ParseError> {
    let mut it = lines(text).peekable();
    match it.next() {
        Some((_, w)) if w == ["cert", "v1"] => {}
        Some((line, _)) => return Err(ParseError::syntax(line, "expected `cert v1`")),
        None => return Err(ParseError::syntax(0, "empty input")),
    }
    let mut target_text = String::new();
    while let Some((_, w)) = it.peek() {
        if w[0] != "tg" && w[0] != "f" {
            break;
        }
        target_text.push_str(&w.join(" "));
        target_text.push('\n');
        it.next();
    }
    let target = parse_three_graph(&target_text)?;

    let mut v1: Vec<Option<usize>> = Vec::new();
    let mut v2: Vec<Option<usize>> = Vec::new();
    let mut part: [Option<Vec<usize>>; 3] = [None, None, None];
    let mut disks: Vec<Disk> = Vec::new();
    for (line, words) in it {
        match words[0] {
            "v1" | "v2" => {
                let [i, image] = numbers::<2>(line, &words[1..])?;
                let map = if words[0] == "v1" { &mut v1 } else { &mut v2 };
                if map.len() <= i {
                    map.resize(i + 1, None);
                }
                if map[i].replace(image).is_some() {
                    return Err(ParseError::syntax(
                        line,
                        format!("{} {i} listed twice", words[0]),
                    ));
                }
            }
            "part" => {
                let class = words
                    .get(1)
                    .and_then(|t| CLASS_TAGS.iter().position(|c| c == t))
                    .ok_or_else(|| ParseError::syntax(line, "expected `part x|y|z ...`"))?;
                let labels = words[2..]
                    .iter()
                    .map(|w| w.parse())
                    .collect::<Result<Vec<usize>, _>>()
                    .map_err(|_| ParseError::syntax(line, "bad vertex label"))?;
                part[class] = Some(labels);
            }
            "disk" => {
                let [cycle, a, u, b, w, center] = numbers::<6>(line, &words[1..])?;
                disks.push(Disk {
                    cycle,
                    boundary: [a, u, b, w],
                    center,
                    faces: Vec::new(),
                });
            }
            "hf" => {
                let face: HostFace = numbers::<3>(line, &words[1..])?;
                disks
                    .last_mut()
                    .ok_or_else(|| ParseError::syntax(line, "`hf` before any `disk`"))?
                    .faces
                    .push(face);
            }
            other => return Err(ParseError::syntax(line, format!("unexpected `{other}`"))),
        }
    }

    let complete = |map: Vec<Option<usize>>, tag: &str| {
        map.into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| ParseError::syntax(0, format!("{tag} {i} missing"))))
            .collect::<Result<Vec<_>, _>>()
    };
    let partition = match part {
        [Some(x), Some(y), Some(z)] => Some([x, y, z]),
        [None, None, None] => None,
        _ => return Err(ParseError::syntax(0, "partial `part` block")),
    };
    let embedding = Embedding {
        v1_map: complete(v1, "v1")?,
        v2_map: complete(v2, "v2")?,
        center_map: disks.iter().map(|d| d.center).collect(),
    };
    Ok(HomeomorphCertificate {
        target,
        embedding,
        disks,
        partition,
    })
}

pub fn read_certificate(path: &Path) -> Result<HomeomorphCertificate, ParseError> {
    parse_certificate(&read(path)?)
}
