//! Plain-text lattice formats.
//!
//! - Edge list: one `u v` pair per line with `u < v`, sorted.
//! - Face list: one face per line, space-separated 0-based cell indices in
//!   cyclic order. Blank lines and lines starting with `#` are skipped.
//! - Embedding: CSV with header `cell,x,y`.

use std::fmt::Write;

use super::{Lattice, LatticeError};

pub fn edge_list(lattice: &Lattice) -> String {
    let mut out = String::new();
    for (u, v) in lattice.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn format_faces(faces: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for face in faces {
        let line: Vec<String> = face.iter().map(usize::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn parse_faces(text: &str) -> Result<Vec<Vec<usize>>, LatticeError> {
    let mut faces = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let face = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| LatticeError::Parse {
                    line: i + 1,
                    msg: format!("expected a cell index, found {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if face.len() < 3 {
            return Err(LatticeError::Parse { line: i + 1, msg: "a face needs at least 3 cells".into() });
        }
        faces.push(face);
    }
    Ok(faces)
}

/// `None` when the lattice has no planar embedding.
pub fn embedding_csv(lattice: &Lattice) -> Option<String> {
    let emb = lattice.embedding()?;
    let mut out = String::from("cell,x,y\n");
    for (i, [x, y]) in emb.coords.iter().enumerate() {
        writeln!(out, "{i},{x},{y}").unwrap();
    }
    Some(out)
}
