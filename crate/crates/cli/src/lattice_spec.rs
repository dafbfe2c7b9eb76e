//! `--lattice` specifications: everything [`build_from_spec`] accepts, plus
//! `fullerene:FILE` for a face list read from disk.

use std::fs;

use anyhow::{anyhow, Context, Result};
use symca::lattice::{build_from_spec, build_fullerene, io};
use symca::Lattice;

pub const DEFAULT_DIMS: (usize, usize) = (16, 16);
pub const DEFAULT_LAYERS: u32 = 3;

pub fn parse_dims(text: &str) -> Result<(usize, usize)> {
    let (w, h) =
        text.split_once(['x', 'X', ',']).ok_or_else(|| anyhow!("dimensions must look like WxH, got {text:?}"))?;
    Ok((w.trim().parse().context("width")?, h.trim().parse().context("height")?))
}

pub fn build(spec: &str, dims: Option<(usize, usize)>, layers: Option<u32>) -> Result<Lattice> {
    if let Some(path) = spec.strip_prefix("fullerene:") {
        let text = fs::read_to_string(path).with_context(|| format!("reading face list {path:?}"))?;
        return Ok(build_fullerene(io::parse_faces(&text)?)?);
    }
    let lattice = build_from_spec(spec, dims.unwrap_or(DEFAULT_DIMS), layers.unwrap_or(DEFAULT_LAYERS))
        .map_err(|e| anyhow!("{e}; fullerene:FILE is also accepted"))?;
    Ok(lattice)
}
