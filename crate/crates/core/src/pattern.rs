//! Run-length-encoded Life patterns and plain text grids.
//!
//! Pattern coordinates are `(x, y)` with `y` growing downward, matching the
//! row-major cell order of the grid lattices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use thiserror::Error;

use crate::engine::{CaState, EngineError};
use crate::lattice::Lattice;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("line {line}: {msg}")]
    Rle { line: usize, msg: String },
    #[error("cell ({x}, {y}) lies outside the declared {width}x{height} box")]
    OutOfBounds { x: usize, y: usize, width: usize, height: usize },
    #[error("lattice has no grid layout")]
    NotGrid,
    #[error("pattern of {pw}x{ph} does not fit a {w}x{h} grid")]
    TooLarge { pw: usize, ph: usize, w: usize, h: usize },
    #[error("grid line {line}: {msg}")]
    Grid { line: usize, msg: String },
    #[error(transparent)]
    State(#[from] EngineError),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PatternDocument {
    pub width: usize,
    pub height: usize,
    pub live: BTreeSet<(usize, usize)>,
}

impl PatternDocument {
    pub fn new(
        width: usize,
        height: usize,
        live: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, PatternError> {
        let live: BTreeSet<_> = live.into_iter().collect();
        if let Some(&(x, y)) = live.iter().find(|&&(x, y)| x >= width || y >= height) {
            return Err(PatternError::OutOfBounds { x, y, width, height });
        }
        Ok(PatternDocument { width, height, live })
    }

    pub fn len(&self) -> usize {
        self.live.len()
    }

    pub fn is_empty(&self) -> bool {
        self.live.is_empty()
    }
}

fn rle_err(line: usize, msg: impl Into<String>) -> PatternError {
    PatternError::Rle { line, msg: msg.into() }
}

fn parse_header(line: &str, n: usize) -> Result<(usize, usize), PatternError> {
    let mut dims = (None, None);
    for field in line.split(',') {
        let Some((key, value)) = field.split_once('=') else {
            return Err(rle_err(n, format!("header field {:?} lacks '='", field.trim())));
        };
        let parse = || value.trim().parse::<usize>().map_err(|_| rle_err(n, format!("bad size {:?}", value.trim())));
        match key.trim() {
            "x" => dims.0 = Some(parse()?),
            "y" => dims.1 = Some(parse()?),
            _ => {}
        }
    }
    match dims {
        (Some(w), Some(h)) => Ok((w, h)),
        _ => Err(rle_err(n, "header needs both x and y")),
    }
}

/// Parses the standard run-length pattern format: optional `#` comment
/// lines, an optional `x = W, y = H` header, then runs of `b` (dead),
/// `o` (alive) and `$` (end of row), terminated by `!`.
pub fn import_rle(text: &str) -> Result<PatternDocument, PatternError> {
    let mut declared = None;
    let mut live = BTreeSet::new();
    let (mut x, mut y) = (0usize, 0usize);
    let (mut max_x, mut max_y) = (0usize, 0usize);
    let mut run: Option<usize> = None;
    'lines: for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        let trimmed = line.trim();
        if trimmed.starts_with('#') || trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('x') && declared.is_none() && live.is_empty() && (x, y) == (0, 0) {
            declared = Some(parse_header(trimmed, n)?);
            continue;
        }
        for ch in trimmed.chars() {
            match ch {
                '0'..='9' => {
                    let d = ch as usize - '0' as usize;
                    run = Some(
                        run.unwrap_or(0)
                            .checked_mul(10)
                            .and_then(|r| r.checked_add(d))
                            .ok_or_else(|| rle_err(n, "run count overflows"))?,
                    );
                }
                'b' | 'o' => {
                    let count = run.take().unwrap_or(1);
                    if count == 0 {
                        return Err(rle_err(n, "run count of zero"));
                    }
                    if ch == 'o' {
                        for dx in 0..count {
                            live.insert((x + dx, y));
                        }
                        max_x = max_x.max(x + count);
                        max_y = max_y.max(y + 1);
                    }
                    x += count;
                }
                '$' => {
                    y += run.take().unwrap_or(1);
                    x = 0;
                }
                '!' => {
                    if run.is_some() {
                        return Err(rle_err(n, "run count before '!'"));
                    }
                    break 'lines;
                }
                c if c.is_whitespace() => {}
                c => return Err(rle_err(n, format!("unexpected {c:?} in pattern body"))),
            }
        }
        if run.is_some() {
            return Err(rle_err(n, "run count at end of line without a tag"));
        }
    }
    if run.is_some() {
        return Err(rle_err(text.lines().count(), "dangling run count"));
    }
    let (width, height) = declared.unwrap_or((max_x, max_y));
    PatternDocument::new(width, height, live)
}

/// Writes `doc` as RLE with a header, lines wrapped at 70 characters.
pub fn export_rle(doc: &PatternDocument) -> String {
    let mut tokens: Vec<String> = Vec::new();
    let push = |tokens: &mut Vec<String>, count: usize, tag: char| {
        tokens.push(if count == 1 { tag.to_string() } else { format!("{count}{tag}") });
    };
    let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(x, y) in &doc.live {
        rows.entry(y).or_default().push(x);
    }
    let mut prev_y = 0;
    for (y, mut row) in rows {
        if y > prev_y {
            push(&mut tokens, y - prev_y, '$');
        }
        prev_y = y;
        row.sort_unstable();
        let mut x = 0;
        let mut i = 0;
        while i < row.len() {
            let start = row[i];
            let mut end = start + 1;
            while i + 1 < row.len() && row[i + 1] == end {
                end += 1;
                i += 1;
            }
            if start > x {
                push(&mut tokens, start - x, 'b');
            }
            push(&mut tokens, end - start, 'o');
            x = end;
            i += 1;
        }
    }
    tokens.push("!".into());
    let mut out = format!("x = {}, y = {}\n", doc.width, doc.height);
    let mut line = String::new();
    for t in tokens {
        if line.len() + t.len() > 70 {
            out.push_str(&line);
            out.push('\n');
            line.clear();
        }
        line.push_str(&t);
    }
    out.push_str(&line);
    out.push('\n');
    out
}

/// Copies `state` with the pattern's live cells set to 1, shifted by
/// `offset` and wrapped around the grid.
pub fn place(
    doc: &PatternDocument,
    lattice: &Lattice,
    state: &CaState,
    offset: (usize, usize),
) -> Result<CaState, PatternError> {
    let (w, h) = lattice.grid().ok_or(PatternError::NotGrid)?;
    if doc.width > w || doc.height > h {
        return Err(PatternError::TooLarge { pw: doc.width, ph: doc.height, w, h });
    }
    let mut out = state.clone();
    for &(x, y) in &doc.live {
        out.set(((y + offset.1) % h) * w + (x + offset.0) % w, 1)?;
    }
    Ok(out)
}

/// `h` lines of `w` characters for grid lattices: `.`/`#` when `q = 2`,
/// digits otherwise. Other lattices get one `cell:value` line per cell.
pub fn render_grid(state: &CaState, lattice: &Lattice) -> String {
    let mut out = String::new();
    match lattice.grid() {
        Some((w, _)) if state.len() == lattice.cell_count() => {
            for row in state.cells().chunks(w) {
                for &c in row {
                    out.push(match (state.q(), c) {
                        (2, 0) => '.',
                        (2, _) => '#',
                        _ => char::from(b'0' + c),
                    });
                }
                out.push('\n');
            }
        }
        _ => {
            for (i, c) in state.cells().iter().enumerate() {
                writeln!(out, "{i}:{c}").unwrap();
            }
        }
    }
    out
}

/// Inverse of [`render_grid`] for grids: returns `(width, height, state)`.
/// `.` reads as 0, `#` as 1, digits as themselves.
pub fn parse_grid(text: &str, q: u8) -> Result<(usize, usize, CaState), PatternError> {
    let mut cells = Vec::new();
    let mut width = None;
    let mut height = 0;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        let before = cells.len();
        for ch in line.chars() {
            cells.push(match ch {
                '.' => 0,
                '#' => 1,
                d if d.is_ascii_digit() => d as u8 - b'0',
                other => return Err(PatternError::Grid { line: i + 1, msg: format!("unexpected {other:?}") }),
            });
        }
        let len = cells.len() - before;
        if *width.get_or_insert(len) != len {
            return Err(PatternError::Grid { line: i + 1, msg: "ragged row".into() });
        }
        height += 1;
    }
    Ok((width.unwrap_or(0), height, CaState::new(q, cells)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_c60, build_moore, Surface};

    const GLIDER: &str = "x = 3, y = 3\nbob$2bo$3o!";

    #[test]
    fn decodes_examples() {
        let g = import_rle(GLIDER).unwrap();
        assert_eq!((g.width, g.height, g.len()), (3, 3, 5));
        assert_eq!(g.live, BTreeSet::from([(1, 0), (2, 1), (0, 2), (1, 2), (2, 2)]));
        assert!(import_rle("!").unwrap().is_empty());
        let block = import_rle("2o$2o!").unwrap();
        assert_eq!((block.width, block.height, block.len()), (2, 2, 4));
    }

    #[test]
    fn comments_rules_and_blank_rows() {
        let doc = import_rle("#N test\n#C comment\nx = 4, y = 4, rule = B3/S23\no2$3bo!\ntrailing junk").unwrap();
        assert_eq!(doc.live, BTreeSet::from([(0, 0), (3, 2)]));
    }

    #[test]
    fn rle_errors() {
        assert!(matches!(import_rle("x = 2, y = 2\n3o!"), Err(PatternError::OutOfBounds { x: 2, .. })));
        assert!(matches!(import_rle("2q!"), Err(PatternError::Rle { line: 1, .. })));
        assert!(matches!(import_rle("o3!"), Err(PatternError::Rle { .. })));
        assert!(matches!(import_rle("x = 3\no!"), Err(PatternError::Rle { .. })));
        assert!(matches!(import_rle("0o!"), Err(PatternError::Rle { .. })));
    }

    #[test]
    fn export_round_trips() {
        for text in [GLIDER, "!", "2o$2o!", "x = 10, y = 6\n3o4bo$$2$bo!"] {
            let doc = import_rle(text).unwrap();
            assert_eq!(import_rle(&export_rle(&doc)).unwrap(), doc, "{text}");
        }
        assert_eq!(export_rle(&import_rle(GLIDER).unwrap()), "x = 3, y = 3\nbo$2bo$3o!\n");
    }

    #[test]
    fn long_rows_wrap() {
        let doc = PatternDocument::new(200, 1, (0..200).step_by(2).map(|x| (x, 0))).unwrap();
        let text = export_rle(&doc);
        assert!(text.lines().all(|l| l.len() <= 70));
        assert_eq!(import_rle(&text).unwrap(), doc);
    }

    #[test]
    fn placement_wraps() {
        let l = build_moore(Surface::Torus, (5, 5)).unwrap();
        let s = CaState::zeros(2, 25).unwrap();
        let placed = place(&import_rle("2o$2o!").unwrap(), &l, &s, (4, 4)).unwrap();
        assert_eq!(placed.live_cells().collect::<Vec<_>>(), vec![0, 4, 20, 24]);
        assert!(matches!(place(&import_rle("6o!").unwrap(), &l, &s, (0, 0)), Err(PatternError::TooLarge { .. })));
        let c60 = build_c60();
        assert!(matches!(
            place(&import_rle("o!").unwrap(), &c60, &CaState::zeros(2, 60).unwrap(), (0, 0)),
            Err(PatternError::NotGrid)
        ));
    }

    #[test]
    fn render_examples() {
        let l = build_moore(Surface::Torus, (3, 3)).unwrap();
        assert_eq!(render_grid(&CaState::zeros(2, 9).unwrap(), &l), "...\n...\n...\n");
        let l5 = build_moore(Surface::Torus, (5, 5)).unwrap();
        let blinker = place(&import_rle("3o!").unwrap(), &l5, &CaState::zeros(2, 25).unwrap(), (1, 2)).unwrap();
        let text = render_grid(&blinker, &l5);
        let hashes: Vec<usize> = text.lines().map(|r| r.matches('#').count()).collect();
        assert_eq!(hashes, vec![0, 0, 3, 0, 0]);
        let (w, h, back) = parse_grid(&text, 2).unwrap();
        assert_eq!((w, h), (5, 5));
        assert_eq!(render_grid(&back, &l5), text);
        let t = CaState::random(3, 9, 2).unwrap();
        let text3 = render_grid(&t, &l);
        assert_eq!(parse_grid(&text3, 3).unwrap().2, t);
        let c60 = build_c60();
        assert!(render_grid(&CaState::zeros(2, 60).unwrap(), &c60).starts_with("0:0\n1:0\n"));
    }

    #[test]
    fn grid_parse_errors() {
        assert!(matches!(parse_grid("..\n...\n", 2), Err(PatternError::Grid { line: 2, .. })));
        assert!(matches!(parse_grid(".x\n", 2), Err(PatternError::Grid { line: 1, .. })));
        assert!(parse_grid("2.\n", 2).is_err());
    }
}
