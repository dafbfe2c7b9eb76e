//! State files: a header line `q k V generation`, then one digit row per
//! grid row for grid lattices, or one digit per line otherwise.

use super::{CaState, EngineError};
use crate::lattice::Lattice;

pub fn save_state(state: &CaState, lattice: &Lattice) -> String {
    let mut out = format!("{} {} {} {}\n", state.q, lattice.valence(), state.cells.len(), state.generation);
    let digit = |c: &u8| char::from(b'0' + c);
    match lattice.grid() {
        Some((w, _)) if state.cells.len() == lattice.cell_count() => {
            for row in state.cells.chunks(w) {
                out.extend(row.iter().map(digit));
                out.push('\n');
            }
        }
        _ => {
            for c in &state.cells {
                out.push(digit(c));
                out.push('\n');
            }
        }
    }
    out
}

fn parse_err(line: usize, msg: impl Into<String>) -> EngineError {
    EngineError::Parse { line, msg: msg.into() }
}

/// Reads a state file and checks it against `lattice`.
pub fn load_state(text: &str, lattice: &Lattice) -> Result<CaState, EngineError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `q k V generation`"))?;
    let fields: Vec<u64> = header
        .split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| parse_err(1, format!("header field {t:?} is not an integer"))))
        .collect::<Result<_, _>>()?;
    let [q, k, v, generation] = fields[..] else {
        return Err(parse_err(1, "header needs exactly `q k V generation`"));
    };
    let q = u8::try_from(q).map_err(|_| EngineError::BadAlphabet(u8::MAX))?;
    if k != lattice.valence() as u64 {
        return Err(EngineError::Valence { rule: k as u32, lattice: lattice.valence() });
    }
    if v != lattice.cell_count() as u64 {
        return Err(EngineError::Length { state: v as usize, lattice: lattice.cell_count() });
    }
    let mut cells = Vec::with_capacity(v as usize);
    for (i, line) in lines {
        for ch in line.trim().chars() {
            let d = ch.to_digit(10).ok_or_else(|| parse_err(i + 1, format!("expected a digit, found {ch:?}")))?;
            if d >= u32::from(q) {
                return Err(parse_err(i + 1, format!("digit {d} is not below q={q}")));
            }
            cells.push(d as u8);
        }
    }
    if cells.len() as u64 != v {
        return Err(EngineError::Length { state: cells.len(), lattice: v as usize });
    }
    Ok(CaState::new(q, cells)?.with_generation(generation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_c60, build_moore, Surface};

    #[test]
    fn grid_round_trip() {
        let l = build_moore(Surface::Torus, (5, 3)).unwrap();
        let s = CaState::random(2, 15, 4).unwrap().with_generation(17);
        let text = save_state(&s, &l);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "2 8 15 17");
        assert_eq!(lines.len(), 4);
        assert!(lines[1..].iter().all(|r| r.len() == 5));
        assert_eq!(load_state(&text, &l).unwrap(), s);
    }

    #[test]
    fn general_round_trip() {
        let l = build_c60();
        let s = CaState::random(3, 60, 1).unwrap();
        let text = save_state(&s, &l);
        assert_eq!(text.lines().count(), 61);
        assert_eq!(load_state(&text, &l).unwrap(), s);
    }

    #[test]
    fn load_errors() {
        let l = build_moore(Surface::Torus, (3, 3)).unwrap();
        assert!(matches!(load_state("", &l), Err(EngineError::Parse { line: 1, .. })));
        assert!(matches!(load_state("2 8 9", &l), Err(EngineError::Parse { line: 1, .. })));
        assert!(matches!(load_state("2 4 9 0\n", &l), Err(EngineError::Valence { .. })));
        assert!(matches!(load_state("2 8 9 0\n000\n0x0\n000\n", &l), Err(EngineError::Parse { line: 3, .. })));
        assert!(matches!(load_state("2 8 9 0\n000\n020\n000\n", &l), Err(EngineError::Parse { line: 3, .. })));
        assert!(matches!(load_state("2 8 9 0\n000\n000\n", &l), Err(EngineError::Length { .. })));
    }
}
