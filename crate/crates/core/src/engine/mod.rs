//! Synchronous evolution of cell states on a [`Lattice`].
//!
//! Every step reads the old buffer and writes a fresh one. Boundary cells of
//! a lattice keep their initial values. Binary rules go through a
//! bit-sliced path by default; [`Backend::Generic`] forces the plain
//! per-cell lookup that works for every alphabet.

mod packed;
mod state_io;

use std::collections::HashMap;
use std::fmt::Write;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::lattice::Lattice;
use crate::rule::SymmetricRule;

pub use state_io::{load_state, save_state};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("rule has k={rule} but the lattice has valence {lattice}")]
    Valence { rule: u32, lattice: usize },
    #[error("rule alphabet q={rule} does not match state alphabet q={state}")]
    Alphabet { rule: u8, state: u8 },
    #[error("state has {state} cells but the lattice has {lattice}")]
    Length { state: usize, lattice: usize },
    #[error("cell {cell} holds {value}, not below q={q}")]
    Digit { cell: usize, value: u8, q: u8 },
    #[error("operation needs a binary state, got q={0}")]
    NotBinary(u8),
    #[error("alphabet size must be in 2..=10, got {0}")]
    BadAlphabet(u8),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A configuration: one digit below `q` per lattice cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaState {
    q: u8,
    cells: Vec<u8>,
    generation: u64,
}

impl CaState {
    pub fn new(q: u8, cells: Vec<u8>) -> Result<Self, EngineError> {
        if !(2..=10).contains(&q) {
            return Err(EngineError::BadAlphabet(q));
        }
        if let Some((cell, &value)) = cells.iter().enumerate().find(|(_, &v)| v >= q) {
            return Err(EngineError::Digit { cell, value, q });
        }
        Ok(CaState { q, cells, generation: 0 })
    }

    pub fn zeros(q: u8, len: usize) -> Result<Self, EngineError> {
        Self::new(q, vec![0; len])
    }

    /// Uniform random digits from ChaCha8 seeded with `seed`; cell `i` takes
    /// the `i`-th draw of `random_range(0..q)`.
    pub fn random(q: u8, len: usize, seed: u64) -> Result<Self, EngineError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::new(q, (0..len).map(|_| rng.random_range(0..q)).collect())
    }

    /// Binary state where each cell is live with probability `density`.
    pub fn random_binary(len: usize, density: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cells = (0..len).map(|_| u8::from(rng.random_bool(density.clamp(0.0, 1.0)))).collect();
        CaState { q: 2, cells, generation: 0 }
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn get(&self, cell: usize) -> u8 {
        self.cells[cell]
    }

    pub fn set(&mut self, cell: usize, value: u8) -> Result<(), EngineError> {
        if value >= self.q {
            return Err(EngineError::Digit { cell, value, q: self.q });
        }
        self.cells[cell] = value;
        Ok(())
    }

    pub fn generation(&self) -> u64 {
        self.generation
    }

    pub fn with_generation(mut self, generation: u64) -> Self {
        self.generation = generation;
        self
    }

    /// Number of cells in each state.
    pub fn census(&self) -> Vec<u64> {
        let mut out = vec![0u64; usize::from(self.q)];
        for &c in &self.cells {
            out[usize::from(c)] += 1;
        }
        out
    }

    /// Census over the interior cells of `lattice` only.
    pub fn census_interior(&self, lattice: &Lattice) -> Vec<u64> {
        let mut out = vec![0u64; usize::from(self.q)];
        for cell in lattice.interior_cells() {
            out[usize::from(self.cells[cell])] += 1;
        }
        out
    }

    pub fn live_cells(&self) -> impl Iterator<Item = usize> + '_ {
        self.cells.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i)
    }
}

/// Every cell flipped, boundary included.
pub fn complement(state: &CaState) -> Result<CaState, EngineError> {
    if state.q != 2 {
        return Err(EngineError::NotBinary(state.q));
    }
    Ok(CaState { q: 2, cells: state.cells.iter().map(|&c| 1 - c).collect(), generation: state.generation })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backend {
    /// Bit-sliced for binary rules, generic otherwise.
    #[default]
    Auto,
    Generic,
    /// Bit-sliced; fails on non-binary rules.
    Packed,
}

fn check(lattice: &Lattice, rule: &SymmetricRule, state: &CaState) -> Result<(), EngineError> {
    if rule.k() as usize != lattice.valence() {
        return Err(EngineError::Valence { rule: rule.k(), lattice: lattice.valence() });
    }
    if rule.q() != state.q {
        return Err(EngineError::Alphabet { rule: rule.q(), state: state.q });
    }
    if state.cells.len() != lattice.cell_count() {
        return Err(EngineError::Length { state: state.cells.len(), lattice: lattice.cell_count() });
    }
    Ok(())
}

pub fn step(lattice: &Lattice, rule: &SymmetricRule, state: &CaState) -> Result<CaState, EngineError> {
    step_with(lattice, rule, state, Backend::Auto)
}

pub fn step_with(
    lattice: &Lattice,
    rule: &SymmetricRule,
    state: &CaState,
    backend: Backend,
) -> Result<CaState, EngineError> {
    check(lattice, rule, state)?;
    let cells = match backend {
        Backend::Auto if rule.q() == 2 => packed::step(lattice, rule, &state.cells),
        Backend::Packed => {
            if rule.q() != 2 {
                return Err(EngineError::NotBinary(rule.q()));
            }
            packed::step(lattice, rule, &state.cells)
        }
        Backend::Auto | Backend::Generic => generic_step(lattice, rule, &state.cells),
    };
    Ok(CaState { q: state.q, cells, generation: state.generation + 1 })
}

fn generic_cell(lattice: &Lattice, rule: &SymmetricRule, old: &[u8], cell: usize, counts: &mut [u32]) -> u8 {
    if lattice.is_boundary(cell) {
        return old[cell];
    }
    counts.iter_mut().for_each(|c| *c = 0);
    for &n in lattice.neighbors(cell) {
        counts[usize::from(old[n])] += 1;
    }
    rule.lookup_counts(counts, old[cell])
}

fn generic_step(lattice: &Lattice, rule: &SymmetricRule, old: &[u8]) -> Vec<u8> {
    let q = usize::from(rule.q());
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..old.len())
            .into_par_iter()
            .map_init(|| vec![0u32; q], |counts, cell| generic_cell(lattice, rule, old, cell, counts))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut counts = vec![0u32; q];
        (0..old.len()).map(|cell| generic_cell(lattice, rule, old, cell, &mut counts)).collect()
    }
}

/// Per-generation state counts. Row `t` is the census of generation
/// `start + t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub start: u64,
    pub interior_only: bool,
    pub rows: Vec<Vec<u64>>,
}

impl Census {
    /// CSV with header `generation,s0,s1,…`.
    pub fn to_csv(&self) -> String {
        let q = self.rows.first().map_or(0, Vec::len);
        let mut out = String::from("generation");
        for s in 0..q {
            write!(out, ",s{s}").unwrap();
        }
        out.push('\n');
        for (t, row) in self.rows.iter().enumerate() {
            write!(out, "{}", self.start + t as u64).unwrap();
            for c in row {
                write!(out, ",{c}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub backend: Backend,
    pub interior_only: bool,
}

/// `n` steps. The census has `n + 1` rows, the initial state included.
pub fn run(lattice: &Lattice, rule: &SymmetricRule, state: &CaState, n: u64) -> Result<(CaState, Census), EngineError> {
    run_with(lattice, rule, state, n, RunOptions::default())
}

pub fn run_with(
    lattice: &Lattice,
    rule: &SymmetricRule,
    state: &CaState,
    n: u64,
    opts: RunOptions,
) -> Result<(CaState, Census), EngineError> {
    check(lattice, rule, state)?;
    let census_of = |s: &CaState| if opts.interior_only { s.census_interior(lattice) } else { s.census() };
    let mut rows = vec![census_of(state)];
    let mut cur = state.clone();
    for _ in 0..n {
        cur = step_with(lattice, rule, &cur, opts.backend)?;
        rows.push(census_of(&cur));
    }
    Ok((cur, Census { start: state.generation, interior_only: opts.interior_only, rows }))
}

/// The orbit of a state enters a cycle after `transient` steps and repeats
/// every `period` steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cycle {
    pub transient: u64,
    pub period: u64,
}

/// Steps up to `max_steps` times and reports the first repeated
/// configuration, or `None` if generations `0..=max_steps` are all distinct.
pub fn detect_cycle(
    lattice: &Lattice,
    rule: &SymmetricRule,
    state: &CaState,
    max_steps: u64,
) -> Result<Option<Cycle>, EngineError> {
    check(lattice, rule, state)?;
    let mut seen: HashMap<Vec<u8>, u64> = HashMap::new();
    let mut cur = state.clone();
    seen.insert(cur.cells.clone(), 0);
    for t in 1..=max_steps {
        cur = step(lattice, rule, &cur)?;
        if let Some(&first) = seen.get(&cur.cells) {
            return Ok(Some(Cycle { transient: first, period: t - first }));
        }
        seen.insert(cur.cells.clone(), t);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_moore, Surface};
    use crate::rule::BsRule;

    fn conway() -> SymmetricRule {
        BsRule::parse("B3/S23", 8).unwrap().to_rule()
    }

    fn torus(n: usize) -> Lattice {
        build_moore(Surface::Torus, (n, n)).unwrap()
    }

    fn with_live(n: usize, live: &[(usize, usize)]) -> CaState {
        let mut s = CaState::zeros(2, n * n).unwrap();
        for &(x, y) in live {
            s.set(y * n + x, 1).unwrap();
        }
        s
    }

    #[test]
    fn empty_stays_empty() {
        let l = torus(5);
        let s = CaState::zeros(2, 25).unwrap();
        let next = step(&l, &conway(), &s).unwrap();
        assert_eq!(next.cells(), s.cells());
        assert_eq!(next.generation(), 1);
        assert_eq!(detect_cycle(&l, &conway(), &s, 3).unwrap(), Some(Cycle { transient: 0, period: 1 }));
    }

    #[test]
    fn blinker_and_block() {
        let l = torus(6);
        let blinker = with_live(6, &[(1, 2), (2, 2), (3, 2)]);
        let (after, census) = run(&l, &conway(), &blinker, 2).unwrap();
        assert_eq!(after.cells(), blinker.cells());
        assert_eq!(census.rows, vec![vec![33, 3]; 3]);
        assert_eq!(detect_cycle(&l, &conway(), &blinker, 10).unwrap(), Some(Cycle { transient: 0, period: 2 }));
        let block = with_live(6, &[(1, 1), (2, 1), (1, 2), (2, 2)]);
        assert_eq!(detect_cycle(&l, &conway(), &block, 10).unwrap(), Some(Cycle { transient: 0, period: 1 }));
    }

    #[test]
    fn cycle_not_found_within_budget() {
        let l = torus(6);
        let blinker = with_live(6, &[(1, 2), (2, 2), (3, 2)]);
        assert_eq!(detect_cycle(&l, &conway(), &blinker, 1).unwrap(), None);
    }

    #[test]
    fn transient_before_cycle() {
        // a lone cell dies, then the empty state repeats
        let l = torus(5);
        let s = with_live(5, &[(2, 2)]);
        assert_eq!(detect_cycle(&l, &conway(), &s, 5).unwrap(), Some(Cycle { transient: 1, period: 1 }));
    }

    #[test]
    fn zero_steps_is_identity() {
        let l = torus(5);
        let s = CaState::random(2, 25, 3).unwrap();
        let (out, census) = run(&l, &conway(), &s, 0).unwrap();
        assert_eq!(out, s);
        assert_eq!(census.rows.len(), 1);
        assert_eq!(census.to_csv().lines().next(), Some("generation,s0,s1"));
    }

    #[test]
    fn errors() {
        let l = torus(5);
        let s = CaState::zeros(2, 25).unwrap();
        let hex_rule = BsRule::parse("B2/S", 3).unwrap().to_rule();
        assert!(matches!(step(&l, &hex_rule, &s), Err(EngineError::Valence { rule: 3, lattice: 8 })));
        let full = crate::rule::Level::Full;
        let ternary = SymmetricRule::new(3, 8, full, vec![0; SymmetricRule::table_len(3, 8, full)]).unwrap();
        assert!(matches!(step(&l, &ternary, &s), Err(EngineError::Alphabet { rule: 3, state: 2 })));
        assert!(matches!(step(&l, &conway(), &CaState::zeros(2, 24).unwrap()), Err(EngineError::Length { .. })));
        assert!(complement(&CaState::zeros(3, 4).unwrap()).is_err());
        assert!(CaState::new(2, vec![0, 2]).is_err());
        let t3 = CaState::zeros(3, 25).unwrap();
        assert!(matches!(step_with(&l, &ternary, &t3, Backend::Packed), Err(EngineError::NotBinary(3))));
    }

    #[test]
    fn complement_involution_and_census() {
        let s = CaState::random(2, 100, 9).unwrap();
        let c = complement(&s).unwrap();
        assert_eq!(complement(&c).unwrap(), s);
        let (a, b) = (s.census(), c.census());
        assert_eq!((a[0], a[1]), (b[1], b[0]));
    }

    #[test]
    fn random_is_seeded() {
        assert_eq!(CaState::random(3, 50, 1).unwrap(), CaState::random(3, 50, 1).unwrap());
        assert_ne!(CaState::random(3, 50, 1).unwrap(), CaState::random(3, 50, 2).unwrap());
        assert!(CaState::random(3, 500, 1).unwrap().cells().contains(&2));
    }
}
