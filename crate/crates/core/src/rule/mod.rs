//! Permutation-symmetric local rules.
//!
//! A rule on a k-valent neighborhood maps the states of the k leaves and the
//! center to the next center state. Symmetry under leaf permutations means
//! the rule only sees how many leaves are in each state, so the whole rule is
//! a lookup table indexed by a composition vector and the center state.
//!
//! Binary tables use the wire layout `α_1 … α_n`:
//!
//! - [`Level::Leaves`]: `n = 2k + 2`, position `2w + c` (0-based) holds the
//!   next center state when `w` leaves are alive and the center is `c`.
//! - [`Level::Full`]: `n = k + 2`, position `w + c` holds the next state for a
//!   total of `w + c` live cells in the neighborhood.

mod bs;
mod count;
mod symmetry;

use std::fmt;

use thiserror::Error;

pub use bs::BsRule;
pub use count::{
    count_bw_fixed, count_orbits_bruteforce, count_orbits_closed, count_rules, enumerate_orbit_reps, OrbitReps,
    DEFAULT_BRUTEFORCE_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("input out of domain: {0}")]
    Domain(String),
    #[error("unsupported representation: {0}")]
    Unsupported(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("rule space has {size} tables, above the cap of {cap}")]
    CapExceeded { size: String, cap: u64 },
}

/// Which permutations the rule is invariant under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    /// Permutations of the k leaves (outer totalistic).
    Leaves,
    /// Permutations of all k + 1 cells (totalistic).
    Full,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Leaves => "leaves",
            Level::Full => "full",
        }
    }
}

impl std::str::FromStr for Level {
    type Err = RuleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "leaves" | "k" | "outer" => Ok(Level::Leaves),
            "full" | "k+1" | "total" => Ok(Level::Full),
            _ => Err(RuleError::Parse { pos: 0, msg: format!("unknown symmetry level {s:?} (expected leaves|full)") }),
        }
    }
}

/// A local rule invariant under leaf (or whole-neighborhood) permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricRule {
    q: u8,
    k: u32,
    level: Level,
    table: Vec<u8>,
}

pub(crate) fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of ways to write `total` as an ordered sum of `parts` non-negative
/// integers.
pub(crate) fn composition_count(total: u32, parts: u32) -> u64 {
    if parts == 0 {
        return u64::from(total == 0);
    }
    binomial(u64::from(total) + u64::from(parts) - 1, u64::from(parts) - 1)
}

/// Position of `counts` among all compositions of the same total, ordered
/// lexicographically by `(counts[1], counts[2], …, counts[q-1])`.
///
/// For two states this is just the number of live cells.
pub(crate) fn composition_rank(counts: &[u32]) -> usize {
    let q = counts.len() as u32;
    let mut remaining: u32 = counts.iter().sum();
    let mut rank = 0u64;
    for (j, &c) in counts.iter().enumerate().skip(1) {
        let free_parts = q - j as u32;
        for v in 0..c {
            rank += composition_count(remaining - v, free_parts);
        }
        remaining -= c;
    }
    rank as usize
}

/// All compositions of `total` into `q` parts, in [`composition_rank`] order.
pub(crate) fn compositions(total: u32, q: usize) -> Vec<Vec<u32>> {
    fn rec(pos: usize, q: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == q {
            cur[0] = left;
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(pos + 1, q, left - v, cur, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0; q];
    rec(1, q, total, &mut cur, &mut out);
    out
}

impl SymmetricRule {
    /// Number of table entries for a rule of the given shape.
    pub fn table_len(q: u8, k: u32, level: Level) -> usize {
        let q32 = u32::from(q);
        match level {
            Level::Leaves => composition_count(k, q32) as usize * usize::from(q),
            Level::Full => composition_count(k + 1, q32) as usize,
        }
    }

    pub fn new(q: u8, k: u32, level: Level, table: Vec<u8>) -> Result<Self, RuleError> {
        if q < 2 {
            return Err(RuleError::Domain(format!("state count q={q} must be at least 2")));
        }
        if k < 1 {
            return Err(RuleError::Domain("valence k must be at least 1".into()));
        }
        let expect = Self::table_len(q, k, level);
        if table.len() != expect {
            return Err(RuleError::Domain(format!(
                "table has {} entries, expected {expect} for q={q}, k={k}, {}",
                table.len(),
                level.name()
            )));
        }
        if let Some(bad) = table.iter().find(|&&s| s >= q) {
            return Err(RuleError::Domain(format!("table entry {bad} is not a state below {q}")));
        }
        Ok(Self { q, k, level, table })
    }

    /// Binary rule from its `α` bits.
    pub fn binary(k: u32, level: Level, bits: Vec<u8>) -> Result<Self, RuleError> {
        Self::new(2, k, level, bits)
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn is_binary(&self) -> bool {
        self.q == 2
    }

    /// Next center state of a binary rule with `live` live leaves.
    pub fn apply(&self, live: u32, center: u8) -> Result<u8, RuleError> {
        if self.q != 2 {
            return Err(RuleError::Unsupported(
                "apply takes a live count only for binary rules; use apply_counts".into(),
            ));
        }
        if live > self.k {
            return Err(RuleError::Domain(format!("{live} live leaves exceeds k={}", self.k)));
        }
        if center > 1 {
            return Err(RuleError::Domain(format!("center state {center} is not binary")));
        }
        Ok(self.next_binary(live, center))
    }

    /// Unchecked binary lookup.
    #[inline]
    pub(crate) fn next_binary(&self, live: u32, center: u8) -> u8 {
        match self.level {
            Level::Leaves => self.table[2 * live as usize + usize::from(center)],
            Level::Full => self.table[live as usize + usize::from(center)],
        }
    }

    /// Next center state given how many leaves are in each state.
    ///
    /// `counts[s]` is the number of leaves in state `s`; it must have length
    /// `q` and sum to `k`.
    pub fn apply_counts(&self, counts: &[u32], center: u8) -> Result<u8, RuleError> {
        if counts.len() != usize::from(self.q) {
            return Err(RuleError::Domain(format!("composition has {} parts, expected q={}", counts.len(), self.q)));
        }
        if counts.iter().sum::<u32>() != self.k {
            return Err(RuleError::Domain(format!("composition does not sum to k={}", self.k)));
        }
        if center >= self.q {
            return Err(RuleError::Domain(format!("center state {center} is not below q={}", self.q)));
        }
        Ok(self.lookup_counts(counts, center))
    }

    pub(crate) fn lookup_counts(&self, counts: &[u32], center: u8) -> u8 {
        match self.level {
            Level::Leaves => self.table[composition_rank(counts) * usize::from(self.q) + usize::from(center)],
            Level::Full => {
                let mut full = counts.to_vec();
                full[usize::from(center)] += 1;
                self.table[composition_rank(&full)]
            }
        }
    }

    /// Re-expresses a [`Level::Full`] rule with leaf-level indexing.
    pub fn to_leaves(&self) -> SymmetricRule {
        if self.level == Level::Leaves {
            return self.clone();
        }
        let q = usize::from(self.q);
        let comps = compositions(self.k, q);
        let mut table = vec![0u8; comps.len() * q];
        for (rank, comp) in comps.iter().enumerate() {
            for c in 0..self.q {
                table[rank * q + usize::from(c)] = self.lookup_counts(comp, c);
            }
        }
        SymmetricRule { q: self.q, k: self.k, level: Level::Leaves, table }
    }

    /// The `α` string, `α_1` leftmost. Digits are used for `q > 2`.
    pub fn alpha_string(&self) -> String {
        self.table.iter().map(|&d| char::from(b'0' + d)).collect()
    }

    /// Reads a `q`-ary `α` string, one digit per table entry. The level is
    /// inferred from the length.
    pub fn from_alpha(q: u8, k: u32, text: &str) -> Result<SymmetricRule, RuleError> {
        let digits = text
            .trim()
            .bytes()
            .enumerate()
            .map(|(pos, b)| match b {
                b'0'..=b'9' if b - b'0' < q => Ok(b - b'0'),
                _ => {
                    Err(RuleError::Parse { pos, msg: format!("expected a digit below {q}, found {:?}", char::from(b)) })
                }
            })
            .collect::<Result<Vec<u8>, _>>()?;
        let n = digits.len();
        for level in [Level::Leaves, Level::Full] {
            if n == Self::table_len(q, k, level) {
                return Self::new(q, k, level, digits);
            }
        }
        Err(RuleError::Parse {
            pos: n,
            msg: format!(
                "string of length {n} fits neither {} (leaves) nor {} (full) for q={q}, k={k}",
                Self::table_len(q, k, Level::Leaves),
                Self::table_len(q, k, Level::Full)
            ),
        })
    }

    /// Parses a binary rule in either notation: `B…/S…` text or the raw
    /// `α` bit string. A bit string of length `2k+2` is leaf-level, one of
    /// length `k+2` is full-level.
    pub fn parse(text: &str, k: u32) -> Result<SymmetricRule, RuleError> {
        let t = text.trim();
        if t.starts_with(['B', 'b']) {
            return Ok(BsRule::parse(t, k)?.to_rule());
        }
        let bits = t
            .bytes()
            .enumerate()
            .map(|(pos, b)| match b {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(RuleError::Parse {
                    pos,
                    msg: format!("expected 0 or 1 in rule bit string, found {:?}", char::from(b)),
                }),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        let n = bits.len();
        if n == 2 * k as usize + 2 {
            Self::binary(k, Level::Leaves, bits)
        } else if n == k as usize + 2 {
            Self::binary(k, Level::Full, bits)
        } else {
            Err(RuleError::Parse {
                pos: n,
                msg: format!(
                    "bit string of length {n} fits neither {} (leaves) nor {} (full) for k={k}",
                    2 * k + 2,
                    k + 2
                ),
            })
        }
    }
}

impl fmt::Display for SymmetricRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alpha_string())
    }
}
