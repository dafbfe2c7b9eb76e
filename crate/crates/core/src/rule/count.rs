//! Counting and enumerating symmetric rules, with and without identifying
//! rules that differ only by a renaming of states.

use num_bigint::BigUint;

use super::symmetry::permutation_sources;
use super::{binomial, Level, RuleError, SymmetricRule};

/// Default ceiling on the number of tables the brute-force routines will
/// visit.
pub const DEFAULT_BRUTEFORCE_CAP: u64 = 1 << 20;

/// Number of `q`-state rules with the given symmetry:
/// `q^(C(k+q-1, q-1)·q)` for leaves, `q^C(k+q, q-1)` for the full
/// neighborhood.
pub fn count_rules(q: u8, k: u32, level: Level) -> BigUint {
    let (q64, k64) = (u64::from(q), u64::from(k));
    let exponent = match level {
        Level::Leaves => binomial(k64 + q64 - 1, q64 - 1) * q64,
        Level::Full => binomial(k64 + q64, q64 - 1),
    };
    BigUint::from(q).pow(u32::try_from(exponent).expect("rule table exponent fits in u32"))
}

fn pow2(e: u32) -> BigUint {
    BigUint::from(1u8) << e
}

/// Binary rules fixed by the black-white swap.
pub fn count_bw_fixed(k: u32, level: Level) -> BigUint {
    match level {
        Level::Leaves => pow2(k + 1),
        Level::Full if k.is_multiple_of(2) => pow2(k / 2 + 1),
        Level::Full => BigUint::from(0u8),
    }
}

/// Binary rules up to the black-white swap (Burnside with `|G| = 2`).
pub fn count_orbits_closed(k: u32, level: Level) -> BigUint {
    match level {
        Level::Leaves => pow2(2 * k + 1) + pow2(k),
        Level::Full if k.is_multiple_of(2) => pow2(k + 1) + pow2(k / 2),
        Level::Full => pow2(k + 1),
    }
}

fn permutations(q: u8) -> Vec<Vec<u8>> {
    fn rec(cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for s in 0..used.len() {
            if !used[s] {
                used[s] = true;
                cur.push(s as u8);
                rec(cur, used, out);
                cur.pop();
                used[s] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; usize::from(q)], &mut out);
    out
}

fn check_cap(q: u8, k: u32, level: Level, cap: u64) -> Result<u64, RuleError> {
    let total = count_rules(q, k, level);
    match u64::try_from(&total) {
        Ok(n) if n <= cap => Ok(n),
        _ => Err(RuleError::CapExceeded { size: total.to_string(), cap }),
    }
}

/// Orbit count by direct application of Burnside's lemma: every table is
/// tested against every state permutation and the fixed points are averaged
/// over `q!`.
pub fn count_orbits_bruteforce(q: u8, k: u32, level: Level, cap: u64) -> Result<u64, RuleError> {
    if !(2..=3).contains(&q) {
        return Err(RuleError::Unsupported(format!("brute-force orbit count supports q in 2..=3, got {q}")));
    }
    if k < 1 {
        return Err(RuleError::Domain("valence k must be at least 1".into()));
    }
    let total = check_cap(q, k, level, cap)?;
    let n = SymmetricRule::table_len(q, k, level);
    let group: Vec<(Vec<u8>, Vec<usize>)> = permutations(q)
        .into_iter()
        .map(|g| {
            let src = permutation_sources(q, k, level, &g);
            (g, src)
        })
        .collect();

    let fixed_in = |lo: u64, hi: u64| -> u64 {
        let mut digits = vec![0u8; n];
        let mut fixed = 0u64;
        for code in lo..hi {
            let mut c = code;
            for d in digits.iter_mut() {
                *d = (c % u64::from(q)) as u8;
                c /= u64::from(q);
            }
            for (g, src) in &group {
                if (0..n).all(|i| g[usize::from(digits[src[i]])] == digits[i]) {
                    fixed += 1;
                }
            }
        }
        fixed
    };

    let fixed_total = sum_over_chunks(total, fixed_in);
    let order = group.len() as u64;
    debug_assert_eq!(fixed_total % order, 0);
    Ok(fixed_total / order)
}

#[cfg(feature = "parallel")]
fn sum_over_chunks(total: u64, f: impl Fn(u64, u64) -> u64 + Sync) -> u64 {
    use rayon::prelude::*;
    const CHUNK: u64 = 1 << 12;
    (0..total.div_ceil(CHUNK)).into_par_iter().map(|c| f(c * CHUNK, ((c + 1) * CHUNK).min(total))).sum()
}

#[cfg(not(feature = "parallel"))]
fn sum_over_chunks(total: u64, f: impl Fn(u64, u64) -> u64) -> u64 {
    f(0, total)
}

/// Iterator over black-white orbit representatives of binary rules, in
/// lexicographic table order.
#[derive(Debug, Clone)]
pub struct OrbitReps {
    k: u32,
    level: Level,
    bits: u32,
    next: u64,
    end: u64,
}

impl OrbitReps {
    fn swap(&self, code: u64) -> u64 {
        // α_1 is the most significant bit, so reversing the string reverses
        // the low `bits` bits.
        let reversed = code.reverse_bits() >> (64 - self.bits);
        !reversed & (self.end - 1)
    }

    fn decode(&self, code: u64) -> SymmetricRule {
        let n = self.bits;
        let table = (0..n).map(|i| (code >> (n - 1 - i) & 1) as u8).collect();
        SymmetricRule { q: 2, k: self.k, level: self.level, table }
    }
}

impl Iterator for OrbitReps {
    type Item = SymmetricRule;

    fn next(&mut self) -> Option<SymmetricRule> {
        while self.next < self.end {
            let code = self.next;
            self.next += 1;
            if code <= self.swap(code) {
                return Some(self.decode(code));
            }
        }
        None
    }
}

/// Every binary rule that is its own [`SymmetricRule::canonical_rep`].
pub fn enumerate_orbit_reps(k: u32, level: Level, cap: u64) -> Result<OrbitReps, RuleError> {
    if k < 1 {
        return Err(RuleError::Domain("valence k must be at least 1".into()));
    }
    let total = check_cap(2, k, level, cap)?;
    let bits = SymmetricRule::table_len(2, k, level) as u32;
    Ok(OrbitReps { k, level, bits, next: 0, end: total })
}
