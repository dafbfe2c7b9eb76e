//! Multilinear polynomials over GF(2) and the relation form of binary rules.
//!
//! For a rule on `k` leaves the variables are the leaves `x1 … xk`
//! (bits `0 … k-1` of a monomial mask), the center `x{k+1}` (bit `k`) and
//! the next center state `xp{k+1}` (bit `k+1`). A monomial is the bitmask of
//! its variables; a polynomial is a set of monomials.

mod fixtures;
mod template;
mod verify;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::rule::{Level, SymmetricRule};

pub use fixtures::{day_and_night_combined, decomposition_fixture, life_polynomial_fixture, LifeRule};
pub use template::{Hole, RelationTemplate};
pub use verify::{verify_implied_relation, Counterexample, Verification};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum F2PolyError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("assignment covers {given} variables, polynomial needs {needed}")]
    MissingVariable { given: usize, needed: usize },
    #[error("unknown fixture {0:?}")]
    UnknownName(String),
}

/// Polynomial in the variables of a `k`-leaf neighborhood.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Poly {
    k: u32,
    monomials: BTreeSet<u32>,
}

impl F2Poly {
    pub fn zero(k: u32) -> Self {
        assert!(k + 2 <= 32, "monomial masks hold at most 32 variables");
        F2Poly { k, monomials: BTreeSet::new() }
    }

    pub fn one(k: u32) -> Self {
        Self::monomial(k, 0)
    }

    pub fn monomial(k: u32, mask: u32) -> Self {
        let mut p = Self::zero(k);
        p.monomials.insert(mask);
        p
    }

    /// Leaf variable `x_i`, 1-based.
    pub fn leaf(k: u32, i: u32) -> Self {
        assert!((1..=k).contains(&i), "leaf index {i} outside 1..={k}");
        Self::monomial(k, 1 << (i - 1))
    }

    pub fn center(k: u32) -> Self {
        Self::monomial(k, 1 << k)
    }

    pub fn next(k: u32) -> Self {
        Self::monomial(k, 1 << (k + 1))
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn var_count(&self) -> usize {
        self.k as usize + 2
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = u32> + '_ {
        self.monomials.iter().copied()
    }

    /// Degree of the polynomial; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.monomials.iter().map(|m| m.count_ones()).max().unwrap_or(0)
    }

    fn toggle(&mut self, m: u32) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        assert_eq!(self.k, other.k);
        F2Poly { k: self.k, monomials: self.monomials.symmetric_difference(&other.monomials).copied().collect() }
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        assert_eq!(self.k, other.k);
        let mut out = F2Poly::zero(self.k);
        for &a in &self.monomials {
            for &b in &other.monomials {
                out.toggle(a | b);
            }
        }
        out
    }

    /// Applies a permutation of the leaf variables: `x_i ↦ x_{perm[i-1]+1}`.
    pub fn permute_leaves(&self, perm: &[u32]) -> F2Poly {
        assert_eq!(perm.len(), self.k as usize);
        let leaf_mask = (1u32 << self.k) - 1;
        let monomials = self
            .monomials
            .iter()
            .map(|&m| {
                let mut out = m & !leaf_mask;
                for (i, &t) in perm.iter().enumerate() {
                    if m >> i & 1 == 1 {
                        out |= 1 << t;
                    }
                }
                out
            })
            .collect();
        F2Poly { k: self.k, monomials }
    }

    /// Value at the assignment whose true variables are the bits of `mask`.
    #[inline]
    pub fn eval_mask(&self, mask: u32) -> u8 {
        self.monomials.iter().fold(0, |acc, &m| acc ^ u8::from(m & !mask == 0))
    }

    /// Value at an assignment given in variable order
    /// `x1 … xk, x{k+1}, xp{k+1}`.
    pub fn eval(&self, assignment: &[bool]) -> Result<u8, F2PolyError> {
        if assignment.len() < self.var_count() {
            return Err(F2PolyError::MissingVariable { given: assignment.len(), needed: self.var_count() });
        }
        let mask = assignment.iter().take(self.var_count()).enumerate().fold(0u32, |m, (i, &b)| m | u32::from(b) << i);
        Ok(self.eval_mask(mask))
    }

    fn var_name(&self, bit: u32) -> String {
        match bit {
            b if b < self.k => format!("x{}", b + 1),
            b if b == self.k => format!("x{}", self.k + 1),
            _ => format!("xp{}", self.k + 1),
        }
    }

    /// Monomials sorted by degree, then lexicographically by variable list.
    fn sorted_monomials(&self) -> Vec<u32> {
        let vars = |m: u32| -> Vec<u32> { (0..32).filter(|b| m >> b & 1 == 1).collect() };
        let mut ms: Vec<u32> = self.monomials.iter().copied().collect();
        ms.sort_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then_with(|| vars(a).cmp(&vars(b))));
        ms
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .sorted_monomials()
            .into_iter()
            .map(|m| {
                if m == 0 {
                    "1".to_string()
                } else {
                    (0..32).filter(|b| m >> b & 1 == 1).map(|b| self.var_name(b)).collect::<Vec<_>>().join("*")
                }
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

/// Elementary symmetric polynomial of degree `m` in the given variable bits.
/// Degrees above the number of variables give the zero polynomial.
pub fn esym(k: u32, m: u32, vars: &[u32]) -> F2Poly {
    let mut out = F2Poly::zero(k);
    let n = vars.len();
    if m as usize > n {
        return out;
    }
    let full: u32 = vars.iter().fold(0, |acc, &v| acc | 1 << v);
    // enumerate m-subsets of the chosen positions
    let mut idx: Vec<usize> = (0..m as usize).collect();
    loop {
        let mask = idx.iter().fold(0u32, |acc, &i| acc | 1 << vars[i]);
        debug_assert_eq!(mask & !full, 0);
        out.monomials.insert(mask);
        // next combination
        let mut i = m as usize;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - m as usize {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..m as usize {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Algebraic normal form of a truth table over `nvars` inputs (index bit `i`
/// is variable `i`), via the XOR butterfly.
pub fn anf_coefficients(truth: &[u8]) -> Vec<u8> {
    let mut a = truth.to_vec();
    let n = a.len();
    assert!(n.is_power_of_two());
    let mut step = 1;
    while step < n {
        for mask in 0..n {
            if mask & step != 0 {
                a[mask] ^= a[mask ^ step];
            }
        }
        step <<= 1;
    }
    a
}

/// The relation `xp{k+1} + f(x1, …, x{k+1})` of a binary rule. It vanishes
/// exactly on the assignments where the next state agrees with the rule.
pub fn rule_to_anf(rule: &SymmetricRule) -> Result<F2Poly, F2PolyError> {
    if rule.q() != 2 {
        return Err(F2PolyError::Unsupported(format!("polynomial form needs a binary rule, got q={}", rule.q())));
    }
    let rule = if rule.level() == Level::Full { rule.to_leaves() } else { rule.clone() };
    let k = rule.k();
    if k + 2 > 32 {
        return Err(F2PolyError::Unsupported(format!("k={k} exceeds the 30-leaf limit")));
    }
    let leaf_mask = (1u32 << k) - 1;
    let truth: Vec<u8> =
        (0..1u32 << (k + 1)).map(|x| rule.next_binary((x & leaf_mask).count_ones(), (x >> k) as u8)).collect();
    let coeffs = anf_coefficients(&truth);
    let mut poly = F2Poly::next(k);
    for (mask, &c) in coeffs.iter().enumerate() {
        if c == 1 {
            poly.monomials.insert(mask as u32);
        }
    }
    Ok(poly)
}
