//! Bit-sliced binary step: 64 cells per word, neighbor counts held in
//! binary counter planes.

use crate::lattice::Lattice;
use crate::rule::SymmetricRule;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

struct Plan<'a> {
    lattice: &'a Lattice,
    old: &'a [u8],
    k: usize,
    planes: usize,
    /// `(w, birth, survive)` for every count with a live outcome.
    live_entries: Vec<(u32, bool, bool)>,
}

impl Plan<'_> {
    fn word(&self, wi: usize) -> Word {
        let n = self.old.len();
        let base = wi * 64;
        let lanes = (n - base).min(64);
        let mut center = 0u64;
        let mut frozen = 0u64;
        for lane in 0..lanes {
            let cell = base + lane;
            center |= u64::from(self.old[cell]) << lane;
            frozen |= u64::from(self.lattice.is_boundary(cell)) << lane;
        }
        let mut plane = [0u64; 8];
        for slot in 0..self.k {
            let mut g = 0u64;
            for lane in 0..lanes {
                // boundary cells may have fewer neighbors; their result is masked
                if let Some(&nb) = self.lattice.neighbors(base + lane).get(slot) {
                    g |= u64::from(self.old[nb]) << lane;
                }
            }
            let mut carry = g;
            for p in plane.iter_mut().take(self.planes) {
                let t = *p & carry;
                *p ^= carry;
                carry = t;
            }
        }
        let mut next = 0u64;
        for &(w, birth, survive) in &self.live_entries {
            let mut eq = !0u64;
            for (b, p) in plane.iter().enumerate().take(self.planes) {
                eq &= if w >> b & 1 == 1 { *p } else { !*p };
            }
            let sel = (if birth { !center } else { 0 }) | (if survive { center } else { 0 });
            next |= eq & sel;
        }
        next = (next & !frozen) | (center & frozen);
        Word { bits: next, lanes }
    }
}

struct Word {
    bits: u64,
    lanes: usize,
}

pub(super) fn step(lattice: &Lattice, rule: &SymmetricRule, old: &[u8]) -> Vec<u8> {
    let k = rule.k() as usize;
    let planes = (usize::BITS - k.leading_zeros()) as usize;
    assert!(planes <= 8, "valence {k} too large for the packed path");
    let live_entries = (0..=rule.k())
        .map(|w| (w, rule.next_binary(w, 0) == 1, rule.next_binary(w, 1) == 1))
        .filter(|&(_, b, s)| b || s)
        .collect();
    let plan = Plan { lattice, old, k, planes, live_entries };
    let words = old.len().div_ceil(64);
    #[cfg(feature = "parallel")]
    let packed: Vec<Word> = (0..words).into_par_iter().map(|wi| plan.word(wi)).collect();
    #[cfg(not(feature = "parallel"))]
    let packed: Vec<Word> = (0..words).map(|wi| plan.word(wi)).collect();
    let mut out = Vec::with_capacity(old.len());
    for w in packed {
        out.extend((0..w.lanes).map(|lane| (w.bits >> lane & 1) as u8));
    }
    out
}
