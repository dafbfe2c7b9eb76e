//! Exhaustive check that a relation vanishes on every consistent
//! neighborhood assignment of a rule.

use super::template::TEMPLATE_K;
use super::{F2PolyError, RelationTemplate};
use crate::rule::{Level, SymmetricRule};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// An assignment on which a relation evaluates to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub tuple: Vec<u32>,
    /// Leaf states `x1 … x8`.
    pub leaves: [u8; 8],
    pub center: u8,
    pub next: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub tuples_checked: usize,
    pub assignments_checked: usize,
    /// First failure in tuple order, then assignment order.
    pub counterexample: Option<Counterexample>,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn check_tuple(rule: &SymmetricRule, template: &RelationTemplate, tuple: &[u32]) -> Option<Counterexample> {
    let k = TEMPLATE_K;
    let poly = template.instantiate(tuple).expect("tuples come from the template");
    (0..1u32 << (k + 1)).find_map(|x| {
        let center = (x >> k) as u8;
        let next = rule.next_binary((x & 0xff).count_ones(), center);
        let mask = x | u32::from(next) << (k + 1);
        (poly.eval_mask(mask) == 1).then(|| Counterexample {
            tuple: tuple.to_vec(),
            leaves: std::array::from_fn(|i| (x >> i & 1) as u8),
            center,
            next,
        })
    })
}

/// Checks `template` against all `2^9` neighborhoods of `rule` for every hole
/// tuple. The next-state variable is fixed by the rule, so the relation holds
/// exactly when it vanishes everywhere.
pub fn verify_implied_relation(rule: &SymmetricRule, template: &RelationTemplate) -> Result<Verification, F2PolyError> {
    if rule.q() != 2 || rule.k() != TEMPLATE_K {
        return Err(F2PolyError::Unsupported(format!(
            "relations are checked for binary rules on 8 leaves, got q={} k={}",
            rule.q(),
            rule.k()
        )));
    }
    let rule = if rule.level() == Level::Full { rule.to_leaves() } else { rule.clone() };
    let tuples = template.tuples();
    #[cfg(feature = "parallel")]
    let failures: Vec<Option<Counterexample>> = tuples.par_iter().map(|t| check_tuple(&rule, template, t)).collect();
    #[cfg(not(feature = "parallel"))]
    let failures: Vec<Option<Counterexample>> = tuples.iter().map(|t| check_tuple(&rule, template, t)).collect();
    Ok(Verification {
        tuples_checked: tuples.len(),
        assignments_checked: tuples.len() << (TEMPLATE_K + 1),
        counterexample: failures.into_iter().flatten().next(),
    })
}
