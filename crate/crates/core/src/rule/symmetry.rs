//! Renaming of states and the black-white swap.

use super::{compositions, Level, RuleError, SymmetricRule};

impl SymmetricRule {
    /// Conjugates the rule by a permutation of states: the returned rule is
    /// `g ∘ f ∘ g⁻¹` applied cell-wise. `perm[s]` is the image of state `s`.
    pub fn permute_states(&self, perm: &[u8]) -> Result<SymmetricRule, RuleError> {
        let q = usize::from(self.q);
        let mut seen = vec![false; q];
        if perm.len() != q || !perm.iter().all(|&s| (s as usize) < q && !std::mem::replace(&mut seen[s as usize], true))
        {
            return Err(RuleError::Domain(format!("{perm:?} is not a permutation of {q} states")));
        }
        let src = permutation_sources(self.q, self.k, self.level, perm);
        let table = src.iter().map(|&i| perm[usize::from(self.table[i])]).collect();
        Ok(SymmetricRule { table, ..self.clone() })
    }

    /// Swaps the two states of a binary rule. On the table this reverses the
    /// bit string and complements every bit.
    pub fn bw_transform(&self) -> Result<SymmetricRule, RuleError> {
        self.require_binary()?;
        let table = self.table.iter().rev().map(|&b| 1 - b).collect();
        Ok(SymmetricRule { table, ..self.clone() })
    }

    /// True iff the rule commutes with the black-white swap.
    pub fn is_bw_symmetric(&self) -> Result<bool, RuleError> {
        self.require_binary()?;
        let n = self.table.len();
        Ok((0..n).all(|i| self.table[i] != self.table[n - 1 - i]))
    }

    /// Orbit representative under the black-white swap: the lexicographically
    /// smaller table, `α_1` compared first.
    pub fn canonical_rep(&self) -> Result<SymmetricRule, RuleError> {
        let other = self.bw_transform()?;
        Ok(if other.table < self.table { other } else { self.clone() })
    }

    fn require_binary(&self) -> Result<(), RuleError> {
        if self.q == 2 {
            Ok(())
        } else {
            Err(RuleError::Unsupported(format!("black-white swap is defined for binary rules, got q={}", self.q)))
        }
    }
}

/// For each table slot `i` of the conjugated rule, the slot of the original
/// rule that feeds it. The conjugate is then `perm[table[src[i]]]`.
pub(crate) fn permutation_sources(q: u8, k: u32, level: Level, perm: &[u8]) -> Vec<usize> {
    let qs = usize::from(q);
    let mut inv = vec![0u8; qs];
    for (s, &g) in perm.iter().enumerate() {
        inv[usize::from(g)] = s as u8;
    }
    // g⁻¹ acting on a configuration sends a cell in state s to inv[s], so the
    // number of cells in state t afterwards is counts[perm[t]].
    let pull_back = |counts: &[u32]| -> Vec<u32> { (0..qs).map(|t| counts[usize::from(perm[t])]).collect() };
    match level {
        Level::Leaves => {
            let comps = compositions(k, qs);
            let mut src = Vec::with_capacity(comps.len() * qs);
            for comp in &comps {
                let pulled = super::composition_rank(&pull_back(comp));
                src.extend(inv.iter().map(|&c| pulled * qs + usize::from(c)));
            }
            src
        }
        Level::Full => compositions(k + 1, qs).iter().map(|comp| super::composition_rank(&pull_back(comp))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rule::BsRule;
    use proptest::prelude::*;

    fn bits(s: &str) -> Vec<u8> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn bw_examples() {
        let zero = SymmetricRule::binary(1, Level::Leaves, bits("0000")).unwrap();
        assert_eq!(zero.bw_transform().unwrap().alpha_string(), "1111");
        let fixed = SymmetricRule::binary(1, Level::Leaves, bits("0101")).unwrap();
        assert_eq!(fixed.bw_transform().unwrap(), fixed);
        assert!(fixed.is_bw_symmetric().unwrap());
        assert_eq!(fixed.canonical_rep().unwrap(), fixed);
        let ones = SymmetricRule::binary(1, Level::Leaves, bits("1111")).unwrap();
        assert_eq!(ones.canonical_rep().unwrap(), zero);
    }

    #[test]
    fn life_family_symmetry() {
        let dn = BsRule::parse("B3678/S34678", 8).unwrap().to_rule();
        assert!(dn.is_bw_symmetric().unwrap());
        let conway = BsRule::parse("B3/S23", 8).unwrap().to_rule();
        assert!(!conway.is_bw_symmetric().unwrap());
    }

    #[test]
    fn odd_full_rules_are_never_self_dual() {
        for k in [1u32, 3, 5, 7] {
            let n = k as usize + 2;
            for t in 0..(1u32 << n) {
                let table = (0..n).map(|i| (t >> i & 1) as u8).collect();
                let r = SymmetricRule::binary(k, Level::Full, table).unwrap();
                assert!(!r.is_bw_symmetric().unwrap());
            }
        }
    }

    #[test]
    fn swap_permutation_agrees_with_reverse_complement() {
        for level in [Level::Leaves, Level::Full] {
            for k in 1..=4u32 {
                let n = SymmetricRule::table_len(2, k, level);
                for t in 0..(1u32 << n) {
                    let table = (0..n).map(|i| (t >> i & 1) as u8).collect();
                    let r = SymmetricRule::binary(k, level, table).unwrap();
                    assert_eq!(r.permute_states(&[1, 0]).unwrap(), r.bw_transform().unwrap());
                }
            }
        }
    }

    #[test]
    fn ternary_permutations_compose() {
        let n = SymmetricRule::table_len(3, 2, Level::Leaves);
        let table: Vec<u8> = (0..n).map(|i| ((i * 7 + 1) % 3) as u8).collect();
        let r = SymmetricRule::new(3, 2, Level::Leaves, table).unwrap();
        let a = [1u8, 2, 0];
        let b = [0u8, 2, 1];
        // (a∘b)[s] = a[b[s]]
        let ab: Vec<u8> = (0..3).map(|s| a[usize::from(b[s])]).collect();
        let lhs = r.permute_states(&b).unwrap().permute_states(&a).unwrap();
        assert_eq!(lhs, r.permute_states(&ab).unwrap());
        assert_eq!(r.permute_states(&[0, 1, 2]).unwrap(), r);
        assert!(r.permute_states(&[0, 0, 1]).is_err());
        assert!(r.bw_transform().is_err());
    }

    proptest! {
        #[test]
        fn bw_is_an_involution(k in 1u32..=10, seed in any::<u64>(), full in any::<bool>()) {
            let level = if full { Level::Full } else { Level::Leaves };
            let n = SymmetricRule::table_len(2, k, level);
            let table = (0..n).map(|i| (seed.rotate_left(i as u32) & 1) as u8).collect();
            let r = SymmetricRule::binary(k, level, table).unwrap();
            let twice = r.bw_transform().unwrap().bw_transform().unwrap();
            prop_assert_eq!(&twice, &r);
            let canon = r.canonical_rep().unwrap();
            prop_assert_eq!(canon.clone(), r.bw_transform().unwrap().canonical_rep().unwrap());
            prop_assert_eq!(r.is_bw_symmetric().unwrap(), r.bw_transform().unwrap() == r);
        }

        // apply(bw(r), k-w, 1-c) = 1 - apply(r, w, c)
        #[test]
        fn bw_equivariance_of_lookup(k in 1u32..=10, seed in any::<u64>()) {
            let n = SymmetricRule::table_len(2, k, Level::Leaves);
            let table = (0..n).map(|i| (seed >> (i % 64) & 1) as u8).collect();
            let r = SymmetricRule::binary(k, Level::Leaves, table).unwrap();
            let bw = r.bw_transform().unwrap();
            for w in 0..=k {
                for c in 0..2u8 {
                    prop_assert_eq!(bw.apply(k - w, 1 - c).unwrap(), 1 - r.apply(w, c).unwrap());
                }
            }
        }
    }
}
