use std::collections::BTreeSet;
use std::fmt;

use super::{Level, RuleError, SymmetricRule};

/// A binary k-valent rule written as birth and survival sets.
///
/// Every leaf-symmetric binary rule has exactly one such form: `w ∈ birth`
/// iff a dead center with `w` live leaves comes alive, `w ∈ survival` iff a
/// live center with `w` live leaves stays alive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BsRule {
    k: u32,
    birth: BTreeSet<u32>,
    survival: BTreeSet<u32>,
}

impl BsRule {
    pub fn new(
        k: u32,
        birth: impl IntoIterator<Item = u32>,
        survival: impl IntoIterator<Item = u32>,
    ) -> Result<Self, RuleError> {
        if k < 1 {
            return Err(RuleError::Domain("valence k must be at least 1".into()));
        }
        let birth: BTreeSet<u32> = birth.into_iter().collect();
        let survival: BTreeSet<u32> = survival.into_iter().collect();
        if let Some(&bad) = birth.iter().chain(survival.iter()).find(|&&w| w > k) {
            return Err(RuleError::Domain(format!("count {bad} exceeds k={k}")));
        }
        Ok(Self { k, birth, survival })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn birth(&self) -> &BTreeSet<u32> {
        &self.birth
    }

    pub fn survival(&self) -> &BTreeSet<u32> {
        &self.survival
    }

    pub fn to_rule(&self) -> SymmetricRule {
        let n = 2 * self.k as usize + 2;
        let mut table = vec![0u8; n];
        for &w in &self.birth {
            table[2 * w as usize] = 1;
        }
        for &w in &self.survival {
            table[2 * w as usize + 1] = 1;
        }
        SymmetricRule { q: 2, k: self.k, level: Level::Leaves, table }
    }

    /// Inverse of [`BsRule::to_rule`]. Full-level rules must be expanded with
    /// [`SymmetricRule::to_leaves`] first.
    pub fn from_rule(rule: &SymmetricRule) -> Result<Self, RuleError> {
        if rule.q() != 2 {
            return Err(RuleError::Unsupported(format!("birth/survival form needs a binary rule, got q={}", rule.q())));
        }
        if rule.level() != Level::Leaves {
            return Err(RuleError::Unsupported("birth/survival form needs a leaf-level table".into()));
        }
        let t = rule.table();
        let birth = (0..=rule.k()).filter(|&w| t[2 * w as usize] == 1).collect();
        let survival = (0..=rule.k()).filter(|&w| t[2 * w as usize + 1] == 1).collect();
        Ok(Self { k: rule.k(), birth, survival })
    }

    /// Parses `B3/S23`. Lists are single digits when `k ≤ 9`; beyond that, or
    /// whenever a comma appears, they are comma-separated numbers
    /// (`B3,10/S2,3`).
    pub fn parse(text: &str, k: u32) -> Result<Self, RuleError> {
        let err = |pos: usize, msg: String| RuleError::Parse { pos, msg };
        let bytes = text.as_bytes();
        if !matches!(bytes.first(), Some(b'B' | b'b')) {
            return Err(err(0, "expected 'B'".into()));
        }
        let slash = text.find('/').ok_or_else(|| err(text.len(), "expected '/' between birth and survival".into()))?;
        if !matches!(bytes.get(slash + 1), Some(b'S' | b's')) {
            return Err(err(slash + 1, "expected 'S' after '/'".into()));
        }
        let comma_mode = k > 9 || text.contains(',');
        let birth = parse_list(&text[1..slash], 1, k, comma_mode)?;
        let survival = parse_list(&text[slash + 2..], slash + 2, k, comma_mode)?;
        Self::new(k, birth, survival)
    }
}

fn parse_list(body: &str, offset: usize, k: u32, comma_mode: bool) -> Result<Vec<u32>, RuleError> {
    let mut out = Vec::new();
    if body.is_empty() {
        return Ok(out);
    }
    if comma_mode {
        let mut pos = offset;
        for item in body.split(',') {
            let value: u32 = item
                .trim()
                .parse()
                .map_err(|_| RuleError::Parse { pos, msg: format!("expected a number, found {item:?}") })?;
            if value > k {
                return Err(RuleError::Parse { pos, msg: format!("count {value} exceeds k={k}") });
            }
            out.push(value);
            pos += item.len() + 1;
        }
    } else {
        for (i, ch) in body.char_indices() {
            let value = ch
                .to_digit(10)
                .ok_or_else(|| RuleError::Parse { pos: offset + i, msg: format!("expected a digit, found {ch:?}") })?;
            if value > k {
                return Err(RuleError::Parse { pos: offset + i, msg: format!("count {value} exceeds k={k}") });
            }
            out.push(value);
        }
    }
    Ok(out)
}

impl fmt::Display for BsRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |set: &BTreeSet<u32>| -> String {
            let items: Vec<String> = set.iter().map(u32::to_string).collect();
            if self.k > 9 {
                items.join(",")
            } else {
                items.concat()
            }
        };
        write!(f, "B{}/S{}", list(&self.birth), list(&self.survival))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_life_family_names() {
        let conway = BsRule::parse("B3/S23", 8).unwrap();
        assert_eq!(conway.birth().iter().copied().collect::<Vec<_>>(), vec![3]);
        assert_eq!(conway.survival().iter().copied().collect::<Vec<_>>(), vec![2, 3]);
        let high = BsRule::parse("B36/S23", 8).unwrap();
        assert_eq!(high.birth().iter().copied().collect::<Vec<_>>(), vec![3, 6]);
        let empty = BsRule::parse("B/S", 8).unwrap();
        assert!(empty.birth().is_empty() && empty.survival().is_empty());
    }

    #[test]
    fn conway_table() {
        let bits = BsRule::parse("B3/S23", 8).unwrap().to_rule().alpha_string();
        assert_eq!(bits, "000001110000000000");
        let none = BsRule::new(3, [], []).unwrap().to_rule().alpha_string();
        assert_eq!(none, "00000000");
    }

    #[test]
    fn inverse_conversions() {
        let r = SymmetricRule::parse("000001110000000000", 8).unwrap();
        assert_eq!(BsRule::from_rule(&r).unwrap().to_string(), "B3/S23");
        let ones = SymmetricRule::binary(2, Level::Leaves, vec![1; 6]).unwrap();
        assert_eq!(BsRule::from_rule(&ones).unwrap().to_string(), "B012/S012");
        let full = SymmetricRule::binary(2, Level::Full, vec![1; 4]).unwrap();
        assert!(matches!(BsRule::from_rule(&full), Err(RuleError::Unsupported(_))));
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(BsRule::parse("B9/S23", 8), Err(RuleError::Parse { pos: 1, .. })));
        assert!(matches!(BsRule::parse("B3/S2x", 8), Err(RuleError::Parse { pos: 5, .. })));
        assert!(matches!(BsRule::parse("3/S23", 8), Err(RuleError::Parse { pos: 0, .. })));
        assert!(matches!(BsRule::parse("B3S23", 8), Err(RuleError::Parse { pos: 5, .. })));
        assert!(matches!(BsRule::parse("B3/23", 8), Err(RuleError::Parse { pos: 3, .. })));
    }

    #[test]
    fn comma_notation_above_nine() {
        let r = BsRule::parse("B3,10/S2,3", 12).unwrap();
        assert!(r.birth().contains(&10));
        assert_eq!(r.to_string(), "B3,10/S2,3");
        assert!(BsRule::parse("B3,13/S", 12).is_err());
        // commas are also accepted for small k
        assert_eq!(BsRule::parse("B3,6/S2,3", 8).unwrap().to_string(), "B36/S23");
    }

    #[test]
    fn format_sorts_digits() {
        let r = BsRule::new(8, [6, 3], [3, 2]).unwrap();
        assert_eq!(r.to_string(), "B36/S23");
    }

    #[test]
    fn exhaustive_round_trip_small_k() {
        for k in 1..=4u32 {
            let n = k + 1;
            for b in 0..(1u32 << n) {
                for s in 0..(1u32 << n) {
                    let bs =
                        BsRule::new(k, (0..n).filter(|i| b >> i & 1 == 1), (0..n).filter(|i| s >> i & 1 == 1)).unwrap();
                    assert_eq!(BsRule::from_rule(&bs.to_rule()).unwrap(), bs);
                }
            }
        }
    }

    fn arb_bs() -> impl Strategy<Value = BsRule> {
        (1u32..=12).prop_flat_map(|k| {
            let mask = (1u64 << (k + 1)) - 1;
            (Just(k), 0..=mask, 0..=mask).prop_map(|(k, b, s)| {
                BsRule::new(k, (0..=k).filter(|i| b >> i & 1 == 1), (0..=k).filter(|i| s >> i & 1 == 1)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rule_round_trip(bs in arb_bs()) {
            prop_assert_eq!(BsRule::from_rule(&bs.to_rule()).unwrap(), bs.clone());
        }

        #[test]
        fn text_round_trip(bs in arb_bs()) {
            let text = bs.to_string();
            prop_assert_eq!(BsRule::parse(&text, bs.k()).unwrap(), bs);
        }

        #[test]
        fn distinct_pairs_give_distinct_tables(a in arb_bs(), b in arb_bs()) {
            if a.k() == b.k() && a != b {
                prop_assert_ne!(a.to_rule(), b.to_rule());
            }
        }
    }
}
