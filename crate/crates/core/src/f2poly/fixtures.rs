//! Published relation sets for three Life-like rules on the 8-leaf
//! (Moore) neighborhood.

use std::fmt;
use std::str::FromStr;

use super::{F2Poly, F2PolyError, RelationTemplate};
use crate::rule::BsRule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LifeRule {
    ConwaysLife,
    HighLife,
    DayAndNight,
}

impl LifeRule {
    pub const ALL: [LifeRule; 3] = [LifeRule::ConwaysLife, LifeRule::HighLife, LifeRule::DayAndNight];

    pub fn name(self) -> &'static str {
        match self {
            LifeRule::ConwaysLife => "conway",
            LifeRule::HighLife => "highlife",
            LifeRule::DayAndNight => "daynight",
        }
    }

    pub fn bs(self) -> &'static str {
        match self {
            LifeRule::ConwaysLife => "B3/S23",
            LifeRule::HighLife => "B36/S23",
            LifeRule::DayAndNight => "B3678/S34678",
        }
    }

    pub fn rule(self) -> BsRule {
        BsRule::parse(self.bs(), 8).expect("fixture rule strings are valid")
    }
}

impl fmt::Display for LifeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LifeRule {
    type Err = F2PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        match key.as_str() {
            "conway" | "conways" | "conwayslife" | "life" | "b3s23" => Ok(LifeRule::ConwaysLife),
            "highlife" | "b36s23" => Ok(LifeRule::HighLife),
            "daynight" | "dayandnight" | "b3678s34678" => Ok(LifeRule::DayAndNight),
            _ => Err(F2PolyError::UnknownName(s.to_string())),
        }
    }
}

fn polynomial_text(rule: LifeRule) -> &'static str {
    match rule {
        LifeRule::ConwaysLife => "xp9 + x9*(s7+s6+s3+s2) + s7 + s3",
        LifeRule::HighLife => "xp9 + x9*(s3+s2) + s6 + s3",
        LifeRule::DayAndNight => "xp9 + x9*(s7+s6+s5+s4) + s8+s7+s6+s3",
    }
}

fn decomposition_text(rule: LifeRule) -> &'static [&'static str] {
    match rule {
        LifeRule::ConwaysLife => &[
            "xp9*(s3+s2+1) + s7 + s3",
            "xp9*x9*(s2[i]+s1[i]) + xp9*(s2[i]+1) + x9*(s7[i]+s6[i]+s3[i]+s2[i])",
            "xp9*(s3[i]+s2[i]+s1[i]+1)",
            "xp9*(x9+1)*(s3[ij]+s2[ij]+s1[ij]+1)",
            "xp9*xi*xj*xk*xl",
        ],
        LifeRule::HighLife => &[
            "xp9*(s3+s2+1) + s7 + s3",
            "xp9*x9*(s2[i]+s1[i]) + xp9*(s5[i]+s2[i]+1) + x9*(s7[i]+s6[i]+s3[i]+s2[i])",
            "xp9*(s7[i]+s3[i]+s2[i]+s1[i]+1)",
            "xp9*x9*(s3[ij]+s2[ij]+s1[ij]+1) + xp9*(s6[ij]+s5[ij]+s4[ij]+s3[ij]+s2[ij]+s1[ij]+1)",
            "xp9*x9*xi*xj*xk*xl",
        ],
        LifeRule::DayAndNight => &[
            "xp9*(s7+s6+s5+s4+1) + s8+s7+s6+s3",
            "xp9*x9*(s6[i]+s5[i]+s4[i]+s3[i]) + xp9*(s7[i]+s6[i]+s5[i]+s2[i]+1) + x9*(s7[i]+s3[i]) + s6[i]",
            "xp9*(s5[ij]+s4[ij]+s3[ij]+s2[ij]+s1[ij]+1) + s6[ij]",
        ],
    }
}

/// The rule polynomial written in elementary symmetric form.
pub fn life_polynomial_fixture(rule: LifeRule) -> F2Poly {
    RelationTemplate::parse(polynomial_text(rule)).and_then(|t| t.instantiate(&[])).expect("fixture polynomial parses")
}

/// The published list of implied relations for `rule`.
pub fn decomposition_fixture(rule: LifeRule) -> Vec<RelationTemplate> {
    decomposition_text(rule).iter().map(|s| RelationTemplate::parse(s).expect("fixture relation parses")).collect()
}

/// Single-hole relation obtained by combining two Day & Night relations.
pub fn day_and_night_combined() -> RelationTemplate {
    RelationTemplate::parse("xp9*(s4[i]+s2[i]+1) + s6[i]").expect("fixture relation parses")
}
