//! Brute-force semantic check of syllogisms, independent of the diagram
//! calculus.
//!
//! Whether a categorical statement over S, M and P holds depends only on
//! which of the eight regions of the S/M/P cube are empty, so sweeping all
//! 256 emptiness patterns decides validity exactly.

use std::fmt;

use serde::Serialize;

use crate::bilateral::{Proposition, Quantifier, Term};
use crate::engine::{Condition, Mood};

/// Which regions of the S/M/P cube are occupied. Bit `i` stands for the
/// region whose membership in (S, M, P) is given by bits 2, 1, 0 of `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegionModel(u8);

impl RegionModel {
    pub fn from_bits(bits: u8) -> Self {
        RegionModel(bits)
    }

    pub fn all() -> impl Iterator<Item = RegionModel> {
        (0..=u8::MAX).map(RegionModel)
    }

    /// Membership flags `[in S, in M, in P]` of every occupied region.
    fn occupied_regions(self) -> impl Iterator<Item = [bool; 3]> {
        (0..8u8)
            .filter(move |i| self.0 & (1 << i) != 0)
            .map(|i| [i & 4 != 0, i & 2 != 0, i & 1 != 0])
    }

    pub fn term_nonempty(self, term: Term) -> bool {
        self.occupied_regions().any(|r| r[slot(term)])
    }
}

fn slot(term: Term) -> usize {
    match term {
        Term::S => 0,
        Term::M => 1,
        Term::P => 2,
    }
}

pub fn eval_statement(prop: &Proposition, model: RegionModel) -> bool {
    let (s, p) = (slot(prop.subject), slot(prop.predicate));
    let mut regions = model.occupied_regions();
    match prop.quantifier {
        Quantifier::A => !regions.any(|r| r[s] && !r[p]),
        Quantifier::E => !regions.any(|r| r[s] && r[p]),
        Quantifier::I => regions.any(|r| r[s] && r[p]),
        Quantifier::O => regions.any(|r| r[s] && !r[p]),
    }
}

/// Models that satisfy both premises and the condition's existence
/// assumption.
fn premise_models(mood: &Mood, condition: Condition) -> impl Iterator<Item = RegionModel> + '_ {
    let major = mood.major_premise();
    let minor = mood.minor_premise();
    RegionModel::all().filter(move |&model| {
        eval_statement(&major, model)
            && eval_statement(&minor, model)
            && condition.term().is_none_or(|t| model.term_nonempty(t))
    })
}

/// A model where the premises (and condition) hold but the conclusion fails.
pub fn countermodel(mood: &Mood, condition: Condition) -> Option<RegionModel> {
    let conclusion = mood.conclusion_statement();
    premise_models(mood, condition).find(|&model| !eval_statement(&conclusion, model))
}

pub fn semantically_valid(mood: &Mood, condition: Condition) -> bool {
    countermodel(mood, condition).is_none()
}

/// The classical deduction rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    /// No inference from two particular premises.
    #[serde(rename = "1a")]
    TwoParticular,
    /// No inference from two negative premises.
    #[serde(rename = "1b")]
    TwoNegative,
    /// A particular premise needs a particular conclusion.
    #[serde(rename = "2a")]
    ParticularPremise,
    /// A negative premise needs a negative conclusion.
    #[serde(rename = "2b")]
    NegativePremise,
    /// The middle term is distributed at least once.
    #[serde(rename = "3a")]
    UndistributedMiddle,
    /// P distributed in the conclusion must be distributed in the major.
    #[serde(rename = "3b")]
    IllicitMajor,
    /// S distributed in the conclusion must be distributed in the minor.
    #[serde(rename = "3c")]
    IllicitMinor,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::TwoParticular => "1a",
            Rule::TwoNegative => "1b",
            Rule::ParticularPremise => "2a",
            Rule::NegativePremise => "2b",
            Rule::UndistributedMiddle => "3a",
            Rule::IllicitMajor => "3b",
            Rule::IllicitMinor => "3c",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RuleReport {
    pub violations: Vec<Rule>,
}

impl RuleReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Standard distribution table: A distributes its subject, E both terms,
/// I neither, O its predicate.
pub fn distributes(prop: &Proposition, term: Term) -> bool {
    let subject = prop.subject == term && matches!(prop.quantifier, Quantifier::A | Quantifier::E);
    let predicate = prop.predicate == term && matches!(prop.quantifier, Quantifier::E | Quantifier::O);
    subject || predicate
}

pub fn classical_rules_check(mood: &Mood) -> RuleReport {
    let major = mood.major_premise();
    let minor = mood.minor_premise();
    let conclusion = mood.conclusion_statement();
    let (mq, nq, cq) = (mood.major, mood.minor, mood.conclusion);

    let mut violations = Vec::new();
    if mq.is_particular() && nq.is_particular() {
        violations.push(Rule::TwoParticular);
    }
    if mq.is_negative() && nq.is_negative() {
        violations.push(Rule::TwoNegative);
    }
    if (mq.is_particular() || nq.is_particular()) && !cq.is_particular() {
        violations.push(Rule::ParticularPremise);
    }
    if (mq.is_negative() || nq.is_negative()) && !cq.is_negative() {
        violations.push(Rule::NegativePremise);
    }
    if !distributes(&major, Term::M) && !distributes(&minor, Term::M) {
        violations.push(Rule::UndistributedMiddle);
    }
    if distributes(&conclusion, Term::P) && !distributes(&major, Term::P) {
        violations.push(Rule::IllicitMajor);
    }
    if distributes(&conclusion, Term::S) && !distributes(&minor, Term::S) {
        violations.push(Rule::IllicitMinor);
    }
    RuleReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Figure;
    use Quantifier::{A, E, I, O};

    fn mood(major: Quantifier, minor: Quantifier, conclusion: Quantifier, figure: u8) -> Mood {
        Mood::new(major, minor, conclusion, Figure::new(figure).unwrap())
    }

    const EMPTY: RegionModel = RegionModel(0);
    // S, M and P all inside: bit 0b111
    const ONLY_SMP: RegionModel = RegionModel(1 << 7);

    #[test]
    fn statement_semantics() {
        assert!(eval_statement(&Proposition::new(A, Term::S, Term::P), EMPTY));
        assert!(!eval_statement(&Proposition::new(I, Term::S, Term::P), EMPTY));
        assert!(!eval_statement(&Proposition::new(E, Term::S, Term::P), ONLY_SMP));
        assert!(eval_statement(&Proposition::new(I, Term::S, Term::P), ONLY_SMP));
        assert!(!eval_statement(&Proposition::new(O, Term::S, Term::P), ONLY_SMP));
    }

    #[test]
    fn validity() {
        assert!(semantically_valid(&mood(A, A, A, 1), Condition::Unconditional));
        assert!(!semantically_valid(&mood(A, A, I, 3), Condition::Unconditional));
        assert!(semantically_valid(&mood(A, A, I, 3), Condition::MExists));
        assert!(!semantically_valid(&mood(A, A, A, 2), Condition::Unconditional));
        let cm = countermodel(&mood(A, A, A, 2), Condition::Unconditional).unwrap();
        assert!(eval_statement(&mood(A, A, A, 2).major_premise(), cm));
    }

    #[test]
    fn rules() {
        assert!(classical_rules_check(&mood(O, O, O, 1)).violations.contains(&Rule::TwoParticular));
        assert!(classical_rules_check(&mood(E, E, E, 1)).violations.contains(&Rule::TwoNegative));
        assert!(classical_rules_check(&mood(A, A, A, 1)).is_clean());
        assert_eq!(classical_rules_check(&mood(A, A, A, 2)).violations, [Rule::UndistributedMiddle]);
        assert_eq!(classical_rules_check(&mood(A, E, E, 1)).violations, [Rule::IllicitMajor]);
        assert_eq!(classical_rules_check(&mood(A, A, A, 3)).violations, [Rule::IllicitMinor]);
        assert_eq!(classical_rules_check(&mood(A, I, A, 1)).violations, [Rule::ParticularPremise, Rule::IllicitMinor]);
        assert_eq!(classical_rules_check(&mood(E, A, A, 1)).violations, [Rule::NegativePremise]);
    }

    #[test]
    fn distribution_table() {
        let a = Proposition::new(A, Term::S, Term::P);
        assert!(distributes(&a, Term::S) && !distributes(&a, Term::P));
        let o = Proposition::new(O, Term::S, Term::P);
        assert!(!distributes(&o, Term::S) && distributes(&o, Term::P));
    }
}
