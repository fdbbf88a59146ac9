//! Syllogism decision procedure on top of the `*` operation.
//!
//! Each premise is turned into the set of its possible forms (major: rows
//! M, columns P; minor: rows M, columns S). The two sets are combined with
//! `⊛`, the union of `*` over all member pairs, giving the possible S/P
//! conclusion forms. Existential import is handled by composing a premise
//! with the "Some X are X" constant before the final `⊛`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bilateral::{existence_constant, proposition_form_set, transpose_set, FormSet, Orientation, Proposition, Quantifier, Term};
use crate::trilateral::StarTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("figure must be 1..=4, got {0}")]
    FigureOutOfRange(u8),
    #[error("unknown condition `{0}` (expected none, s, m or p)")]
    UnknownCondition(String),
}

/// One of the four syllogistic figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Figure(u8);

impl Figure {
    pub const ALL: [Figure; 4] = [Figure(1), Figure(2), Figure(3), Figure(4)];

    pub fn new(index: u8) -> Result<Self, EngineError> {
        if (1..=4).contains(&index) {
            Ok(Figure(index))
        } else {
            Err(EngineError::FigureOutOfRange(index))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }
}

impl TryFrom<u8> for Figure {
    type Error = EngineError;

    fn try_from(index: u8) -> Result<Self, Self::Error> {
        Figure::new(index)
    }
}

impl From<Figure> for u8 {
    fn from(figure: Figure) -> u8 {
        figure.0
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Subject/predicate order of both premises in a figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FigureLayout {
    pub major: (Term, Term),
    pub minor: (Term, Term),
}

pub fn figure_layout(figure: Figure) -> FigureLayout {
    use Term::{M, P, S};
    match figure.0 {
        1 => FigureLayout { major: (M, P), minor: (S, M) },
        2 => FigureLayout { major: (P, M), minor: (S, M) },
        3 => FigureLayout { major: (M, P), minor: (M, S) },
        4 => FigureLayout { major: (P, M), minor: (M, S) },
        _ => unreachable!("Figure is range checked"),
    }
}

/// Quantifiers of the major premise, minor premise and conclusion, plus the
/// figure. There are 256 moods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mood {
    pub major: Quantifier,
    pub minor: Quantifier,
    pub conclusion: Quantifier,
    pub figure: Figure,
}

impl Mood {
    pub fn new(major: Quantifier, minor: Quantifier, conclusion: Quantifier, figure: Figure) -> Self {
        Mood {
            major,
            minor,
            conclusion,
            figure,
        }
    }

    /// All 256 moods, figure by figure.
    pub fn all() -> impl Iterator<Item = Mood> {
        Figure::ALL.into_iter().flat_map(|figure| {
            Quantifier::ALL.into_iter().flat_map(move |major| {
                Quantifier::ALL.into_iter().flat_map(move |minor| {
                    Quantifier::ALL
                        .into_iter()
                        .map(move |conclusion| Mood::new(major, minor, conclusion, figure))
                })
            })
        })
    }

    pub fn major_premise(&self) -> Proposition {
        let (s, p) = figure_layout(self.figure).major;
        Proposition::new(self.major, s, p)
    }

    pub fn minor_premise(&self) -> Proposition {
        let (s, p) = figure_layout(self.figure).minor;
        Proposition::new(self.minor, s, p)
    }

    pub fn conclusion_statement(&self) -> Proposition {
        Proposition::new(self.conclusion, Term::S, Term::P)
    }
}

impl fmt::Display for Mood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}-{}", self.major, self.minor, self.conclusion, self.figure)
    }
}

/// Existence assumption under which a mood is judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    Unconditional,
    SExists,
    MExists,
    PExists,
}

impl Condition {
    pub const ALL: [Condition; 4] = [Condition::Unconditional, Condition::SExists, Condition::MExists, Condition::PExists];

    /// The term assumed non-empty, if any.
    pub fn term(self) -> Option<Term> {
        match self {
            Condition::Unconditional => None,
            Condition::SExists => Some(Term::S),
            Condition::MExists => Some(Term::M),
            Condition::PExists => Some(Term::P),
        }
    }

    /// Short name used on the command line.
    pub fn flag(self) -> &'static str {
        match self {
            Condition::Unconditional => "none",
            Condition::SExists => "s",
            Condition::MExists => "m",
            Condition::PExists => "p",
        }
    }
}

impl FromStr for Condition {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "none" | "unconditional" => Ok(Condition::Unconditional),
            "s" => Ok(Condition::SExists),
            "m" => Ok(Condition::MExists),
            "p" => Ok(Condition::PExists),
            _ => Err(EngineError::UnknownCondition(s.to_string())),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.term() {
            None => f.write_str("Unconditional"),
            Some(term) => write!(f, "{term} exists"),
        }
    }
}

/// How the premises' conclusion set is compared against a conclusion
/// statement's form set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DecisionRule {
    /// Every possible conclusion form satisfies the statement (subset).
    #[default]
    Entailment,
    /// The two sets coincide exactly.
    ExactMatch,
}

impl DecisionRule {
    fn accepts(self, premises: FormSet, statement: FormSet) -> bool {
        match self {
            DecisionRule::Entailment => premises.is_subset(statement),
            DecisionRule::ExactMatch => premises == statement,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineConfig {
    /// Possible forms of "Some X are X" on the self-diagram of X.
    pub const_set: FormSet,
    /// Form sets of the four conclusion statements, rows S and columns P,
    /// indexed by quantifier.
    pub conclusion_sets: [FormSet; 4],
    pub rule: DecisionRule,
}

impl Default for EngineConfig {
    fn default() -> Self {
        let orient = Orientation::new(Term::S, Term::P).expect("distinct terms");
        let conclusion_sets = Quantifier::ALL.map(|q| {
            proposition_form_set(&Proposition::new(q, Term::S, Term::P), &orient).expect("terms match orientation")
        });
        EngineConfig {
            const_set: existence_constant(),
            conclusion_sets,
            rule: DecisionRule::default(),
        }
    }
}

impl EngineConfig {
    pub fn conclusion_set(&self, q: Quantifier) -> FormSet {
        self.conclusion_sets[q.index()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Major,
    Minor,
}

/// `⊛`: union of `left * right` over all member pairs. Undefined pairs
/// contribute nothing; an empty result means no pair was consistent.
pub fn circledast_raw(left: FormSet, right: FormSet) -> FormSet {
    let table = StarTable::global();
    let mut out = FormSet::EMPTY;
    for l in left.iter() {
        for r in right.iter() {
            if let Some(set) = table.get(l, r).defined() {
                out = out.union(set);
            }
        }
    }
    out
}

/// Form set of one premise in its canonical orientation (rows M; columns P
/// for the major, S for the minor), with the existence constant folded in
/// when the condition concerns this premise.
pub fn interpret_premise(quantifier: Quantifier, role: Role, figure: Figure, condition: Condition, config: &EngineConfig) -> FormSet {
    let layout = figure_layout(figure);
    let ((subject, predicate), other) = match role {
        Role::Major => (layout.major, Term::P),
        Role::Minor => (layout.minor, Term::S),
    };
    let orient = Orientation::new(Term::M, other).expect("distinct terms");
    let base = proposition_form_set(&Proposition::new(quantifier, subject, predicate), &orient)
        .expect("figure layout uses the premise's own terms");

    match (role, condition) {
        // rows S cols S  *  rows S cols M  ->  rows M cols S
        (Role::Minor, Condition::SExists) => circledast_raw(config.const_set, transpose_set(base)),
        // rows M cols S  *  rows M cols M  ->  rows M cols S
        (Role::Minor, Condition::MExists) => circledast_raw(base, config.const_set),
        // rows P cols P  *  rows P cols M  ->  rows M cols P
        (Role::Major, Condition::PExists) => circledast_raw(config.const_set, transpose_set(base)),
        _ => base,
    }
}

/// Possible S/P conclusion forms of a mood's premises under a condition.
pub fn premises_conclusion(mood: &Mood, condition: Condition, config: &EngineConfig) -> FormSet {
    let major = interpret_premise(mood.major, Role::Major, mood.figure, condition, config);
    let minor = interpret_premise(mood.minor, Role::Minor, mood.figure, condition, config);
    circledast_raw(major, minor)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub mood: Mood,
    pub condition: Condition,
    pub valid: bool,
    pub premises_conclusion: FormSet,
    /// Conclusion quantifiers accepted by the decision rule, in A, E, I, O
    /// order. `valid` holds iff the mood's own conclusion is among them.
    pub matched: Vec<Quantifier>,
}

pub fn decide(mood: &Mood, condition: Condition, config: &EngineConfig) -> Verdict {
    let premises = premises_conclusion(mood, condition, config);
    let matched: Vec<Quantifier> = Quantifier::ALL
        .into_iter()
        .filter(|&q| config.rule.accepts(premises, config.conclusion_set(q)))
        .collect();
    Verdict {
        mood: *mood,
        condition,
        valid: matched.contains(&mood.conclusion),
        premises_conclusion: premises,
        matched,
    }
}

/// Decides all 256 moods under `condition` and keeps the valid ones. With
/// `only_conditional`, moods that are already valid unconditionally are
/// dropped.
pub fn enumerate_valid(condition: Condition, config: &EngineConfig, only_conditional: bool) -> Vec<(Mood, Verdict)> {
    Mood::all()
        .filter_map(|mood| {
            let verdict = decide(&mood, condition, config);
            if !verdict.valid {
                return None;
            }
            if only_conditional && decide(&mood, Condition::Unconditional, config).valid {
                return None;
            }
            Some((mood, verdict))
        })
        .collect()
}
