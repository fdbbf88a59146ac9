//! Mood notation (`AAA-1`) and the statement language
//! (`All M are P`, `Some S are not P`, ...).

use thiserror::Error;

use crate::bilateral::{Proposition, Quantifier};
use crate::engine::{Figure, Mood};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("subject and predicate are both `{0}`")]
    SameTerms(String),
    #[error("not a syllogism: {0}")]
    Structure(String),
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        position,
        message: message.into(),
    }
}

/// Parses `XYZ-n` with letters from A, E, I, O (either case) and `n` in 1..4.
pub fn parse_mood(text: &str) -> Result<Mood, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut letters = [Quantifier::A; 3];
    for (i, slot) in letters.iter_mut().enumerate() {
        let c = *chars.get(i).ok_or_else(|| syntax(i, "expected three letters from A, E, I, O"))?;
        *slot = Quantifier::from_letter(c).ok_or_else(|| syntax(i, format!("`{c}` is not one of A, E, I, O")))?;
    }
    match chars.get(3) {
        Some('-') => {}
        Some(c) => return Err(syntax(3, format!("expected `-`, found `{c}`"))),
        None => return Err(syntax(3, "expected `-` and a figure number")),
    }
    let figure = match chars.get(4) {
        Some(&c @ '1'..='4') => Figure::new(c as u8 - b'0').expect("digit in range"),
        Some(c) => return Err(syntax(4, format!("expected figure 1-4, found `{c}`"))),
        None => return Err(syntax(4, "expected figure 1-4")),
    };
    if chars.len() > 5 {
        return Err(syntax(5, "unexpected trailing input"));
    }
    let [major, minor, conclusion] = letters;
    Ok(Mood::new(major, minor, conclusion, figure))
}

const KEYWORDS: [&str; 5] = ["all", "no", "some", "are", "not"];

fn is_keyword(word: &str, keyword: &str) -> bool {
    word.eq_ignore_ascii_case(keyword)
}

fn is_identifier(word: &str) -> bool {
    let mut chars = word.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
        && !KEYWORDS.iter().any(|k| is_keyword(word, k))
}

/// Whitespace-separated words with their character offsets.
fn tokenize(text: &str) -> Vec<(usize, &str)> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (pos, (byte, c)) in text.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((pos, byte)),
            (true, Some((p, b))) => {
                tokens.push((p, &text[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((p, b)) = start {
        tokens.push((p, &text[b..]));
    }
    tokens
}

struct Cursor<'a> {
    tokens: Vec<(usize, &'a str)>,
    next: usize,
    end: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<(usize, &'a str)> {
        self.tokens.get(self.next).copied()
    }

    fn bump(&mut self) -> Option<(usize, &'a str)> {
        let tok = self.peek();
        self.next += 1;
        tok
    }

    fn keyword(&mut self, keyword: &str) -> Result<(), ParseError> {
        match self.bump() {
            Some((_, w)) if is_keyword(w, keyword) => Ok(()),
            Some((pos, w)) => Err(syntax(pos, format!("expected `{keyword}`, found `{w}`"))),
            None => Err(syntax(self.end, format!("expected `{keyword}`"))),
        }
    }

    fn term(&mut self) -> Result<String, ParseError> {
        match self.bump() {
            Some((_, w)) if is_identifier(w) => Ok(w.to_string()),
            Some((pos, w)) => Err(syntax(pos, format!("expected a term, found `{w}`"))),
            None => Err(syntax(self.end, "expected a term")),
        }
    }
}

/// Parses one categorical statement:
///
/// ```text
/// statement := ("All" | "No") term "are" term
///            | "Some" term "are" ["not"] term
/// ```
///
/// Keywords are case-insensitive, terms are case-sensitive.
pub fn parse_statement(text: &str) -> Result<Proposition<String>, ParseError> {
    let mut cur = Cursor {
        tokens: tokenize(text),
        next: 0,
        end: text.chars().count(),
    };
    let (pos, first) = cur.bump().ok_or_else(|| syntax(0, "empty statement"))?;
    let quantifier = if is_keyword(first, "all") {
        Quantifier::A
    } else if is_keyword(first, "no") {
        Quantifier::E
    } else if is_keyword(first, "some") {
        Quantifier::I
    } else {
        return Err(syntax(pos, format!("expected `All`, `No` or `Some`, found `{first}`")));
    };
    let subject = cur.term()?;
    cur.keyword("are")?;
    let quantifier = match cur.peek() {
        Some((_, w)) if quantifier == Quantifier::I && is_keyword(w, "not") => {
            cur.bump();
            Quantifier::O
        }
        _ => quantifier,
    };
    let predicate = cur.term()?;
    if let Some((pos, w)) = cur.peek() {
        return Err(syntax(pos, format!("unexpected `{w}` after statement")));
    }
    if subject == predicate {
        return Err(ParseError::SameTerms(subject));
    }
    Ok(Proposition::new(quantifier, subject, predicate))
}

/// Names of the three terms as they appeared in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermNames {
    pub subject: String,
    pub middle: String,
    pub predicate: String,
}

impl Default for TermNames {
    fn default() -> Self {
        TermNames {
            subject: "S".into(),
            middle: "M".into(),
            predicate: "P".into(),
        }
    }
}

/// Works out the figure from where the middle term sits in each premise.
/// The conclusion fixes S (its subject) and P (its predicate); the major
/// premise must relate P to the middle term and the minor premise S to it.
pub fn infer_figure(
    major: &Proposition<String>,
    minor: &Proposition<String>,
    conclusion: &Proposition<String>,
) -> Result<(Figure, TermNames), ParseError> {
    let s = &conclusion.subject;
    let p = &conclusion.predicate;
    if s == p {
        return Err(ParseError::Structure("conclusion relates a term to itself".into()));
    }
    let other = |prop: &Proposition<String>, known: &String, role: &str| -> Result<String, ParseError> {
        if &prop.subject == known {
            Ok(prop.predicate.clone())
        } else if &prop.predicate == known {
            Ok(prop.subject.clone())
        } else {
            Err(ParseError::Structure(format!(
                "{role} premise `{prop}` does not mention `{known}` from the conclusion"
            )))
        }
    };
    let major_middle = other(major, p, "major")?;
    let minor_middle = other(minor, s, "minor")?;
    if major_middle != minor_middle {
        return Err(ParseError::Structure(format!(
            "premises share no middle term (`{major_middle}` vs `{minor_middle}`)"
        )));
    }
    let middle = major_middle;
    if &middle == s || &middle == p {
        return Err(ParseError::Structure(format!(
            "middle term `{middle}` also occurs in the conclusion"
        )));
    }
    let index = match (major.subject == middle, minor.predicate == middle) {
        (true, true) => 1,
        (false, true) => 2,
        (true, false) => 3,
        (false, false) => 4,
    };
    let names = TermNames {
        subject: s.clone(),
        middle,
        predicate: p.clone(),
    };
    Ok((Figure::new(index).expect("1..=4"), names))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statements {
    pub mood: Mood,
    pub names: TermNames,
    pub premises: [Proposition<String>; 2],
    pub conclusion: Proposition<String>,
}

/// A `check` or `render` argument: mood notation or three statements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedInput {
    Mood(Mood),
    Statements(Box<Statements>),
}

impl ParsedInput {
    pub fn mood(&self) -> Mood {
        match self {
            ParsedInput::Mood(m) => *m,
            ParsedInput::Statements(st) => st.mood,
        }
    }

    pub fn names(&self) -> TermNames {
        match self {
            ParsedInput::Mood(_) => TermNames::default(),
            ParsedInput::Statements(st) => st.names.clone(),
        }
    }
}

/// Mood notation when the input has no spaces, otherwise three statements
/// (major premise, minor premise, conclusion) separated by `;` or newlines.
pub fn parse_input(text: &str) -> Result<ParsedInput, ParseError> {
    let trimmed = text.trim();
    if !trimmed.contains(char::is_whitespace) {
        return parse_mood(trimmed).map(ParsedInput::Mood);
    }
    let parts: Vec<&str> = trimmed
        .split([';', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let [major, minor, conclusion] = parts[..] else {
        return Err(ParseError::Structure(format!(
            "expected three statements separated by `;`, got {}",
            parts.len()
        )));
    };
    let major = parse_statement(major)?;
    let minor = parse_statement(minor)?;
    let conclusion = parse_statement(conclusion)?;
    let (figure, names) = infer_figure(&major, &minor, &conclusion)?;
    let mood = Mood::new(major.quantifier, minor.quantifier, conclusion.quantifier, figure);
    Ok(ParsedInput::Statements(Box::new(Statements {
        mood,
        names,
        premises: [major, minor],
        conclusion,
    })))
}
