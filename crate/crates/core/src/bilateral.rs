//! Two-term Carroll diagrams.
//!
//! A bilateral diagram is a 2x2 grid whose rows are a term and its
//! complement (`Y'` above `Y`) and whose columns are another term and its
//! complement (`X'` left of `X`). A *possible form* fills every cell with
//! 0 (empty) or 1 (occupied) and is encoded as a 4-bit value:
//!
//! ```text
//!        X'   X
//!   Y'   n1   n2        value = 8*n1 + 4*n2 + 2*n3 + n4
//!   Y    n3   n4
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The four categorical quantifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quantifier {
    /// All X are Y.
    A,
    /// No X are Y.
    E,
    /// Some X are Y.
    I,
    /// Some X are not Y.
    O,
}

impl Quantifier {
    pub const ALL: [Quantifier; 4] = [Quantifier::A, Quantifier::E, Quantifier::I, Quantifier::O];

    pub fn letter(self) -> char {
        match self {
            Quantifier::A => 'A',
            Quantifier::E => 'E',
            Quantifier::I => 'I',
            Quantifier::O => 'O',
        }
    }

    /// Case-insensitive.
    pub fn from_letter(c: char) -> Option<Quantifier> {
        match c.to_ascii_uppercase() {
            'A' => Some(Quantifier::A),
            'E' => Some(Quantifier::E),
            'I' => Some(Quantifier::I),
            'O' => Some(Quantifier::O),
            _ => None,
        }
    }

    pub fn is_universal(self) -> bool {
        matches!(self, Quantifier::A | Quantifier::E)
    }

    pub fn is_particular(self) -> bool {
        !self.is_universal()
    }

    pub fn is_negative(self) -> bool {
        matches!(self, Quantifier::E | Quantifier::O)
    }

    pub fn is_affirmative(self) -> bool {
        !self.is_negative()
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// The three terms of a syllogism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Term {
    /// Subject of the conclusion.
    S,
    /// Middle term.
    M,
    /// Predicate of the conclusion.
    P,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Term::S => "S",
            Term::M => "M",
            Term::P => "P",
        };
        f.write_str(name)
    }
}

/// A categorical statement `quantifier subject predicate`.
///
/// Generic over the term type so the statement parser can carry arbitrary
/// identifiers; the engine works with [`Term`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Proposition<T = Term> {
    pub quantifier: Quantifier,
    pub subject: T,
    pub predicate: T,
}

impl<T> Proposition<T> {
    pub fn new(quantifier: Quantifier, subject: T, predicate: T) -> Self {
        Proposition {
            quantifier,
            subject,
            predicate,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Proposition<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, p) = (&self.subject, &self.predicate);
        match self.quantifier {
            Quantifier::A => write!(f, "All {s} are {p}"),
            Quantifier::E => write!(f, "No {s} are {p}"),
            Quantifier::I => write!(f, "Some {s} are {p}"),
            Quantifier::O => write!(f, "Some {s} are not {p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BilateralError {
    #[error("row and column term must differ (got {0} twice)")]
    DegenerateOrientation(String),
    #[error("term {term} is not one of the diagram's terms ({row}, {col})")]
    TermMismatch {
        term: String,
        row: String,
        col: String,
    },
}

/// Which term labels the rows and which labels the columns of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation<T = Term> {
    row: T,
    col: T,
}

impl<T: PartialEq + fmt::Display> Orientation<T> {
    pub fn new(row: T, col: T) -> Result<Self, BilateralError> {
        if row == col {
            return Err(BilateralError::DegenerateOrientation(row.to_string()));
        }
        Ok(Orientation { row, col })
    }
}

impl<T: Clone> Orientation<T> {
    /// The self-diagram of a single term, used only for the existence
    /// constant "Some X are X".
    pub fn reflexive(term: T) -> Self {
        Orientation {
            row: term.clone(),
            col: term,
        }
    }
}

impl<T> Orientation<T> {
    pub fn row(&self) -> &T {
        &self.row
    }

    pub fn col(&self) -> &T {
        &self.col
    }
}

/// A fully determined bilateral diagram, stored as its value `0..=15`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BilateralForm(u8);

impl BilateralForm {
    pub const N1: u8 = 8;
    pub const N2: u8 = 4;
    pub const N3: u8 = 2;
    pub const N4: u8 = 1;

    /// Returns `None` for values above 15.
    pub fn new(value: u8) -> Option<Self> {
        (value < 16).then_some(BilateralForm(value))
    }

    /// Builds a form from the cells in reading order `n1, n2, n3, n4`.
    pub fn from_cells(cells: [bool; 4]) -> Self {
        BilateralForm(form_value(cells))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn cells(self) -> [bool; 4] {
        [
            self.0 & Self::N1 != 0,
            self.0 & Self::N2 != 0,
            self.0 & Self::N3 != 0,
            self.0 & Self::N4 != 0,
        ]
    }

    /// Occupancy of the cell at the given row side (`true` = the row term,
    /// `false` = its complement) and column side.
    pub fn cell(self, in_row: bool, in_col: bool) -> bool {
        self.0 & cell_weight(in_row, in_col) != 0
    }

    pub fn transpose(self) -> Self {
        BilateralForm(transpose_form(self.0))
    }

    pub fn all() -> impl Iterator<Item = BilateralForm> {
        (0..16).map(BilateralForm)
    }
}

impl fmt::Display for BilateralForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bit weight of a cell given its row and column side.
pub fn cell_weight(in_row: bool, in_col: bool) -> u8 {
    match (in_row, in_col) {
        (false, false) => BilateralForm::N1,
        (false, true) => BilateralForm::N2,
        (true, false) => BilateralForm::N3,
        (true, true) => BilateralForm::N4,
    }
}

/// Value of a possible form: the sum of `2^(4-i) * n_i` over the four cells.
pub fn form_value(cells: [bool; 4]) -> u8 {
    cells
        .iter()
        .enumerate()
        .map(|(i, &occupied)| u8::from(occupied) << (3 - i))
        .sum()
}

/// Reflects a form across the main diagonal, swapping `n2` and `n3`.
pub fn transpose_form(value: u8) -> u8 {
    debug_assert!(value < 16);
    let n2 = value & BilateralForm::N2;
    let n3 = value & BilateralForm::N3;
    (value & (BilateralForm::N1 | BilateralForm::N4)) | (n2 >> 1) | (n3 << 1)
}

/// A set of possible forms, stored as a 16-bit membership mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FormSet(u16);

impl FormSet {
    pub const EMPTY: FormSet = FormSet(0);
    pub const FULL: FormSet = FormSet(u16::MAX);

    pub fn from_mask(mask: u16) -> Self {
        FormSet(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn singleton(form: BilateralForm) -> Self {
        FormSet(1 << form.value())
    }

    pub fn from_predicate(pred: impl Fn(BilateralForm) -> bool) -> Self {
        BilateralForm::all().filter(|&f| pred(f)).collect()
    }

    /// Panics if any value exceeds 15.
    pub fn from_values(values: &[u8]) -> Self {
        values
            .iter()
            .map(|&v| BilateralForm::new(v).expect("form value out of range"))
            .collect()
    }

    pub fn contains(self, form: BilateralForm) -> bool {
        self.0 & (1 << form.value()) != 0
    }

    pub fn insert(&mut self, form: BilateralForm) {
        self.0 |= 1 << form.value();
    }

    pub fn union(self, other: FormSet) -> FormSet {
        FormSet(self.0 | other.0)
    }

    pub fn intersection(self, other: FormSet) -> FormSet {
        FormSet(self.0 & other.0)
    }

    pub fn complement(self) -> FormSet {
        FormSet(!self.0)
    }

    pub fn is_subset(self, other: FormSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = BilateralForm> {
        BilateralForm::all().filter(move |&f| self.contains(f))
    }

    pub fn values(self) -> Vec<u8> {
        self.iter().map(BilateralForm::value).collect()
    }
}

impl FromIterator<BilateralForm> for FormSet {
    fn from_iter<I: IntoIterator<Item = BilateralForm>>(iter: I) -> Self {
        let mut set = FormSet::EMPTY;
        for form in iter {
            set.insert(form);
        }
        set
    }
}

impl fmt::Display for FormSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, form) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{form}")?;
        }
        f.write_str("}")
    }
}

/// Pointwise transposition of a set of forms.
pub fn transpose_set(set: FormSet) -> FormSet {
    set.iter().map(BilateralForm::transpose).collect()
}

/// The cell a proposition constrains, as `(in_row, in_col)`, together with
/// the value the cell is forced to.
fn forced_cell<T>(prop: &Proposition<T>, orient: &Orientation<T>) -> Result<((bool, bool), bool), BilateralError>
where
    T: PartialEq + fmt::Display,
{
    let mismatch = |term: &T| BilateralError::TermMismatch {
        term: term.to_string(),
        row: orient.row.to_string(),
        col: orient.col.to_string(),
    };
    let subject_is_row = if prop.subject == orient.row {
        true
    } else if prop.subject == orient.col {
        false
    } else {
        return Err(mismatch(&prop.subject));
    };
    // The predicate occupies whichever axis the subject does not; on a
    // self-diagram both axes carry the same term.
    let predicate_axis_term = if subject_is_row { &orient.col } else { &orient.row };
    if prop.predicate != *predicate_axis_term {
        return Err(mismatch(&prop.predicate));
    }

    // A and O speak about subject ∩ predicate', E and I about subject ∩ predicate.
    let predicate_side = matches!(prop.quantifier, Quantifier::E | Quantifier::I);
    let occupied = matches!(prop.quantifier, Quantifier::I | Quantifier::O);
    let cell = if subject_is_row {
        (true, predicate_side)
    } else {
        (predicate_side, true)
    };
    Ok((cell, occupied))
}

/// All possible forms of a categorical statement drawn in the given
/// orientation. One cell is forced and the other three are free, so the
/// result always has eight members.
pub fn proposition_form_set<T>(prop: &Proposition<T>, orient: &Orientation<T>) -> Result<FormSet, BilateralError>
where
    T: PartialEq + fmt::Display,
{
    let ((in_row, in_col), occupied) = forced_cell(prop, orient)?;
    Ok(FormSet::from_predicate(|f| f.cell(in_row, in_col) == occupied))
}

/// Possible forms of "Some X are X" on the self-diagram of X: the two
/// off-diagonal cells pair X with its own complement and are empty, the
/// X/X cell is occupied, and the X'/X' cell is free.
pub fn existence_constant() -> FormSet {
    FormSet::from_predicate(|f| f.cell(true, true) && !f.cell(true, false) && !f.cell(false, true))
}
