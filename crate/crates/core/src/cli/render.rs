//! Plain-text bilateral diagrams.

use crate::bilateral::{BilateralForm, Proposition, Quantifier};

/// Content of one diagram cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mark {
    Empty,
    Occupied,
    Unknown,
}

impl Mark {
    fn symbol(self) -> &'static str {
        match self {
            Mark::Empty => "0",
            Mark::Occupied => "1",
            Mark::Unknown => "",
        }
    }
}

/// A bilateral diagram with labels; cells in reading order
/// `(row', col')`, `(row', col)`, `(row, col')`, `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub row: String,
    pub col: String,
    pub cells: [Mark; 4],
}

impl Diagram {
    pub fn from_form(form: BilateralForm, row: &str, col: &str) -> Self {
        let cells = form.cells().map(|occupied| if occupied { Mark::Occupied } else { Mark::Empty });
        Diagram {
            row: row.to_string(),
            col: col.to_string(),
            cells,
        }
    }

    /// The constraint diagram of a statement: only the cell the statement
    /// speaks about is marked. The statement's terms must be `row` and `col`.
    pub fn from_statement(prop: &Proposition<String>, row: &str, col: &str) -> Self {
        let subject_is_row = prop.subject == row;
        debug_assert!(subject_is_row || prop.subject == col);
        let on_predicate = matches!(prop.quantifier, Quantifier::E | Quantifier::I);
        let (in_row, in_col) = if subject_is_row {
            (true, on_predicate)
        } else {
            (on_predicate, true)
        };
        let mark = if matches!(prop.quantifier, Quantifier::A | Quantifier::E) {
            Mark::Empty
        } else {
            Mark::Occupied
        };
        let index = usize::from(in_row) * 2 + usize::from(in_col);
        let mut cells = [Mark::Unknown; 4];
        cells[index] = mark;
        Diagram {
            row: row.to_string(),
            col: col.to_string(),
            cells,
        }
    }
}

/// Draws a 2x2 grid: columns `col'` then `col`, rows `row'` then `row`.
pub fn render_bilateral(diagram: &Diagram) -> String {
    let labels = [
        String::new(),
        format!("{}'", diagram.col),
        diagram.col.clone(),
        format!("{}'", diagram.row),
        diagram.row.clone(),
    ];
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1).max(1);
    let rule = format!("+{}", format!("{}+", "-".repeat(width + 2)).repeat(3));
    let line = |a: &str, b: &str, c: &str| format!("| {a:^width$} | {b:^width$} | {c:^width$} |");

    let c = diagram.cells.map(Mark::symbol);
    [
        rule.clone(),
        line(&labels[0], &labels[1], &labels[2]),
        rule.clone(),
        line(&labels[3], c[0], c[1]),
        rule.clone(),
        line(&labels[4], c[2], c[3]),
        rule,
    ]
    .join("\n")
}
