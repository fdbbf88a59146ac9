//! Command-line front end.
//!
//! Exit codes: 0 valid / success, 1 invalid / check failed, 2 bad input,
//! 3 engine and oracle disagree.

pub mod parse;
pub mod render;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bilateral::{BilateralForm, Proposition, Term};
use crate::engine::{decide, enumerate_valid, Condition, EngineConfig, Figure, Mood, Verdict};
use crate::oracle::{classical_rules_check, semantically_valid, Rule};
use crate::trilateral::{star, verify_star_table, StarFixture, StarTable};

use parse::{parse_input, ParsedInput, TermNames};
use render::{render_bilateral, Diagram};

pub const EXIT_VALID: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "syllogism", version, about = "Decide categorical syllogisms with Carroll diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Assume {
    None,
    S,
    M,
    P,
}

impl From<Assume> for Condition {
    fn from(a: Assume) -> Condition {
        match a {
            Assume::None => Condition::Unconditional,
            Assume::S => Condition::SExists,
            Assume::M => Condition::MExists,
            Assume::P => Condition::PExists,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide one syllogism, given as `AAA-1` or as three statements
    /// separated by `;` (major premise, minor premise, conclusion).
    Check {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
        #[arg(long, value_enum, default_value = "none")]
        assume: Assume,
        #[arg(long, value_enum, default_value = "text")]
        format: CheckFormat,
        /// Skip the brute-force cross-check.
        #[arg(long)]
        no_oracle: bool,
    },
    /// List the valid moods under an existence assumption.
    Enumerate {
        #[arg(long, value_enum, default_value = "none")]
        assume: Assume,
        /// Only moods that need the assumption.
        #[arg(long)]
        only_conditional: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: ListFormat,
    },
    /// Evaluate `major * minor` for two form values.
    Star { major: u8, minor: u8 },
    /// Print the derived star table, or compare it with the fixture.
    Table {
        #[arg(long)]
        verify: bool,
        /// Fixture file to compare against instead of the bundled one.
        #[arg(long, value_name = "PATH")]
        fixture: Option<PathBuf>,
    },
    /// List every mood/condition pair where engine and oracle disagree.
    OracleDiff,
    /// Draw the premise and conclusion diagrams of a syllogism.
    Render {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
    },
}

/// Machine-readable verdict of one mood under one condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub mood: String,
    pub condition: String,
    pub valid: bool,
    pub conclusion_set: Vec<u8>,
    pub oracle_valid: Option<bool>,
    pub rule_violations: Vec<&'static str>,
}

impl Report {
    pub fn new(verdict: &Verdict, oracle_valid: Option<bool>) -> Self {
        let rules = classical_rules_check(&verdict.mood);
        Report {
            mood: verdict.mood.to_string(),
            condition: verdict.condition.flag().to_string(),
            valid: verdict.valid,
            conclusion_set: verdict.premises_conclusion.values(),
            oracle_valid,
            rule_violations: rules.violations.iter().map(|r| Rule::id(*r)).collect(),
        }
    }

    pub fn disagrees(&self) -> bool {
        self.oracle_valid.is_some_and(|o| o != self.valid)
    }
}

/// Runs one command. Output is collected and written in one go; the return
/// value is the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_VALID };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };

    let mut buf = String::new();
    let code = match dispatch(cli.command, &mut buf) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    };
    let _ = out.write_all(buf.as_bytes());
    let _ = out.flush();
    code
}

fn dispatch(command: Command, buf: &mut String) -> Result<i32, String> {
    let config = EngineConfig::default();
    match command {
        Command::Check {
            input,
            assume,
            format,
            no_oracle,
        } => {
            let parsed = parse_input(&input.join(" ")).map_err(|e| e.to_string())?;
            Ok(check(&parsed, assume.into(), format, !no_oracle, &config, buf))
        }
        Command::Enumerate {
            assume,
            only_conditional,
            format,
        } => enumerate(assume.into(), only_conditional, format, &config, buf),
        Command::Star { major, minor } => {
            let (a, b) = match (BilateralForm::new(major), BilateralForm::new(minor)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(format!("form values must be 0..15, got {major} and {minor}")),
            };
            let _ = writeln!(buf, "{}", star(a, b));
            Ok(EXIT_VALID)
        }
        Command::Table { verify, fixture } => {
            if !verify {
                write_table(buf);
                return Ok(EXIT_VALID);
            }
            let fixture = match fixture {
                Some(path) => StarFixture::load(&path).map_err(|e| e.to_string())?,
                None => StarFixture::embedded(),
            };
            let diffs = verify_star_table(&fixture);
            for d in &diffs {
                let _ = writeln!(buf, "{d}");
            }
            let _ = writeln!(buf, "{} of 256 entries differ", diffs.len());
            Ok(if diffs.is_empty() { EXIT_VALID } else { EXIT_INVALID })
        }
        Command::OracleDiff => {
            let mut count = 0;
            for condition in Condition::ALL {
                for mood in Mood::all() {
                    let engine = decide(&mood, condition, &config).valid;
                    let oracle = semantically_valid(&mood, condition);
                    if engine != oracle {
                        count += 1;
                        let _ = writeln!(buf, "{mood} ({condition}): engine {engine}, oracle {oracle}");
                    }
                }
            }
            let _ = writeln!(buf, "{count} disagreements over 1024 cases");
            Ok(if count == 0 { EXIT_VALID } else { EXIT_DISAGREEMENT })
        }
        Command::Render { input } => {
            let parsed = parse_input(&input.join(" ")).map_err(|e| e.to_string())?;
            render_input(&parsed, buf);
            Ok(EXIT_VALID)
        }
    }
}

fn verdict_word(valid: bool) -> &'static str {
    if valid {
        "Valid"
    } else {
        "Invalid"
    }
}

fn check(parsed: &ParsedInput, condition: Condition, format: CheckFormat, with_oracle: bool, config: &EngineConfig, buf: &mut String) -> i32 {
    let mood = parsed.mood();
    let verdict = decide(&mood, condition, config);
    let oracle = with_oracle.then(|| semantically_valid(&mood, condition));
    let report = Report::new(&verdict, oracle);

    match format {
        CheckFormat::Json => {
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            let _ = writeln!(buf, "{json}");
        }
        CheckFormat::Text => {
            let _ = writeln!(buf, "{}", verdict_word(verdict.valid));
            let _ = writeln!(buf, "mood: {mood} ({condition})");
            let _ = writeln!(buf, "premises conclusion: {}", verdict.premises_conclusion);
            let matched: Vec<String> = verdict.matched.iter().map(ToString::to_string).collect();
            let _ = writeln!(buf, "entailed conclusions: {}", if matched.is_empty() { "none".into() } else { matched.join(", ") });
            if let Some(o) = oracle {
                let _ = writeln!(buf, "oracle: {}", verdict_word(o));
            }
            let rules = if report.rule_violations.is_empty() {
                "none".to_string()
            } else {
                report.rule_violations.join(", ")
            };
            let _ = writeln!(buf, "classical rule violations: {rules}");
            if report.disagrees() {
                let _ = writeln!(buf, "ENGINE/ORACLE DISAGREEMENT");
            }
        }
    }

    if report.disagrees() {
        EXIT_DISAGREEMENT
    } else if verdict.valid {
        EXIT_VALID
    } else {
        EXIT_INVALID
    }
}

fn enumerate(condition: Condition, only_conditional: bool, format: ListFormat, config: &EngineConfig, buf: &mut String) -> Result<i32, String> {
    let valid = enumerate_valid(condition, config, only_conditional);
    let reports: Vec<Report> = valid
        .iter()
        .map(|(mood, v)| Report::new(v, Some(semantically_valid(mood, condition))))
        .collect();
    // moods the oracle accepts but the engine missed
    let missed = Mood::all()
        .filter(|m| {
            let engine = valid.iter().any(|(v, _)| v == m);
            let required = semantically_valid(m, condition)
                && !(only_conditional && semantically_valid(m, Condition::Unconditional));
            required && !engine
        })
        .count();

    match format {
        ListFormat::Json => {
            let json = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?;
            let _ = writeln!(buf, "{json}");
        }
        ListFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["mood", "figure", "condition", "valid", "conclusion_set", "oracle_valid"])
                .map_err(|e| e.to_string())?;
            for ((mood, _), r) in valid.iter().zip(&reports) {
                let set: Vec<String> = r.conclusion_set.iter().map(u8::to_string).collect();
                w.write_record([
                    r.mood.clone(),
                    mood.figure.to_string(),
                    r.condition.clone(),
                    r.valid.to_string(),
                    set.join(" "),
                    r.oracle_valid.map_or(String::new(), |o| o.to_string()),
                ])
                .map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            buf.push_str(&String::from_utf8(bytes).map_err(|e| e.to_string())?);
        }
        ListFormat::Table => write_figure_columns(&valid, condition, buf),
    }

    let disagreements = reports.iter().filter(|r| r.disagrees()).count() + missed;
    Ok(if disagreements == 0 { EXIT_VALID } else { EXIT_DISAGREEMENT })
}

fn write_figure_columns(valid: &[(Mood, Verdict)], condition: Condition, buf: &mut String) {
    let columns: Vec<Vec<String>> = Figure::ALL
        .iter()
        .map(|&f| {
            valid
                .iter()
                .filter(|(m, _)| m.figure == f)
                .map(|(m, _)| format!("{}{}{}", m.major, m.minor, m.conclusion))
                .collect()
        })
        .collect();
    let _ = writeln!(buf, "{condition}");
    let header = ["Figure I", "Figure II", "Figure III", "Figure IV"];
    let depth = columns.iter().map(Vec::len).max().unwrap_or(0);
    let rows = std::iter::once(header.map(String::from).to_vec()).chain(
        (0..depth).map(|row| columns.iter().map(|c| c.get(row).cloned().unwrap_or_default()).collect()),
    );
    for cells in rows {
        let line: String = cells.iter().map(|c| format!("{c:<12}")).collect();
        let _ = writeln!(buf, "{}", line.trim_end());
    }
    let _ = writeln!(buf, "{} moods", valid.len());
}

/// Row and column order used when printing the table: forms grouped by how
/// they constrain the middle term.
const TABLE_ORDER: [u8; 16] = [0, 1, 2, 3, 4, 8, 12, 5, 10, 6, 9, 7, 11, 13, 14, 15];

fn write_table(buf: &mut String) {
    let table = StarTable::global();
    let _ = writeln!(buf, "rows: major form (M/P), columns: minor form (M/S)");
    for a in TABLE_ORDER {
        for b in TABLE_ORDER {
            let result = table.get(BilateralForm::new(a).unwrap(), BilateralForm::new(b).unwrap());
            if result.is_defined() {
                let _ = writeln!(buf, "{a} * {b} = {result}");
            }
        }
    }
}

fn render_input(parsed: &ParsedInput, buf: &mut String) {
    let names = parsed.names();
    let mood = parsed.mood();
    let TermNames {
        subject,
        middle,
        predicate,
    } = &names;
    let name = |t: Term| match t {
        Term::S => subject.clone(),
        Term::M => middle.clone(),
        Term::P => predicate.clone(),
    };
    let named = |p: Proposition| Proposition::new(p.quantifier, name(p.subject), name(p.predicate));
    let sections = [
        ("Major premise", named(mood.major_premise()), middle, predicate),
        ("Minor premise", named(mood.minor_premise()), middle, subject),
        ("Conclusion", named(mood.conclusion_statement()), subject, predicate),
    ];
    let _ = writeln!(buf, "{mood}");
    for (title, prop, row, col) in sections {
        let _ = writeln!(buf, "\n{title}: {prop}");
        let _ = writeln!(buf, "{}", render_bilateral(&Diagram::from_statement(&prop, row, col)));
    }
}
