//! Three-term diagrams and the conclusion operation `*`.
//!
//! A trilateral diagram splits each cell of the S/P square by the middle
//! term M, giving eight regions. Two premise forms that share M are laid on
//! it: a 0 in a premise cell empties both regions underneath, a 1 says at
//! least one of them is occupied. Eliminating M then reads each S/P quarter
//! off its two regions. Enumerating every fully determined region
//! assignment turns this into a finite computation, and the `*` table falls
//! out of it.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use thiserror::Error;

use crate::bilateral::{BilateralForm, FormSet};

/// One region of the S/M/P cube; each flag says whether the region lies
/// inside (`true`) or outside the term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Region {
    pub s: bool,
    pub m: bool,
    pub p: bool,
}

impl Region {
    /// Bit index `4*s + 2*m + p`.
    pub fn index(self) -> u8 {
        (u8::from(self.s) << 2) | (u8::from(self.m) << 1) | u8::from(self.p)
    }

    pub fn all() -> impl Iterator<Item = Region> {
        (0u8..8).map(|i| Region {
            s: i & 4 != 0,
            m: i & 2 != 0,
            p: i & 1 != 0,
        })
    }
}

/// Occupancy of all eight regions, bit `Region::index` set when occupied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TrilateralAssignment(u8);

impl TrilateralAssignment {
    pub fn from_bits(bits: u8) -> Self {
        TrilateralAssignment(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn from_regions(regions: impl IntoIterator<Item = Region>) -> Self {
        TrilateralAssignment(regions.into_iter().fold(0, |acc, r| acc | (1 << r.index())))
    }

    pub fn occupied(self, region: Region) -> bool {
        self.0 & (1 << region.index()) != 0
    }

    pub fn with(self, region: Region) -> Self {
        TrilateralAssignment(self.0 | (1 << region.index()))
    }

    pub fn all() -> impl Iterator<Item = TrilateralAssignment> {
        (0..=u8::MAX).map(TrilateralAssignment)
    }

    fn any(self, a: Region, b: Region) -> bool {
        self.occupied(a) || self.occupied(b)
    }
}

/// Whether an assignment realizes both premise forms exactly. The major
/// form has rows M and columns P, the minor form rows M and columns S.
pub fn consistent(major: BilateralForm, minor: BilateralForm, asg: TrilateralAssignment) -> bool {
    for m in [false, true] {
        for p in [false, true] {
            let below = asg.any(Region { s: false, m, p }, Region { s: true, m, p });
            if major.cell(m, p) != below {
                return false;
            }
        }
        for s in [false, true] {
            let below = asg.any(Region { s, m, p: false }, Region { s, m, p: true });
            if minor.cell(m, s) != below {
                return false;
            }
        }
    }
    true
}

/// Eliminates the middle term: an S/P quarter is occupied iff one of its two
/// regions is. The result has rows S and columns P.
pub fn project(asg: TrilateralAssignment) -> BilateralForm {
    let mut value = 0;
    for s in [false, true] {
        for p in [false, true] {
            if asg.any(Region { s, m: false, p }, Region { s, m: true, p }) {
                value |= crate::bilateral::cell_weight(s, p);
            }
        }
    }
    BilateralForm::new(value).expect("four cells fit in 0..=15")
}

/// Result of `major * minor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StarResult {
    /// The two forms disagree about M or M'; no assignment realizes both.
    Undefined,
    /// The non-empty set of possible S/P conclusion forms.
    Defined(FormSet),
}

impl StarResult {
    pub fn defined(self) -> Option<FormSet> {
        match self {
            StarResult::Undefined => None,
            StarResult::Defined(set) => Some(set),
        }
    }

    pub fn is_defined(self) -> bool {
        matches!(self, StarResult::Defined(_))
    }
}

impl fmt::Display for StarResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarResult::Undefined => f.write_str("undefined"),
            StarResult::Defined(set) => write!(f, "{set}"),
        }
    }
}

/// Derives `major * minor` by enumerating all 256 region assignments.
pub fn star(major: BilateralForm, minor: BilateralForm) -> StarResult {
    let conclusions: FormSet = TrilateralAssignment::all()
        .filter(|&asg| consistent(major, minor, asg))
        .map(project)
        .collect();
    if conclusions.is_empty() {
        StarResult::Undefined
    } else {
        StarResult::Defined(conclusions)
    }
}

/// Precomputed 16x16 table of [`star`], indexed `[major][minor]`.
pub struct StarTable([[StarResult; 16]; 16]);

impl StarTable {
    pub fn compute() -> Self {
        let mut table = [[StarResult::Undefined; 16]; 16];
        for major in BilateralForm::all() {
            for minor in BilateralForm::all() {
                table[major.value() as usize][minor.value() as usize] = star(major, minor);
            }
        }
        StarTable(table)
    }

    /// Shared table, computed on first use.
    pub fn global() -> &'static StarTable {
        static TABLE: OnceLock<StarTable> = OnceLock::new();
        TABLE.get_or_init(StarTable::compute)
    }

    pub fn get(&self, major: BilateralForm, minor: BilateralForm) -> StarResult {
        self.0[major.value() as usize][minor.value() as usize]
    }
}

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unsupported fixture version {0}")]
    Version(u32),
    #[error("cannot read fixture {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

const EMBEDDED_FIXTURE: &str = include_str!("../data/star_table.txt");

/// The `*` table as printed, one entry per defined pair. Absent pairs are
/// blank cells, i.e. undefined.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StarFixture {
    entries: BTreeMap<(u8, u8), FormSet>,
}

impl StarFixture {
    pub fn embedded() -> Self {
        Self::parse(EMBEDDED_FIXTURE).expect("embedded star fixture is well formed")
    }

    pub fn load(path: &Path) -> Result<Self, FixtureError> {
        let text = std::fs::read_to_string(path).map_err(|source| FixtureError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Parses the text format:
    ///
    /// ```text
    /// # comment
    /// version 1
    /// <major> <minor>: <member> <member> ...
    /// ```
    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        let mut entries = BTreeMap::new();
        let mut saw_version = false;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |message: String| FixtureError::Syntax { line: line_no, message };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("version") {
                let version: u32 = rest.trim().parse().map_err(|_| err(format!("bad version `{}`", rest.trim())))?;
                if version != 1 {
                    return Err(FixtureError::Version(version));
                }
                saw_version = true;
                continue;
            }
            let (key, members) = line.split_once(':').ok_or_else(|| err("expected `<major> <minor>: <members>`".into()))?;
            let key: Vec<u8> = key
                .split_whitespace()
                .map(|t| parse_form(t).map_err(&err))
                .collect::<Result<_, _>>()?;
            let [major, minor] = key[..] else {
                return Err(err(format!("expected two form values before `:`, got {}", key.len())));
            };
            let mut set = FormSet::EMPTY;
            for token in members.split_whitespace() {
                set.insert(BilateralForm::new(parse_form(token).map_err(&err)?).expect("range checked"));
            }
            if set.is_empty() {
                return Err(err("a defined entry needs at least one member".into()));
            }
            if entries.insert((major, minor), set).is_some() {
                return Err(err(format!("duplicate entry {major} {minor}")));
            }
        }
        if !saw_version && !entries.is_empty() {
            return Err(FixtureError::Syntax {
                line: 0,
                message: "missing `version` line".into(),
            });
        }
        Ok(StarFixture { entries })
    }

    pub fn get(&self, major: u8, minor: u8) -> Option<FormSet> {
        self.entries.get(&(major, minor)).copied()
    }

    pub fn set(&mut self, major: u8, minor: u8, entry: Option<FormSet>) {
        match entry {
            Some(set) => self.entries.insert((major, minor), set),
            None => self.entries.remove(&(major, minor)),
        };
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn parse_form(token: &str) -> Result<u8, String> {
    match token.parse::<u8>() {
        Ok(v) if v < 16 => Ok(v),
        _ => Err(format!("`{token}` is not a form value 0..15")),
    }
}

/// A pair where the derived operation and the fixture disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarDiff {
    pub major: u8,
    pub minor: u8,
    /// `None` means the fixture cell is blank.
    pub fixture: Option<FormSet>,
    pub derived: StarResult,
}

impl fmt::Display for StarDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fixture = match self.fixture {
            Some(set) => set.to_string(),
            None => "undefined".to_string(),
        };
        write!(f, "{} * {}: fixture {} derived {}", self.major, self.minor, fixture, self.derived)
    }
}

/// Compares every one of the 256 pairs against the fixture.
pub fn verify_star_table(fixture: &StarFixture) -> Vec<StarDiff> {
    let table = StarTable::global();
    let mut diffs = Vec::new();
    for major in BilateralForm::all() {
        for minor in BilateralForm::all() {
            let derived = table.get(major, minor);
            let expected = fixture.get(major.value(), minor.value());
            if derived.defined() != expected {
                diffs.push(StarDiff {
                    major: major.value(),
                    minor: minor.value(),
                    fixture: expected,
                    derived,
                });
            }
        }
    }
    diffs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(v: u8) -> BilateralForm {
        BilateralForm::new(v).unwrap()
    }

    fn set(values: &[u8]) -> StarResult {
        StarResult::Defined(FormSet::from_values(values))
    }

    const SMP: Region = Region { s: true, m: true, p: true };

    #[test]
    fn consistency_examples() {
        let only_smp = TrilateralAssignment::from_regions([SMP]);
        assert!(consistent(form(1), form(1), only_smp));
        assert!(!consistent(form(1), form(1), TrilateralAssignment::default()));
        for asg in TrilateralAssignment::all() {
            assert!(!consistent(form(0), form(1), asg));
        }
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project(TrilateralAssignment::default()).value(), 0);
        assert_eq!(project(TrilateralAssignment::from_regions([SMP])).value(), 1);
        assert_eq!(project(TrilateralAssignment::from_bits(0xff)).value(), 15);
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(form(0), form(0)), set(&[0]));
        assert_eq!(star(form(1), form(1)), set(&[1]));
        assert_eq!(star(form(8), form(4)), set(&[2]));
        assert_eq!(star(form(3), form(3)), set(&[6, 7, 9, 11, 13, 14, 15]));
        assert_eq!(star(form(1), form(4)), StarResult::Undefined);
        assert_eq!(star(form(7), form(7)), set(&[7, 9, 11, 13, 15]));
    }

    #[test]
    fn table_matches_direct_computation() {
        let table = StarTable::global();
        for a in BilateralForm::all() {
            for b in BilateralForm::all() {
                assert_eq!(table.get(a, b), star(a, b));
            }
        }
    }

    #[test]
    fn corrupted_fixture_gives_one_diff() {
        let mut fixture = StarFixture::default();
        let table = StarTable::global();
        for a in BilateralForm::all() {
            for b in BilateralForm::all() {
                fixture.set(a.value(), b.value(), table.get(a, b).defined());
            }
        }
        assert!(verify_star_table(&fixture).is_empty());
        fixture.set(8, 4, Some(FormSet::from_values(&[3])));
        let diffs = verify_star_table(&fixture);
        assert_eq!(diffs.len(), 1);
        assert_eq!((diffs[0].major, diffs[0].minor), (8, 4));
    }

    #[test]
    fn fixture_parsing() {
        let fx = StarFixture::parse("version 1\n# c\n3 3: 6 7 9  # H\n0 0: 0\n").unwrap();
        assert_eq!(fx.len(), 2);
        assert_eq!(fx.get(3, 3), Some(FormSet::from_values(&[6, 7, 9])));
        assert_eq!(fx.get(1, 4), None);

        assert!(StarFixture::parse("version 2\n").is_err());
        assert!(StarFixture::parse("version 1\n3 3 6\n").is_err());
        assert!(StarFixture::parse("version 1\n3 16: 1\n").is_err());
        assert!(StarFixture::parse("version 1\n3 3:\n").is_err());
        assert!(StarFixture::parse("version 1\n3 3: 1\n3 3: 2\n").is_err());
        assert!(StarFixture::parse("1 1: 1\n").is_err());
    }

    #[test]
    fn embedded_fixture_loads() {
        let fx = StarFixture::embedded();
        assert_eq!(fx.len(), 100);
        assert_eq!(fx.get(15, 15), Some(FormSet::from_values(&[6, 7, 9, 11, 13, 14, 15])));
    }
}
