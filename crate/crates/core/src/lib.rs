//! Categorical syllogisms decided with Carroll's bilateral and trilateral
//! diagrams, cross-checked by a brute-force semantic oracle.
//!
//! - [`bilateral`]: two-term diagrams as 4-bit forms and statement form sets
//! - [`trilateral`]: three-term elimination and the `*` operation table
//! - [`engine`]: premise interpretation, `⊛`, existence conditions, verdicts
//! - [`oracle`]: region-model sweep and the classical deduction rules
//! - [`cli`]: command-line parsing, rendering and reports

pub mod bilateral;
pub mod cli;
pub mod engine;
pub mod oracle;
pub mod trilateral;

pub use bilateral::{BilateralForm, FormSet, Orientation, Proposition, Quantifier, Term};
pub use engine::{decide, enumerate_valid, Condition, EngineConfig, Figure, Mood, Verdict};
pub use trilateral::{star, StarResult};
