use carroll_syllogism::bilateral::{form_value, transpose_form, transpose_set};
use carroll_syllogism::engine::{circledast_raw, decide, Condition, DecisionRule, EngineConfig, Mood};
use carroll_syllogism::oracle::semantically_valid;
use carroll_syllogism::trilateral::{project, Region, StarTable, TrilateralAssignment};
use carroll_syllogism::{BilateralForm, FormSet, StarResult};
use proptest::prelude::*;

fn form() -> impl Strategy<Value = BilateralForm> {
    (0u8..16).prop_map(|v| BilateralForm::new(v).unwrap())
}

fn form_set() -> impl Strategy<Value = FormSet> {
    any::<u16>().prop_map(FormSet::from_mask)
}

proptest! {
    #[test]
    fn cells_round_trip(f in form()) {
        prop_assert_eq!(form_value(f.cells()), f.value());
        prop_assert_eq!(BilateralForm::from_cells(f.cells()), f);
    }

    #[test]
    fn transpose_swaps_off_diagonal(f in form()) {
        let t = f.transpose();
        prop_assert_eq!(t.cell(false, true), f.cell(true, false));
        prop_assert_eq!(t.cell(true, false), f.cell(false, true));
        prop_assert_eq!(t.cell(true, true), f.cell(true, true));
        prop_assert_eq!(t.cell(false, false), f.cell(false, false));
        prop_assert_eq!(transpose_form(t.value()), f.value());
    }

    #[test]
    fn transpose_set_is_involution(s in form_set()) {
        prop_assert_eq!(transpose_set(transpose_set(s)), s);
        prop_assert_eq!(transpose_set(s).len(), s.len());
    }

    #[test]
    fn circledast_distributes_over_union(a in form_set(), b in form_set(), c in form_set()) {
        prop_assert_eq!(circledast_raw(a.union(b), c), circledast_raw(a, c).union(circledast_raw(b, c)));
        prop_assert_eq!(circledast_raw(c, a.union(b)), circledast_raw(c, a).union(circledast_raw(c, b)));
    }

    #[test]
    fn circledast_mirror(a in form_set(), b in form_set()) {
        prop_assert_eq!(circledast_raw(a, b), transpose_set(circledast_raw(b, a)));
    }

    #[test]
    fn projection_is_monotone(bits in any::<u8>(), extra in 0u8..8) {
        let asg = TrilateralAssignment::from_bits(bits);
        let region = Region::all().nth(extra as usize).unwrap();
        let before = project(asg);
        let after = project(asg.with(region));
        prop_assert_eq!(before.value() & !after.value(), 0);
    }
}

/// Whether a form (rows M) says the middle term, or its complement, is
/// occupied.
fn middle_rows(f: BilateralForm) -> (bool, bool) {
    let m = f.cell(true, false) || f.cell(true, true);
    let not_m = f.cell(false, false) || f.cell(false, true);
    (m, not_m)
}

#[test]
fn definedness_criterion() {
    let table = StarTable::global();
    for a in BilateralForm::all() {
        for b in BilateralForm::all() {
            let conflict = middle_rows(a) != middle_rows(b);
            assert_eq!(table.get(a, b) == StarResult::Undefined, conflict, "{a} * {b}");
        }
    }
}

#[test]
fn defined_results_are_nonempty() {
    let table = StarTable::global();
    let mut defined = 0;
    for a in BilateralForm::all() {
        for b in BilateralForm::all() {
            if let StarResult::Defined(set) = table.get(a, b) {
                assert!(!set.is_empty());
                defined += 1;
            }
        }
    }
    assert_eq!(defined, 100);
}

#[test]
fn verdict_invariants() {
    let cfg = EngineConfig::default();
    for condition in Condition::ALL {
        for mood in Mood::all() {
            let v = decide(&mood, condition, &cfg);
            assert_eq!(v.valid, v.matched.contains(&mood.conclusion));
            assert!(!v.premises_conclusion.is_empty(), "{mood} {condition}");
            if condition == Condition::Unconditional && v.valid {
                assert_eq!(v.matched.len(), 1);
            }
        }
    }
}

#[test]
fn conclusion_sets_are_distinct() {
    let cfg = EngineConfig::default();
    for (i, a) in cfg.conclusion_sets.iter().enumerate() {
        for b in &cfg.conclusion_sets[i + 1..] {
            assert_ne!(a, b);
        }
    }
}

#[test]
fn exact_match_agrees_with_oracle_only_unconditionally() {
    let exact = EngineConfig {
        rule: DecisionRule::ExactMatch,
        ..EngineConfig::default()
    };
    for mood in Mood::all() {
        assert_eq!(
            decide(&mood, Condition::Unconditional, &exact).valid,
            semantically_valid(&mood, Condition::Unconditional),
            "{mood}"
        );
    }
    let disagreements = Condition::ALL[1..]
        .iter()
        .flat_map(|&c| Mood::all().map(move |m| (m, c)))
        .filter(|(m, c)| decide(m, *c, &exact).valid != semantically_valid(m, *c))
        .count();
    assert!(disagreements > 0);
}

#[test]
fn oracle_is_deterministic_and_conservative() {
    for mood in Mood::all() {
        let first: Vec<bool> = Condition::ALL.iter().map(|&c| semantically_valid(&mood, c)).collect();
        let second: Vec<bool> = Condition::ALL.iter().map(|&c| semantically_valid(&mood, c)).collect();
        assert_eq!(first, second);
        if first[0] {
            assert!(first.iter().all(|&v| v), "{mood}");
        }
    }
}
