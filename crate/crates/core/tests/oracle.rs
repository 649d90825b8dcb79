mod common;

use common::{all_rules, oracle_gap, oracle_points, pp};
use condinf::{DesignSpec, PermutedBlockInit, Rule};

#[test]
fn every_rule_matches_path_enumeration() {
    for rule in all_rules() {
        for n in 2..=8 {
            let design = DesignSpec::new(rule, n).unwrap();
            for p in oracle_points() {
                let gap = oracle_gap(&design, &p);
                assert!(gap < 1e-12, "{} n={n} p={p:?}: {gap:e}", rule.name());
            }
        }
    }
}

#[test]
fn non_unit_urn_parameters_match_path_enumeration() {
    for rule in [Rule::Rpw { alpha: 2, beta: 3 }, Rule::Sdd { alpha: 3, beta: 1 }] {
        let design = DesignSpec::new(rule, 7).unwrap();
        assert!(oracle_gap(&design, &pp(0.35, 0.75)) < 1e-12);
    }
}

#[test]
fn block_initializers_match_path_enumeration() {
    for rule in all_rules() {
        for (m, n) in [(2, 5), (4, 8), (6, 8), (8, 8)] {
            let block = Some(PermutedBlockInit::new(m).unwrap());
            for feeds in [true, false] {
                let design = DesignSpec::with_initializer(rule, n, block)
                    .unwrap()
                    .with_block_feeding_rule(feeds);
                for p in [pp(0.25, 0.6), pp(0.8, 0.45)] {
                    let gap = oracle_gap(&design, &p);
                    assert!(gap < 1e-12, "{} n={n} block={m} feeds={feeds}: {gap:e}", design.label());
                }
            }
        }
    }
}

#[test]
fn single_subject_law_by_hand() {
    let design = DesignSpec::new(Rule::Rpw { alpha: 1, beta: 1 }, 1).unwrap();
    let d = condinf::joint_distribution(&design, &pp(0.3, 0.6));
    let o = |s1, s2, n1| condinf::Outcome::new(s1, s2, n1, 1).unwrap();
    assert!((d.prob(&o(1, 0, 1)) - 0.15).abs() < 1e-15);
    assert!((d.prob(&o(0, 0, 1)) - 0.35).abs() < 1e-15);
    assert!((d.prob(&o(0, 1, 0)) - 0.30).abs() < 1e-15);
    assert!((d.prob(&o(0, 0, 0)) - 0.20).abs() < 1e-15);
}
