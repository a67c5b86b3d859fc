use proptest::prelude::*;
use vnreg::{PeriodicConfig, RuleTable};

fn rule_strategy() -> impl Strategy<Value = RuleTable> {
    (2usize..=3, 0usize..=1, 0usize..=1).prop_flat_map(|(q, l, r)| {
        let len = q.pow((l + r + 1) as u32);
        prop::collection::vec(0..q as u8, len).prop_map(move |t| RuleTable::new(q, l, r, t).unwrap())
    })
}

fn config_for(q: usize) -> impl Strategy<Value = PeriodicConfig> {
    prop::collection::vec(0..q as u8, 1..=9).prop_map(move |c| PeriodicConfig::new(q, c).unwrap())
}

/// Two rules over the same alphabet plus a configuration.
fn pair_and_config() -> impl Strategy<Value = (RuleTable, RuleTable, PeriodicConfig)> {
    (2usize..=3).prop_flat_map(|q| {
        let rule = (0usize..=1, 0usize..=1).prop_flat_map(move |(l, r)| {
            prop::collection::vec(0..q as u8, q.pow((l + r + 1) as u32))
                .prop_map(move |t| RuleTable::new(q, l, r, t).unwrap())
        });
        (rule.clone(), rule, config_for(q))
    })
}

// direct evaluation of a local rule on a cyclic word, independent of the table layout
fn naive_apply(rule: &RuleTable, x: &[u8]) -> Vec<u8> {
    let n = x.len() as i64;
    let (l, r) = (rule.left() as i64, rule.right() as i64);
    (0..n)
        .map(|i| {
            let window: Vec<u8> = (i - l..=i + r).map(|j| x[j.rem_euclid(n) as usize]).collect();
            rule.lookup(&window)
        })
        .collect()
}

proptest! {
    #[test]
    fn apply_matches_naive(rule in rule_strategy(), seed in prop::collection::vec(0u8..3, 1..=12)) {
        let q = rule.alphabet_size();
        let cells: Vec<u8> = seed.into_iter().map(|s| s % q as u8).collect();
        let x = PeriodicConfig::new(q, cells.clone()).unwrap();
        let image = rule.apply_periodic(&x).unwrap();
        prop_assert_eq!(image.cells(), &naive_apply(&rule, &cells)[..]);
    }

    #[test]
    fn compose_is_sequential_application((a, b, x) in pair_and_config()) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.left(), a.left() + b.left());
        prop_assert_eq!(ab.right(), a.right() + b.right());
        let expected = b.apply_periodic(&a.apply_periodic(&x).unwrap()).unwrap();
        prop_assert_eq!(ab.apply_periodic(&x).unwrap(), expected);
    }

    #[test]
    fn compose_is_associative((a, b, _x) in pair_and_config(), c_seed in any::<u64>()) {
        let q = a.alphabet_size();
        let c = RuleTable::from_fn(q, 1, 0, |w| ((w[0] as u64 * 7 + w[1] as u64 * 3 + c_seed) % q as u64) as u8).unwrap();
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert!(left.rules_equal(&right).unwrap());
    }

    #[test]
    fn mirror_distributes_over_compose((a, b, x) in pair_and_config()) {
        let lhs = a.compose(&b).unwrap().mirror();
        let rhs = a.mirror().compose(&b.mirror()).unwrap();
        prop_assert!(lhs.rules_equal(&rhs).unwrap());
        // mirroring the rule is the same as reflecting the configuration
        let direct = a.mirror().apply_periodic(&x).unwrap();
        let reflected = a.apply_periodic(&x.reversed()).unwrap().reversed();
        prop_assert_eq!(direct, reflected);
    }

    #[test]
    fn minimal_memory_keeps_the_map(rule in rule_strategy()) {
        let m = rule.minimal_memory();
        prop_assert!(m.rules_equal(&rule).unwrap());
        prop_assert!(m.left() <= rule.left() && m.right() <= rule.right());
        prop_assert!(m.minimal_memory() == m);
    }

    #[test]
    fn literal_roundtrip(rule in rule_strategy()) {
        let text = rule.to_string();
        let parsed: RuleTable = text.parse().unwrap();
        prop_assert_eq!(parsed, rule);
    }

    #[test]
    fn padding_preserves_the_map(rule in rule_strategy(), l in 0usize..2, r in 0usize..2, x in config_for(2)) {
        let padded = rule.padded(rule.left() + l, rule.right() + r).unwrap();
        prop_assert!(padded.rules_equal(&rule).unwrap());
        if rule.alphabet_size() == 2 {
            prop_assert_eq!(padded.apply_periodic(&x).unwrap(), rule.apply_periodic(&x).unwrap());
        }
    }
}

#[test]
fn elementary_literals() {
    for n in 0..=255u32 {
        let rule = RuleTable::from_wolfram(n).unwrap();
        assert_eq!(rule.to_string(), format!("eca:{n}"));
        assert_eq!(rule.wolfram_number(), Some(n as u8));
        assert_eq!(rule.to_string().parse::<RuleTable>().unwrap(), rule);
    }
    assert!("eca:256".parse::<RuleTable>().is_err());
    assert!("table:q=2,l=0,r=0,hex=02".parse::<RuleTable>().is_err());
}

#[test]
fn complements_are_elementary_conjugations() {
    let phi51 = RuleTable::from_wolfram(51).unwrap();
    for n in 0..=255u32 {
        let tau = RuleTable::from_wolfram(n).unwrap();
        let before = phi51.compose(&tau).unwrap();
        let after = tau.compose(&phi51).unwrap();
        // complement the input, or the output
        assert!(tau.complement_left().unwrap().rules_equal(&before).unwrap());
        assert!(tau.complement_right().unwrap().rules_equal(&after).unwrap());
        assert!(tau.mirror().mirror() == tau);
    }
}
