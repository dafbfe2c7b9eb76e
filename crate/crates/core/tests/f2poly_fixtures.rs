use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symca::f2poly::{
    day_and_night_combined, decomposition_fixture, life_polynomial_fixture, rule_to_anf, verify_implied_relation,
    LifeRule,
};
use symca::{F2Poly, RelationTemplate};

#[test]
fn life_polynomials_have_published_degree_and_size() {
    let expect = [(LifeRule::ConwaysLife, 8, 185), (LifeRule::HighLife, 6, 169), (LifeRule::DayAndNight, 8, 256)];
    for (rule, degree, terms) in expect {
        let p = rule_to_anf(&rule.rule().to_rule()).unwrap();
        assert_eq!((p.degree(), p.len()), (degree, terms), "{rule}");
    }
}

#[test]
fn symmetric_form_matches_truth_table() {
    for rule in LifeRule::ALL {
        assert_eq!(life_polynomial_fixture(rule), rule_to_anf(&rule.rule().to_rule()).unwrap(), "{rule}");
    }
}

#[test]
fn anf_is_invariant_under_leaf_permutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for rule in LifeRule::ALL {
        let p = rule_to_anf(&rule.rule().to_rule()).unwrap();
        for _ in 0..20 {
            let mut perm: Vec<u32> = (0..8).collect();
            perm.shuffle(&mut rng);
            assert_eq!(p.permute_leaves(&perm), p);
        }
    }
}

#[test]
fn display_round_trips_through_the_parser() {
    for rule in LifeRule::ALL {
        let p = life_polynomial_fixture(rule);
        let back = RelationTemplate::parse(&p.to_string()).unwrap().instantiate(&[]).unwrap();
        assert_eq!(back, p);
    }
}

#[test]
fn published_relations_hold() {
    for rule in LifeRule::ALL {
        let r = rule.rule().to_rule();
        for t in decomposition_fixture(rule) {
            let v = verify_implied_relation(&r, &t).unwrap();
            assert!(v.holds(), "{rule}: {t} fails at {:?}", v.counterexample);
        }
    }
    let v = verify_implied_relation(&LifeRule::DayAndNight.rule().to_rule(), &day_and_night_combined()).unwrap();
    assert!(v.holds());
    assert_eq!((v.tuples_checked, v.assignments_checked), (8, 8 * 512));
}

#[test]
fn false_relation_is_refuted() {
    let t = RelationTemplate::parse("xp9*xi*xj").unwrap();
    let v = verify_implied_relation(&LifeRule::ConwaysLife.rule().to_rule(), &t).unwrap();
    let ce = v.counterexample.expect("a live cell with two live leaves exists");
    assert_eq!(ce.tuple, vec![1, 2]);
    assert_eq!((ce.leaves[0], ce.leaves[1], ce.next), (1, 1, 1));
}

#[test]
fn relation_polynomial_vanishes_exactly_on_consistent_assignments() {
    for rule in LifeRule::ALL {
        let r = rule.rule();
        let p: F2Poly = life_polynomial_fixture(rule);
        for mask in 0..1u32 << 10 {
            let live = (mask & 0xff).count_ones();
            let center = mask >> 8 & 1 == 1;
            let next = mask >> 9 & 1 == 1;
            let want = if center { r.survival().contains(&live) } else { r.birth().contains(&live) };
            assert_eq!(p.eval_mask(mask) == 0, want == next);
        }
    }
}
