mod common;

use common::poly;
use negder::analysis::{
    derivation_space, embdim5_check, grading_independence_check, halperin_bound, has_negative_derivations,
    min_trivial_degree, theorem0_check, DerivationOracle,
};
use negder::derivation::euler;
use negder::report::analyze;
use negder::poly::default_names;
use negder::singularity::{is_isolated, is_normal_icis, validate_system, SingularitySystem};
use negder::{Error, Polynomial, WeightSystem};

fn sys(eqs: &[&str], w: &[u32]) -> SingularitySystem {
    let g: Vec<Polynomial> = eqs.iter().map(|e| poly(e, w.len())).collect();
    validate_system(&g, &WeightSystem::new(w.to_vec()).unwrap()).unwrap()
}

#[test]
fn simple_surface_singularities_have_no_negative_derivations() {
    for (eqs, w, min) in [
        (vec!["x1^2 + x2^3 + x3^5"], vec![15, 10, 6], 5),
        (vec!["x1^2 + x2^3 + x3^4"], vec![6, 4, 3], 2),
        (vec!["x1^2 + x2^2*x3 + x3^3"], vec![3, 2, 2], 1),
        (vec!["x1^2 + x2^2 + x3^2"], vec![1, 1, 1], 0),
    ] {
        let s = sys(&eqs, &w);
        assert!(is_normal_icis(&s).unwrap(), "{eqs:?}");
        assert_eq!(min_trivial_degree(&s).unwrap().0, min, "{eqs:?}");
        let v = has_negative_derivations(&s).unwrap();
        assert!(!v.exists);
        assert!(v.witnesses.is_empty());
        for d in -3..0 {
            assert_eq!(derivation_space(&s, d).unwrap().dimension(), 0, "{eqs:?} at {d}");
        }
    }
}

#[test]
fn euler_derivation_lives_in_degree_zero() {
    let s = sys(&["x1^2 + x2^3 + x3^5"], &[15, 10, 6]);
    let oracle = DerivationOracle::new(&s).unwrap();
    let space = oracle.space(0);
    assert!(space.dimension() >= 1);
    assert!(oracle.class_in_space(&space, &euler(s.weights())));
}

#[test]
fn high_order_rule_applies_only_from_order_three() {
    assert!(theorem0_check(&sys(&["x1^3 + x2^3 + x3^3"], &[1, 1, 1])).unwrap());
    assert!(theorem0_check(&sys(&["x1^3 + x2^3 + x3^3 + x4^3", "x1^3 - x2^3 + 2*x3^3 + 3*x4^3"], &[1, 1, 1, 1])).unwrap());
    assert!(!theorem0_check(&sys(&["x1^2 + x2^2 + x3^2"], &[1, 1, 1])).unwrap());
}

#[test]
fn two_quadrics_in_five_variables() {
    let s = sys(
        &["x1^2 + x2^2 + x3^2 + x4^2 + x5^2", "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2 + 5*x5^2"],
        &[1, 1, 1, 1, 1],
    );
    assert!(is_normal_icis(&s).unwrap());
    assert!(!embdim5_check(&s).unwrap());
    let wrong_shape = sys(&["x1^2 + x2^2 + x3^2"], &[1, 1, 1]);
    assert!(matches!(embdim5_check(&wrong_shape), Err(Error::Precondition(_))));
}

#[test]
fn degree_bound_for_artinian_complete_intersections() {
    let s = sys(&["x1^2", "x2^3"], &[3, 2]);
    assert_eq!(halperin_bound(&s).unwrap(), 0);
    let s = sys(&["x1^3", "x2^2"], &[1, 1]);
    assert_eq!(s.degrees(), [3, 2]);
    assert_eq!(halperin_bound(&s).unwrap(), -1);
    for d in -4..-1 {
        assert_eq!(derivation_space(&s, d).unwrap().dimension(), 0);
    }
    assert!(matches!(halperin_bound(&sys(&["x1^2 + x2^2"], &[1, 1])), Err(Error::Precondition(_))));
}

#[test]
fn grading_independence_edge_cases() {
    let g = vec![poly("x1*x2 + x3^2", 3)];
    assert!(matches!(grading_independence_check(&g), Err(Error::Precondition(_))));
    // a single grading ray makes the check vacuous
    let g = vec![poly("x1^3 + x2^4 + x3^5", 3)];
    assert!(grading_independence_check(&g).unwrap());
}

#[test]
fn non_isolated_and_low_dimensional_systems_get_no_verdict() {
    let s = sys(&["x1^2*x2 + x3^3"], &[1, 1, 1]);
    assert!(!is_isolated(&s).unwrap().isolated);
    assert!(matches!(has_negative_derivations(&s), Err(Error::Precondition(_))));
    let names = default_names(2);
    let r = analyze(&[poly("x1^2 + x2^3", 2)], &WeightSystem::new(vec![3, 2]).unwrap(), &names).unwrap();
    assert!(r.verdict.is_none());
}

#[test]
fn validation_reports_the_offending_generator() {
    let w = WeightSystem::new(vec![1, 1, 1]).unwrap();
    let err = validate_system(&[poly("x1^2 + x2^3", 3)], &w).unwrap_err();
    assert!(matches!(err, Error::Inhomogeneous { index: 1, .. }), "{err}");
    let err = validate_system(&[poly("x1^2 + x2^2", 3), poly("x3", 3)], &w).unwrap_err();
    assert_eq!(err, Error::OrderTooLow { index: 2, order: 1 });
}
