//! Second homology of the queer algebras against cyclic homology.

use queerhom::assoc::Builtin;
use queerhom::homology::{verify_main_theorem, verify_psq_formula, verify_slnn_identity};
use queerhom::{Error, FieldSpec, GradedDim};

const Q: FieldSpec = FieldSpec::Rationals;

#[test]
fn main_theorem_small_cases() {
    for (b, expect) in [
        (Builtin::BaseField, GradedDim::ZERO),
        (Builtin::Grassmann(1), GradedDim::new(0, 1)),
        (Builtin::TruncatedPoly(2), GradedDim::ZERO),
        (Builtin::SquareZeroPlane, GradedDim::new(0, 1)),
    ] {
        let rep = verify_main_theorem(&b.build(Q).unwrap(), 3, None).unwrap();
        assert!(rep.passed && !rep.exploratory, "{b}: {} vs {}", rep.lhs, rep.rhs);
        assert_eq!(rep.lhs, expect, "{b}");
        assert_eq!(rep.h2.lambda2_dim - rep.h2.rank_d2 - rep.h2.rank_d3, expect.total());
    }
}

#[test]
fn prime_field_smoke_agrees() {
    let r = Builtin::SquareZeroPlane.build(FieldSpec::PrimeField(10007)).unwrap();
    let rep = verify_main_theorem(&r, 3, None).unwrap();
    assert_eq!(rep.lhs, GradedDim::new(0, 1));
}

#[test]
fn n_two_is_flagged() {
    let rep = verify_main_theorem(&Builtin::BaseField.build(Q).unwrap(), 2, None).unwrap();
    assert!(rep.exploratory);
    assert!(!rep.notes.is_empty());
}

#[test]
fn budget_refuses_large_complexes() {
    let r = Builtin::Grassmann(1).build(Q).unwrap();
    let err = verify_main_theorem(&r, 3, Some(1000)).unwrap_err();
    assert_eq!(err, Error::BudgetExceeded { dim: 6562, budget: 1000 });
}

#[test]
fn projective_quotient() {
    for (b, expect) in [
        (Builtin::BaseField, GradedDim::new(1, 0)),
        (Builtin::Grassmann(1), GradedDim::new(1, 2)),
        (Builtin::TruncatedPoly(2), GradedDim::new(2, 0)),
    ] {
        let rep = verify_psq_formula(&b.build(Q).unwrap(), 3, None).unwrap();
        assert!(rep.passed, "{b}: {} vs {}", rep.lhs, rep.rhs);
        assert_eq!(rep.lhs, expect, "{b}");
    }
}

#[test]
fn general_linear_nn() {
    let qi = FieldSpec::GaussianRationals;
    for (b, expect) in [(Builtin::BaseField, GradedDim::ZERO), (Builtin::Grassmann(1), GradedDim::new(1, 0))] {
        let rep = verify_slnn_identity(&b.build(qi).unwrap(), 3, None).unwrap();
        assert!(rep.passed, "{b}: {} vs {}", rep.lhs, rep.rhs);
        assert_eq!(rep.lhs, expect, "{b}");
    }
    let err = verify_slnn_identity(&Builtin::BaseField.build(Q).unwrap(), 3, None).unwrap_err();
    assert!(matches!(err, Error::MissingSqrtMinusOne(_)));
}
