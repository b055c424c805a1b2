//! The queer superalgebras and the maps between them.

use queerhom::assoc::{Builtin, SuperAlgebra};
use queerhom::homology::build_sq;
use queerhom::lie::{
    build_q, build_sq_by_characterization, derived_subalgebra, is_perfect, iso_q_to_gl, iso_qq1_to_glnn, lie_tensor,
    loop_iso, sq_image_is_sl, VerifiedHomomorphism,
};
use queerhom::{Error, FieldSpec, GradedDim, SparseVec};

const Q: FieldSpec = FieldSpec::Rationals;

fn family() -> Vec<SuperAlgebra> {
    [Builtin::BaseField, Builtin::Grassmann(1), Builtin::TruncatedPoly(2), Builtin::GroupAlgebra(3), Builtin::Matrix(2)]
        .iter()
        .map(|b| b.build(Q).unwrap())
        .collect()
}

#[test]
fn queer_is_general_linear_over_q1() {
    for r in family() {
        for n in 1..=3 {
            let (hom, q, gl) = iso_q_to_gl(n, &r).unwrap();
            assert!(hom.is_isomorphism(), "n={n} R={}: {:?}", r.name(), hom.failure);
            assert_eq!(hom.pairs_checked, q.dim() * q.dim());
            assert_eq!(q.graded_dim(), gl.graded_dim());
            assert!(sq_image_is_sl(n, &r).unwrap(), "n={n} R={}", r.name());
        }
    }
}

#[test]
fn derived_algebra_matches_trace_condition() {
    for r in family() {
        for n in 2..=3 {
            let q = build_q(n, &r).unwrap();
            assert_eq!(derived_subalgebra(&q), build_sq_by_characterization(n, &r).unwrap(), "n={n} R={}", r.name());
            let (sq, _) = build_sq(n, &r).unwrap();
            assert!(is_perfect(&sq), "sq_{n}({}) is not perfect", r.name());
        }
    }
}

#[test]
fn sq1_is_abelian_for_super_commutative_coordinates() {
    for b in [Builtin::BaseField, Builtin::Grassmann(1), Builtin::Grassmann(2), Builtin::TruncatedPoly(2)] {
        let (sq1, _) = build_sq(1, &b.build(Q).unwrap()).unwrap();
        assert!(sq1.is_abelian(), "{b}");
    }
    // for n = 1 the trace condition still cuts out the derived algebra: the
    // diagonal copy of R, abelian and hence not perfect
    let r = Builtin::Grassmann(1).build(Q).unwrap();
    let q1 = build_q(1, &r).unwrap();
    assert_eq!(derived_subalgebra(&q1), build_sq_by_characterization(1, &r).unwrap());
    assert_eq!(derived_subalgebra(&q1).graded_dim().unwrap(), r.graded_dim());
    assert!(!is_perfect(&build_sq(1, &r).unwrap().0));
    // without super-commutativity sq₁ need not be abelian
    let (sq1, _) = build_sq(1, &Builtin::Matrix(2).build(Q).unwrap()).unwrap();
    assert!(!sq1.is_abelian());
}

#[test]
fn loop_algebra_needs_the_signed_relabeling() {
    for b in [Builtin::Grassmann(1), Builtin::TruncatedPoly(2)] {
        let r = b.build(Q).unwrap();
        let (hom, src, dst) = loop_iso(2, &r).unwrap();
        assert!(hom.is_isomorphism(), "{b}: {:?}", hom.failure);
        let plain = (0..src.dim()).map(|s| SparseVec::unit(s, Q.one())).collect();
        let plain = VerifiedHomomorphism::verify(&src, &dst, plain);
        assert_eq!(plain.bracket_preserving, r.graded_dim().odd == 0, "{b}");
    }
    let q2 = build_q(2, &Builtin::BaseField.build(Q).unwrap()).unwrap();
    assert!(matches!(lie_tensor(&q2, &Builtin::Matrix(2).build(Q).unwrap()), Err(Error::NotSuperCommutative)));
}

#[test]
fn square_root_of_minus_one_identifies_q_over_q1_with_gl() {
    let qi = FieldSpec::GaussianRationals;
    for b in [Builtin::BaseField, Builtin::Grassmann(1)] {
        for n in 1..=2 {
            let r = b.build(qi).unwrap();
            let (hom, q, gl) = iso_qq1_to_glnn(n, &r).unwrap();
            assert!(hom.is_isomorphism(), "n={n} {b}: {:?}", hom.failure);
            assert_eq!(q.graded_dim(), gl.graded_dim());
        }
    }
    let err = iso_qq1_to_glnn(1, &Builtin::BaseField.build(Q).unwrap()).unwrap_err();
    assert!(matches!(err, Error::MissingSqrtMinusOne(_)));
    // F_13 has a square root of −1, F_7 does not
    assert!(iso_qq1_to_glnn(1, &Builtin::BaseField.build(FieldSpec::PrimeField(13)).unwrap())
        .unwrap()
        .0
        .is_isomorphism());
    assert!(iso_qq1_to_glnn(1, &Builtin::BaseField.build(FieldSpec::PrimeField(7)).unwrap()).is_err());
}

#[test]
fn queer_dimensions() {
    let r = Builtin::Grassmann(1).build(Q).unwrap();
    assert_eq!(build_q(3, &r).unwrap().graded_dim(), GradedDim::new(18, 18));
    assert_eq!(build_sq(3, &r).unwrap().0.graded_dim(), GradedDim::new(17, 17));
    let plane = Builtin::SquareZeroPlane.build(Q).unwrap();
    assert_eq!(build_sq(3, &plane).unwrap().0.graded_dim(), GradedDim::new(27, 24));
}
