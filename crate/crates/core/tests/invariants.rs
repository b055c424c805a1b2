//! Structural invariants that every construction in the crate must satisfy.

use proptest::prelude::*;
use queerhom::assoc::Builtin;
use queerhom::homology::{build_psq, build_slnn, build_sq, ce_complex, ce_h2, lambda2_graded_dim, lambda3_dim};
use queerhom::lie::{build_gl, build_q, center, lie_from_assoc, lie_tensor, quotient_lie, LieSuperAlgebra};
use queerhom::linalg::{rref_rows, QuotientSpace};
use queerhom::{FieldSpec, GradedDim, GradedSpace, Parity, SparseVec, Subspace};

const Q: FieldSpec = FieldSpec::Rationals;
const QI: FieldSpec = FieldSpec::GaussianRationals;

fn alg(b: Builtin) -> queerhom::assoc::SuperAlgebra {
    b.build(Q).unwrap()
}

fn constructed() -> Vec<LieSuperAlgebra> {
    let mut out = vec![
        build_gl(1, 1, &alg(Builtin::Grassmann(1))).unwrap(),
        build_gl(2, 1, &alg(Builtin::BaseField)).unwrap(),
        lie_from_assoc(&alg(Builtin::Matrix(2)).tensor(&alg(Builtin::Q1)).unwrap()),
        lie_tensor(&build_q(2, &alg(Builtin::BaseField)).unwrap(), &alg(Builtin::Grassmann(2))).unwrap(),
        build_psq(3, &alg(Builtin::Grassmann(1))).unwrap(),
        build_slnn(2, &Builtin::Grassmann(1).build(QI).unwrap()).unwrap(),
    ];
    for r in [Builtin::BaseField, Builtin::Grassmann(1), Builtin::TruncatedPoly(2), Builtin::Matrix(2)] {
        out.push(build_q(2, &alg(r.clone())).unwrap());
        out.push(build_sq(3, &alg(r)).unwrap().0);
    }
    let q = build_q(2, &alg(Builtin::Grassmann(1))).unwrap();
    let z = center(&q);
    out.push(quotient_lie(&q, &z).unwrap());
    out
}

#[test]
fn jacobi_and_antisymmetry_on_constructed_algebras() {
    for g in constructed() {
        let violations = g.validate();
        assert!(violations.is_empty(), "{}: {}", g.name(), violations[0]);
    }
}

#[test]
fn complexes_square_to_zero() {
    for g in [
        build_sq(2, &alg(Builtin::Grassmann(1))).unwrap().0,
        build_q(2, &alg(Builtin::TruncatedPoly(2))).unwrap(),
        build_gl(1, 1, &alg(Builtin::Grassmann(1))).unwrap(),
        lie_from_assoc(&alg(Builtin::Matrix(2))),
    ] {
        let c = ce_complex(&g).unwrap();
        assert_eq!(c.lambda3.dim(), lambda3_dim(g.graded_dim()), "{}", g.name());
        assert!(c.d2.mul(&c.d3).unwrap().is_zero(), "{}", g.name());
    }
}

#[test]
fn sl2_is_centrally_closed() {
    let m2 = alg(Builtin::Matrix(2));
    let gl2 = lie_from_assoc(&m2);
    let sl2 = queerhom::lie::induced_subalgebra(&gl2, &queerhom::lie::derived_subalgebra(&gl2)).unwrap();
    assert_eq!(sl2.graded_dim(), GradedDim::new(3, 0));
    assert_eq!(ce_h2(&sl2, None).unwrap().graded_dim, GradedDim::ZERO);
}

fn abelian(even: usize, odd: usize) -> LieSuperAlgebra {
    let parities = [vec![Parity::Even; even], vec![Parity::Odd; odd]].concat();
    let n = even + odd;
    LieSuperAlgebra::new("abelian", Q, GradedSpace::anonymous("x", parities), vec![SparseVec::zero(); n * n]).unwrap()
}

fn small_int() -> impl Strategy<Value = i64> {
    -3i64..=3
}

/// Up to five vectors supported on basis vectors of one parity each.
fn homogeneous_vectors(even: usize, odd: usize) -> impl Strategy<Value = Vec<SparseVec>> {
    let n = even + odd;
    prop::collection::vec((any::<bool>(), prop::collection::vec(small_int(), n)), 0..5).prop_map(move |raw| {
        raw.into_iter()
            .map(|(odd_part, coeffs)| {
                let range = if odd_part { even..n } else { 0..even };
                SparseVec::from_entries(range.map(|i| (i, Q.from_i64(coeffs[i]))).collect::<Vec<_>>())
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn abelian_h2_is_lambda2(even in 0usize..=6, odd in 0usize..=6) {
        let g = abelian(even, odd);
        let h2 = ce_h2(&g, None).unwrap();
        let c2 = |m: usize| m * m.saturating_sub(1) / 2;
        let expected = GradedDim::new(c2(even) + c2(odd + 1), even * odd);
        prop_assert_eq!(h2.graded_dim, expected);
        prop_assert_eq!(lambda2_graded_dim(GradedDim::new(even, odd)), expected);
    }

    #[test]
    fn quotient_dims_add_up(
        (even, odd, vs) in (1usize..=4, 1usize..=4)
            .prop_flat_map(|(e, o)| (Just(e), Just(o), homogeneous_vectors(e, o)))
    ) {
        let parities = [vec![Parity::Even; even], vec![Parity::Odd; odd]].concat();
        let space = std::sync::Arc::new(GradedSpace::anonymous("v", parities));
        let sub = Subspace::span(space.clone(), Q, vs).unwrap();
        let quot = QuotientSpace::new(sub.clone()).unwrap();
        prop_assert_eq!(sub.graded_dim().unwrap() + quot.graded_dim(), space.graded_dim());
        // projection kills the subspace and fixes the section
        for b in sub.basis() {
            prop_assert!(quot.project(b).is_zero());
        }
    }

    #[test]
    fn echelon_form_is_idempotent(
        vs in prop::collection::vec(prop::collection::vec(small_int(), 6), 0..7)
    ) {
        let rows: Vec<SparseVec> = vs
            .into_iter()
            .map(|c| SparseVec::from_entries(c.into_iter().enumerate().map(|(i, x)| (i, Q.from_i64(x))).collect::<Vec<_>>()))
            .collect();
        let once = rref_rows(6, Q, rows.clone());
        let twice = rref_rows(6, Q, once.clone());
        prop_assert_eq!(&once, &twice);
        // the same span in a different order has the same canonical form
        let reversed = rref_rows(6, Q, rows.into_iter().rev());
        prop_assert_eq!(once, reversed);
    }
}
