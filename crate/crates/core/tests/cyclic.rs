//! First cyclic homology: the pair presentation, the odd shift under `⊗Q₁`,
//! and the Kähler-differential cross-check.

use queerhom::assoc::{an_vanishing_check, Builtin};
use queerhom::homology::{check_h_relations, hc1, kahler_hc1_oracle, phi_psi, PairSpace, Presentation};
use queerhom::{FieldSpec, GradedDim};

const Q: FieldSpec = FieldSpec::Rationals;

fn builtins() -> Vec<Builtin> {
    vec![
        Builtin::BaseField,
        Builtin::Q1,
        Builtin::Grassmann(1),
        Builtin::Grassmann(2),
        Builtin::TruncatedPoly(2),
        Builtin::TruncatedPoly(3),
        Builtin::Monogenic(vec![1, 0, 1]),
        Builtin::GroupAlgebra(2),
        Builtin::GroupAlgebra(3),
        Builtin::Matrix(2),
        Builtin::SquareZeroPlane,
    ]
}

#[test]
fn pair_space_examples() {
    let g = PairSpace::new(&Builtin::Grassmann(1).build(Q).unwrap()).unwrap();
    assert_eq!(g.graded_dim(), GradedDim::new(1, 0));
    assert!(!g.lambda(1, 1).is_zero());
    assert_eq!(PairSpace::new(&Builtin::BaseField.build(Q).unwrap()).unwrap().dim(), 0);
    assert_eq!(PairSpace::new(&Builtin::GroupAlgebra(2).build(Q).unwrap()).unwrap().dim(), 0);
}

#[test]
fn tensoring_with_q1_swaps_parity() {
    for b in builtins() {
        let r = b.build(Q).unwrap();
        let s = r.tensor(&Builtin::Q1.build(Q).unwrap()).unwrap();
        let brute = hc1(&s).unwrap().graded_dim;
        let rep = phi_psi(&r).unwrap();
        assert!(rep.all_hold(), "{b}: {rep:?}");
        assert_eq!(brute, rep.hc1_r.graded_dim.swap(), "{b}");
        assert_eq!(rep.hc1_s.graded_dim, brute, "{b}");
    }
}

#[test]
fn known_cyclic_homology() {
    for (b, expect) in [
        (Builtin::BaseField, GradedDim::ZERO),
        (Builtin::Grassmann(1), GradedDim::new(1, 0)),
        (Builtin::Matrix(2), GradedDim::ZERO),
        (Builtin::SquareZeroPlane, GradedDim::new(1, 0)),
        (Builtin::TruncatedPoly(3), GradedDim::ZERO),
    ] {
        assert_eq!(hc1(&b.build(Q).unwrap()).unwrap().graded_dim, expect, "{b}");
    }
}

#[test]
fn kahler_oracle_agrees_with_pair_presentation() {
    let fields = [Q, FieldSpec::PrimeField(3), FieldSpec::PrimeField(5)];
    for b in builtins().into_iter().filter(Builtin::is_plain_commutative) {
        let p = Presentation::from_builtin(&b).unwrap();
        for field in fields {
            let oracle = kahler_hc1_oracle(&p, field).unwrap();
            let brute = hc1(&b.build(field).unwrap()).unwrap().graded_dim;
            assert_eq!(oracle.hc1, brute, "{b} over {field}");
        }
    }
    // d(x³) = 0 in characteristic 3, so x²dx survives there and only there
    let x3 = Presentation::from_builtin(&Builtin::TruncatedPoly(3)).unwrap();
    assert_eq!(kahler_hc1_oracle(&x3, FieldSpec::PrimeField(3)).unwrap().hc1, GradedDim::new(1, 0));
    assert_eq!(kahler_hc1_oracle(&x3, Q).unwrap().hc1, GradedDim::ZERO);
}

#[test]
fn relations_in_the_doubled_pair_space() {
    for b in builtins() {
        let r = b.build(Q).unwrap();
        let report = check_h_relations(&r).unwrap();
        let super_commutative = r.is_super_commutative();
        for f in report.failures() {
            // vanishing rows fail on odd arguments: the ν⊗ν half whenever R has odd
            // elements, the 1⊗1 half only away from super-commutativity
            let odd = |l: &str| r.space().index_of(l).map(|i| r.parity(i).is_odd());
            assert!(odd(&f.a) == Some(true) || odd(&f.b) == Some(true), "{b}: {f:?}");
            match f.relation {
                "h-even-vanish-nu" => {}
                "h-even-vanish-1" => assert!(!super_commutative, "{b}: {f:?}"),
                other => panic!("{b}: unexpected failure of {other}: {f:?}"),
            }
        }
        if r.graded_dim().odd == 0 {
            assert!(report.all_hold(), "{b}");
        }
    }
}

#[test]
fn vanishing_quotient_is_zero() {
    for b in builtins() {
        let r = b.build(Q).unwrap();
        for n in [2, 3] {
            assert_eq!(an_vanishing_check(&r, n).unwrap(), GradedDim::ZERO, "{b}, n={n}");
        }
    }
    let r = Builtin::BaseField.build(FieldSpec::PrimeField(3)).unwrap();
    assert!(an_vanishing_check(&r, 3).is_err());
}
