//! Lie superalgebras given by bracket constants on a homogeneous basis.
//!
//! Algebras built from matrices carry an optional auxiliary weight per basis
//! vector (`ε_i − ε_j` for a matrix unit in position `(i, j)`). The bracket is
//! additive in weights, which lets the homology code split complexes into
//! independent blocks. Weights are bookkeeping only: nothing here trusts them
//! without the bracket agreeing.

mod hom;
mod matrix;

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

pub use hom::{iso_q_to_gl, iso_qq1_to_glnn, loop_iso, sq_image_is_sl, VerifiedHomomorphism};
pub use matrix::{
    build_gl, build_q, build_sl, build_sq_by_characterization, matrix_superalgebra, q_embedding, q_index,
    scalar_matrices, QBlock,
};

use crate::assoc::{commutator_subspace, SuperAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{koszul, signed, GradedDim, GradedSpace, Parity, QuotientSpace, SparseMatrix, SparseVec, Subspace};
use crate::scalar::FieldSpec;

/// Integer weight vector attached to a basis vector.
pub type Weight = Vec<i32>;

#[derive(Clone, Debug)]
pub struct LieSuperAlgebra {
    name: String,
    field: FieldSpec,
    space: Arc<GradedSpace>,
    /// `[e_i, e_j]` at index `i·dim + j`.
    table: Vec<SparseVec>,
    weights: Option<Vec<Weight>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieViolation {
    Grading { i: usize, j: usize, k: usize },
    Antisymmetry { i: usize, j: usize },
    Jacobi { i: usize, j: usize, k: usize },
    Weight { i: usize, j: usize },
}

impl fmt::Display for LieViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieViolation::Grading { i, j, k } => write!(f, "[e{i}, e{j}] has a wrong-parity component on e{k}"),
            LieViolation::Antisymmetry { i, j } => write!(f, "super-antisymmetry fails on ({i},{j})"),
            LieViolation::Jacobi { i, j, k } => write!(f, "super Jacobi fails on ({i},{j},{k})"),
            LieViolation::Weight { i, j } => write!(f, "[e{i}, e{j}] is not weight-homogeneous"),
        }
    }
}

impl LieSuperAlgebra {
    /// Builds from a full bracket table and validates.
    pub fn new(name: impl Into<String>, field: FieldSpec, space: GradedSpace, table: Vec<SparseVec>) -> Result<Self> {
        let g = Self::unchecked(name, field, Arc::new(space), table)?;
        let v = g.validate();
        if v.is_empty() {
            Ok(g)
        } else {
            Err(Error::InvalidAlgebra(v.iter().take(20).map(ToString::to_string).collect()))
        }
    }

    pub(crate) fn unchecked(
        name: impl Into<String>,
        field: FieldSpec,
        space: Arc<GradedSpace>,
        table: Vec<SparseVec>,
    ) -> Result<Self> {
        let n = space.dim();
        if table.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: table.len() });
        }
        for v in &table {
            crate::linalg::sparse::check_vec(v, n, field)?;
        }
        Ok(LieSuperAlgebra { name: name.into(), field, space, table, weights: None })
    }

    /// Attaches weights; fails unless every bracket is weight-homogeneous of
    /// the summed weight.
    pub fn with_weights(mut self, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: weights.len() });
        }
        self.weights = Some(weights);
        if let Some(v) = self.weight_violation() {
            return Err(Error::InvalidParams(v.to_string()));
        }
        Ok(self)
    }

    /// Coarsens the weights through `f`, which must be additive.
    pub fn fold_weights(self, f: impl Fn(&[i32]) -> Weight) -> Result<Self> {
        match self.weights.clone() {
            Some(w) => {
                let folded = w.iter().map(|x| f(x)).collect();
                self.with_weights(folded)
            }
            None => Ok(self),
        }
    }

    fn weight_violation(&self) -> Option<LieViolation> {
        let w = self.weights.as_ref()?;
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let sum: Weight = w[i].iter().zip(&w[j]).map(|(a, b)| a + b).collect();
                if self.table[i * n + j].iter().any(|(k, _)| w[k] != sum) {
                    return Some(LieViolation::Weight { i, j });
                }
            }
        }
        None
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn graded_dim(&self) -> GradedDim {
        self.space.graded_dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.field.one())
    }

    /// `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    /// Bilinear extension of the basis brackets.
    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let t = self.basis_bracket(i, j);
                if !t.is_zero() {
                    acc = acc.add_scaled(&(a * b), t);
                }
            }
        }
        acc
    }

    /// `[e_i, v]`.
    fn bracket_left(&self, i: usize, v: &SparseVec) -> SparseVec {
        v.iter().fold(SparseVec::zero(), |acc, (j, b)| acc.add_scaled(b, self.basis_bracket(i, j)))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(SparseVec::is_zero)
    }

    /// Grading, super-antisymmetry and super Jacobi over all basis pairs and
    /// triples. Jacobi is checked on sorted triples only, which suffices once
    /// antisymmetry holds.
    pub fn validate(&self) -> Vec<LieViolation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, _) in self.basis_bracket(i, j).iter() {
                    if self.parity(k) != self.parity(i) + self.parity(j) {
                        out.push(LieViolation::Grading { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                let flip = !koszul(self.parity(i), self.parity(j));
                let rhs = self.basis_bracket(j, i).scale(&signed(flip, self.field.one()));
                if *self.basis_bracket(i, j) != rhs {
                    out.push(LieViolation::Antisymmetry { i, j });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        let jacobi: Vec<LieViolation> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut bad = Vec::new();
                for j in i..n {
                    for k in j..n {
                        if !self.jacobiator(i, j, k).is_zero() {
                            bad.push(LieViolation::Jacobi { i, j, k });
                        }
                    }
                }
                bad
            })
            .collect();
        out.extend(jacobi);
        out.extend(self.weight_violation());
        out
    }

    /// `(−1)^{|x||z|}[x,[y,z]] + (−1)^{|y||x|}[y,[z,x]] + (−1)^{|z||y|}[z,[x,y]]`.
    fn jacobiator(&self, i: usize, j: usize, k: usize) -> SparseVec {
        let (pi, pj, pk) = (self.parity(i), self.parity(j), self.parity(k));
        let one = self.field.one();
        let a = self.bracket_left(i, self.basis_bracket(j, k)).scale(&signed(koszul(pi, pk), one.clone()));
        let b = self.bracket_left(j, self.basis_bracket(k, i)).scale(&signed(koszul(pj, pi), one.clone()));
        let c = self.bracket_left(k, self.basis_bracket(i, j)).scale(&signed(koszul(pk, pj), one));
        a.add(&b).add(&c)
    }
}

/// `A` with the super-commutator.
pub fn lie_from_assoc(a: &SuperAlgebra) -> LieSuperAlgebra {
    let n = a.dim();
    let table: Vec<SparseVec> = (0..n * n)
        .into_par_iter()
        .map(|ij| {
            a.commutator_vec(&a.basis_vector(ij / n), &a.basis_vector(ij % n)).expect("basis vectors are homogeneous")
        })
        .collect();
    LieSuperAlgebra::unchecked(a.name(), a.field(), a.space().clone(), table).expect("table sized from the algebra")
}

/// Span of all `[e_i, e_j]`.
pub fn derived_subalgebra(g: &LieSuperAlgebra) -> Subspace {
    let n = g.dim();
    let brackets: Vec<SparseVec> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| g.basis_bracket(i, j).clone()).collect();
    Subspace::span(g.space().clone(), g.field(), brackets).expect("brackets lie in g")
}

pub fn is_perfect(g: &LieSuperAlgebra) -> bool {
    derived_subalgebra(g).dim() == g.dim()
}

/// The bracket restricted to `sub`, over its canonical basis: basis vector
/// `k` of the result is `sub.basis()[k]`. Fails if `sub` is not closed.
pub fn induced_subalgebra(g: &LieSuperAlgebra, sub: &Subspace) -> Result<LieSuperAlgebra> {
    if sub.ambient().dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: sub.ambient().dim() });
    }
    let space = sub.as_space()?;
    let basis = sub.basis();
    let k = basis.len();
    let table: Vec<SparseVec> = (0..k * k)
        .into_par_iter()
        .map(|pq| {
            let (p, q) = (pq / k, pq % k);
            let b = g.bracket(&basis[p], &basis[q]);
            sub.coordinates(&b).ok_or_else(|| {
                Error::NotClosed(format!("bracket of {} and {} leaves the subspace", space.label(p), space.label(q)))
            })
        })
        .collect::<Result<_>>()?;
    let mut h = LieSuperAlgebra::unchecked(format!("sub({})", g.name()), g.field(), Arc::new(space), table)?;
    if let Some(w) = g.weights() {
        h.weights = basis.iter().map(|row| homogeneous_weight(w, row)).collect::<Option<Vec<_>>>();
    }
    Ok(h)
}

fn homogeneous_weight(weights: &[Weight], v: &SparseVec) -> Option<Weight> {
    let mut it = v.iter().map(|(i, _)| &weights[i]);
    let first = it.next()?;
    it.all(|w| w == first).then(|| first.clone())
}

/// `{x : [x, e_i] = 0 for all i}`.
pub fn center(g: &LieSuperAlgebra) -> Subspace {
    let n = g.dim();
    let mut triplets = Vec::new();
    for j in 0..n {
        for i in 0..n {
            for (k, x) in g.basis_bracket(j, i).iter() {
                triplets.push((i * n + k, j, x.clone()));
            }
        }
    }
    let m = SparseMatrix::from_triplets(n * n, n, g.field(), triplets).expect("indices in range");
    Subspace::kernel(&m, g.space().clone()).expect("columns match")
}

/// `g / ideal` with the induced bracket; the quotient basis is the set of
/// non-pivot coordinates of the ideal.
pub fn quotient_lie(g: &LieSuperAlgebra, ideal: &Subspace) -> Result<LieSuperAlgebra> {
    for (k, b) in ideal.basis().iter().enumerate() {
        for i in 0..g.dim() {
            if !ideal.contains(&g.bracket(&g.basis_vector(i), b)) {
                return Err(Error::NotAnIdeal(format!(
                    "[{}, basis vector {k}] leaves the subspace",
                    g.space().label(i)
                )));
            }
        }
    }
    let q = QuotientSpace::new(ideal.clone())?;
    let sec = q.section();
    let k = sec.len();
    let table: Vec<SparseVec> =
        (0..k * k).into_par_iter().map(|ab| q.project(g.basis_bracket(sec[ab / k], sec[ab % k]))).collect();
    let mut h = LieSuperAlgebra::unchecked(format!("{}/I", g.name()), g.field(), q.space().clone(), table)?;
    if let Some(w) = g.weights() {
        if ideal.basis().iter().all(|row| homogeneous_weight(w, row).is_some()) {
            h.weights = Some(sec.iter().map(|&c| w[c].clone()).collect());
        }
    }
    Ok(h)
}

/// `g⊗R` with `[x⊗a, y⊗b] = (−1)^{|a||y|}[x,y]⊗ab`; basis `x_p⊗r_a` has
/// index `p·dim R + a`.
pub fn lie_tensor(g: &LieSuperAlgebra, r: &SuperAlgebra) -> Result<LieSuperAlgebra> {
    if g.field() != r.field() {
        return Err(Error::FieldMismatch { expected: g.field().to_string(), found: r.field().to_string() });
    }
    if commutator_subspace(r).dim() != 0 {
        return Err(Error::NotSuperCommutative);
    }
    let (n, d) = (g.dim(), r.dim());
    let space = GradedSpace::new(
        (0..n)
            .flat_map(|p| (0..d).map(move |a| (p, a)))
            .map(|(p, a)| (format!("{}⊗{}", g.space().label(p), r.space().label(a)), g.parity(p) + r.parity(a)))
            .collect::<Vec<_>>(),
    )?;
    let dim = n * d;
    let table: Vec<SparseVec> = (0..dim * dim)
        .into_par_iter()
        .map(|idx| {
            let (s, t) = (idx / dim, idx % dim);
            let (p, a, q, b) = (s / d, s % d, t / d, t % d);
            let xy = g.basis_bracket(p, q);
            let Some(ab) = r.basis_product(a, b) else { return SparseVec::zero() };
            let sign = koszul(r.parity(a), g.parity(q));
            let entries = xy
                .iter()
                .flat_map(|(k, x)| ab.iter().map(move |(c, y)| (k * d + c, signed(sign, x * y))))
                .collect::<Vec<_>>();
            SparseVec::from_entries(entries)
        })
        .collect();
    let mut h = LieSuperAlgebra::unchecked(format!("{}⊗{}", g.name(), r.name()), g.field(), Arc::new(space), table)?;
    if let Some(w) = g.weights() {
        h.weights = Some((0..dim).map(|s| w[s / d].clone()).collect());
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::Builtin;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn lie_from_assoc_examples() {
        let k = lie_from_assoc(&Builtin::BaseField.build(Q).unwrap());
        assert!(k.is_abelian());
        assert_eq!(k.graded_dim(), GradedDim::new(1, 0));
        let q1 = lie_from_assoc(&Builtin::Q1.build(Q).unwrap());
        assert_eq!(q1.basis_bracket(1, 1), &SparseVec::unit(0, Q.from_i64(2)));
        assert!(q1.basis_bracket(0, 1).is_zero());
        let gl2 = lie_from_assoc(&Builtin::Matrix(2).build(Q).unwrap());
        assert_eq!(gl2.basis_bracket(0, 1), &SparseVec::unit(1, Q.one()));
        for g in [k, q1, gl2] {
            assert!(g.validate().is_empty());
        }
    }

    #[test]
    fn center_and_perfectness() {
        let gl2 = lie_from_assoc(&Builtin::Matrix(2).build(Q).unwrap());
        let z = center(&gl2);
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&SparseVec::from_entries([(0, Q.one()), (3, Q.one())])));
        assert!(!is_perfect(&gl2));
        let sl2 = induced_subalgebra(&gl2, &derived_subalgebra(&gl2)).unwrap();
        assert_eq!(sl2.dim(), 3);
        assert!(is_perfect(&sl2));
        assert!(sl2.validate().is_empty());
        let abelian = lie_from_assoc(&Builtin::Grassmann(2).build(Q).unwrap());
        assert_eq!(center(&abelian).dim(), 4);
    }

    #[test]
    fn quotient_by_center() {
        let gl2 = lie_from_assoc(&Builtin::Matrix(2).build(Q).unwrap());
        let pgl = quotient_lie(&gl2, &center(&gl2)).unwrap();
        assert_eq!(pgl.dim(), 3);
        assert!(pgl.validate().is_empty());
        let not_ideal = Subspace::span(gl2.space().clone(), Q, [SparseVec::unit(1, Q.one())]).unwrap();
        assert!(matches!(quotient_lie(&gl2, &not_ideal), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn induced_rejects_non_subalgebra() {
        let gl2 = lie_from_assoc(&Builtin::Matrix(2).build(Q).unwrap());
        let e12_e21 = Subspace::span(gl2.space().clone(), Q, [gl2.basis_vector(1), gl2.basis_vector(2)]).unwrap();
        assert!(matches!(induced_subalgebra(&gl2, &e12_e21), Err(Error::NotClosed(_))));
    }

    #[test]
    fn tensor_requires_super_commutative() {
        let gl2 = lie_from_assoc(&Builtin::Matrix(2).build(Q).unwrap());
        let m2 = Builtin::Matrix(2).build(Q).unwrap();
        assert!(matches!(lie_tensor(&gl2, &m2), Err(Error::NotSuperCommutative)));
        let k = Builtin::BaseField.build(Q).unwrap();
        let same = lie_tensor(&gl2, &k).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(same.basis_bracket(i, j), gl2.basis_bracket(i, j));
            }
        }
        let g = Builtin::Grassmann(1).build(Q).unwrap();
        let t = lie_tensor(&gl2, &g).unwrap();
        assert!(t.validate().is_empty());
    }
}
