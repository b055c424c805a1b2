//! Finite-dimensional unital associative superalgebras given by structure constants.

mod builtin;
mod ideal;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use builtin::Builtin;
pub use ideal::{an_vanishing_check, commutator_subspace, two_sided_ideal};

use crate::error::{Error, Result};
use crate::linalg::{koszul, signed, GradedDim, GradedSpace, Parity, SparseVec};
use crate::scalar::FieldSpec;

/// `e_i · e_j = Σ_k c[i][j][k] e_k`, stored sparsely by `(i, j)`.
#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    name: String,
    field: FieldSpec,
    space: Arc<GradedSpace>,
    products: BTreeMap<(usize, usize), SparseVec>,
    unit: SparseVec,
}

/// One failed axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `e_i e_j` has a component along `e_k` of the wrong parity.
    Grading { i: usize, j: usize, k: usize },
    /// `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    Associativity { i: usize, j: usize, k: usize },
    /// `1·e_i ≠ e_i` or `e_i·1 ≠ e_i`.
    Unit { i: usize },
    /// The unit vector is not even.
    OddUnit,
    /// A coefficient from another field, or an index outside the basis.
    Malformed(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Grading { i, j, k } => write!(f, "grading violation at ({i},{j},{k})"),
            Violation::Associativity { i, j, k } => write!(f, "associativity fails on ({i},{j},{k})"),
            Violation::Unit { i } => write!(f, "unit law fails on basis vector {i}"),
            Violation::OddUnit => write!(f, "unit is not even"),
            Violation::Malformed(msg) => write!(f, "malformed table: {msg}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// An element of a specific superalgebra (coordinates over its basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    dim: usize,
    coords: SparseVec,
}

impl AlgebraElement {
    pub fn coords(&self) -> &SparseVec {
        &self.coords
    }

    pub fn into_coords(self) -> SparseVec {
        self.coords
    }
}

impl SuperAlgebra {
    /// Builds and validates; a nonempty report becomes [`Error::InvalidAlgebra`].
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        space: GradedSpace,
        products: BTreeMap<(usize, usize), SparseVec>,
        unit: SparseVec,
    ) -> Result<Self> {
        let alg = Self::unchecked(name, field, space, products, unit);
        let report = alg.validate();
        if report.is_empty() {
            Ok(alg)
        } else {
            Err(Error::InvalidAlgebra(report.violations.iter().map(ToString::to_string).collect()))
        }
    }

    /// Builds without checking the axioms; see [`SuperAlgebra::validate`].
    pub fn unchecked(
        name: impl Into<String>,
        field: FieldSpec,
        space: GradedSpace,
        products: BTreeMap<(usize, usize), SparseVec>,
        unit: SparseVec,
    ) -> Self {
        let products = products.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        SuperAlgebra { name: name.into(), field, space: Arc::new(space), products, unit }
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

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn products(&self) -> &BTreeMap<(usize, usize), SparseVec> {
        &self.products
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Option<&SparseVec> {
        self.products.get(&(i, j))
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.field.one())
    }

    pub fn element(&self, coords: SparseVec) -> Result<AlgebraElement> {
        crate::linalg::sparse::check_vec(&coords, self.dim(), self.field)?;
        Ok(AlgebraElement { dim: self.dim(), coords })
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement { dim: self.dim(), coords: self.basis_vector(i) }
    }

    /// Bilinear product on coordinate vectors.
    pub fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                if let Some(p) = self.products.get(&(i, j)) {
                    acc = acc.add_scaled(&(a * b), p);
                }
            }
        }
        acc
    }

    /// Parity of a coordinate vector, `None` when inhomogeneous.
    pub fn parity_of(&self, x: &SparseVec) -> Option<Parity> {
        x.parity_in(&self.space)
    }

    /// Super-commutator on homogeneous coordinate vectors.
    pub fn commutator_vec(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec> {
        let (px, py) = self.homogeneous_pair(x, y)?;
        let yx = self.mul_vec(y, x);
        Ok(self.mul_vec(x, y).add_scaled(&signed(!koszul(px, py), self.field.one()), &yx))
    }

    fn homogeneous_pair(&self, x: &SparseVec, y: &SparseVec) -> Result<(Parity, Parity)> {
        let px = self.parity_of(x).ok_or_else(|| Error::NotHomogeneous("left operand".into()))?;
        let py = self.parity_of(y).ok_or_else(|| Error::NotHomogeneous("right operand".into()))?;
        Ok((px, py))
    }

    fn check_parent(&self, xs: &[&AlgebraElement]) -> Result<()> {
        for x in xs {
            if x.dim != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim });
            }
        }
        Ok(())
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_parent(&[x, y])?;
        Ok(AlgebraElement { dim: self.dim(), coords: self.mul_vec(&x.coords, &y.coords) })
    }

    /// `xy − (−1)^{|x||y|} yx`.
    pub fn commutator(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_parent(&[x, y])?;
        Ok(AlgebraElement { dim: self.dim(), coords: self.commutator_vec(&x.coords, &y.coords)? })
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_parent(&[x, y])?;
        self.homogeneous_pair(&x.coords, &y.coords)?;
        let coords = self.mul_vec(&x.coords, &y.coords).add(&self.mul_vec(&y.coords, &x.coords));
        Ok(AlgebraElement { dim: self.dim(), coords })
    }

    /// Every grading, associativity and unit-law failure over basis triples.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for (&(i, j), v) in &self.products {
            if i >= n || j >= n || v.max_index().is_some_and(|m| m >= n) {
                violations.push(Violation::Malformed(format!("product ({i},{j}) outside basis")));
                continue;
            }
            if v.iter().any(|(_, x)| x.field() != self.field) {
                violations.push(Violation::Malformed(format!("product ({i},{j}) has foreign scalars")));
            }
            for (k, _) in v.iter() {
                if self.parity(k) != self.parity(i) + self.parity(j) {
                    violations.push(Violation::Grading { i, j, k });
                }
            }
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }
        if self.unit.max_index().is_some_and(|m| m >= n) {
            violations.push(Violation::Malformed("unit outside basis".into()));
            return ValidationReport { violations };
        }
        if self.parity_of(&self.unit) != Some(Parity::Even) {
            violations.push(Violation::OddUnit);
        }
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                violations.push(Violation::Unit { i });
            }
        }
        let left: Vec<Vec<SparseVec>> =
            (0..n).map(|i| (0..n).map(|j| self.products.get(&(i, j)).cloned().unwrap_or_default()).collect()).collect();
        for (i, row) in left.iter().enumerate() {
            for (j, ij) in row.iter().enumerate() {
                for (k, jk) in left[j].iter().enumerate() {
                    let lhs = self.mul_vec(ij, &self.basis_vector(k));
                    let rhs = self.mul_vec(&self.basis_vector(i), jk);
                    if lhs != rhs {
                        violations.push(Violation::Associativity { i, j, k });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Whether every pair of basis vectors super-commutes.
    pub fn is_super_commutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                self.commutator_vec(&self.basis_vector(i), &self.basis_vector(j)).map(|c| c.is_zero()).unwrap_or(false)
            })
        })
    }

    /// Koszul tensor product: `(a₁⊗b₁)(a₂⊗b₂) = (−1)^{|a₂||b₁|} a₁a₂ ⊗ b₁b₂`.
    /// The basis vector `a_i ⊗ b_j` has index `i·dim(B) + j`.
    pub fn tensor(&self, other: &SuperAlgebra) -> Result<SuperAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { expected: self.field.to_string(), found: other.field.to_string() });
        }
        let db = other.dim();
        let idx = |i: usize, j: usize| i * db + j;
        let basis: Vec<(String, Parity)> = (0..self.dim())
            .flat_map(|i| (0..db).map(move |j| (format!("{}⊗{}", self.space.label(i), other.space.label(j)), (i, j))))
            .map(|(label, (i, j))| (label, self.parity(i) + other.parity(j)))
            .collect();
        let mut products = BTreeMap::new();
        for (&(a1, a2), pa) in &self.products {
            for (&(b1, b2), pb) in &other.products {
                let sign = koszul(self.parity(a2), other.parity(b1));
                let entries =
                    pa.iter().flat_map(|(k, x)| pb.iter().map(move |(l, y)| (idx(k, l), signed(sign, x * y))));
                products.insert((idx(a1, b1), idx(a2, b2)), SparseVec::from_entries(entries.collect::<Vec<_>>()));
            }
        }
        let unit = SparseVec::from_entries(
            self.unit
                .iter()
                .flat_map(|(i, x)| other.unit.iter().map(move |(j, y)| (idx(i, j), x * y)))
                .collect::<Vec<_>>(),
        );
        let name = format!("{}⊗{}", self.name, other.name);
        Ok(SuperAlgebra::unchecked(name, self.field, GradedSpace::new(basis)?, products, unit))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn q1() -> SuperAlgebra {
        Builtin::Q1.build(Q).unwrap()
    }

    #[test]
    fn tensor_signs_in_grassmann_q1() {
        let g = Builtin::Grassmann(1).build(Q).unwrap();
        let s = g.tensor(&q1()).unwrap();
        assert!(s.validate().is_empty());
        // basis: 1⊗1, 1⊗ν, ξ⊗1, ξ⊗ν
        let (one_nu, xi_one, xi_nu) = (s.basis_element(1), s.basis_element(2), s.basis_element(3));
        assert_eq!(s.mul(&xi_one, &one_nu).unwrap(), xi_nu.clone());
        let back = s.mul(&one_nu, &xi_one).unwrap();
        assert_eq!(back.coords(), &xi_nu.coords().neg());
        assert_eq!(s.mul(&one_nu, &one_nu).unwrap(), s.basis_element(0));
    }

    #[test]
    fn base_field_is_tensor_unit() {
        let k = Builtin::BaseField.build(Q).unwrap();
        let m = Builtin::Matrix(2).build(Q).unwrap();
        let t = k.tensor(&m).unwrap();
        assert_eq!(t.products(), m.products());
        assert_eq!(t.unit(), m.unit());
    }

    #[test]
    fn tensor_is_associative_on_constants() {
        let a = Builtin::Grassmann(1).build(Q).unwrap();
        let b = q1();
        let c = Builtin::TruncatedPoly(2).build(Q).unwrap();
        let left = a.tensor(&b).unwrap().tensor(&c).unwrap();
        let right = a.tensor(&b.tensor(&c).unwrap()).unwrap();
        // both use the index (i·dB + j)·dC + k
        assert_eq!(left.products(), right.products());
        assert!(left.validate().is_empty());
    }

    #[test]
    fn commutator_examples() {
        let q = q1();
        let nu = q.basis_element(1);
        assert_eq!(q.commutator(&nu, &nu).unwrap().coords(), &SparseVec::unit(0, Q.from_i64(2)));
        let g = Builtin::Grassmann(1).build(Q).unwrap();
        assert!(g.is_super_commutative());
        let m = Builtin::Matrix(2).build(Q).unwrap();
        let (e12, e21) = (m.basis_element(1), m.basis_element(2));
        let anti = m.anticommutator(&e12, &e21).unwrap();
        assert_eq!(anti.coords(), &SparseVec::from_entries([(0, Q.one()), (3, Q.one())]));
    }

    #[test]
    fn inhomogeneous_commutator_rejected() {
        let q = q1();
        let mixed = q.element(SparseVec::from_entries([(0, Q.one()), (1, Q.one())])).unwrap();
        assert!(matches!(q.commutator(&mixed, &mixed), Err(Error::NotHomogeneous(_))));
        let other = Builtin::Matrix(2).build(Q).unwrap().basis_element(3);
        assert!(matches!(q.mul(&other, &other), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn grading_violation_reported() {
        let space = GradedSpace::new([("e1".to_string(), Parity::Even), ("e2".to_string(), Parity::Odd)]).unwrap();
        let mut products = BTreeMap::new();
        products.insert((0, 0), SparseVec::unit(1, Q.one()));
        let bad = SuperAlgebra::unchecked("bad", Q, space, products, SparseVec::unit(0, Q.one()));
        let report = bad.validate();
        assert!(report.violations.contains(&Violation::Grading { i: 0, j: 0, k: 1 }));
    }
}
