use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::echelon::{kernel_rows, rref_rows, Echelon};
use crate::linalg::graded::{GradedDim, GradedSpace, Parity};
use crate::linalg::sparse::{check_vec, SparseMatrix, SparseVec};
use crate::scalar::{FieldSpec, Scalar};

/// A subspace stored by its reduced row echelon basis. Two subspaces of the
/// same ambient space are equal iff their bases are identical.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: Arc<GradedSpace>,
    field: FieldSpec,
    rows: Vec<SparseVec>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient.dim() == other.ambient.dim() && self.rows == other.rows
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn span(
        ambient: Arc<GradedSpace>,
        field: FieldSpec,
        vectors: impl IntoIterator<Item = SparseVec>,
    ) -> Result<Self> {
        let vectors: Vec<SparseVec> = vectors.into_iter().collect();
        for v in &vectors {
            check_vec(v, ambient.dim(), field)?;
        }
        let rows = rref_rows(ambient.dim(), field, vectors);
        Ok(Subspace { ambient, field, rows })
    }

    pub fn zero(ambient: Arc<GradedSpace>, field: FieldSpec) -> Self {
        Subspace { ambient, field, rows: Vec::new() }
    }

    pub fn full(ambient: Arc<GradedSpace>, field: FieldSpec) -> Self {
        let rows = (0..ambient.dim()).map(|i| SparseVec::unit(i, field.one())).collect();
        Subspace { ambient, field, rows }
    }

    /// `{v : m·v = 0}` for `m` with `dim(ambient)` columns.
    pub fn kernel(m: &SparseMatrix, domain: Arc<GradedSpace>) -> Result<Self> {
        if m.ncols() != domain.dim() {
            return Err(Error::DimensionMismatch { expected: domain.dim(), found: m.ncols() });
        }
        let rows = kernel_rows(m)?;
        Ok(Subspace { ambient: domain, field: m.field(), rows })
    }

    pub fn ambient(&self) -> &Arc<GradedSpace> {
        &self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// RREF basis, sorted by pivot column.
    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.leading().expect("nonzero row").0).collect()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient.dim(), self.field);
        for r in &self.rows {
            e.insert(r);
        }
        e
    }

    /// `v` with every pivot coordinate eliminated.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = v.clone();
        for row in &self.rows {
            let (p, _) = row.leading().expect("nonzero row");
            if let Some(x) = acc.get(p).cloned() {
                acc = acc.add_scaled(&-x, row);
            }
        }
        acc
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let coords = SparseVec::from_entries(
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(k, row)| v.get(row.leading().expect("nonzero row").0).map(|x| (k, x.clone()))),
        );
        (self.combine(&coords) == *v).then_some(coords)
    }

    /// `Σ coords[k] · basis[k]`.
    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        coords.iter().fold(SparseVec::zero(), |acc, (k, x)| acc.add_scaled(x, &self.rows[k]))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = self.echelon();
        for r in &other.rows {
            e.insert(r);
        }
        Subspace { ambient: self.ambient.clone(), field: self.field, rows: e.into_rref() }
    }

    /// Parity of each basis vector, failing on a mixed-parity vector.
    pub fn basis_parities(&self) -> Result<Vec<Parity>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(k, r)| {
                r.parity_in(&self.ambient)
                    .ok_or_else(|| Error::NotHomogeneous(format!("basis vector {k} mixes parities")))
            })
            .collect()
    }

    pub fn graded_dim(&self) -> Result<GradedDim> {
        Ok(GradedDim::count(self.basis_parities()?))
    }

    /// The space spanned by this subspace's basis, with labels `[pivot label]`.
    pub fn as_space(&self) -> Result<GradedSpace> {
        let parities = self.basis_parities()?;
        GradedSpace::new(
            self.rows
                .iter()
                .zip(parities)
                .map(|(r, p)| (format!("[{}]", self.ambient.label(r.leading().expect("nonzero").0)), p))
                .collect::<Vec<_>>(),
        )
    }

    /// Image under the linear map whose `j`-th column is `images[j]`.
    pub fn map(&self, images: &[SparseVec], target: Arc<GradedSpace>) -> Result<Subspace> {
        let mapped =
            self.rows.iter().map(|r| r.iter().fold(SparseVec::zero(), |acc, (j, x)| acc.add_scaled(x, &images[j])));
        Subspace::span(target, self.field, mapped.collect::<Vec<_>>())
    }
}

/// `ambient / sub`, with the non-pivot coordinates of `sub` as quotient basis.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    sub: Subspace,
    section: Vec<usize>,
    position: Vec<Option<usize>>,
    space: Arc<GradedSpace>,
}

impl QuotientSpace {
    pub fn new(sub: Subspace) -> Result<Self> {
        sub.graded_dim()?;
        let ambient = sub.ambient().clone();
        let mut is_pivot = vec![false; ambient.dim()];
        for p in sub.pivots() {
            is_pivot[p] = true;
        }
        let section: Vec<usize> = (0..ambient.dim()).filter(|c| !is_pivot[*c]).collect();
        let mut position = vec![None; ambient.dim()];
        for (k, &c) in section.iter().enumerate() {
            position[c] = Some(k);
        }
        let space = GradedSpace::new(
            section.iter().map(|&c| (ambient.label(c).to_string(), ambient.parity(c))).collect::<Vec<_>>(),
        )?;
        Ok(QuotientSpace { sub, section, position, space: Arc::new(space) })
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    pub fn ambient(&self) -> &Arc<GradedSpace> {
        self.sub.ambient()
    }

    /// The quotient as a graded space in its own right.
    pub fn space(&self) -> &Arc<GradedSpace> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.section.len()
    }

    /// Ambient coordinate lifting the `k`-th quotient basis vector.
    pub fn section(&self) -> &[usize] {
        &self.section
    }

    pub fn lift(&self, q: &SparseVec) -> SparseVec {
        q.remap(|k| self.section[k])
    }

    /// Quotient coordinates of the class of `v`.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let r = self.sub.reduce(v);
        SparseVec::from_sorted_unchecked(
            r.into_entries()
                .into_iter()
                .map(|(c, x)| (self.position[c].expect("reduced vector avoids pivots"), x))
                .collect(),
        )
    }

    pub fn graded_dim(&self) -> GradedDim {
        self.space.graded_dim()
    }

    /// Matrix of the projection (quotient dim × ambient dim).
    pub fn projection_matrix(&self) -> SparseMatrix {
        let field = self.sub.field();
        let cols: Vec<SparseVec> =
            (0..self.ambient().dim()).map(|c| self.project(&SparseVec::unit(c, field.one()))).collect();
        SparseMatrix::from_columns(self.dim(), field, &cols).expect("projection columns in range")
    }
}

/// Convenience used when assembling maps: `Σ c_j v_j`.
pub fn linear_combination<'a>(terms: impl IntoIterator<Item = (&'a Scalar, &'a SparseVec)>) -> SparseVec {
    terms.into_iter().fold(SparseVec::zero(), |acc, (c, v)| acc.add_scaled(c, v))
}
