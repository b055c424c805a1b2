//! Exact echelon forms.
//!
//! [`Echelon`] keeps a row basis keyed by pivot column, each row normalized to a
//! leading 1. Insertion reduces only until the leading entry is a fresh
//! column; [`Echelon::into_rref`] back-substitutes to the unique reduced row
//! echelon form, which is what every canonical comparison in the crate uses.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::sparse::{check_vec, SparseMatrix, SparseVec};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    field: FieldSpec,
    rows: BTreeMap<usize, SparseVec>,
}

type Accumulator = BTreeMap<usize, Scalar>;

fn accumulate(v: &SparseVec) -> Accumulator {
    v.iter().map(|(i, x)| (i, x.clone())).collect()
}

fn subtract_scaled(acc: &mut Accumulator, c: &Scalar, row: &SparseVec) {
    for (i, x) in row.iter() {
        let delta = x * c;
        match acc.get_mut(&i) {
            Some(y) => {
                let z = &*y - &delta;
                if z.is_zero() {
                    acc.remove(&i);
                } else {
                    *y = z;
                }
            }
            None => {
                acc.insert(i, -delta);
            }
        }
    }
}

fn finish(acc: Accumulator) -> SparseVec {
    SparseVec::from_sorted_unchecked(acc.into_iter().collect())
}

impl Echelon {
    pub fn new(dim: usize, field: FieldSpec) -> Self {
        Echelon { dim, field, rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn row_at(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    /// Reduces until the leading column is not a pivot; zero iff `v` is in the span.
    fn reduce_leading(&self, v: &SparseVec) -> SparseVec {
        let mut acc = accumulate(v);
        while let Some((&lead, x)) = acc.first_key_value() {
            let Some(row) = self.rows.get(&lead) else { break };
            let c = x.clone();
            subtract_scaled(&mut acc, &c, row);
        }
        finish(acc)
    }

    /// Eliminates `v` at every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = accumulate(v);
        let mut cursor = 0;
        while let Some((&col, x)) = acc.range(cursor..).next() {
            cursor = col + 1;
            if let Some(row) = self.rows.get(&col) {
                let c = x.clone();
                subtract_scaled(&mut acc, &c, row);
            }
        }
        finish(acc)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_leading(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce_leading(v);
        let Some((lead, x)) = r.leading() else { return false };
        let inv = x.inv().expect("leading entry is nonzero");
        let r = r.scale(&inv);
        self.rows.insert(lead, r);
        true
    }

    /// The reduced row echelon form, rows sorted by pivot column.
    pub fn into_rref(mut self) -> Vec<SparseVec> {
        let pivots: Vec<usize> = self.rows.keys().rev().copied().collect();
        for p in pivots {
            let row = self.rows.remove(&p).expect("pivot row");
            let mut acc = accumulate(&row);
            let targets: Vec<usize> =
                row.iter().map(|(c, _)| c).filter(|c| *c > p && self.rows.contains_key(c)).collect();
            for c in targets {
                if let Some(x) = acc.get(&c).cloned() {
                    subtract_scaled(&mut acc, &x, &self.rows[&c]);
                }
            }
            self.rows.insert(p, finish(acc));
        }
        self.rows.into_values().collect()
    }
}

/// Canonical RREF basis of the span of `vectors`. Vectors are inserted
/// sparsest first (ties by input order) to limit fill-in; the result does not
/// depend on that order.
pub fn rref_rows(dim: usize, field: FieldSpec, vectors: impl IntoIterator<Item = SparseVec>) -> Vec<SparseVec> {
    let mut vs: Vec<(usize, SparseVec)> = vectors.into_iter().enumerate().collect();
    vs.sort_by_key(|(i, v)| (v.nnz(), *i));
    let mut ech = Echelon::new(dim, field);
    for (_, v) in &vs {
        ech.insert(v);
    }
    ech.into_rref()
}

/// Reduced row echelon form (zero rows at the bottom) and rank.
pub fn rref(m: &SparseMatrix) -> Result<(SparseMatrix, usize)> {
    for row in m.rows() {
        check_vec(row, m.ncols(), m.field())?;
    }
    let mut rows = rref_rows(m.ncols(), m.field(), m.rows().iter().cloned());
    let rank = rows.len();
    rows.resize(m.nrows(), SparseVec::zero());
    Ok((SparseMatrix::from_rows(m.ncols(), m.field(), rows)?, rank))
}

pub fn rank(m: &SparseMatrix) -> usize {
    let mut ech = Echelon::new(m.ncols(), m.field());
    let mut rows: Vec<&SparseVec> = m.rows().iter().collect();
    rows.sort_by_key(|r| r.nnz());
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Canonical RREF basis of `{v : m·v = 0}`.
pub fn kernel_rows(m: &SparseMatrix) -> Result<Vec<SparseVec>> {
    let (r, rank) = rref(m)?;
    let field = m.field();
    let mut pivot_of_col = vec![None; m.ncols()];
    for (i, row) in r.rows()[..rank].iter().enumerate() {
        let (p, _) = row.leading().ok_or_else(|| Error::Internal("empty rref row".into()))?;
        pivot_of_col[p] = Some(i);
    }
    let mut basis = Vec::new();
    for free in (0..m.ncols()).filter(|c| pivot_of_col[*c].is_none()) {
        let mut entries = vec![(free, field.one())];
        for row in &r.rows()[..rank] {
            if let Some(x) = row.get(free) {
                entries.push((row.leading().expect("nonzero").0, -x));
            }
        }
        basis.push(SparseVec::from_entries(entries));
    }
    Ok(rref_rows(m.ncols(), field, basis))
}
