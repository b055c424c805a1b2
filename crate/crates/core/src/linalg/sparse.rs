use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::graded::{GradedSpace, Parity};
use crate::scalar::{FieldSpec, Scalar};

/// Sparse coordinate vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize, one: Scalar) -> Self {
        SparseVec { entries: vec![(index, one)] }
    }

    /// Sums duplicate indices and drops zeros.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, x) in entries {
            match acc.get_mut(&i) {
                Some(y) => *y = &*y + &x,
                None => {
                    acc.insert(i, x);
                }
            }
        }
        SparseVec { entries: acc.into_iter().filter(|(_, x)| !x.is_zero()).collect() }
    }

    /// Entries must already be strictly increasing in index and nonzero.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, x)| !x.is_zero()));
        SparseVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, x)| (*i, x))
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries.binary_search_by(|(i, _)| i.cmp(&index)).ok().map(|pos| &self.entries[pos].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, x)| (*i, x))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => match i.cmp(j) {
                    Ordering::Less => {
                        out.push((*i, x.clone()));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((*j, y * c));
                        b.next();
                    }
                    Ordering::Equal => {
                        let z = x + &(y * c);
                        if !z.is_zero() {
                            out.push((*i, z));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            Some((_, x)) => self.add_scaled(&x.field().one(), other),
            None => self.clone(),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            Some((_, x)) => self.add_scaled(&-x.field().one(), other),
            None => self.clone(),
        }
    }

    pub fn dot(&self, other: &SparseVec) -> Option<Scalar> {
        let mut acc: Option<Scalar> = None;
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            match i.cmp(j) {
                Ordering::Less => {
                    a.next();
                }
                Ordering::Greater => {
                    b.next();
                }
                Ordering::Equal => {
                    let p = x * y;
                    acc = Some(match acc {
                        Some(s) => &s + &p,
                        None => p,
                    });
                    a.next();
                    b.next();
                }
            }
        }
        acc
    }

    /// Reindexes every entry through `f`; `f` must be injective on the support.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_entries(self.entries.iter().map(|(i, x)| (f(*i), x.clone())))
    }

    /// Common parity of the support, `None` if the vector mixes parities.
    /// The zero vector is reported as even.
    pub fn parity_in(&self, space: &GradedSpace) -> Option<Parity> {
        let mut it = self.entries.iter().map(|(i, _)| space.parity(*i));
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    pub fn field(&self) -> Option<FieldSpec> {
        self.entries.first().map(|(_, x)| x.field())
    }
}

/// Row-major sparse matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    field: FieldSpec,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize, field: FieldSpec) -> Self {
        SparseMatrix { nrows, ncols, field, rows: vec![SparseVec::zero(); nrows] }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let rows = (0..n).map(|i| SparseVec::unit(i, field.one())).collect();
        SparseMatrix { nrows: n, ncols: n, field, rows }
    }

    /// Builds from `(row, col, value)` triples. Rejects duplicates, stored
    /// zeros, out-of-range indices and entries from another field.
    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        field: FieldSpec,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (r, c, x) in triplets {
            if r >= nrows || c >= ncols {
                return Err(Error::MalformedMatrix(format!("entry ({r},{c}) outside {nrows}x{ncols}")));
            }
            if x.field() != field {
                return Err(Error::FieldMismatch { expected: field.to_string(), found: x.field().to_string() });
            }
            if x.is_zero() {
                return Err(Error::MalformedMatrix(format!("stored zero at ({r},{c})")));
            }
            rows[r].push((c, x));
        }
        let mut out = Vec::with_capacity(nrows);
        for (r, mut row) in rows.into_iter().enumerate() {
            row.sort_by_key(|(c, _)| *c);
            if let Some(w) = row.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::MalformedMatrix(format!("duplicate entry ({r},{})", w[0].0)));
            }
            out.push(SparseVec::from_sorted_unchecked(row));
        }
        Ok(SparseMatrix { nrows, ncols, field, rows: out })
    }

    /// Rows given as sparse vectors; every index must be below `ncols`.
    pub fn from_rows(ncols: usize, field: FieldSpec, rows: Vec<SparseVec>) -> Result<Self> {
        for row in &rows {
            check_vec(row, ncols, field)?;
        }
        Ok(SparseMatrix { nrows: rows.len(), ncols, field, rows })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(nrows: usize, field: FieldSpec, columns: &[SparseVec]) -> Result<Self> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (j, col) in columns.iter().enumerate() {
            check_vec(col, nrows, field)?;
            for (i, x) in col.iter() {
                rows[i].push((j, x.clone()));
            }
        }
        let rows = rows.into_iter().map(SparseVec::from_sorted_unchecked).collect();
        Ok(SparseMatrix { nrows, ncols: columns.len(), field, rows })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Scalar> {
        self.rows[r].get(c)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, x)| (r, c, x)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.ncols, self.field, &self.rows).expect("transpose of a valid matrix")
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().rows
    }

    /// `self · v`.
    pub fn apply(&self, v: &SparseVec) -> Result<SparseVec> {
        if let Some(m) = v.max_index() {
            if m >= self.ncols {
                return Err(Error::DimensionMismatch { expected: self.ncols, found: m + 1 });
            }
        }
        let entries = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(i, row)| row.dot(v).filter(|x| !x.is_zero()).map(|x| (i, x)))
            .collect();
        Ok(SparseVec::from_sorted_unchecked(entries))
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch { expected: self.ncols, found: other.nrows });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().fold(SparseVec::zero(), |acc, (k, x)| acc.add_scaled(x, &other.rows[k])))
            .collect();
        Ok(SparseMatrix { nrows: self.nrows, ncols: other.ncols, field: self.field, rows })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }
}

pub(crate) fn check_vec(v: &SparseVec, dim: usize, field: FieldSpec) -> Result<()> {
    if let Some(m) = v.max_index() {
        if m >= dim {
            return Err(Error::DimensionMismatch { expected: dim, found: m + 1 });
        }
    }
    if let Some(f) = v.field() {
        if v.iter().any(|(_, x)| x.field() != field) {
            return Err(Error::FieldMismatch { expected: field.to_string(), found: f.to_string() });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_entries(entries.iter().map(|&(i, x)| (i, Q.from_i64(x))))
    }

    #[test]
    fn add_scaled_cancels() {
        let a = v(&[(0, 1), (2, 3)]);
        let b = v(&[(2, 1), (5, 1)]);
        assert_eq!(a.add_scaled(&Q.from_i64(-3), &b), v(&[(0, 1), (5, -3)]));
        assert_eq!(a.dot(&b), Some(Q.from_i64(3)));
    }

    #[test]
    fn triplet_validation() {
        assert!(SparseMatrix::from_triplets(2, 2, Q, [(0, 0, Q.one()), (0, 0, Q.one())]).is_err());
        assert!(SparseMatrix::from_triplets(2, 2, Q, [(0, 0, Q.zero())]).is_err());
        assert!(SparseMatrix::from_triplets(2, 2, Q, [(2, 0, Q.one())]).is_err());
        let f5 = FieldSpec::PrimeField(5);
        assert!(matches!(SparseMatrix::from_triplets(2, 2, Q, [(0, 0, f5.one())]), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn product_and_transpose() {
        let m = SparseMatrix::from_triplets(2, 3, Q, [(0, 0, Q.one()), (1, 2, Q.from_i64(2))]).unwrap();
        let t = m.transpose();
        assert_eq!(t.nrows(), 3);
        let mt = m.mul(&t).unwrap();
        assert_eq!(mt.get(1, 1), Some(&Q.from_i64(4)));
        assert_eq!(m.apply(&v(&[(2, 1)])).unwrap(), v(&[(1, 2)]));
    }
}
