//! `Ω¹(R)/dR` for commutative algebras given by generators and relations,
//! computed from the presentation alone (no structure constants).

use std::collections::HashMap;

use crate::assoc::Builtin;
use crate::error::{Error, Result};
use crate::linalg::{rref_rows, GradedDim, SparseVec};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// `k[x]/(f)`, `f` monic with coefficients from degree 0 up.
    Monogenic(Vec<i64>),
    /// `k[x_1, …, x_m]` modulo monomials given as exponent vectors. Each
    /// variable needs a pure power among them so the quotient is finite.
    Monomial { vars: usize, relations: Vec<Vec<u32>> },
}

impl Presentation {
    pub fn from_builtin(b: &Builtin) -> Result<Self> {
        match b {
            Builtin::BaseField => Ok(Presentation::Monogenic(vec![0, 1])),
            Builtin::TruncatedPoly(m) => {
                let mut f = vec![0; m + 1];
                f[*m] = 1;
                Ok(Presentation::Monogenic(f))
            }
            Builtin::Monogenic(f) => Ok(Presentation::Monogenic(f.clone())),
            Builtin::GroupAlgebra(m) => {
                let mut f = vec![0; m + 1];
                f[0] = -1;
                f[*m] += 1;
                Ok(Presentation::Monogenic(f))
            }
            Builtin::SquareZeroPlane => {
                Ok(Presentation::Monomial { vars: 2, relations: vec![vec![2, 0], vec![1, 1], vec![0, 2]] })
            }
            other => Err(Error::UnsupportedPresentation(format!("{other} is not commutative with trivial grading"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KahlerResult {
    pub algebra_dim: usize,
    pub omega1_dim: usize,
    /// Dimension of `dR` inside `Ω¹`.
    pub exact_dim: usize,
    /// `Ω¹/dR`, all even.
    pub hc1: GradedDim,
}

pub fn kahler_hc1_oracle(p: &Presentation, field: FieldSpec) -> Result<KahlerResult> {
    let (dim, ambient, relations, exact) = match p {
        Presentation::Monogenic(f) => monogenic(f, field)?,
        Presentation::Monomial { vars, relations } => monomial(*vars, relations, field)?,
    };
    let rel_rank = rref_rows(ambient, field, relations.clone()).len();
    let total_rank = rref_rows(ambient, field, relations.into_iter().chain(exact)).len();
    let omega1_dim = ambient - rel_rank;
    let exact_dim = total_rank - rel_rank;
    Ok(KahlerResult { algebra_dim: dim, omega1_dim, exact_dim, hc1: GradedDim::new(omega1_dim - exact_dim, 0) })
}

type Pieces = (usize, usize, Vec<SparseVec>, Vec<SparseVec>);

/// `Ω¹ = R dx / (R f'(x) dx)`; coordinates are those of the coefficient of `dx`.
fn monogenic(f: &[i64], field: FieldSpec) -> Result<Pieces> {
    let d = match f.len().checked_sub(1) {
        Some(d) if d >= 1 && f[d] == 1 => d,
        _ => return Err(Error::UnsupportedPresentation(format!("{f:?} is not monic of positive degree"))),
    };
    let coeffs: Vec<Scalar> = f.iter().map(|c| field.from_i64(*c)).collect();
    let reduce = |mut poly: Vec<Scalar>| -> SparseVec {
        for top in (d..poly.len()).rev() {
            let lead = poly[top].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, c) in coeffs.iter().enumerate() {
                poly[top - d + i] = &poly[top - d + i] - &(&lead * c);
            }
        }
        SparseVec::from_entries(poly.into_iter().take(d).enumerate())
    };
    let derivative: Vec<Scalar> = (1..=d).map(|i| field.from_i64(i as i64 * f[i])).collect();
    let relations = (0..d)
        .map(|shift| {
            let mut poly = vec![field.zero(); shift + d];
            for (i, c) in derivative.iter().enumerate() {
                poly[shift + i] = c.clone();
            }
            reduce(poly)
        })
        .collect();
    let exact = (1..d).map(|i| SparseVec::unit(i - 1, field.from_i64(i as i64))).collect();
    Ok((d, d, relations, exact))
}

/// `Ω¹ = ⊕ R dx_i / (R·dg)` over the monomial relations `g`.
fn monomial(vars: usize, relations: &[Vec<u32>], field: FieldSpec) -> Result<Pieces> {
    if relations.iter().any(|r| r.len() != vars) {
        return Err(Error::UnsupportedPresentation("exponent vector of the wrong length".into()));
    }
    let bound: Vec<u32> = (0..vars)
        .map(|i| {
            relations
                .iter()
                .filter(|r| r.iter().enumerate().all(|(j, &e)| (j == i) == (e > 0)))
                .map(|r| r[i])
                .min()
                .ok_or_else(|| Error::UnsupportedPresentation(format!("no pure power of variable {i}; not finite")))
        })
        .collect::<Result<_>>()?;
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    let in_ideal = |m: &[u32]| relations.iter().any(|r| divides(r, m));
    let mut standard: Vec<Vec<u32>> = vec![vec![]];
    for &b in &bound {
        standard = standard.into_iter().flat_map(|m| (0..b).map(move |e| [m.clone(), vec![e]].concat())).collect();
    }
    standard.retain(|m| !in_ideal(m));
    let index: HashMap<Vec<u32>, usize> = standard.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    // c·x^m dx_i, dropped when x^m is in the ideal
    let term = |m: Vec<u32>, i: usize, c: u32| index.get(&m).map(|&k| (k * vars + i, field.from_i64(c as i64)));
    let differential = |m: &[u32], shift: &[u32]| -> SparseVec {
        let entries = (0..vars).filter(|&i| m[i] > 0).filter_map(|i| {
            let mut e: Vec<u32> = m.iter().zip(shift).map(|(a, b)| a + b).collect();
            e[i] -= 1;
            term(e, i, m[i])
        });
        SparseVec::from_entries(entries.collect::<Vec<_>>())
    };
    let zero = vec![0; vars];
    let rels = relations.iter().flat_map(|g| standard.iter().map(|s| differential(g, s))).collect();
    let exact = standard.iter().map(|m| differential(m, &zero)).collect();
    Ok((standard.len(), standard.len() * vars, rels, exact))
}
