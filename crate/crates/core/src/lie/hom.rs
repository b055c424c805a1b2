use rayon::prelude::*;

use super::{build_gl, build_q, derived_subalgebra, lie_tensor, q_index, LieSuperAlgebra, QBlock};
use crate::assoc::{Builtin, SuperAlgebra};
use crate::error::{Error, Result};
use crate::lie::build_sl;
use crate::linalg::{rref_rows, signed, SparseVec, Subspace};

/// A linear map between Lie superalgebras whose properties were all computed.
#[derive(Clone, Debug)]
pub struct VerifiedHomomorphism {
    pub source: String,
    pub target: String,
    /// Image of source basis vector `j` is `images[j]`.
    pub images: Vec<SparseVec>,
    pub parity_preserving: bool,
    pub bracket_preserving: bool,
    pub injective: bool,
    pub surjective: bool,
    pub pairs_checked: usize,
    /// First offending basis vector or pair, by index order.
    pub failure: Option<String>,
}

impl VerifiedHomomorphism {
    pub fn verify(source: &LieSuperAlgebra, target: &LieSuperAlgebra, images: Vec<SparseVec>) -> Self {
        let n = source.dim();
        assert_eq!(images.len(), n, "one image per source basis vector");
        let mut failure = None;
        let parity_bad = (0..n).find(|&j| {
            let v = &images[j];
            v.max_index().is_some_and(|m| m >= target.dim())
                || !(v.is_zero() || v.parity_in(target.space()) == Some(source.parity(j)))
        });
        if let Some(j) = parity_bad {
            failure = Some(format!("image of {} has the wrong parity", source.space().label(j)));
        }
        let apply = |v: &SparseVec| v.iter().fold(SparseVec::zero(), |acc, (k, x)| acc.add_scaled(x, &images[k]));
        let bracket_bad = if parity_bad.is_some() {
            Some((0, 0))
        } else {
            (0..n)
                .into_par_iter()
                .filter_map(|i| {
                    (0..n)
                        .find(|&j| apply(source.basis_bracket(i, j)) != target.bracket(&images[i], &images[j]))
                        .map(|j| (i, j))
                })
                .min()
        };
        if let (Some((i, j)), None) = (bracket_bad, &failure) {
            let (li, lj) = (source.space().label(i), source.space().label(j));
            failure = Some(format!("bracket of {li} and {lj} is not preserved"));
        }
        let rank = rref_rows(target.dim(), target.field(), images.iter().cloned()).len();
        VerifiedHomomorphism {
            source: source.name().to_string(),
            target: target.name().to_string(),
            parity_preserving: parity_bad.is_none(),
            bracket_preserving: bracket_bad.is_none(),
            injective: rank == n,
            surjective: rank == target.dim(),
            pairs_checked: if parity_bad.is_none() { n * n } else { 0 },
            failure,
            images,
        }
    }

    pub fn is_isomorphism(&self) -> bool {
        self.parity_preserving && self.bracket_preserving && self.injective && self.surjective
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        v.iter().fold(SparseVec::zero(), |acc, (k, x)| acc.add_scaled(x, &self.images[k]))
    }

    /// Image of a subspace of the source, inside `target`.
    pub fn image(&self, sub: &Subspace, target: &LieSuperAlgebra) -> Result<Subspace> {
        sub.map(&self.images, target.space().clone())
    }
}

/// `q_n(R) → gl_n(R⊗Q₁)`, `u_ij(a) ↦ e_ij(a⊗1)`, `w_ij(a) ↦ e_ij(a⊗ν)`.
pub fn iso_q_to_gl(n: usize, r: &SuperAlgebra) -> Result<(VerifiedHomomorphism, LieSuperAlgebra, LieSuperAlgebra)> {
    let s = r.tensor(&Builtin::Q1.build(r.field())?)?;
    let q = build_q(n, r)?;
    let gl = build_gl(n, 0, &s)?;
    let d = r.dim();
    let e = |i: usize, j: usize, sidx: usize| (i * n + j) * 2 * d + sidx;
    let mut images = vec![SparseVec::zero(); q.dim()];
    for i in 0..n {
        for j in 0..n {
            for a in 0..d {
                images[q_index(n, d, QBlock::U, i, j, a)] = SparseVec::unit(e(i, j, 2 * a), r.field().one());
                images[q_index(n, d, QBlock::W, i, j, a)] = SparseVec::unit(e(i, j, 2 * a + 1), r.field().one());
            }
        }
    }
    let hom = VerifiedHomomorphism::verify(&q, &gl, images);
    Ok((hom, q, gl))
}

/// Whether the isomorphism carries `[q_n(R), q_n(R)]` onto `sl_n(R⊗Q₁)`.
pub fn sq_image_is_sl(n: usize, r: &SuperAlgebra) -> Result<bool> {
    let (hom, q, gl) = iso_q_to_gl(n, r)?;
    let image = hom.image(&derived_subalgebra(&q), &gl)?;
    let s = r.tensor(&Builtin::Q1.build(r.field())?)?;
    Ok(image == build_sl(n, &s)?)
}

/// `q_n(R⊗Q₁) → gl_{n|n}(R)` over a field with `ι² = −1`:
///
/// ```text
/// u_ij(r⊗1) ↦ E_ij(r) + ρ E_{n+i,n+j}(r)      u_ij(r⊗ν) ↦ E_{i,n+j}(r) + ρ E_{n+i,j}(r)
/// w_ij(r⊗1) ↦ ι(−E_{i,n+j}(r) + ρ E_{n+i,j}(r))  w_ij(r⊗ν) ↦ ι(E_ij(r) − ρ E_{n+i,n+j}(r))
/// ```
///
/// with `ρ = (−1)^{|r|}`.
pub fn iso_qq1_to_glnn(n: usize, r: &SuperAlgebra) -> Result<(VerifiedHomomorphism, LieSuperAlgebra, LieSuperAlgebra)> {
    let field = r.field();
    let iota = field.sqrt_minus_one().ok_or_else(|| Error::MissingSqrtMinusOne(field.to_string()))?;
    let s = r.tensor(&Builtin::Q1.build(field)?)?;
    let q = build_q(n, &s)?;
    let gl = build_gl(n, n, r)?;
    let d = r.dim();
    let size = 2 * n;
    let e = |i: usize, j: usize, a: usize| (i * size + j) * d + a;
    let one = field.one();
    let mut images = vec![SparseVec::zero(); q.dim()];
    for i in 0..n {
        for j in 0..n {
            for a in 0..d {
                let rho = signed(r.parity(a).is_odd(), one.clone());
                let pair = |x: usize, y: usize, cx: &crate::scalar::Scalar, cy: &crate::scalar::Scalar| {
                    SparseVec::from_entries([(x, cx.clone()), (y, cy.clone())])
                };
                let (diag, anti) = ((e(i, j, a), e(n + i, n + j, a)), (e(i, n + j, a), e(n + i, j, a)));
                images[q_index(n, 2 * d, QBlock::U, i, j, 2 * a)] = pair(diag.0, diag.1, &one, &rho);
                images[q_index(n, 2 * d, QBlock::U, i, j, 2 * a + 1)] = pair(anti.0, anti.1, &one, &rho);
                images[q_index(n, 2 * d, QBlock::W, i, j, 2 * a)] = pair(anti.0, anti.1, &-&iota, &(&iota * &rho));
                images[q_index(n, 2 * d, QBlock::W, i, j, 2 * a + 1)] = pair(diag.0, diag.1, &iota, &-(&iota * &rho));
            }
        }
    }
    let hom = VerifiedHomomorphism::verify(&q, &gl, images);
    Ok((hom, q, gl))
}

/// `q_n(k)⊗R → q_n(R)` for super-commutative `R`: `u_ij⊗a ↦ u_ij(a)` and
/// `w_ij⊗a ↦ (−1)^{|a|} w_ij(a)`. Both sides use the same index, so the map
/// is a signed relabeling.
pub fn loop_iso(n: usize, r: &SuperAlgebra) -> Result<(VerifiedHomomorphism, LieSuperAlgebra, LieSuperAlgebra)> {
    let k = Builtin::BaseField.build(r.field())?;
    let src = lie_tensor(&build_q(n, &k)?, r)?;
    let dst = build_q(n, r)?;
    let d = r.dim();
    let images = (0..src.dim())
        .map(|s| {
            let (p, a) = (s / d, s % d);
            let odd_w = p >= n * n && r.parity(a).is_odd();
            SparseVec::unit(s, signed(odd_w, r.field().one()))
        })
        .collect();
    let hom = VerifiedHomomorphism::verify(&src, &dst, images);
    Ok((hom, src, dst))
}
