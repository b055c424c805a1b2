//! gl, q, sq and sl over a coordinate superalgebra.
//!
//! Index conventions, with `d = dim R`:
//! * `gl_{m|n}(R)`: `e_ij(r)` at `(i·N + j)·d + r`, `N = m + n`.
//! * `q_n(R)`: `u_ij(r)` at `(i·n + j)·d + r`, `w_ij(r)` at `n²d` plus that.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{lie_from_assoc, LieSuperAlgebra, Weight};
use crate::assoc::{commutator_subspace, SuperAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{koszul, signed, GradedSpace, Parity, SparseVec, Subspace};

fn unit_label(prefix: &str, i: usize, j: usize, size: usize, coord: &str) -> String {
    if size < 10 {
        format!("{prefix}{}{}({coord})", i + 1, j + 1)
    } else {
        format!("{prefix}{},{}({coord})", i + 1, j + 1)
    }
}

fn root(size: usize, i: usize, j: usize) -> Weight {
    let mut w = vec![0; size];
    w[i] += 1;
    w[j] -= 1;
    w
}

/// `M_{m|n}(R)`: matrix units `e_ij(r)` of parity `|i| + |j| + |r|`, with the
/// plain matrix product `e_ij(a)·e_jl(b) = e_il(ab)`.
pub fn matrix_superalgebra(m: usize, n: usize, r: &SuperAlgebra) -> Result<SuperAlgebra> {
    let size = m + n;
    if size == 0 {
        return Err(Error::InvalidParams("matrix size m + n must be positive".into()));
    }
    let d = r.dim();
    let field = r.field();
    let block = |i: usize| if i < m { Parity::Even } else { Parity::Odd };
    let idx = |i: usize, j: usize, a: usize| (i * size + j) * d + a;
    let mut basis = Vec::with_capacity(size * size * d);
    for i in 0..size {
        for j in 0..size {
            for a in 0..d {
                basis.push((unit_label("e", i, j, size, r.space().label(a)), block(i) + block(j) + r.parity(a)));
            }
        }
    }
    let mut products = BTreeMap::new();
    for i in 0..size {
        for j in 0..size {
            for l in 0..size {
                for (&(a, b), ab) in r.products() {
                    products.insert((idx(i, j, a), idx(j, l, b)), ab.remap(|c| idx(i, l, c)));
                }
            }
        }
    }
    let unit = SparseVec::from_entries(
        (0..size).flat_map(|i| r.unit().iter().map(move |(a, x)| (idx(i, i, a), x.clone()))).collect::<Vec<_>>(),
    );
    let name = format!("M_{{{m}|{n}}}({})", r.name());
    Ok(SuperAlgebra::unchecked(name, field, GradedSpace::new(basis)?, products, unit))
}

/// `gl_{m|n}(R)` as the super-commutator algebra of `M_{m|n}(R)`.
pub fn build_gl(m: usize, n: usize, r: &SuperAlgebra) -> Result<LieSuperAlgebra> {
    let size = m + n;
    let g = lie_from_assoc(&matrix_superalgebra(m, n, r)?);
    let d = r.dim();
    let weights = (0..size * size * d).map(|s| root(size, s / d / size, s / d % size)).collect();
    g.with_name(format!("gl_{{{m}|{n}}}({})", r.name())).with_weights(weights)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QBlock {
    /// Diagonal-block generator `u_ij(r)`, parity `|r|`.
    U,
    /// Off-diagonal generator `w_ij(r)`, parity `|r| + 1`.
    W,
}

/// Coordinate of `u_ij(r)` or `w_ij(r)` in `q_n(R)` with `dim R = d`.
pub fn q_index(n: usize, d: usize, block: QBlock, i: usize, j: usize, r: usize) -> usize {
    let base = (i * n + j) * d + r;
    match block {
        QBlock::U => base,
        QBlock::W => n * n * d + base,
    }
}

/// `q_n(R)` from the closed bracket formulas
///
/// ```text
/// [u_ij(a), u_kl(b)] = δ_jk u_il(ab) − (−1)^{|a||b|} δ_il u_kj(ba)
/// [u_ij(a), w_kl(b)] = δ_jk w_il(ab) − (−1)^{|a||b|} δ_il w_kj(ba)
/// [w_ij(a), w_kl(b)] = (−1)^{|b|} (δ_jk u_il(ab) + (−1)^{|a||b|} δ_il u_kj(ba))
/// ```
///
/// with `[w, u]` from super-antisymmetry. [`q_embedding`] checks these against
/// block matrices in `gl_{n|n}(R)`.
pub fn build_q(n: usize, r: &SuperAlgebra) -> Result<LieSuperAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParams("q_n needs n ≥ 1".into()));
    }
    let d = r.dim();
    let field = r.field();
    let one = field.one();
    let dim = 2 * n * n * d;
    let mut basis = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for (block, prefix, shift) in [(QBlock::U, "u", Parity::Even), (QBlock::W, "w", Parity::Odd)] {
        for i in 0..n {
            for j in 0..n {
                for a in 0..d {
                    debug_assert_eq!(basis.len(), q_index(n, d, block, i, j, a));
                    basis.push((unit_label(prefix, i, j, n, r.space().label(a)), r.parity(a) + shift));
                    weights.push(root(n, i, j));
                }
            }
        }
    }
    let space = GradedSpace::new(basis)?;
    let embed = |block: QBlock, i: usize, j: usize, v: Option<&SparseVec>, sign: bool| -> SparseVec {
        match v {
            Some(v) => SparseVec::from_entries(
                v.iter().map(|(c, x)| (q_index(n, d, block, i, j, c), signed(sign, x.clone()))).collect::<Vec<_>>(),
            ),
            None => SparseVec::zero(),
        }
    };
    let mut table = vec![SparseVec::zero(); dim * dim];
    for (bx, by) in [(QBlock::U, QBlock::U), (QBlock::U, QBlock::W), (QBlock::W, QBlock::W)] {
        let out_block = if bx == by { QBlock::U } else { QBlock::W };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for a in 0..d {
                            for b in 0..d {
                                let (pa, pb) = (r.parity(a), r.parity(b));
                                let ab = r.basis_product(a, b).filter(|_| j == k);
                                let ba = r.basis_product(b, a).filter(|_| i == l);
                                let both_w = bx == QBlock::W;
                                // the sign in front of the δ_il term
                                let second = if both_w { koszul(pa, pb) } else { !koszul(pa, pb) };
                                let mut v = embed(out_block, i, l, ab, false).add(&embed(out_block, k, j, ba, second));
                                if both_w && pb.is_odd() {
                                    v = v.neg();
                                }
                                let x = q_index(n, d, bx, i, j, a);
                                let y = q_index(n, d, by, k, l, b);
                                if bx != by {
                                    // [w_kl(b), u_ij(a)] = −(−1)^{|w||u|} [u_ij(a), w_kl(b)]
                                    let flip = !koszul(pa, pb.flip());
                                    table[y * dim + x] = v.scale(&signed(flip, one.clone()));
                                }
                                table[x * dim + y] = v;
                            }
                        }
                    }
                }
            }
        }
    }
    LieSuperAlgebra::unchecked(format!("q_{n}({})", r.name()), field, Arc::new(space), table)?.with_weights(weights)
}

/// Images of the `q_n(R)` basis in `gl_{n|n}(R)`:
/// `u_ij(r) ↦ E_ij(r) + (−1)^{|r|} E_{n+i,n+j}(r)` and
/// `w_ij(r) ↦ E_{i,n+j}(r) + (−1)^{|r|} E_{n+i,j}(r)`.
pub fn q_embedding(n: usize, r: &SuperAlgebra) -> Vec<SparseVec> {
    let d = r.dim();
    let field = r.field();
    let size = 2 * n;
    let e = |i: usize, j: usize, a: usize| (i * size + j) * d + a;
    let mut images = vec![SparseVec::zero(); 2 * n * n * d];
    for i in 0..n {
        for j in 0..n {
            for a in 0..d {
                let rho = signed(r.parity(a).is_odd(), field.one());
                images[q_index(n, d, QBlock::U, i, j, a)] =
                    SparseVec::from_entries([(e(i, j, a), field.one()), (e(n + i, n + j, a), rho.clone())]);
                images[q_index(n, d, QBlock::W, i, j, a)] =
                    SparseVec::from_entries([(e(i, n + j, a), field.one()), (e(n + i, j, a), rho)]);
            }
        }
    }
    images
}

/// Elements of `q_n(R)` with trace of the off-diagonal block in `[R, R]`.
pub fn build_sq_by_characterization(n: usize, r: &SuperAlgebra) -> Result<Subspace> {
    let q = build_q(n, r)?;
    let d = r.dim();
    let field = r.field();
    let unit = |block, i, j, a| SparseVec::unit(q_index(n, d, block, i, j, a), field.one());
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for a in 0..d {
                gens.push(unit(QBlock::U, i, j, a));
                if i != j {
                    gens.push(unit(QBlock::W, i, j, a));
                } else if i > 0 {
                    gens.push(unit(QBlock::W, i, i, a).sub(&unit(QBlock::W, 0, 0, a)));
                }
            }
        }
    }
    for c in commutator_subspace(r).basis() {
        gens.push(c.remap(|a| q_index(n, d, QBlock::W, 0, 0, a)));
    }
    Subspace::span(q.space().clone(), field, gens)
}

/// `{X ∈ gl_n(S) : Tr(X) ∈ [S, S]}` inside `build_gl(n, 0, S)`.
pub fn build_sl(n: usize, s: &SuperAlgebra) -> Result<Subspace> {
    if n == 0 {
        return Err(Error::InvalidParams("sl_n needs n ≥ 1".into()));
    }
    let gl = build_gl(n, 0, s)?;
    let d = s.dim();
    let field = s.field();
    let e = |i: usize, j: usize, a: usize| (i * n + j) * d + a;
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for a in 0..d {
                if i != j {
                    gens.push(SparseVec::unit(e(i, j, a), field.one()));
                } else if i > 0 {
                    gens.push(SparseVec::from_entries([(e(i, i, a), field.one()), (e(0, 0, a), -field.one())]));
                }
            }
        }
    }
    for c in commutator_subspace(s).basis() {
        gens.push(c.remap(|a| e(0, 0, a)));
    }
    Subspace::span(gl.space().clone(), field, gens)
}

/// `Σ_i u_ii(r)` for each basis vector `r` of `R`, as `q_n(R)` coordinates.
pub fn scalar_matrices(n: usize, r: &SuperAlgebra) -> Vec<SparseVec> {
    let d = r.dim();
    (0..d)
        .map(|a| SparseVec::from_entries((0..n).map(|i| (q_index(n, d, QBlock::U, i, i, a), r.field().one()))))
        .collect()
}
