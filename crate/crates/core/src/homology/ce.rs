//! Chevalley–Eilenberg complex `Λ³g → Λ²g → g` with trivial coefficients.
//!
//! Monomials are sorted index tuples over the basis reordered evens first, so
//! `Λ²g = Λ²g₀ ⊕ g₀⊗g₁ ⊕ S²g₁` appears block by block. An index may repeat
//! only when its vector is odd. Transposing neighbours `x, y` costs
//! `−(−1)^{|x||y|}`.
//!
//! The differentials are
//!
//! ```text
//! d₂(x∧y)   = [x,y]
//! d₃(x∧y∧z) = [x,y]∧z − (−1)^{|y||z|}[x,z]∧y + (−1)^{|x|(|y|+|z|)}[y,z]∧x
//! ```
//!
//! Both preserve parity and, when the algebra carries weights, weight. The
//! homology is computed block by block over (weight, parity), and each
//! block's `d₂∘d₃` is checked as it is built.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lie::{LieSuperAlgebra, Weight};
use crate::linalg::{koszul, rref_rows, signed, Echelon, GradedDim, GradedSpace, Parity, SparseMatrix, SparseVec};
use crate::scalar::{FieldSpec, Scalar};

/// `C(n, k)` for small `k`.
fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Graded dimension of `Λ²` of a space of graded dimension `(a|b)`.
pub fn lambda2_graded_dim(g: GradedDim) -> GradedDim {
    let (a, b) = (g.even, g.odd);
    GradedDim::new(choose(a, 2) + choose(b + 1, 2), a * b)
}

/// Total dimension of `Λ³` of a space of graded dimension `(a|b)`.
pub fn lambda3_dim(g: GradedDim) -> usize {
    let (a, b) = (g.even, g.odd);
    choose(a, 3) + choose(a, 2) * b + a * choose(b + 1, 2) + choose(b + 2, 3)
}

/// Basis order used by the complex: evens first, then odds, each in the
/// algebra's order.
struct Order {
    /// position → basis index
    basis: Vec<usize>,
    parity: Vec<Parity>,
}

impl Order {
    fn new(g: &LieSuperAlgebra) -> Self {
        let mut basis: Vec<usize> = (0..g.dim()).filter(|&i| !g.parity(i).is_odd()).collect();
        basis.extend((0..g.dim()).filter(|&i| g.parity(i).is_odd()));
        let parity = basis.iter().map(|&i| g.parity(i)).collect();
        Order { basis, parity }
    }

    fn position_of(&self) -> Vec<usize> {
        let mut pos = vec![0; self.basis.len()];
        for (p, &i) in self.basis.iter().enumerate() {
            pos[i] = p;
        }
        pos
    }

    /// Sorts positions in place, returning the sign, or `None` if an even
    /// vector repeats.
    fn canonical<const K: usize>(&self, mut t: [usize; K]) -> Option<([usize; K], bool)> {
        let mut flip = false;
        for i in 1..K {
            let mut j = i;
            while j > 0 && t[j - 1] >= t[j] {
                if t[j - 1] == t[j] {
                    if !self.parity[t[j]].is_odd() {
                        return None;
                    }
                    break;
                }
                flip ^= !koszul(self.parity[t[j - 1]], self.parity[t[j]]);
                t.swap(j - 1, j);
                j -= 1;
            }
        }
        // a repeated even vector can also end up non-adjacent to its twin
        // during insertion; a final scan catches it
        for i in 1..K {
            if t[i - 1] == t[i] && !self.parity[t[i]].is_odd() {
                return None;
            }
        }
        Some((t, flip))
    }

    fn parity_of(&self, t: &[usize]) -> Parity {
        t.iter().fold(Parity::Even, |acc, &p| acc + self.parity[p])
    }

    fn monomials2(&self) -> Vec<[usize; 2]> {
        let n = self.basis.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if i < j || self.parity[i].is_odd() {
                    out.push([i, j]);
                }
            }
        }
        out
    }

    fn monomials3(&self) -> Vec<[usize; 3]> {
        let n = self.basis.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if i == j && !self.parity[i].is_odd() {
                    continue;
                }
                for k in j..n {
                    if j == k && !self.parity[j].is_odd() {
                        continue;
                    }
                    out.push([i, j, k]);
                }
            }
        }
        out
    }
}

/// Shared machinery for one algebra: brackets re-expressed over positions.
struct Engine<'a> {
    g: &'a LieSuperAlgebra,
    order: Order,
    pos: Vec<usize>,
    field: FieldSpec,
}

impl<'a> Engine<'a> {
    fn new(g: &'a LieSuperAlgebra) -> Self {
        let order = Order::new(g);
        let pos = order.position_of();
        Engine { g, order, pos, field: g.field() }
    }

    /// `[x, y]` for positions, as `(position, coefficient)` pairs.
    fn bracket(&self, x: usize, y: usize) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.g.basis_bracket(self.order.basis[x], self.order.basis[y]).iter().map(|(k, c)| (self.pos[k], c))
    }

    /// `d₂(x∧y)` in position coordinates of g.
    fn d2(&self, [x, y]: [usize; 2]) -> SparseVec {
        SparseVec::from_entries(self.bracket(x, y).map(|(k, c)| (k, c.clone())).collect::<Vec<_>>())
    }

    /// `d₃(x∧y∧z)` as canonical `Λ²` monomials with coefficients.
    fn d3(&self, [x, y, z]: [usize; 3]) -> Vec<([usize; 2], Scalar)> {
        let p = &self.order.parity;
        let terms = [(x, y, z, false), (x, z, y, !koszul(p[y], p[z])), (y, z, x, koszul(p[x], p[y] + p[z]))];
        let mut out = Vec::new();
        for (a, b, c, flip) in terms {
            for (k, coef) in self.bracket(a, b) {
                if let Some((m, f)) = self.order.canonical([k, c]) {
                    out.push((m, signed(flip ^ f, coef.clone())));
                }
            }
        }
        out
    }

    fn weight2(&self, w: &[Weight], t: &[usize]) -> Weight {
        let mut acc = vec![0; w.first().map_or(0, Vec::len)];
        for &p in t {
            for (a, b) in acc.iter_mut().zip(&w[self.order.basis[p]]) {
                *a += b;
            }
        }
        acc
    }

    fn key(&self, t: &[usize]) -> BlockKey {
        let weight = self.g.weights().map(|w| self.weight2(w, t)).unwrap_or_default();
        (weight, self.order.parity_of(t))
    }
}

type BlockKey = (Weight, Parity);
/// Degree 2 and degree 3 monomials of one block.
type BlockMonomials = (Vec<[usize; 2]>, Vec<[usize; 3]>);

/// The full complex with explicit matrices; meant for small algebras and tests.
#[derive(Clone, Debug)]
pub struct CeComplex {
    pub lambda2: GradedSpace,
    pub lambda3: GradedSpace,
    /// `Λ²g → g`, rows indexed by g's own basis.
    pub d2: SparseMatrix,
    /// `Λ³g → Λ²g`.
    pub d3: SparseMatrix,
}

pub fn ce_complex(g: &LieSuperAlgebra) -> Result<CeComplex> {
    let e = Engine::new(g);
    let m2 = e.order.monomials2();
    let m3 = e.order.monomials3();
    let label = |t: &[usize]| t.iter().map(|&p| g.space().label(e.order.basis[p])).collect::<Vec<_>>().join("∧");
    let lambda2 = GradedSpace::new(m2.iter().map(|t| (label(t), e.order.parity_of(t))).collect::<Vec<_>>())?;
    let lambda3 = GradedSpace::new(m3.iter().map(|t| (label(t), e.order.parity_of(t))).collect::<Vec<_>>())?;
    let index2: HashMap<[usize; 2], usize> = m2.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let d2_cols: Vec<SparseVec> = m2.iter().map(|&t| e.d2(t).remap(|p| e.order.basis[p])).collect();
    let d3_cols: Vec<SparseVec> = m3
        .par_iter()
        .map(|&t| SparseVec::from_entries(e.d3(t).into_iter().map(|(m, c)| (index2[&m], c)).collect::<Vec<_>>()))
        .collect();
    Ok(CeComplex {
        d2: SparseMatrix::from_columns(g.dim(), g.field(), &d2_cols)?,
        d3: SparseMatrix::from_columns(m2.len(), g.field(), &d3_cols)?,
        lambda2,
        lambda3,
    })
}

#[derive(Clone, Debug)]
pub struct H2Result {
    pub graded_dim: GradedDim,
    /// Cycle representatives of a basis of H₂, as vectors over the `Λ²`
    /// monomials of [`ce_complex`], each reduced against the boundaries.
    pub cycles: Vec<SparseVec>,
    pub lambda2_dim: usize,
    pub lambda3_dim: usize,
    pub rank_d2: usize,
    pub rank_d3: usize,
    pub blocks: usize,
    pub seconds: f64,
}

/// `H₂(g) = ker d₂ / im d₃`. `budget` caps the dimension of `Λ³g`.
pub fn ce_h2(g: &LieSuperAlgebra, budget: Option<usize>) -> Result<H2Result> {
    let start = Instant::now();
    let l3 = lambda3_dim(g.graded_dim());
    if let Some(b) = budget {
        if l3 > b {
            return Err(Error::BudgetExceeded { dim: l3, budget: b });
        }
    }
    let e = Engine::new(g);
    let m2 = e.order.monomials2();
    let global2: HashMap<[usize; 2], usize> = m2.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let mut blocks: BTreeMap<BlockKey, BlockMonomials> = BTreeMap::new();
    for t in m2 {
        blocks.entry(e.key(&t)).or_default().0.push(t);
    }
    for t in e.order.monomials3() {
        let key = e.key(&t);
        // a Λ³ block with no Λ² partner only maps to zero
        if let Some(b) = blocks.get_mut(&key) {
            b.1.push(t);
        }
    }
    let results: Vec<BlockResult> =
        blocks.into_par_iter().map(|(key, (m2, m3))| block_h2(&e, &key, &m2, &m3)).collect::<Result<_>>()?;
    let mut graded_dim = GradedDim::ZERO;
    let mut cycles = Vec::new();
    let (mut rank_d2, mut rank_d3) = (0, 0);
    let n_blocks = results.len();
    for r in results {
        rank_d2 += r.rank_d2;
        rank_d3 += r.rank_d3;
        match r.parity {
            Parity::Even => graded_dim.even += r.h2,
            Parity::Odd => graded_dim.odd += r.h2,
        }
        cycles.extend(r.cycles.into_iter().map(|(v, monos)| v.remap(|i| global2[&monos[i]])));
    }
    Ok(H2Result {
        graded_dim,
        cycles,
        lambda2_dim: global2.len(),
        lambda3_dim: l3,
        rank_d2,
        rank_d3,
        blocks: n_blocks,
        seconds: start.elapsed().as_secs_f64(),
    })
}

struct BlockResult {
    parity: Parity,
    h2: usize,
    rank_d2: usize,
    rank_d3: usize,
    cycles: Vec<(SparseVec, std::sync::Arc<Vec<[usize; 2]>>)>,
}

fn block_h2(e: &Engine<'_>, key: &BlockKey, m2: &[[usize; 2]], m3: &[[usize; 3]]) -> Result<BlockResult> {
    let field = e.field;
    let local: HashMap<[usize; 2], usize> = m2.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let d2_cols: Vec<SparseVec> = m2.iter().map(|&t| e.d2(t)).collect();
    let rank_d2 = rref_rows(e.g.dim(), field, d2_cols.iter().cloned()).len();
    let ker_dim = m2.len() - rank_d2;
    let mut boundaries = Echelon::new(m2.len(), field);
    if ker_dim > 0 {
        let apply_d2 = |v: &SparseVec| v.iter().fold(SparseVec::zero(), |acc, (i, x)| acc.add_scaled(x, &d2_cols[i]));
        let mut cols: Vec<SparseVec> = m3
            .par_iter()
            .map(|&t| -> Result<SparseVec> {
                let v = SparseVec::from_entries(
                    e.d3(t)
                        .into_iter()
                        .map(|(m, c)| {
                            local.get(&m).map(|&i| (i, c)).ok_or_else(|| Error::Internal("d₃ left its block".into()))
                        })
                        .collect::<Result<Vec<_>>>()?,
                );
                if !apply_d2(&v).is_zero() {
                    return Err(Error::Internal(format!("d₂∘d₃ ≠ 0 on a Λ³ monomial {t:?}")));
                }
                Ok(v)
            })
            .collect::<Result<_>>()?;
        cols.sort_by_key(SparseVec::nnz);
        for c in &cols {
            if boundaries.rank() == ker_dim {
                break;
            }
            boundaries.insert(c);
        }
    }
    let rank_d3 = boundaries.rank();
    let h2 = ker_dim - rank_d3;
    let mut cycles = Vec::new();
    if h2 > 0 {
        let m = SparseMatrix::from_columns(e.g.dim(), field, &d2_cols)?;
        let kernel = crate::linalg::kernel_rows(&m)?;
        let monos = std::sync::Arc::new(m2.to_vec());
        let mut span = boundaries.clone();
        for z in kernel {
            if span.insert(&z) {
                cycles.push((boundaries.reduce(&z), monos.clone()));
            }
        }
    }
    Ok(BlockResult { parity: key.1, h2, rank_d2, rank_d3, cycles })
}
