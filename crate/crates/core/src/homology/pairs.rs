//! `⟨R, R⟩`, first cyclic homology, and the odd isomorphism
//! `HC₁(R) → HC₁(R⊗Q₁)`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::assoc::{Builtin, SuperAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{
    koszul, signed, Echelon, GradedDim, GradedSpace, QuotientSpace, SparseMatrix, SparseVec, Subspace,
};

/// `R⊗R` modulo the relations
/// `a⊗b + (−1)^{|a||b|} b⊗a` and
/// `(−1)^{|a||c|} ab⊗c + (−1)^{|b||a|} bc⊗a + (−1)^{|c||b|} ca⊗b`.
/// The class of `a⊗b` is `λ(a, b)`, of parity `|a| + |b|`.
#[derive(Clone, Debug)]
pub struct PairSpace {
    algebra: SuperAlgebra,
    relations: Subspace,
    quotient: QuotientSpace,
    lambda: Vec<SparseVec>,
}

impl PairSpace {
    pub fn new(r: &SuperAlgebra) -> Result<Self> {
        let d = r.dim();
        let field = r.field();
        let one = field.one();
        let labels = (0..d * d).map(|s| {
            (format!("λ({}, {})", r.space().label(s / d), r.space().label(s % d)), r.parity(s / d) + r.parity(s % d))
        });
        let ambient = Arc::new(GradedSpace::new(labels.collect::<Vec<_>>())?);
        // x⊗y for algebra vectors x, y
        let pair = |x: &SparseVec, y: &SparseVec| -> SparseVec {
            let entries = x.iter().flat_map(|(i, a)| y.iter().map(move |(j, b)| (i * d + j, a * b)));
            SparseVec::from_entries(entries.collect::<Vec<_>>())
        };
        let e = |i: usize| r.basis_vector(i);
        let mut gens = Vec::new();
        for a in 0..d {
            for b in a..d {
                let flip = koszul(r.parity(a), r.parity(b));
                gens.push(pair(&e(a), &e(b)).add_scaled(&signed(flip, one.clone()), &pair(&e(b), &e(a))));
            }
        }
        let cyclic: Vec<SparseVec> = (0..d * d * d)
            .into_par_iter()
            .map(|t| {
                let (a, b, c) = (t / (d * d), t / d % d, t % d);
                let (pa, pb, pc) = (r.parity(a), r.parity(b), r.parity(c));
                let term = |x: usize, y: usize, z: usize, flip: bool| -> SparseVec {
                    r.basis_product(x, y)
                        .map_or_else(SparseVec::zero, |xy| pair(xy, &e(z)).scale(&signed(flip, one.clone())))
                };
                term(a, b, c, koszul(pa, pc)).add(&term(b, c, a, koszul(pb, pa))).add(&term(c, a, b, koszul(pc, pb)))
            })
            .collect();
        gens.extend(cyclic);
        let relations = Subspace::span(ambient, field, gens)?;
        let quotient = QuotientSpace::new(relations.clone())?;
        let lambda = (0..d * d).map(|s| quotient.project(&SparseVec::unit(s, one.clone()))).collect();
        Ok(PairSpace { algebra: r.clone(), relations, quotient, lambda })
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    /// `R⊗R`, with `a⊗b` at index `a·dim R + b`.
    pub fn ambient(&self) -> &Arc<GradedSpace> {
        self.relations.ambient()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn graded_dim(&self) -> GradedDim {
        self.quotient.graded_dim()
    }

    /// `λ(e_a, e_b)` in quotient coordinates.
    pub fn lambda(&self, a: usize, b: usize) -> &SparseVec {
        &self.lambda[a * self.algebra.dim() + b]
    }

    /// Bilinear `λ(x, y)`.
    pub fn lambda_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc = acc.add_scaled(&(a * b), self.lambda(i, j));
            }
        }
        acc
    }

    /// Image of an ambient vector `Σ c_ab a⊗b` under `a⊗b ↦ [a, b]`.
    fn commutator_image(&self, v: &SparseVec) -> SparseVec {
        let r = &self.algebra;
        let d = r.dim();
        v.iter().fold(SparseVec::zero(), |acc, (s, x)| {
            let c = r.commutator_vec(&r.basis_vector(s / d), &r.basis_vector(s % d)).expect("homogeneous");
            acc.add_scaled(x, &c)
        })
    }
}

#[derive(Clone, Debug)]
pub struct Hc1Result {
    pub pairs: PairSpace,
    /// `{Σλ(a_i,b_i) : Σ[a_i,b_i] = 0}` inside the quotient space.
    pub cycles: Subspace,
    pub graded_dim: GradedDim,
}

/// Kernel of `λ(a,b) ↦ [a,b]` on `⟨R,R⟩`. Fails if that map does not vanish
/// on the relations.
pub fn hc1(r: &SuperAlgebra) -> Result<Hc1Result> {
    hc1_of(PairSpace::new(r)?)
}

pub fn hc1_of(pairs: PairSpace) -> Result<Hc1Result> {
    for (k, v) in pairs.relations.basis().iter().enumerate() {
        if !pairs.commutator_image(v).is_zero() {
            return Err(Error::NotWellDefined(format!("commutator map does not kill relation vector {k}")));
        }
    }
    let field = pairs.algebra.field();
    let cols: Vec<SparseVec> =
        pairs.quotient.section().iter().map(|&s| pairs.commutator_image(&SparseVec::unit(s, field.one()))).collect();
    let m = SparseMatrix::from_columns(pairs.algebra.dim(), field, &cols)?;
    let cycles = Subspace::kernel(&m, pairs.quotient.space().clone())?;
    let graded_dim = cycles.graded_dim()?;
    Ok(Hc1Result { pairs, cycles, graded_dim })
}

/// One instance of an identity between classes in `⟨S, S⟩`, `S = R⊗Q₁`.
#[derive(Clone, Debug)]
pub struct RelationRow {
    pub relation: &'static str,
    pub a: String,
    pub b: String,
    pub lhs: SparseVec,
    pub rhs: SparseVec,
    /// `lhs − rhs` in canonical quotient coordinates.
    pub residue: SparseVec,
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub rows: Vec<RelationRow>,
}

impl RelationReport {
    pub fn failures(&self) -> impl Iterator<Item = &RelationRow> {
        self.rows.iter().filter(|r| !r.residue.is_zero())
    }

    pub fn all_hold(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, relation: &str) -> usize {
        self.rows.iter().filter(|r| r.relation == relation).count()
    }
}

/// Checks, in `⟨R⊗Q₁, R⊗Q₁⟩` and for homogeneous basis elements `a, b` of R:
///
/// * `h-odd`: `h(a⊗1, b⊗ν) = −(−1)^{|a||b|} h(b⊗1, a⊗ν)`
/// * `h-even-vanish-1`: `h(a⊗1, b⊗1) = 0` when `a` or `b` is odd
/// * `h-even-vanish-nu`: `h(a⊗ν, b⊗ν) = 0` when `a` or `b` is odd
///
/// The two vanishing rows are not identities in general. The commutator map
/// `h(x, y) ↦ [x, y]` is well defined on the pair space, and in `R = k[ξ]` it
/// sends `h(1⊗ν, ξ⊗ν)` to `−2ξ⊗1`, while in `R = Q₁` it sends `h(ν⊗1, ν⊗1)`
/// to `2`. Reports show exactly which instances fail.
/// * `h-even-commutator`: `h(a⊗1, b⊗1) = ½ h([a,b]⊗ν, 1⊗ν)` for even `a, b`
/// * `h-even-anticommutator`: `h(a⊗ν, b⊗ν) = ½ h({a,b}⊗ν, 1⊗ν)` for even `a, b`
/// * `h-unit`: `h(a⊗1, 1⊗ν) = 0`
pub fn check_h_relations(r: &SuperAlgebra) -> Result<RelationReport> {
    let field = r.field();
    let s = r.tensor(&Builtin::Q1.build(field)?)?;
    let pairs = PairSpace::new(&s)?;
    let d = r.dim();
    let half = field.from_i64(2).inv()?;
    // x⊗1 and x⊗ν as S-vectors
    let with = |x: &SparseVec, q: usize| x.remap(|i| 2 * i + q);
    let e = |i: usize| r.basis_vector(i);
    let unit_nu = with(r.unit(), 1);
    let h = |x: &SparseVec, y: &SparseVec| pairs.lambda_vec(x, y);
    let label = |i: usize| r.space().label(i).to_string();
    let mut rows = Vec::new();
    let mut push = |relation: &'static str, a: usize, b: usize, lhs: SparseVec, rhs: SparseVec| {
        let residue = lhs.sub(&rhs);
        rows.push(RelationRow { relation, a: label(a), b: label(b), lhs, rhs, residue });
    };
    for a in 0..d {
        for b in 0..d {
            let (pa, pb) = (r.parity(a), r.parity(b));
            let lhs = h(&with(&e(a), 0), &with(&e(b), 1));
            let rhs = h(&with(&e(b), 0), &with(&e(a), 1)).scale(&signed(!koszul(pa, pb), field.one()));
            push("h-odd", a, b, lhs, rhs);
            let even_pair = h(&with(&e(a), 0), &with(&e(b), 0));
            let odd_pair = h(&with(&e(a), 1), &with(&e(b), 1));
            if pa.is_odd() || pb.is_odd() {
                push("h-even-vanish-1", a, b, even_pair, SparseVec::zero());
                push("h-even-vanish-nu", a, b, odd_pair, SparseVec::zero());
            } else {
                let ab = r.mul_vec(&e(a), &e(b));
                let ba = r.mul_vec(&e(b), &e(a));
                let comm = h(&with(&ab.sub(&ba), 1), &unit_nu).scale(&half);
                push("h-even-commutator", a, b, even_pair, comm);
                let anti = h(&with(&ab.add(&ba), 1), &unit_nu).scale(&half);
                push("h-even-anticommutator", a, b, odd_pair, anti);
            }
        }
        push("h-unit", a, a, h(&with(&e(a), 0), &unit_nu), SparseVec::zero());
    }
    Ok(RelationReport { rows })
}

/// The two odd maps `φ: HC₁(R⊗Q₁) → HC₁(R)` and `ψ: HC₁(R) → HC₁(R⊗Q₁)`,
/// `ψ(Σλ(a_i,b_i)) = Σh(a_i⊗1, b_i⊗ν)` and `φ` its intended inverse, with
/// everything established about them.
#[derive(Clone, Debug)]
pub struct PhiPsiReport {
    pub hc1_r: Hc1Result,
    pub hc1_s: Hc1Result,
    /// `ψ` on each quotient basis vector of `⟨R,R⟩`.
    pub psi: Vec<SparseVec>,
    /// `φ` on each basis vector of `HC₁(R⊗Q₁)`, in `⟨R,R⟩` coordinates.
    pub phi: Vec<SparseVec>,
    /// Every class of `HC₁(R⊗Q₁)` is a sum of `h(a⊗1, b⊗ν)`.
    pub hc1_in_normal_form: bool,
    /// `a⊗b ↦ h(a⊗1, b⊗ν)` kills the relations of `⟨R,R⟩`.
    pub psi_well_defined: bool,
    /// The kernel of `a⊗b ↦ h(a⊗1, b⊗ν)` lies in the relations, so the
    /// value of `φ` does not depend on the chosen preimage.
    pub phi_well_defined: bool,
    pub phi_after_psi_is_identity: bool,
    pub psi_after_phi_is_identity: bool,
    pub both_flip_parity: bool,
    /// `ψ(HC₁(R)) = HC₁(R⊗Q₁)` as subspaces.
    pub psi_maps_hc1_onto_hc1: bool,
}

impl PhiPsiReport {
    pub fn all_hold(&self) -> bool {
        self.hc1_in_normal_form
            && self.psi_well_defined
            && self.phi_well_defined
            && self.phi_after_psi_is_identity
            && self.psi_after_phi_is_identity
            && self.both_flip_parity
            && self.psi_maps_hc1_onto_hc1
    }
}

pub fn phi_psi(r: &SuperAlgebra) -> Result<PhiPsiReport> {
    let field = r.field();
    let s = r.tensor(&Builtin::Q1.build(field)?)?;
    let hc1_r = hc1(r)?;
    let hc1_s = hc1(&s)?;
    let (pr, ps) = (&hc1_r.pairs, &hc1_s.pairs);
    let d = r.dim();
    let qs = ps.dim();
    // P(a⊗b) = h(a⊗1, b⊗ν)
    let p_cols: Vec<SparseVec> = (0..d * d).map(|t| ps.lambda(2 * (t / d), 2 * (t % d) + 1).clone()).collect();
    let apply_p = |v: &SparseVec| v.iter().fold(SparseVec::zero(), |acc, (t, x)| acc.add_scaled(x, &p_cols[t]));

    let psi_well_defined = pr.relations().basis().iter().all(|v| apply_p(v).is_zero());
    let psi: Vec<SparseVec> = pr.quotient().section().iter().map(|&t| p_cols[t].clone()).collect();
    let apply_psi = |v: &SparseVec| v.iter().fold(SparseVec::zero(), |acc, (k, x)| acc.add_scaled(x, &psi[k]));

    // Rows (P(e_t) | e_t) with the image part first; reducing (z | 0) leaves
    // (0 | −t) with P(t) = z whenever z is in the image of P.
    let mut ech = Echelon::new(qs + d * d, field);
    for (t, col) in p_cols.iter().enumerate() {
        ech.insert(&SparseVec::from_entries(col.iter().map(|(i, x)| (i, x.clone())).chain([(qs + t, field.one())])));
    }
    let kernel: Vec<SparseVec> =
        ech.pivots().filter(|&p| p >= qs).map(|p| ech.row_at(p).expect("pivot").remap(|i| i - qs)).collect();
    let phi_well_defined = kernel.iter().all(|v| pr.relations().contains(v));
    let solve = |z: &SparseVec| -> Option<SparseVec> {
        let red = ech.reduce(z);
        if red.iter().any(|(i, _)| i < qs) {
            return None;
        }
        Some(pr.quotient().project(&red.remap(|i| i - qs).neg()))
    };
    let solved: Vec<Option<SparseVec>> = hc1_s.cycles.basis().iter().map(solve).collect();
    let hc1_in_normal_form = solved.iter().all(Option::is_some);
    let phi: Vec<SparseVec> = solved.into_iter().map(Option::unwrap_or_default).collect();

    let phi_after_psi_is_identity =
        hc1_in_normal_form && hc1_r.cycles.basis().iter().all(|c| solve(&apply_psi(c)).as_ref() == Some(c));
    let psi_after_phi_is_identity =
        hc1_in_normal_form && hc1_s.cycles.basis().iter().zip(&phi).all(|(z, y)| apply_psi(y) == *z);
    let flips = |pairs: &[(&SparseVec, SparseVec)], from: &QuotientSpace, to: &QuotientSpace| {
        pairs.iter().all(|(x, y)| match (x.parity_in(from.space()), y.parity_in(to.space())) {
            _ if y.is_zero() => true,
            (Some(px), Some(py)) => py == px.flip(),
            _ => false,
        })
    };
    let psi_pairs: Vec<(&SparseVec, SparseVec)> = hc1_r.cycles.basis().iter().map(|c| (c, apply_psi(c))).collect();
    let phi_pairs: Vec<(&SparseVec, SparseVec)> = hc1_s.cycles.basis().iter().zip(phi.iter().cloned()).collect();
    let both_flip_parity =
        flips(&psi_pairs, pr.quotient(), ps.quotient()) && flips(&phi_pairs, ps.quotient(), pr.quotient());
    let mapped = Subspace::span(hc1_s.cycles.ambient().clone(), field, psi_pairs.into_iter().map(|(_, y)| y))?;
    let psi_maps_hc1_onto_hc1 = mapped == hc1_s.cycles;
    Ok(PhiPsiReport {
        psi,
        phi,
        hc1_in_normal_form,
        psi_well_defined,
        phi_well_defined,
        phi_after_psi_is_identity,
        psi_after_phi_is_identity,
        both_flip_parity,
        psi_maps_hc1_onto_hc1,
        hc1_r,
        hc1_s,
    })
}
