use std::collections::VecDeque;

use super::{Builtin, SuperAlgebra};
use crate::error::{Error, Result};
use crate::linalg::sparse::check_vec;
use crate::linalg::{Echelon, GradedDim, SparseVec, Subspace};

/// `[A, A]`, spanned by super-commutators of basis pairs.
pub fn commutator_subspace(a: &SuperAlgebra) -> Subspace {
    let n = a.dim();
    let comms = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| a.commutator_vec(&a.basis_vector(i), &a.basis_vector(j)).expect("basis vectors are homogeneous"));
    Subspace::span(a.space().clone(), a.field(), comms.collect::<Vec<_>>()).expect("products lie in the algebra")
}

/// Smallest subspace containing `generators` and stable under left and right
/// multiplication by basis elements.
pub fn two_sided_ideal(a: &SuperAlgebra, generators: &[SparseVec]) -> Result<Subspace> {
    for g in generators {
        check_vec(g, a.dim(), a.field())?;
    }
    let mut ech = Echelon::new(a.dim(), a.field());
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for g in generators {
        if ech.insert(g) {
            queue.push_back(g.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if ech.rank() == a.dim() {
            break;
        }
        for i in 0..a.dim() {
            let e = a.basis_vector(i);
            for w in [a.mul_vec(&e, &v), a.mul_vec(&v, &e)] {
                if ech.insert(&w) {
                    queue.push_back(w);
                }
            }
        }
    }
    Subspace::span(a.space().clone(), a.field(), ech.into_rref())
}

/// Graded dimension of `S/𝒥` for `S = R⊗Q₁`, where `𝒥` is the two-sided ideal
/// generated by `n·1` and `[S, S]`.
pub fn an_vanishing_check(r: &SuperAlgebra, n: usize) -> Result<GradedDim> {
    if !(2..=3).contains(&n) {
        return Err(Error::InvalidParams(format!("vanishing check needs n ∈ {{2, 3}}, got {n}")));
    }
    let field = r.field();
    if field.characteristic().is_multiple_of(n as u64) && field.characteristic() != 0 {
        return Err(Error::InvalidParams(format!("characteristic of {field} divides {n}")));
    }
    let s = r.tensor(&Builtin::Q1.build(field)?)?;
    let mut gens = vec![s.unit().scale(&field.from_i64(n as i64))];
    gens.extend(commutator_subspace(&s).basis().iter().cloned());
    let ideal = two_sided_ideal(&s, &gens)?;
    s.graded_dim().checked_sub(ideal.graded_dim()?).ok_or_else(|| Error::Internal("ideal larger than algebra".into()))
}
