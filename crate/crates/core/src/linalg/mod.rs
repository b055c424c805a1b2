//! Sparse exact linear algebra over ℤ/2ℤ-graded spaces.

pub mod echelon;
pub mod graded;
pub mod sparse;
pub mod subspace;

pub use echelon::{kernel_rows, rank, rref, rref_rows, Echelon};
pub use graded::{koszul, signed, GradedDim, GradedSpace, Parity};
pub use sparse::{SparseMatrix, SparseVec};
pub use subspace::{QuotientSpace, Subspace};
