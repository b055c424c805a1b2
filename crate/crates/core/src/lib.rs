//! Exact structure-constant workbench for queer Lie superalgebras.
//!
//! Coordinate superalgebras are finite-dimensional structure-constant tables
//! over ℚ, ℚ(i) or F_p. On top of them the crate builds the matrix Lie
//! superalgebras gl, q, sq, sl and psq, the graded cyclic homology HC₁, and the
//! Chevalley–Eilenberg second homology H₂, all with exact arithmetic.

pub mod assoc;
pub mod error;
pub mod homology;
pub mod lie;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::{GradedDim, GradedSpace, Parity, SparseMatrix, SparseVec, Subspace};
pub use scalar::{FieldSpec, Scalar};
