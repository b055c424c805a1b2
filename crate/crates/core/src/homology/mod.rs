//! Cyclic homology of coordinate algebras and second homology of Lie
//! superalgebras.

mod ce;
mod kahler;
mod pairs;
mod theorems;

pub use ce::{ce_complex, ce_h2, lambda2_graded_dim, lambda3_dim, CeComplex, H2Result};
pub use kahler::{kahler_hc1_oracle, KahlerResult, Presentation};
pub use pairs::{
    check_h_relations, hc1, hc1_of, phi_psi, Hc1Result, PairSpace, PhiPsiReport, RelationReport, RelationRow,
};
pub use theorems::{
    build_psq, build_slnn, build_sq, verify_main_theorem, verify_psq_formula, verify_slnn_identity, TheoremReport,
};
