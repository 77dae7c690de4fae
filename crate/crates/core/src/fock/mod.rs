//! Brute-force ground truth: explicit monodromy matrices of small
//! inhomogeneous fundamental chains, Bethe vectors built by the recurrence
//! relations, and exact verification of every algebraic identity against
//! direct matrix arithmetic.

mod checks;
mod exchange;
mod monodromy;
mod rmatrix;
mod vectors;

pub use checks::{
    action_formula_check, commutation_spot_check, transfer_eigencheck, transfer_eigenvalue,
    zero_mode_check, zero_mode_commutator_check,
};
pub use exchange::exchange_relation_check;
pub use monodromy::{build_monodromy, lambda_constraint_ratio_of, ChainSpec, Monodromy, DEFAULT_DIM_CAP};
pub use rmatrix::{idx, r_matrix, site_dim, yang_baxter_check};
pub use vectors::{coproduct_check, BvBuilder};
