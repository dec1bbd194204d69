//! Exact membership certificates in the ring `Q[E2, E4, E6]`.

mod decompose;
mod divisor_form;
mod linsolve;
mod symbolic;

pub use decompose::{
    decompose, decompose_with, eval_decomposition, monomial_basis, Decomposition, EisensteinGenerators,
    NoSolution, QMDecomposition, QMMonomial, SolveStage, Term,
};
pub use divisor_form::{fit_divisor_form, DivisorFit, DivisorFitFailure, DivisorFitOutcome};
pub use linsolve::{EchelonSystem, Insertion};
pub use symbolic::{symbolic_a, QMPolynomial};
