//! Fixtures shared by the criterion benches.

use qdiv_core::series::pochhammer_inf;
use qdiv_core::{QSeries, Rational};

/// `(q;q)_inf` and `E2` at `order`: one sparse and one dense operand.
pub fn operands(order: usize) -> (QSeries, QSeries) {
    let euler = pochhammer_inf(&Rational::from_integer(1.into()), 1, 1, order).expect("valid offset");
    let e2 = qdiv_core::series::eisenstein(2, order).expect("weight 2");
    (euler, e2)
}
