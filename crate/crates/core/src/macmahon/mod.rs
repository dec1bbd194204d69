//! MacMahon's generating functions `A_k`, `C_k` and the objects used to
//! compute them: partition-sum oracles, three independent series routes,
//! rescaled Chebyshev polynomials and the theta series `F(x,q)`, `G(x,q)`.

mod chebyshev;
mod generate;
mod oracle;
mod theta;

pub use chebyshev::{cheb_coeff_closed, cheb_rescaled, cheb_rescaled_table, IntPolynomial, Parity};
pub use generate::{gen_direct, gen_explicit, gen_recurrence, generate, recurrence_step, Method};
pub(crate) use generate::recurrence_from_seed;
pub use oracle::{oracle, oracle_a, oracle_c};
pub use theta::{theta_f, theta_g, BivarSeries};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Selects between the two generating-function families.
///
/// `A` sums over parts `m_1 < ... < m_k`; `C` over the odd parts
/// `2m_1 - 1 < ... < 2m_k - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::A, Family::C];

    /// The `i`-th admissible part, `i >= 1`.
    pub(crate) fn part(self, i: u64) -> u64 {
        match self {
            Family::A => i,
            Family::C => 2 * i - 1,
        }
    }

    /// Smallest `n` with a nonzero coefficient in the `k`-th series:
    /// `1 + 2 + ... + k` for `A`, `1 + 3 + ... + (2k-1)` for `C`.
    pub fn threshold(self, k: usize) -> usize {
        match self {
            Family::A => k * (k + 1) / 2,
            Family::C => k * k,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::C => "C",
        })
    }
}

impl FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "C" | "c" => Ok(Family::C),
            other => Err(crate::Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}
