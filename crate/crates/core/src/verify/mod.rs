//! Every identity as an executable check.
//!
//! A suite compares two exactly computed sides coefficient by coefficient
//! and returns a [`VerificationReport`]. A failure carries the first
//! mismatching coefficient pair in full. Each suite also accepts a
//! [`Fault`], which adds one to a single coefficient of a named
//! intermediate; this is how the suites themselves are tested.

mod suites;

pub use suites::{
    probe_family_c_quasimodularity, verify_method_agreement, verify_method_agreement_with, verify_operator_chain,
    verify_quasimodularity, verify_quasimodularity_with, verify_seed_identities, verify_theorem_f,
    verify_theorem_f_with, verify_theorem_g, verify_theorem_g_with, ORACLE_PREFIX,
};

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::rational::{self, Rational};
use crate::series::QSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    /// Set for identities between bivariate series.
    pub x_degree: Option<usize>,
    pub q_exponent: usize,
    #[serde(with = "rational::serde_str")]
    pub lhs_coefficient: Rational,
    #[serde(with = "rational::serde_str")]
    pub rhs_coefficient: Rational,
    /// Which comparison inside the suite failed.
    pub context: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.x_degree {
            Some(d) => write!(f, "x^{d} q^{}", self.q_exponent)?,
            None => write!(f, "q^{}", self.q_exponent)?,
        }
        write!(f, ": lhs={} rhs={} ({})", self.lhs_coefficient, self.rhs_coefficient, self.context)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_name: String,
    pub parameters: BTreeMap<String, String>,
    pub checked_order: usize,
    status: Status,
    first_mismatch: Option<Mismatch>,
    #[serde(rename = "elapsed_seconds", with = "seconds")]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(
        identity_name: impl Into<String>,
        parameters: BTreeMap<String, String>,
        checked_order: usize,
        first_mismatch: Option<Mismatch>,
        elapsed: Duration,
    ) -> Self {
        let status = if first_mismatch.is_some() { Status::Fail } else { Status::Pass };
        VerificationReport {
            identity_name: identity_name.into(),
            parameters,
            checked_order,
            status,
            first_mismatch,
            elapsed,
        }
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn first_mismatch(&self) -> Option<&Mismatch> {
        self.first_mismatch.as_ref()
    }

    /// Equality ignoring elapsed time.
    pub fn same_outcome(&self, other: &VerificationReport) -> bool {
        VerificationReport { elapsed: Duration::ZERO, ..self.clone() }
            == VerificationReport { elapsed: Duration::ZERO, ..other.clone() }
    }

    /// One line: status, name, parameters, and the mismatch if any.
    pub fn summary_line(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!(
            "{} {} order={} {} ({:.3}s)",
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            },
            self.identity_name,
            self.checked_order,
            params.join(" "),
            self.elapsed.as_secs_f64()
        );
        if let Some(m) = &self.first_mismatch {
            line.push_str(&format!(" first mismatch at {m}"));
        }
        line
    }
}

/// A named intermediate series inside a suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Intermediate {
    /// `x^d` entry of `F` or `G`.
    ThetaEntry { x_degree: usize },
    /// `(q^2;q^2)^3` for `F`, `(q;q)/(-q;q)` for `G`.
    Prefactor,
    /// `A_k` (before `q -> q^2`) or `C_k` on the product side.
    FamilySeries { k: usize },
    Direct,
    Explicit,
    Recurrence,
    /// Oracle values, indexed by `n`.
    Oracle,
    /// `A_k` handed to the decomposer.
    Target { k: usize },
    Eisenstein { weight: u32 },
}

/// Adds one to the coefficient at `exponent` of one intermediate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fault {
    pub intermediate: Intermediate,
    pub exponent: usize,
}

impl Fault {
    pub fn new(intermediate: Intermediate, exponent: usize) -> Self {
        Fault { intermediate, exponent }
    }
}

pub(crate) fn inject(fault: Option<&Fault>, here: Intermediate, s: QSeries) -> QSeries {
    match fault {
        Some(f) if f.intermediate == here => s.perturbed(f.exponent, &rational::int(1)),
        _ => s,
    }
}

/// First coefficient where `lhs` and `rhs` disagree.
pub(crate) fn compare(lhs: &QSeries, rhs: &QSeries, x_degree: Option<usize>, context: &str) -> Option<Mismatch> {
    lhs.first_difference(rhs).map(|n| Mismatch {
        x_degree,
        q_exponent: n,
        lhs_coefficient: lhs.coeff(n).clone(),
        rhs_coefficient: rhs.coeff(n).clone(),
        context: context.to_string(),
    })
}

mod seconds {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        Duration::try_from_secs_f64(secs).map_err(serde::de::Error::custom)
    }
}
