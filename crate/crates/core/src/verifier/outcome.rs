//! Structured results for congruence checks.

use serde::{Deserialize, Serialize};

/// Verdict for one (prime, check, index) cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Both sides reduced to the same residue (or compared equal exactly).
    Pass,
    /// Both sides were evaluated and disagree at the stated modulus.
    Fail,
    /// The cell was not evaluated; `reason` says why.
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// One row of a verification report.
///
/// Every field is always serialized (absent values as `null`), so reports
/// have a fixed shape regardless of outcome mix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    /// The prime the cell was evaluated at.
    pub prime: u64,
    /// Registry id of the check family.
    pub check_id: String,
    /// Auxiliary index inside the family's sweep, when it has one.
    pub index: Option<i64>,
    /// Pass, fail, or skipped.
    pub status: Status,
    /// The modulus label both sides were reduced at (`"7^3"`-style), or
    /// `"exact"` for identity checks.
    pub modulus: String,
    /// Left side: residue as a decimal string, or `num/den` for exact
    /// checks. Absent on skipped cells.
    pub lhs: Option<String>,
    /// Right side, same encoding as `lhs`.
    pub rhs: Option<String>,
    /// Why the cell was skipped; absent on evaluated cells.
    pub reason: Option<String>,
    /// Citation tag for the statement this check validates.
    pub paper_anchor: String,
}

impl CheckOutcome {
    /// Canonical report ordering: by prime, then check id, then index
    /// (index-free cells first).
    pub fn sort_key(&self) -> (u64, &str, Option<i64>) {
        (self.prime, self.check_id.as_str(), self.index)
    }

    /// True when the cell was evaluated and failed.
    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Renders the modulus label for a prime power (`"7"`, `"7^3"`) or
/// `"exact"` when `exponent` is 0. Matches `PrimeModulus::label`.
pub fn modulus_label(p: u64, exponent: u32) -> String {
    match exponent {
        0 => "exact".to_string(),
        1 => p.to_string(),
        k => format!("{p}^{k}"),
    }
}
