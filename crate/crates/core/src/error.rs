//! Error type shared by every module in the crate.

use num_bigint::BigInt;

/// Errors produced by exact-arithmetic and congruence-checking routines.
///
/// Every fallible operation in this crate returns [`crate::Result`], so a
/// caller can distinguish a mathematical precondition failure (for example a
/// rational that is not p-integral) from a configuration problem (for example
/// a Bernoulli index above the table cap).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The rational has the prime in its reduced denominator, so it has no
    /// residue modulo a power of that prime.
    #[error("denominator {denominator} is divisible by {p}: value is not {p}-integral")]
    NonPIntegral {
        /// The prime the reduction was attempted against.
        p: u64,
        /// The reduced denominator that turned out to be divisible by `p`.
        denominator: BigInt,
    },

    /// The value shares a factor with the modulus, so no modular inverse
    /// exists.
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible {
        /// The value whose inverse was requested.
        value: BigInt,
        /// The modulus the inversion was attempted against.
        modulus: BigInt,
    },

    /// Zero has no p-adic valuation (it is conventionally +infinity).
    #[error("p-adic valuation of zero is undefined")]
    UndefinedForZero,

    /// Fermat quotients require the base to be coprime to the prime.
    #[error("base {base} is divisible by {p}: Fermat quotient undefined")]
    BaseDivisible {
        /// The offending base.
        base: u64,
        /// The prime dividing it.
        p: u64,
    },

    /// An index or argument fell outside the documented domain of the
    /// operation.
    #[error("{what} out of range: {detail}")]
    OutOfRange {
        /// Short name of the parameter or operation.
        what: &'static str,
        /// Human-readable description of the violated bound.
        detail: String,
    },

    /// The argument was expected to be an odd prime and is not.
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),

    /// A check id passed on the command line does not name any registered
    /// congruence family.
    #[error("unknown check id {0:?}")]
    UnknownCheckId(String),

    /// A Bernoulli number beyond the configured table cap was requested.
    #[error("Bernoulli index {index} exceeds the table cap {cap} (raise CONGRUENCE_FORGE_MAX_INDEX)")]
    TableCapExceeded {
        /// The requested index.
        index: usize,
        /// The active cap.
        cap: usize,
    },
}

impl Error {
    /// Convenience constructor for [`Error::OutOfRange`].
    pub fn out_of_range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            detail: detail.into(),
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
