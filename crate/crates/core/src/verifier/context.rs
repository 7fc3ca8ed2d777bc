//! Per-prime evaluation context: lazily computed shared rows (harmonic
//! sums, Stirling brackets, multiple harmonic sums, lifted roots) and the
//! residue comparator every check funnels through.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, mod_reduce, Int, PrimeModulus, Rational, Residue};
use crate::mhs::{mhs_row_poly_oracle, MhsRow};
use crate::padic_roots::{lift_roots, RootSet};
use crate::stirling::{stirling_row_exact, StirlingRow};
use crate::sums::{em_weighted_sum, harmonic_power_sums_upto, power_sum, wilson_quotient_mod_p};
use crate::verifier::outcome::modulus_label;
use crate::{bernoulli, verifier::Status};

/// Both sides of a check reduced at its modulus, ready for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparedCell {
    /// Modulus label (`"7^3"` or `"exact"`).
    pub modulus: String,
    /// Left side rendered for the report.
    pub lhs: String,
    /// Right side rendered for the report.
    pub rhs: String,
    /// Whether the two sides agree.
    pub pass: bool,
}

impl ComparedCell {
    /// The status this comparison maps to.
    pub fn status(&self) -> Status {
        if self.pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Shared exact data for one prime, computed at most once per run.
///
/// The constructor does no validation and no work; every cached row is
/// built on first use, and getters surface any arithmetic error (for
/// example when `p` is not an odd prime).
pub struct PrimeContext {
    p: u64,
    harmonic_row: OnceLock<Vec<Rational>>,
    plain_row: OnceLock<Vec<Rational>>,
    stirling: OnceLock<Result<StirlingRow>>,
    mhs: OnceLock<Result<MhsRow>>,
    factorial: OnceLock<Int>,
    wilson_mod_p: OnceLock<Result<u64>>,
    agoh: OnceLock<Result<u64>>,
    lifted: OnceLock<Result<RootSet>>,
}

impl PrimeContext {
    /// Creates an empty context for `p`.
    pub fn new(p: u64) -> Self {
        PrimeContext {
            p,
            harmonic_row: OnceLock::new(),
            plain_row: OnceLock::new(),
            stirling: OnceLock::new(),
            mhs: OnceLock::new(),
            factorial: OnceLock::new(),
            wilson_mod_p: OnceLock::new(),
            agoh: OnceLock::new(),
            lifted: OnceLock::new(),
        }
    }

    /// The prime this context serves.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Harmonic power sum `H(p, k) = sum_{a=1}^{p-1} 1/a^k` for
    /// `1 <= k <= p-1`.
    pub fn harmonic(&self, k: u64) -> Result<&Rational> {
        if k == 0 || k >= self.p {
            return Err(Error::out_of_range(
                "harmonic exponent",
                format!("k = {k} outside 1..={}", self.p - 1),
            ));
        }
        let row = self
            .harmonic_row
            .get_or_init(|| harmonic_power_sums_upto(self.p, (self.p - 1) as u32));
        Ok(&row[(k - 1) as usize])
    }

    /// Plain harmonic number `H_n = sum_{j=1}^{n} 1/j` for
    /// `0 <= n <= 2(p-1)`.
    pub fn plain_harmonic(&self, n: u64) -> Result<&Rational> {
        let top = 2 * (self.p - 1);
        if n > top {
            return Err(Error::out_of_range(
                "harmonic length",
                format!("n = {n} outside 0..={top}"),
            ));
        }
        let row = self.plain_row.get_or_init(|| {
            let mut acc = Rational::new(Int::from(0), Int::from(1));
            let mut out = Vec::with_capacity((top + 1) as usize);
            out.push(acc.clone());
            for j in 1..=top {
                acc += Rational::new(Int::from(1), Int::from(j));
                out.push(acc.clone());
            }
            out
        });
        Ok(&row[n as usize])
    }

    /// The exact Stirling row for `p` letters.
    pub fn stirling(&self) -> Result<&StirlingRow> {
        self.stirling
            .get_or_init(|| stirling_row_exact(self.p))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// The exact multiple harmonic sum row `A*_1 .. A*_{p-1}`.
    pub fn mhs(&self) -> Result<&MhsRow> {
        self.mhs
            .get_or_init(|| mhs_row_poly_oracle(self.p))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `(p-1)!` exactly.
    pub fn factorial(&self) -> &Int {
        self.factorial.get_or_init(|| factorial(self.p - 1))
    }

    /// Wilson quotient reduced modulo `p`.
    pub fn wilson_mod_p(&self) -> Result<u64> {
        self.wilson_mod_p
            .get_or_init(|| wilson_quotient_mod_p(self.p))
            .clone()
    }

    /// Agoh-Giuga quotient `(p B_{p-1} + 1)/p` reduced modulo `p`.
    pub fn agoh(&self) -> Result<u64> {
        self.agoh
            .get_or_init(|| {
                bernoulli::agoh_quotient(self.p).map(|r| {
                    r.value_u64()
                        .expect("a residue modulo p fits in a machine word")
                })
            })
            .clone()
    }

    /// The Hensel-lifted roots of `X^{p-1} + (p-1)!` modulo `p^3`.
    pub fn lifted_roots(&self) -> Result<&RootSet> {
        self.lifted
            .get_or_init(|| lift_roots(self.p))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Fermat-quotient weighted sum `sum q_a^2 a^e (mod p)`.
    pub fn em(&self, e: i64) -> Result<Residue> {
        em_weighted_sum(self.p, e)
    }

    /// Exact power sum `S_k(p) = sum_{a=1}^{p-1} a^k`.
    pub fn power_sum(&self, k: u32) -> Int {
        power_sum(self.p, k)
    }

    /// Reduces both sides at `p^exponent` (or compares exactly when
    /// `exponent` is 0) and renders them for the report.
    pub fn compare(&self, exponent: u32, lhs: &Rational, rhs: &Rational) -> Result<ComparedCell> {
        if exponent == 0 {
            return Ok(ComparedCell {
                modulus: modulus_label(self.p, 0),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                pass: lhs == rhs,
            });
        }
        let modulus = PrimeModulus::new(self.p, exponent)?;
        let l = mod_reduce(lhs, &modulus)?;
        let r = mod_reduce(rhs, &modulus)?;
        Ok(ComparedCell {
            modulus: modulus.label(),
            lhs: l.value().to_string(),
            rhs: r.value().to_string(),
            pass: l.value() == r.value(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn cached_rows_match_direct_computation() {
        let ctx = PrimeContext::new(7);
        assert_eq!(ctx.harmonic(1).unwrap(), &ratio(49, 20));
        assert_eq!(ctx.harmonic(1).unwrap(), &ratio(49, 20));
        assert_eq!(ctx.plain_harmonic(0).unwrap(), &ratio(0, 1));
        assert_eq!(ctx.plain_harmonic(4).unwrap(), &ratio(25, 12));
        assert_eq!(ctx.factorial(), &Int::from(720));
        assert_eq!(ctx.stirling().unwrap().bracket(3).unwrap(), &Int::from(1624));
        assert_eq!(ctx.mhs().unwrap().value(2).unwrap(), &ratio(203, 90));
        assert_eq!(ctx.wilson_mod_p().unwrap(), 103 % 7);
        assert_eq!(ctx.agoh().unwrap(), 6);
        assert_eq!(ctx.lifted_roots().unwrap().root(1).unwrap(), 134);
    }

    #[test]
    fn harmonic_bounds_are_enforced() {
        let ctx = PrimeContext::new(7);
        assert!(ctx.harmonic(0).is_err());
        assert!(ctx.harmonic(7).is_err());
        assert!(ctx.plain_harmonic(12).is_ok());
        assert!(ctx.plain_harmonic(13).is_err());
    }

    #[test]
    fn composite_context_surfaces_errors_lazily() {
        let ctx = PrimeContext::new(9);
        assert!(ctx.stirling().is_err());
        assert!(ctx.mhs().is_err());
        assert!(ctx.wilson_mod_p().is_err());
        assert!(ctx.agoh().is_err());
        assert!(ctx.lifted_roots().is_err());
    }

    #[test]
    fn compare_reduces_at_the_stated_modulus() {
        let ctx = PrimeContext::new(7);
        let cell = ctx.compare(2, &ratio(1, 6), &ratio(1, 6)).unwrap();
        assert!(cell.pass);
        assert_eq!(cell.modulus, "7^2");
        assert_eq!(cell.lhs, cell.rhs);
        let cell = ctx.compare(1, &ratio(1, 3), &ratio(2, 3)).unwrap();
        assert!(!cell.pass);
        assert_eq!(cell.status(), Status::Fail);
        let cell = ctx.compare(0, &ratio(29, 15), &ratio(29, 15)).unwrap();
        assert!(cell.pass);
        assert_eq!(cell.modulus, "exact");
        assert_eq!(cell.lhs, "29/15");
        // Non p-integral values are an error, not a silent failure.
        assert!(ctx.compare(1, &ratio(1, 7), &ratio(0, 1)).is_err());
    }
}
