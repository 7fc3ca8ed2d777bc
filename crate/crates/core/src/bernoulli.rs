//! Bernoulli numbers `B_n` (with `B_1 = -1/2`), their divided companions
//! `B_n / n`, von Staudt–Clausen denominators, and Agoh–Giuga quotients.
//!
//! Values are computed once through the defining recurrence
//! `sum_{j=0}^{m} C(m+1, j) B_j = 0` and memoized in a process-wide table so
//! that every caller — including the parallel verifier — shares the work.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{self, Int, PrimeModulus, Rational, Residue};

/// Default cap on the largest Bernoulli index the table will compute.
///
/// The cap exists to turn runaway index arithmetic into an error instead of
/// an unbounded computation; it can be raised with the
/// `CONGRUENCE_FORGE_MAX_INDEX` environment variable or [`set_table_cap`].
pub const DEFAULT_TABLE_CAP: usize = 1024;

static TABLE_CAP: LazyLock<AtomicUsize> = LazyLock::new(|| {
    let cap = std::env::var("CONGRUENCE_FORGE_MAX_INDEX")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_TABLE_CAP);
    AtomicUsize::new(cap)
});

static TABLE: LazyLock<RwLock<Vec<Rational>>> = LazyLock::new(|| {
    RwLock::new(vec![
        Rational::one(),
        Rational::new(Int::from(-1), Int::from(2)),
    ])
});

/// The active cap on Bernoulli indices.
pub fn table_cap() -> usize {
    TABLE_CAP.load(Ordering::Relaxed)
}

/// Raises or lowers the cap on Bernoulli indices at runtime.
pub fn set_table_cap(cap: usize) {
    TABLE_CAP.store(cap, Ordering::Relaxed);
}

/// The Bernoulli number `B_n`, with the `B_1 = -1/2` convention.
///
/// Errors with [`Error::TableCapExceeded`] when `n` is above the table cap.
///
/// ```
/// use congruence_forge_core::bernoulli::bernoulli;
/// assert_eq!(bernoulli(12).unwrap().to_string(), "-691/2730");
/// ```
pub fn bernoulli(n: usize) -> Result<Rational> {
    let cap = table_cap();
    if n > cap {
        return Err(Error::TableCapExceeded { index: n, cap });
    }
    {
        let table = TABLE.read().expect("Bernoulli table lock poisoned");
        if n < table.len() {
            return Ok(table[n].clone());
        }
    }
    let mut table = TABLE.write().expect("Bernoulli table lock poisoned");
    while table.len() <= n {
        let m = table.len();
        // sum_{j=0}^{m-1} C(m+1, j) B_j = -(m+1) B_m, with the binomial
        // coefficient maintained as a running product.
        let mut sum = Rational::zero();
        let mut binom = Int::one();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                sum += Rational::from_integer(binom.clone()) * b;
            }
            binom = binom * Int::from(m + 1 - j) / Int::from(j + 1);
        }
        let next = -sum / Rational::from_integer(Int::from(m + 1));
        table.push(next);
    }
    Ok(table[n].clone())
}

/// The divided Bernoulli number `B_n / n`, defined for `n >= 1`.
pub fn divided_bernoulli(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::out_of_range(
            "divided Bernoulli index",
            "B_n / n requires n >= 1",
        ));
    }
    Ok(bernoulli(n)? / Rational::from_integer(Int::from(n)))
}

/// The von Staudt–Clausen denominator of `B_n` for even `n >= 2`: the
/// product of all primes `q` with `q - 1` dividing `n`.
pub fn vsc_denominator(n: usize) -> Result<Int> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::out_of_range(
            "von Staudt-Clausen index",
            format!("requires even n >= 2, got {n}"),
        ));
    }
    let mut product = Int::one();
    for q in 2..=(n as u64 + 1) {
        if exactnum::is_prime(q) && n as u64 % (q - 1) == 0 {
            product *= Int::from(q);
        }
    }
    Ok(product)
}

/// The Agoh–Giuga quotient `(p B_{p-1} + 1) / p` reduced modulo `p`.
///
/// Von Staudt–Clausen makes `p B_{p-1} + 1` p-integral with positive
/// valuation, so the quotient has a well-defined residue.
pub fn agoh_quotient(p: u64) -> Result<Residue> {
    let m = PrimeModulus::new(p, 1)?;
    let q = (Rational::from_integer(Int::from(p)) * bernoulli((p - 1) as usize)?
        + Rational::one())
        / Rational::from_integer(Int::from(p));
    exactnum::mod_reduce(&q, &m)
}

/// The numerator of `B_n` (reduced, sign included).
pub fn bernoulli_numerator(n: usize) -> Result<Int> {
    Ok(bernoulli(n)?.numer().clone())
}

/// True when `p` divides the numerator of `B_n` — the irregularity test.
pub fn divides_numerator(p: u64, n: usize) -> Result<bool> {
    let numer = bernoulli_numerator(n)?;
    Ok((numer % Int::from(p)).is_zero())
}

/// True when `B_n` is zero, i.e. `n` is odd and at least 3.
pub fn is_zero_index(n: usize) -> bool {
    n >= 3 && n % 2 == 1
}
