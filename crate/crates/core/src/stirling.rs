//! Unsigned Stirling numbers of the first kind on `p` letters: the exact row
//! `[p, 1] ... [p, p]` and closed-form residues modulo `p^3` for even and odd
//! column indices.
//!
//! Throughout, `[p, s]` counts permutations of `p` letters with `s` disjoint
//! cycles, so `prod_{a=1}^{p-1} (X + a) = sum_s [p, s] X^{s-1}`, and
//! `A_j` abbreviates `[p, p - j]` (the row read from the top).

use num_traits::{One, Zero};

use crate::bernoulli::{agoh_quotient, bernoulli, divided_bernoulli};
use crate::convolutions::truncated_conv;
use crate::error::{Error, Result};
use crate::exactnum::{mod_reduce, rat_int, ratio, Int, PrimeModulus, Rational, Residue};

/// The exact Stirling row for a prime `p`: all of `[p, 1] ... [p, p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingRow {
    p: u64,
    /// `coeffs[s - 1] = [p, s]`, ascending in the cycle count `s`.
    coeffs: Vec<Int>,
}

impl StirlingRow {
    /// The prime this row belongs to.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `[p, s]` for `1 <= s <= p`.
    pub fn bracket(&self, s: u64) -> Result<&Int> {
        if s == 0 || s > self.p {
            return Err(Error::out_of_range(
                "cycle count",
                format!("[p, s] requires 1 <= s <= p, got s = {s} at p = {}", self.p),
            ));
        }
        Ok(&self.coeffs[(s - 1) as usize])
    }

    /// `A_j = [p, p - j]` for `0 <= j <= p - 1`.
    pub fn a(&self, j: u64) -> Result<&Int> {
        if j >= self.p {
            return Err(Error::out_of_range(
                "subscript",
                format!("A_j requires 0 <= j <= p - 1, got j = {j} at p = {}", self.p),
            ));
        }
        self.bracket(self.p - j)
    }

    /// The row as a slice: element `s - 1` is `[p, s]`.
    pub fn row(&self) -> &[Int] {
        &self.coeffs
    }

    /// Sum of the whole row; equals `p!` by evaluating the product at 1.
    pub fn row_sum(&self) -> Int {
        self.coeffs.iter().sum()
    }
}

/// Computes the exact Stirling row by expanding `prod_{a=1}^{p-1} (X + a)`.
pub fn stirling_row_exact(p: u64) -> Result<StirlingRow> {
    let _ = PrimeModulus::new(p, 1)?;
    let mut coeffs: Vec<Int> = Vec::with_capacity(p as usize);
    coeffs.push(Int::one());
    for a in 1..p {
        let a = Int::from(a);
        coeffs.push(Int::zero());
        for i in (1..coeffs.len()).rev() {
            let lower = coeffs[i - 1].clone();
            coeffs[i] = lower + &a * &coeffs[i];
        }
        coeffs[0] *= &a;
    }
    Ok(StirlingRow { p, coeffs })
}

/// Closed-form residue of the even-index Stirling number `[p, 2n]` modulo
/// `p^3`:
///
/// `[p, 2n] = (n / (2n + 1)) p^2 B_{p-2n-1} (mod p^3)` for `1 <= 2n <= p-3`.
pub fn stirling_mod_even(p: u64, n: u64) -> Result<Residue> {
    let m = PrimeModulus::new(p, 3)?;
    if n == 0 || 2 * n > p - 3 {
        return Err(Error::out_of_range(
            "even index",
            format!("requires 1 <= 2n <= p - 3, got 2n = {} at p = {p}", 2 * n),
        ));
    }
    let value = Rational::new(Int::from(n), Int::from(2 * n + 1))
        * rat_int(Int::from(p).pow(2))
        * bernoulli((p - 2 * n - 1) as usize)?;
    mod_reduce(&value, &m)
}

/// Closed-form residue of `A_j = [p, p - j]` modulo `p^3`, valid for all
/// `1 <= j <= p - 1` (with `j = 2` requiring `p >= 5`):
///
/// - `A_1 = p(p-1)/2` exactly;
/// - `A_2 = (1/2)(-p/6 + 3p^2/4) (mod p^3)`;
/// - odd `j >= 3`: `A_j = (p^2/2)(j/(j-1)) B_{j-1} (mod p^3)`;
/// - even `j >= 4`: `A_j = -(1/j)(p B_j - p^2 sum_{r=1}^{j/2-1} (B_{2r}/2r) B_{j-2r}) (mod p^3)`.
pub fn result8_closed_form(p: u64, j: u64) -> Result<Residue> {
    let m = PrimeModulus::new(p, 3)?;
    if j == 0 || j >= p {
        return Err(Error::out_of_range(
            "subscript",
            format!("requires 1 <= j <= p - 1, got j = {j} at p = {p}"),
        ));
    }
    let pr = rat_int(p);
    let value = if j == 1 {
        Rational::new(Int::from(p) * Int::from(p - 1), Int::from(2))
    } else if j == 2 {
        if p < 5 {
            return Err(Error::out_of_range(
                "subscript",
                "A_2 closed form requires p >= 5",
            ));
        }
        ratio(1, 2) * (-&pr / rat_int(6) + &pr * &pr * ratio(3, 4))
    } else if j % 2 == 1 {
        &pr * &pr * ratio(1, 2) * Rational::new(Int::from(j), Int::from(j - 1))
            * bernoulli((j - 1) as usize)?
    } else {
        let mut conv = Rational::zero();
        for r in 1..j / 2 {
            conv += divided_bernoulli((2 * r) as usize)? * bernoulli((j - 2 * r) as usize)?;
        }
        -Rational::new(Int::one(), Int::from(j)) * (&pr * bernoulli(j as usize)? - &pr * &pr * conv)
    };
    mod_reduce(&value, &m)
}

/// The odd-index Stirling numbers via the direct route: `A_{2k}` modulo
/// `p^3` through [`result8_closed_form`], for `1 <= 2k <= p - 1`.
///
/// (The numbers `[p, s]` with odd `s` are exactly the `A_j` with even
/// `j = p - s`.)
pub fn stirling_mod_odd_manner1(p: u64, k: u64) -> Result<Residue> {
    if k == 0 || 2 * k > p - 1 {
        return Err(Error::out_of_range(
            "even subscript",
            format!("requires 1 <= 2k <= p - 1, got 2k = {} at p = {p}", 2 * k),
        ));
    }
    result8_closed_form(p, 2 * k)
}

/// The odd-index Stirling numbers via the convolution route: `[p, 2n + 1]`
/// modulo `p^3` for `0 <= 2n <= p - 3`.
///
/// Three regimes share the row:
///
/// - `2n = 0`: `[p, 1] = (p-1)!` through the divided-Bernoulli closed form
///   `-p B_{p-1}/(p-1) + p B_{2p-2}/(2p-2) - (p^2/2)(B_{p-1}/(p-1))^2`;
/// - `2 <= 2n <= p - 5`: the truncated-convolution form
///   `-(p^2/2) T(p, 2n) + p B_{2p-2n-2}/(2p-2n-2) + (p AG_p - p - 2) p B_{p-1-2n}/(p-1-2n)`,
///   where `T` is [`truncated_conv`] and `AG_p` the Agoh–Giuga residue;
/// - `2n = p - 3`: `-(p^2/2) T(p, p-3) + p B_{p+1} + (p^2/12) AG_p + p^2/3 - p/6`.
pub fn stirling_mod_odd_manner2(p: u64, n: u64) -> Result<Residue> {
    let m = PrimeModulus::new(p, 3)?;
    if p < 5 || 2 * n > p - 3 {
        return Err(Error::out_of_range(
            "odd index",
            format!(
                "requires p >= 5 and 0 <= 2n <= p - 3, got 2n = {} at p = {p}",
                2 * n
            ),
        ));
    }
    let pr = rat_int(p);
    let p2 = &pr * &pr;
    let two_n = 2 * n;
    let value = if two_n == 0 {
        let b = divided_bernoulli((p - 1) as usize)?;
        -&pr * &b + &pr * divided_bernoulli((2 * p - 2) as usize)? - &p2 * ratio(1, 2) * &b * &b
    } else if two_n == p - 3 {
        let ag = rat_int(agoh_quotient(p)?.value().clone());
        -&p2 * ratio(1, 2) * truncated_conv(p, p - 3)? + &pr * bernoulli((p + 1) as usize)?
            + &p2 * ratio(1, 12) * ag
            + &p2 * ratio(1, 3)
            - &pr * ratio(1, 6)
    } else {
        let ag = rat_int(agoh_quotient(p)?.value().clone());
        -&p2 * ratio(1, 2) * truncated_conv(p, two_n)?
            + &pr * divided_bernoulli((2 * p - two_n - 2) as usize)?
            + (&pr * ag - &pr - rat_int(2)) * &pr * divided_bernoulli((p - 1 - two_n) as usize)?
    };
    mod_reduce(&value, &m)
}
