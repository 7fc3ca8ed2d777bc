//! Convolution sums of Bernoulli numbers — full, truncated, and ordinary —
//! plus exact classical identities between them and the bridge congruences
//! tying truncated convolutions to full ones modulo `p^3`.
//!
//! Notation used in the documentation below: `D_n = B_n / n` is the divided
//! Bernoulli number and `H_n` the plain harmonic number.

use num_traits::{One, Zero};

use crate::bernoulli::{agoh_quotient, bernoulli, divided_bernoulli};
use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, factorial, mod_reduce, rat_int, ratio, Int, PrimeModulus, Rational, Residue,
};
use crate::sums::harmonic;

/// Partial convolution of divided Bernoulli numbers:
/// `sum_{i=lo}^{hi} D_i D_{n-i}`. An empty range (`lo > hi`) gives 0.
///
/// Every index touched must be at least 1, since `D_0` is undefined.
pub fn conv_divided_partial(lo: u64, hi: u64, n: u64) -> Result<Rational> {
    let mut acc = Rational::zero();
    if lo > hi {
        return Ok(acc);
    }
    if lo == 0 || hi >= n {
        return Err(Error::out_of_range(
            "convolution range",
            format!("indices must satisfy 1 <= i and 1 <= n - i, got [{lo}, {hi}] at n = {n}"),
        ));
    }
    for i in lo..=hi {
        acc += divided_bernoulli(i as usize)? * divided_bernoulli((n - i) as usize)?;
    }
    Ok(acc)
}

/// The full divided convolution `sum_{i=2}^{n-2} D_i D_{n-i}` (0 when the
/// range is empty, i.e. `n < 4`).
pub fn full_conv_divided(n: u64) -> Result<Rational> {
    if n < 2 {
        return Err(Error::out_of_range(
            "convolution order",
            format!("requires n >= 2, got {n}"),
        ));
    }
    if n < 4 {
        return Ok(Rational::zero());
    }
    conv_divided_partial(2, n - 2, n)
}

/// The truncated divided convolution at prime `p` and even order `2n`:
/// `sum_{i=p+1-2n}^{p-3} D_i D_{2(p-1)-2n-i}` for `2 <= 2n <= p-3`.
///
/// The range is empty (sum 0) when `2n = 2`.
pub fn truncated_conv(p: u64, two_n: u64) -> Result<Rational> {
    if two_n % 2 != 0 || two_n < 2 || two_n > p.saturating_sub(3) {
        return Err(Error::out_of_range(
            "truncated convolution order",
            format!("requires even 2n with 2 <= 2n <= p - 3, got 2n = {two_n} at p = {p}"),
        ));
    }
    conv_divided_partial(p + 1 - two_n, p - 3, 2 * (p - 1) - two_n)
}

/// The ordinary convolution `sum_{i=2}^{n-2} B_i B_{n-i}` (0 when `n < 4`).
pub fn ordinary_conv(n: u64) -> Result<Rational> {
    if n < 2 {
        return Err(Error::out_of_range(
            "convolution order",
            format!("requires n >= 2, got {n}"),
        ));
    }
    let mut acc = Rational::zero();
    for i in 2..=n.saturating_sub(2) {
        acc += bernoulli(i as usize)? * bernoulli((n - i) as usize)?;
    }
    Ok(acc)
}

/// An exact polynomial-family identity whose residual this module can
/// evaluate; each variant carries its own index arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `sum_{j=0}^{n} C(n,j) B_j B_{n-j} + n B_{n-1} + (n-1) B_n = 0`,
    /// for `n >= 1`.
    Euler {
        /// The order of the convolution.
        n: u64,
    },
    /// `sum D_i D_{n-i} - sum C(n,i) D_i D_{n-i} - 2 H_n D_n = 0` with both
    /// sums over `2 <= i <= n-2`, for `n >= 3`.
    Miki {
        /// The order of the convolution.
        n: u64,
    },
    /// `(1/n) sum_{k=1}^{n-1} C(2n,2k) B_{2k} B_{2n-2k} / (2k)`
    /// `+ (B_{2n}/n) H_{2n} - sum_{k=1}^{n-1} B_{2k} B_{2n-2k} / (2k(2n-2k))`
    /// `= 0` for `n >= 2` (the residual is `+1/4` at `n = 1`).
    DunneSchubert {
        /// Half the order: the identity relates indices summing to `2n`.
        n: u64,
    },
    /// `sum_{j=1}^{n} (-1)^j C(n,j) H_j + 1/n = 0` for `n >= 1`.
    Spivey {
        /// The upper summation limit.
        n: u64,
    },
    /// `C(m+n, r) - sum_k C(m,k) C(n,r-k) = 0` (Vandermonde).
    Chu {
        /// Row of the first factor.
        m: u64,
        /// Row of the second factor.
        n: u64,
        /// Column of the target coefficient.
        r: u64,
    },
}

/// Evaluates the residual (left side minus right side, normalized as in the
/// [`Identity`] docs) of an exact identity. A correct identity yields 0.
pub fn identity_residual(which: Identity) -> Result<Rational> {
    match which {
        Identity::Euler { n } => {
            if n < 1 {
                return Err(Error::out_of_range("identity order", "Euler requires n >= 1"));
            }
            let mut acc = Rational::zero();
            for j in 0..=n {
                acc += rat_int(binomial(n, j))
                    * bernoulli(j as usize)?
                    * bernoulli((n - j) as usize)?;
            }
            acc += rat_int(n) * bernoulli((n - 1) as usize)?;
            acc += rat_int(n - 1) * bernoulli(n as usize)?;
            Ok(acc)
        }
        Identity::Miki { n } => {
            if n < 3 {
                return Err(Error::out_of_range("identity order", "Miki requires n >= 3"));
            }
            let mut plain = Rational::zero();
            let mut weighted = Rational::zero();
            for i in 2..=n - 2 {
                let term = divided_bernoulli(i as usize)? * divided_bernoulli((n - i) as usize)?;
                plain += &term;
                weighted += rat_int(binomial(n, i)) * term;
            }
            let harmonic_term =
                rat_int(2) * harmonic(n) * divided_bernoulli(n as usize)?;
            Ok(plain - weighted - harmonic_term)
        }
        Identity::DunneSchubert { n } => {
            if n < 1 {
                return Err(Error::out_of_range(
                    "identity order",
                    "Dunne-Schubert requires n >= 1",
                ));
            }
            let mut conv = Rational::zero();
            let mut binom_side = Rational::zero();
            for k in 1..n {
                let prod = bernoulli((2 * k) as usize)? * bernoulli((2 * n - 2 * k) as usize)?;
                conv += &prod / rat_int(Int::from(2 * k) * Int::from(2 * n - 2 * k));
                binom_side += rat_int(binomial(2 * n, 2 * k)) * prod / rat_int(2 * k);
            }
            binom_side /= rat_int(n);
            binom_side += bernoulli((2 * n) as usize)? / rat_int(n) * harmonic(2 * n);
            Ok(binom_side - conv)
        }
        Identity::Spivey { n } => {
            if n < 1 {
                return Err(Error::out_of_range("identity order", "Spivey requires n >= 1"));
            }
            let mut acc = Rational::zero();
            for j in 1..=n {
                let sign = if j % 2 == 1 { -1 } else { 1 };
                acc += rat_int(Int::from(sign) * binomial(n, j)) * harmonic(j);
            }
            acc += Rational::new(Int::one(), Int::from(n));
            Ok(acc)
        }
        Identity::Chu { m, n, r } => {
            let mut acc = Rational::zero();
            for k in 0..=r {
                acc += rat_int(binomial(m, k) * binomial(n, r - k));
            }
            Ok(rat_int(binomial(m + n, r)) - acc)
        }
    }
}

/// Both sides of the binomial congruence
/// `C(p-1, j) = (-1)^j (1 - p H_j) (mod p^2)` for `0 <= j <= p-1`.
pub fn binom_p1_check(p: u64, j: u64) -> Result<(Residue, Residue)> {
    let m = PrimeModulus::new(p, 2)?;
    if j >= p {
        return Err(Error::out_of_range(
            "binomial column",
            format!("requires 0 <= j <= p - 1, got {j} at p = {p}"),
        ));
    }
    let lhs = mod_reduce(&rat_int(binomial(p - 1, j)), &m)?;
    let sign = if j % 2 == 1 { -1 } else { 1 };
    let rhs_val = rat_int(sign) * (Rational::one() - rat_int(p) * harmonic(j));
    let rhs = mod_reduce(&rhs_val, &m)?;
    Ok((lhs, rhs))
}

/// Residual of the harmonic gap congruence
/// `p (H_{2(p-1)-2n} - H_{p-1-2n}) - 1 - p/(2n+1) (mod p^2)`
/// for even `2n` with `2 <= 2n <= p - 7`; zero exactly when it holds.
pub fn lemma6_residual(p: u64, two_n: u64) -> Result<Residue> {
    let m = PrimeModulus::new(p, 2)?;
    if two_n % 2 != 0 || two_n < 2 || p < 7 || two_n > p - 7 {
        return Err(Error::out_of_range(
            "harmonic gap order",
            format!("requires even 2n with 2 <= 2n <= p - 7, got 2n = {two_n} at p = {p}"),
        ));
    }
    let lhs = rat_int(p) * (harmonic(2 * (p - 1) - two_n) - harmonic(p - 1 - two_n));
    let rhs = Rational::one() + Rational::new(Int::from(p), Int::from(two_n + 1));
    mod_reduce(&(lhs - rhs), &m)
}

/// One verified congruence inside [`bridge_checks`]: both sides reduced at
/// the stated modulus, plus the comparison verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeOutcome {
    /// Which bridge congruence this row is (`"theorem1-i"`, `"eq79"`, ...).
    pub label: &'static str,
    /// Left-hand side reduced modulo `p^3`.
    pub lhs: Residue,
    /// Right-hand side reduced modulo `p^3`.
    pub rhs: Residue,
}

impl BridgeOutcome {
    /// True when both sides agree.
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates, modulo `p^3`, every bridge congruence between truncated and
/// full convolutions that applies at even order `2n`:
///
/// - `"theorem1-i"` (`4 <= 2n <= p-7`):
///   `(p^2/2) T(p,2n) = -(p^2/2) C(p-1-2n) + p (D_{2(p-1)-2n} - D_{p-1-2n}) + p^2 (AG_p - 1) D_{p-1-2n}`;
/// - `"eq79"` (same range): the doubled rearrangement of the same relation;
/// - `"prop1-ii"` (`2n = p-3`):
///   `p^2 T(p,p-3) = 2p D_{p+1} + p^2 D_2 + 2p D_2 (p B_{p-1})`;
/// - `"prop1-iii"` (`2n = p-5`, `p >= 7`):
///   `p^2 T(p,p-5) = (7/720) p^2 + 2p D_{p+3} + 2p D_4 (p B_{p-1})`;
/// - `"prop2-53"` (`0 <= 2n <= p-5`):
///   `(p^2/2) C(p-1-2n) = [p, 2n+1] + p D_{p-1-2n}`;
/// - `"prop2-54"` and `"eq55"` (`2n = 0`): the full-convolution and
///   factorial forms at order `p-1`.
///
/// Here `T` is [`truncated_conv`], `C` is [`full_conv_divided`], and `AG_p`
/// is the Agoh–Giuga residue.
pub fn bridge_checks(p: u64, two_n: u64) -> Result<Vec<BridgeOutcome>> {
    let m = PrimeModulus::new(p, 3)?;
    if p < 5 || two_n % 2 != 0 || two_n > p - 3 {
        return Err(Error::out_of_range(
            "bridge order",
            format!("requires p >= 5 and even 2n <= p - 3, got 2n = {two_n} at p = {p}"),
        ));
    }
    let pr = rat_int(p);
    let p2 = &pr * &pr;
    let half = ratio(1, 2);
    let mut out = Vec::new();

    if (4..=p.saturating_sub(7)).contains(&two_n) {
        let ag = rat_int(agoh_quotient(p)?.value().clone());
        let t = truncated_conv(p, two_n)?;
        let c = full_conv_divided(p - 1 - two_n)?;
        let d_far = divided_bernoulli((2 * (p - 1) - two_n) as usize)?;
        let d_near = divided_bernoulli((p - 1 - two_n) as usize)?;

        let lhs1 = &p2 * &half * &t;
        let rhs1 = -&p2 * &half * &c + &pr * (&d_far - &d_near) + &p2 * (&ag - rat_int(1)) * &d_near;
        out.push(BridgeOutcome {
            label: "theorem1-i",
            lhs: mod_reduce(&lhs1, &m)?,
            rhs: mod_reduce(&rhs1, &m)?,
        });

        let lhs2 = &p2 * &t;
        let rhs2 = -&p2 * &c + rat_int(2) * &pr * &d_far
            - rat_int(2) * (&pr + &p2) * &d_near
            + rat_int(2) * &ag * &p2 * &d_near;
        out.push(BridgeOutcome {
            label: "eq79",
            lhs: mod_reduce(&lhs2, &m)?,
            rhs: mod_reduce(&rhs2, &m)?,
        });
    }

    if two_n == p - 3 {
        let lhs = &p2 * truncated_conv(p, p - 3)?;
        let b = divided_bernoulli(2)?;
        let rhs = rat_int(2 * p) * divided_bernoulli((p + 1) as usize)?
            + &p2 * &b
            + rat_int(2 * p) * &b * (&pr * bernoulli((p - 1) as usize)?);
        out.push(BridgeOutcome {
            label: "prop1-ii",
            lhs: mod_reduce(&lhs, &m)?,
            rhs: mod_reduce(&rhs, &m)?,
        });
    }

    if p >= 7 && two_n == p - 5 {
        let lhs = &p2 * truncated_conv(p, p - 5)?;
        let rhs = ratio(7, 720) * &p2
            + rat_int(2 * p) * divided_bernoulli((p + 3) as usize)?
            + rat_int(2 * p) * divided_bernoulli(4)? * (&pr * bernoulli((p - 1) as usize)?);
        out.push(BridgeOutcome {
            label: "prop1-iii",
            lhs: mod_reduce(&lhs, &m)?,
            rhs: mod_reduce(&rhs, &m)?,
        });
    }

    if two_n <= p - 5 {
        let row = crate::stirling::stirling_row_exact(p)?;
        let lhs = &p2 * &half * full_conv_divided(p - 1 - two_n)?;
        let rhs = rat_int(row.bracket(two_n + 1)?.clone())
            + &pr * divided_bernoulli((p - 1 - two_n) as usize)?;
        out.push(BridgeOutcome {
            label: "prop2-53",
            lhs: mod_reduce(&lhs, &m)?,
            rhs: mod_reduce(&rhs, &m)?,
        });
    }

    if two_n == 0 {
        let b = divided_bernoulli((p - 1) as usize)?;
        let lhs = &p2 * &half * full_conv_divided(p - 1)?;
        let rhs = &pr * divided_bernoulli((2 * p - 2) as usize)? - &p2 * &half * &b * &b;
        out.push(BridgeOutcome {
            label: "prop2-54",
            lhs: mod_reduce(&lhs, &m)?,
            rhs: mod_reduce(&rhs, &m)?,
        });
        let lhs_f = rat_int(factorial(p - 1));
        let rhs_f = -&pr * &b + &pr * divided_bernoulli((2 * p - 2) as usize)? - &p2 * &half * &b * &b;
        out.push(BridgeOutcome {
            label: "eq55",
            lhs: mod_reduce(&lhs_f, &m)?,
            rhs: mod_reduce(&rhs_f, &m)?,
        });
    }

    Ok(out)
}
