//! Exact integer and rational primitives: primality, modular reduction of
//! p-integral rationals, modular inverses, p-adic valuations and digits, and
//! binomial coefficients.
//!
//! Everything here is exact. No floating point is used anywhere in this
//! crate; rationals are arbitrary-precision [`Rational`] values and residues
//! are canonical representatives in `[0, p^k)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used throughout the crate.
pub type Int = BigInt;

/// Arbitrary-precision rational number used throughout the crate.
///
/// `num_rational::BigRational` keeps values reduced with a positive
/// denominator, which the reduction routines below rely on.
pub type Rational = num_rational::BigRational;

/// Deterministic Miller–Rabin primality test, exact for all `u64` inputs.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to
/// be deterministic below 3.3 · 10^24, which covers the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// All primes in the inclusive range `[lo, hi]`, ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// All odd primes in the inclusive range `[lo, hi]`, ascending.
pub fn odd_primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(3)..=hi).filter(|&n| n % 2 == 1 && is_prime(n)).collect()
}

/// A prime-power modulus `p^k` with `p` an odd prime and `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeModulus {
    p: u64,
    exponent: u32,
    modulus: Int,
}

impl PrimeModulus {
    /// Builds `p^k`, validating that `p` is an odd prime and `k >= 1`.
    pub fn new(p: u64, exponent: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        if exponent == 0 {
            return Err(Error::out_of_range("exponent", "must be at least 1"));
        }
        Ok(PrimeModulus {
            p,
            exponent,
            modulus: Int::from(p).pow(exponent),
        })
    }

    /// The underlying prime `p`.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The exponent `k` of the modulus `p^k`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The modulus `p^k` as an integer.
    pub fn modulus(&self) -> &Int {
        &self.modulus
    }

    /// Human-readable label: `"7"` for `k = 1`, `"7^2"` for higher powers.
    pub fn label(&self) -> String {
        if self.exponent == 1 {
            format!("{}", self.p)
        } else {
            format!("{}^{}", self.p, self.exponent)
        }
    }
}

impl std::fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

/// A canonical residue: an integer in `[0, p^k)` together with its modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    modulus: PrimeModulus,
    value: Int,
}

impl Residue {
    /// Builds a residue, normalizing `value` into `[0, p^k)`.
    pub fn new(modulus: PrimeModulus, value: Int) -> Self {
        let v = value.mod_floor(modulus.modulus());
        Residue { modulus, value: v }
    }

    /// The canonical representative in `[0, p^k)`.
    pub fn value(&self) -> &Int {
        &self.value
    }

    /// The representative as `u64` when it fits (always true for the moduli
    /// used by the verifier, which stay below 2^64).
    pub fn value_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }

    /// The modulus this residue lives in.
    pub fn modulus(&self) -> &PrimeModulus {
        &self.modulus
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus.label())
    }
}

/// One digit of the canonical Hensel (base-p) expansion of a p-integral
/// rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PadicDigit {
    /// The prime base of the expansion.
    pub p: u64,
    /// The position: digit `i` is the coefficient of `p^i`.
    pub index: u32,
    /// The digit value, in `[0, p)`.
    pub digit: u64,
}

/// Reduces a p-integral rational to its canonical residue modulo `p^k`.
///
/// Errors with [`Error::NonPIntegral`] when the reduced denominator is
/// divisible by `p`.
///
/// ```
/// use congruence_forge_core::exactnum::{mod_reduce, PrimeModulus, Rational};
/// let m = PrimeModulus::new(5, 2).unwrap();
/// let q = Rational::new(1.into(), 6.into());
/// assert_eq!(mod_reduce(&q, &m).unwrap().value_u64(), Some(21));
/// ```
pub fn mod_reduce(q: &Rational, m: &PrimeModulus) -> Result<Residue> {
    let p = Int::from(m.prime());
    let denom = q.denom();
    if denom.mod_floor(&p).is_zero() {
        return Err(Error::NonPIntegral {
            p: m.prime(),
            denominator: denom.clone(),
        });
    }
    let inv = mod_inverse(denom, m)?;
    let value = (q.numer() * inv.value()).mod_floor(m.modulus());
    Ok(Residue::new(m.clone(), value))
}

/// Modular inverse of `a` modulo `p^k` via the extended Euclidean algorithm.
///
/// Errors with [`Error::NotInvertible`] when `gcd(a, p^k) != 1`.
pub fn mod_inverse(a: &Int, m: &PrimeModulus) -> Result<Residue> {
    let modulus = m.modulus();
    let a_red = a.mod_floor(modulus);
    let ext = a_red.extended_gcd(modulus);
    if !ext.gcd.is_one() {
        return Err(Error::NotInvertible {
            value: a.clone(),
            modulus: modulus.clone(),
        });
    }
    Ok(Residue::new(m.clone(), ext.x))
}

/// The p-adic valuation `v_p(q)` of a nonzero rational: the exponent of `p`
/// in `q`, negative when `p` divides the denominator.
///
/// Errors with [`Error::UndefinedForZero`] on `q = 0`.
pub fn padic_valuation(q: &Rational, p: u64) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::UndefinedForZero);
    }
    let p = Int::from(p);
    Ok(int_valuation(q.numer(), &p) - int_valuation(q.denom(), &p))
}

fn int_valuation(n: &Int, p: &Int) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut rest = n.abs();
    loop {
        let (quot, rem) = rest.div_rem(p);
        if !rem.is_zero() {
            return v;
        }
        rest = quot;
        v += 1;
    }
}

/// Digit `i` of the canonical Hensel expansion of a p-integral rational:
/// `q = d_0 + d_1 p + d_2 p^2 + ...` with every `d_i` in `[0, p)`.
///
/// ```
/// use congruence_forge_core::exactnum::{hensel_digit, Rational};
/// let q = Rational::new((-1).into(), 6.into());
/// assert_eq!(hensel_digit(&q, 5, 0).unwrap().digit, 4);
/// assert_eq!(hensel_digit(&q, 5, 1).unwrap().digit, 0);
/// ```
pub fn hensel_digit(q: &Rational, p: u64, index: u32) -> Result<PadicDigit> {
    let m = PrimeModulus::new(p, index + 1)?;
    let residue = mod_reduce(q, &m)?;
    let shift = Int::from(p).pow(index);
    let digit = (residue.value() / shift).mod_floor(&Int::from(p));
    Ok(PadicDigit {
        p,
        index,
        digit: digit.to_u64().expect("digit is below p which fits in u64"),
    })
}

/// Binomial coefficient `C(n, r)` as an exact integer (0 when `r > n`).
pub fn binomial(n: u64, r: u64) -> Int {
    if r > n {
        return Int::zero();
    }
    let r = r.min(n - r);
    let mut acc = Int::one();
    for i in 0..r {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Factorial `n!` as an exact integer.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Convenience constructor for an exact rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// Convenience constructor for an exact integer-valued rational.
pub fn rat_int(n: impl Into<Int>) -> Rational {
    Rational::from_integer(n.into())
}
