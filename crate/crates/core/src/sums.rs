//! Exact power sums, harmonic power sums, Fermat and Wilson quotients, and
//! the base-p digit pairs of Fermat quotient expansions.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{self, Int, PrimeModulus, Rational, Residue};

/// The power sum `S_k(p) = 1^k + 2^k + ... + (p-1)^k` as an exact integer.
pub fn power_sum(p: u64, k: u32) -> Int {
    let mut acc = Int::zero();
    for a in 1..p {
        acc += Int::from(a).pow(k);
    }
    acc
}

/// The harmonic power sum `H_k(p) = sum_{a=1}^{p-1} 1/a^k` for `k >= 1`.
pub fn harmonic_power_sum(p: u64, k: u32) -> Result<Rational> {
    if k == 0 {
        return Err(Error::out_of_range(
            "harmonic power sum order",
            "requires k >= 1 (k = 0 is the integer count p - 1)",
        ));
    }
    let mut acc = Rational::zero();
    for a in 1..p {
        acc += Rational::new(Int::one(), Int::from(a).pow(k));
    }
    Ok(acc)
}

/// All harmonic power sums `H_1(p) ... H_kmax(p)` in one sweep.
///
/// Index `k - 1` of the result holds `H_k(p)`. This shares the per-term
/// power ladder across orders, which the verifier relies on when sweeping
/// every order up to `p - 1`.
pub fn harmonic_power_sums_upto(p: u64, kmax: u32) -> Vec<Rational> {
    let mut sums = vec![Rational::zero(); kmax as usize];
    for a in 1..p {
        let inv = Rational::new(Int::one(), Int::from(a));
        let mut cur = Rational::one();
        for slot in sums.iter_mut() {
            cur *= &inv;
            *slot += &cur;
        }
    }
    sums
}

/// The plain harmonic number `H_n = 1 + 1/2 + ... + 1/n` (zero for `n = 0`).
pub fn harmonic(n: u64) -> Rational {
    let mut acc = Rational::zero();
    for a in 1..=n {
        acc += Rational::new(Int::one(), Int::from(a));
    }
    acc
}

/// The Fermat quotient `q_a = (a^{p-1} - 1) / p` as an exact integer.
///
/// Errors with [`Error::BaseDivisible`] when `p` divides `a`.
pub fn fermat_quotient(a: u64, p: u64) -> Result<Int> {
    if !exactnum::is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    if a % p == 0 {
        return Err(Error::BaseDivisible { base: a, p });
    }
    let power = Int::from(a).pow((p - 1) as u32);
    Ok((power - Int::one()) / Int::from(p))
}

/// The Fermat quotient reduced modulo `p`, computed without big integers.
pub fn fermat_quotient_mod_p(a: u64, p: u64) -> Result<u64> {
    if !exactnum::is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    if a % p == 0 {
        return Err(Error::BaseDivisible { base: a, p });
    }
    let p2 = (p as u128) * (p as u128);
    let r = pow_mod_u128(a as u128, p - 1, p2);
    Ok(((r - 1) / p as u128 % p as u128) as u64)
}

/// The Wilson quotient `w_p = ((p-1)! + 1) / p` as an exact integer.
pub fn wilson_quotient(p: u64) -> Result<Int> {
    if !exactnum::is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let f = exactnum::factorial(p - 1);
    Ok((f + Int::one()) / Int::from(p))
}

/// The Wilson quotient reduced modulo `p`, via an incremental factorial
/// modulo `p^2` (no big integers).
pub fn wilson_quotient_mod_p(p: u64) -> Result<u64> {
    if !exactnum::is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let p2 = (p as u128) * (p as u128);
    let mut f = 1u128;
    for a in 2..p {
        f = f * a as u128 % p2;
    }
    Ok(((f + 1) / p as u128 % p as u128) as u64)
}

/// The first two base-p digits of `(k^{p-1} - 1) / p`.
///
/// Writing `k^{p-1} = 1 + delta_0 p + delta_1 p^2 (mod p^3)` with digits in
/// `[0, p)`, this returns the pair `(delta_0, delta_1)`. Note `delta_0` is
/// the Fermat quotient of `k` modulo `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaPair {
    /// The prime base of the expansion.
    pub p: u64,
    /// The integer whose Fermat power was expanded.
    pub k: u64,
    /// Coefficient of `p` in `k^{p-1} mod p^3`.
    pub delta0: u64,
    /// Coefficient of `p^2` in `k^{p-1} mod p^3`.
    pub delta1: u64,
}

/// Computes the digit pair of `k^{p-1} mod p^3` (see [`DeltaPair`]).
pub fn delta(k: u64, p: u64) -> Result<DeltaPair> {
    if !exactnum::is_prime(p) || p == 2 {
        return Err(Error::InvalidPrime(p));
    }
    if k % p == 0 {
        return Err(Error::BaseDivisible { base: k, p });
    }
    let p128 = p as u128;
    let p3 = p128 * p128 * p128;
    let r = pow_mod_u128(k as u128, p - 1, p3);
    let t = (r - 1) / p128;
    Ok(DeltaPair {
        p,
        k,
        delta0: (t % p128) as u64,
        delta1: (t / p128 % p128) as u64,
    })
}

/// The weighted Fermat quotient square sum
/// `sum_{a=1}^{p-1} (q_a mod p)^2 a^e mod p`, where `q_a` is the Fermat
/// quotient of `a` and negative exponents `e` act through the inverse of
/// `a` modulo `p`.
pub fn em_weighted_sum(p: u64, e: i64) -> Result<Residue> {
    let m = PrimeModulus::new(p, 1)?;
    let p128 = p as u128;
    let mut acc = 0u128;
    for a in 1..p {
        let qa = fermat_quotient_mod_p(a, p)? as u128;
        let base = if e >= 0 {
            a as u128
        } else {
            let inv = pow_mod_u128(a as u128, p - 2, p128);
            debug_assert_eq!(inv * a as u128 % p128, 1);
            inv
        };
        let weight = pow_mod_u128(base, e.unsigned_abs(), p128);
        acc = (acc + qa * qa % p128 * weight) % p128;
    }
    Ok(Residue::new(m, Int::from(acc as u64)))
}

fn pow_mod_u128(mut base: u128, mut exp: u64, m: u128) -> u128 {
    debug_assert!(m < 1 << 64);
    let mut acc = 1u128 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn power_sums_match_hand_computed_values() {
        assert_eq!(power_sum(5, 2), Int::from(30));
        assert_eq!(power_sum(5, 0), Int::from(4));
        assert_eq!(power_sum(7, 1), Int::from(21));
        assert_eq!(power_sum(3, 5), Int::from(33));
    }

    #[test]
    fn harmonic_power_sums_match_hand_computed_values() {
        assert_eq!(harmonic_power_sum(5, 1).unwrap(), ratio(25, 12));
        assert_eq!(harmonic_power_sum(7, 1).unwrap(), ratio(49, 20));
        assert_eq!(harmonic_power_sum(5, 2).unwrap(), ratio(205, 144));
        assert!(harmonic_power_sum(5, 0).is_err());
    }

    #[test]
    fn bulk_harmonic_power_sums_agree_with_single_calls() {
        for p in [5u64, 7, 11] {
            let bulk = harmonic_power_sums_upto(p, (p - 1) as u32);
            for k in 1..p {
                assert_eq!(
                    bulk[(k - 1) as usize],
                    harmonic_power_sum(p, k as u32).unwrap(),
                    "H_{k}({p})"
                );
            }
        }
    }

    #[test]
    fn plain_harmonic_numbers() {
        assert_eq!(harmonic(0), ratio(0, 1));
        assert_eq!(harmonic(1), ratio(1, 1));
        assert_eq!(harmonic(4), ratio(25, 12));
        assert_eq!(harmonic(10), ratio(7381, 2520));
    }

    #[test]
    fn fermat_quotients_match_hand_computed_values() {
        assert_eq!(fermat_quotient(2, 5).unwrap(), Int::from(3));
        assert_eq!(fermat_quotient(3, 7).unwrap(), Int::from(104));
        assert_eq!(fermat_quotient_mod_p(3, 7).unwrap(), 104 % 7);
        match fermat_quotient(10, 5) {
            Err(Error::BaseDivisible { base: 10, p: 5 }) => {}
            other => panic!("expected BaseDivisible, got {other:?}"),
        }
    }

    #[test]
    fn fast_fermat_quotient_agrees_with_exact() {
        for p in [5u64, 7, 11, 13, 101] {
            for a in 1..p.min(30) {
                let exact = fermat_quotient(a, p).unwrap();
                let expect = (exact % Int::from(p) + Int::from(p)) % Int::from(p);
                assert_eq!(Int::from(fermat_quotient_mod_p(a, p).unwrap()), expect);
            }
        }
    }

    #[test]
    fn wilson_quotients_match_hand_computed_values() {
        assert_eq!(wilson_quotient(5).unwrap(), Int::from(5));
        assert_eq!(wilson_quotient(7).unwrap(), Int::from(103));
        // 13 is a Wilson prime: p divides the Wilson quotient.
        let w13 = wilson_quotient(13).unwrap();
        assert!((w13 % Int::from(13)).is_zero());
        assert_eq!(wilson_quotient(6), Err(Error::InvalidPrime(6)));
    }

    #[test]
    fn fast_wilson_quotient_agrees_with_exact() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 101] {
            let exact = wilson_quotient(p).unwrap();
            let expect = (exact % Int::from(p) + Int::from(p)) % Int::from(p);
            assert_eq!(Int::from(wilson_quotient_mod_p(p).unwrap()), expect);
        }
    }

    #[test]
    fn wilson_quotient_is_agoh_quotient_minus_one() {
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let w = wilson_quotient_mod_p(p).unwrap();
            let ag = crate::bernoulli::agoh_quotient(p).unwrap();
            assert_eq!((w + 1) % p, ag.value_u64().unwrap() % p, "p = {p}");
        }
    }

    #[test]
    fn delta_pairs_match_hand_computed_values() {
        let d = delta(2, 5).unwrap();
        assert_eq!((d.delta0, d.delta1), (3, 0));
        let d = delta(3, 7).unwrap();
        assert_eq!((d.delta0, d.delta1), (6, 0));
        match delta(14, 7) {
            Err(Error::BaseDivisible { base: 14, p: 7 }) => {}
            other => panic!("expected BaseDivisible, got {other:?}"),
        }
    }

    #[test]
    fn delta_digits_reconstruct_the_fermat_power() {
        for p in [5u64, 7, 11, 13] {
            let p3 = Int::from(p).pow(3);
            for k in 1..p {
                let d = delta(k, p).unwrap();
                assert!(d.delta0 < p && d.delta1 < p);
                let rebuilt = (Int::one()
                    + Int::from(d.delta0) * Int::from(p)
                    + Int::from(d.delta1) * Int::from(p) * Int::from(p))
                    % &p3;
                let direct = Int::from(k).modpow(&Int::from(p - 1), &p3);
                assert_eq!(rebuilt, direct, "k = {k}, p = {p}");
            }
        }
    }

    #[test]
    fn delta0_is_the_fermat_quotient_mod_p() {
        for p in [5u64, 7, 11] {
            for k in 1..p {
                assert_eq!(
                    delta(k, p).unwrap().delta0,
                    fermat_quotient_mod_p(k, p).unwrap()
                );
            }
        }
    }

    #[test]
    fn weighted_quotient_sums_match_hand_computed_values() {
        assert_eq!(em_weighted_sum(7, 4).unwrap().value_u64(), Some(2));
        assert_eq!(em_weighted_sum(7, -2).unwrap().value_u64(), Some(2));
        assert_eq!(em_weighted_sum(5, -2).unwrap().value_u64(), Some(1));
    }

    #[test]
    fn faulhaber_closed_form_matches_power_sums() {
        // S_k(p) = (1/(k+1)) sum_{j=0}^{k} C(k+1, j) B_j p^{k+1-j}
        // with the B_1 = -1/2 convention summing 1..p-1 (k >= 1; at k = 0
        // the closed form also counts the a = 0 term).
        for p in [5u64, 7, 11] {
            for k in 1..10u32 {
                let mut acc = Rational::zero();
                for j in 0..=k {
                    let c = exactnum::binomial((k + 1) as u64, j as u64);
                    let b = crate::bernoulli::bernoulli(j as usize).unwrap();
                    acc += Rational::from_integer(c)
                        * b
                        * Rational::from_integer(Int::from(p).pow(k + 1 - j));
                }
                acc /= Rational::from_integer(Int::from(k + 1));
                assert_eq!(
                    acc,
                    Rational::from_integer(power_sum(p, k)),
                    "S_{k}({p})"
                );
            }
        }
    }
}
