//! Roots of `f(X) = X^{p-1} + (p-1)!` in `Z/p^3`.
//!
//! Modulo `p` the polynomial reduces to `X^{p-1} - 1` by Wilson's theorem,
//! so its roots are `1, ..., p-1`; each is simple (the derivative
//! `(p-1) X^{p-2}` does not vanish on units), so each lifts uniquely through
//! `p^2` to `p^3`. This module computes the lifted roots two ways: by
//! digit-by-digit Hensel lifting ([`lift_roots`]) and by a closed digit
//! formula built from Wilson quotients and Fermat-power digits
//! ([`result13_root`]).

use crate::error::{Error, Result};
use crate::exactnum::{Int, PrimeModulus, Residue};
use crate::sums::delta;

/// The full set of roots of `X^{p-1} + (p-1)!` modulo `p^3`, one per
/// residue class `i = 1, ..., p-1`, along with the base-p digit pair of
/// each root's tail `(root - i) / p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    p: u64,
    /// `roots[i - 1]` is the root congruent to `i` modulo `p`.
    roots: Vec<u64>,
    /// `digits[i - 1] = (t0, t1)` where `root = i + p (t0 + p t1) mod p^3`.
    digits: Vec<(u64, u64)>,
}

impl RootSet {
    /// The prime whose polynomial was solved.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The root congruent to `i` modulo `p`, for `1 <= i <= p - 1`.
    pub fn root(&self, i: u64) -> Result<u64> {
        if i == 0 || i >= self.p {
            return Err(Error::out_of_range(
                "root seed",
                format!("requires 1 <= i <= p - 1, got i = {i} at p = {}", self.p),
            ));
        }
        Ok(self.roots[(i - 1) as usize])
    }

    /// All roots, ascending in their seed `i`.
    pub fn roots(&self) -> &[u64] {
        &self.roots
    }

    /// The digit pair `(t0, t1)` of the tail of the root seeded at `i`.
    pub fn digit_pair(&self, i: u64) -> Result<(u64, u64)> {
        if i == 0 || i >= self.p {
            return Err(Error::out_of_range(
                "root seed",
                format!("requires 1 <= i <= p - 1, got i = {i} at p = {}", self.p),
            ));
        }
        Ok(self.digits[(i - 1) as usize])
    }

    /// All digit pairs, ascending in the seed `i`.
    pub fn digit_pairs(&self) -> &[(u64, u64)] {
        &self.digits
    }
}

fn pow_mod(mut base: u128, mut exp: u64, m: u128) -> u128 {
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

fn factorial_mod(p: u64, m: u128) -> u128 {
    let mut f = 1u128;
    for a in 2..p {
        f = f * a as u128 % m;
    }
    f
}

/// Hensel-lifts every root of `X^{p-1} + (p-1)!` from `Z/p` to `Z/p^3`,
/// one base-p digit at a time.
pub fn lift_roots(p: u64) -> Result<RootSet> {
    let _ = PrimeModulus::new(p, 1)?;
    let p128 = p as u128;
    let p3 = p128 * p128 * p128;
    let fact = factorial_mod(p, p3);
    let mut roots = Vec::with_capacity((p - 1) as usize);
    let mut digits = Vec::with_capacity((p - 1) as usize);
    for i in 1..p {
        let mut x = i as u128;
        for s in 1..=2u32 {
            let step = p128.pow(s);
            let modulus = p128.pow(s + 1);
            let fx = (pow_mod(x, p - 1, modulus) + fact) % modulus;
            debug_assert_eq!(fx % step, 0, "previous digit must already be a root");
            // f'(x) = (p-1) x^{p-2}, invertible mod p on units.
            let fp = (p128 - 1) * pow_mod(x, p - 2, p128) % p128;
            let fp_inv = pow_mod(fp, p - 2, p128);
            let t = (p128 - fx / step % p128) * fp_inv % p128;
            x = (x + t * step) % modulus;
        }
        let tail = (x - i as u128) / p128;
        roots.push(x as u64);
        digits.push(((tail % p128) as u64, (tail / p128 % p128) as u64));
    }
    Ok(RootSet { p, roots, digits })
}

fn assemble_root(p: u64, i: u64, wilson_term: u128) -> Result<u64> {
    let p128 = p as u128;
    let p3 = p128 * p128 * p128;
    let pairs: Vec<_> = (1..p).map(|k| delta(k, p)).collect::<Result<_>>()?;
    let digit_sum: u128 = pairs.iter().map(|d| d.delta0 as u128).sum::<u128>() % p128;
    let d = &pairs[(i - 1) as usize];
    let (d0, d1) = (d.delta0 as u128, d.delta1 as u128);
    // Tail digit 0, kept as an exact product: the carry above the first
    // base-p digit of i*(w_p + delta_0) lands in the p^2 digit of the root.
    let t0 = i as u128 * ((wilson_term + d0) % (p128 * p128)) % (p128 * p128);
    // Tail digit 1.
    let t1 = i as u128 * ((d0 + d1 + digit_sum * digit_sum + (1 + d0) * digit_sum) % p128) % p128;
    Ok(((i as u128 + p128 * t0 + p128 * p128 * t1) % p3) as u64)
}

/// The closed-form root of `X^{p-1} + (p-1)!` modulo `p^3` seeded at `i`,
/// for `p >= 7` and `1 <= i <= p - 1`:
///
/// `root = i + p * i * (w_p + delta_0(i)) + p^2 * i * (delta_0(i) + delta_1(i) + S^2 + (1 + delta_0(i)) S) mod p^3`,
///
/// where `w_p` is the Wilson quotient (used modulo `p^2`, so the carry of
/// the middle term feeds the top digit), the `delta`s are the Fermat-power
/// digits of `i`, and `S = sum_k delta_0(k) mod p`.
///
/// Errors with [`Error::OutOfRange`] for `p < 7`; see
/// [`result13_root_boundary`] for the small-prime audit variant.
pub fn result13_root(p: u64, i: u64) -> Result<Residue> {
    let m = PrimeModulus::new(p, 3)?;
    if p < 7 {
        return Err(Error::out_of_range(
            "prime",
            format!("closed-form root requires p >= 7, got {p} (use the boundary variant to audit small primes)"),
        ));
    }
    if i == 0 || i >= p {
        return Err(Error::out_of_range(
            "root seed",
            format!("requires 1 <= i <= p - 1, got i = {i} at p = {p}"),
        ));
    }
    let p128 = p as u128;
    let w_mod_p2 = {
        let f = factorial_mod(p, p128 * p128 * p128);
        (f + 1) / p128 % (p128 * p128)
    };
    let value = assemble_root(p, i, w_mod_p2)?;
    Ok(Residue::new(m, Int::from(value)))
}

/// The boundary-audit variant of [`result13_root`]: the same digit formula
/// but with the Wilson quotient truncated to its first base-p digit, defined
/// for every odd prime.
///
/// With the full quotient the closed form agrees with Hensel lifting for
/// every odd prime; under this truncated reading the agreement breaks at
/// small primes — at `p = 5`, seed 1 yields 1 while the lifted root is 26 —
/// which is exactly the discrepancy this variant exists to reproduce for
/// auditing.
pub fn result13_root_boundary(p: u64, i: u64) -> Result<Residue> {
    let m = PrimeModulus::new(p, 3)?;
    if i == 0 || i >= p {
        return Err(Error::out_of_range(
            "root seed",
            format!("requires 1 <= i <= p - 1, got i = {i} at p = {p}"),
        ));
    }
    let p128 = p as u128;
    let w_mod_p = {
        let f = factorial_mod(p, p128 * p128);
        (f + 1) / p128 % p128
    };
    let value = assemble_root(p, i, w_mod_p)?;
    Ok(Residue::new(m, Int::from(value)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::odd_primes_in_range;

    #[test]
    fn lifted_roots_match_hand_computed_values() {
        let set5 = lift_roots(5).unwrap();
        assert_eq!(set5.roots(), &[26, 107, 18, 99]);
        let set7 = lift_roots(7).unwrap();
        assert_eq!(set7.root(1).unwrap(), 134);
        assert_eq!(set7.digit_pair(1).unwrap(), (5, 2));
    }

    #[test]
    fn lifted_values_are_roots_and_reduce_to_their_seeds() {
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let set = lift_roots(p).unwrap();
            let p128 = p as u128;
            let p3 = p128 * p128 * p128;
            let fact = factorial_mod(p, p3);
            for i in 1..p {
                let r = set.root(i).unwrap() as u128;
                assert_eq!((pow_mod(r, p - 1, p3) + fact) % p3, 0, "f(root) at p={p}, i={i}");
                assert_eq!(r % p128, i as u128, "seed at p={p}, i={i}");
            }
        }
    }

    #[test]
    fn digit_pairs_reconstruct_the_roots() {
        for p in [5u64, 7, 11, 13] {
            let set = lift_roots(p).unwrap();
            for i in 1..p {
                let (t0, t1) = set.digit_pair(i).unwrap();
                assert!(t0 < p && t1 < p);
                let rebuilt = i + p * t0 + p * p * t1;
                assert_eq!(rebuilt, set.root(i).unwrap(), "p={p}, i={i}");
            }
        }
    }

    #[test]
    fn roots_are_distinct_and_sum_to_zero() {
        // X^{p-1} + (p-1)! has no X^{p-2} term, so the roots sum to 0; and
        // the constant term forces their product to equal (p-1)! mod p^3
        // (the sign (-1)^{p-1} is +1 for odd p).
        for p in [5u64, 7, 11, 13, 17] {
            let set = lift_roots(p).unwrap();
            let p3 = (p as u128).pow(3);
            let mut seen: Vec<u64> = set.roots().to_vec();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), (p - 1) as usize, "distinct roots at p={p}");
            let sum: u128 = set.roots().iter().map(|&r| r as u128).sum();
            assert_eq!(sum % p3, 0, "root sum at p={p}");
            let prod = set
                .roots()
                .iter()
                .fold(1u128, |acc, &r| acc * r as u128 % p3);
            assert_eq!(prod, factorial_mod(p, p3), "root product at p={p}");
        }
    }

    #[test]
    fn closed_form_agrees_with_lifting_for_all_default_primes() {
        for p in odd_primes_in_range(7, 101) {
            let set = lift_roots(p).unwrap();
            for i in 1..p {
                let formula = result13_root(p, i).unwrap();
                assert_eq!(
                    formula.value_u64().unwrap(),
                    set.root(i).unwrap(),
                    "closed form vs lift at p={p}, i={i}"
                );
            }
        }
    }

    #[test]
    fn closed_form_handles_the_wilson_prime() {
        // 13 divides its own Wilson quotient, so the carry structure of the
        // middle digit degenerates; the exact-quotient form still matches.
        let set = lift_roots(13).unwrap();
        for i in 1..13 {
            assert_eq!(
                result13_root(13, i).unwrap().value_u64().unwrap(),
                set.root(i).unwrap()
            );
        }
    }

    #[test]
    fn small_primes_error_without_the_boundary_variant() {
        assert!(result13_root(5, 1).is_err());
        assert!(result13_root(3, 1).is_err());
        assert!(result13_root(7, 0).is_err());
        assert!(result13_root(7, 7).is_err());
    }

    #[test]
    fn boundary_variant_reproduces_the_recorded_small_prime_mismatch() {
        let truncated: Vec<u64> = (1..5)
            .map(|i| result13_root_boundary(5, i).unwrap().value_u64().unwrap())
            .collect();
        assert_eq!(truncated, vec![1, 57, 68, 124]);
        let lifted = lift_roots(5).unwrap();
        assert_eq!(lifted.root(1).unwrap(), 26);
        assert_ne!(truncated[0], lifted.root(1).unwrap());
    }

    #[test]
    fn boundary_variant_also_breaks_at_eleven() {
        // The truncation matters whenever the Wilson quotient's second
        // base-p digit is nonzero, e.g. at p = 11 — which is why the primary
        // closed form keeps the full quotient.
        let lifted = lift_roots(11).unwrap();
        let mismatch = (1..11).any(|i| {
            result13_root_boundary(11, i).unwrap().value_u64().unwrap() != lifted.root(i).unwrap()
        });
        assert!(mismatch);
    }
}
