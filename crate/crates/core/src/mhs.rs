//! Multiple harmonic sums `A*_k = sum_{0 < i_1 < ... < i_k < p} 1/(i_1 ... i_k)`
//! — the elementary symmetric functions of `1, 1/2, ..., 1/(p-1)` — computed
//! exactly by two independent routes, plus their closed residues modulo `p^3`
//! and the reflection relations tying them to the Stirling row.

use num_traits::One;

use crate::bernoulli::{agoh_quotient, bernoulli, divided_bernoulli};
use crate::convolutions::truncated_conv;
use crate::error::{Error, Result};
use crate::exactnum::{mod_reduce, rat_int, ratio, Int, PrimeModulus, Rational, Residue};
use crate::sums::{harmonic_power_sums_upto, wilson_quotient_mod_p};

/// The exact multiple harmonic sums `A*_1 ... A*_{p-1}` for a prime `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MhsRow {
    p: u64,
    /// `values[k - 1] = A*_k`.
    values: Vec<Rational>,
}

impl MhsRow {
    /// The prime this row belongs to.
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `A*_k` for `1 <= k <= p - 1`.
    pub fn value(&self, k: u64) -> Result<&Rational> {
        if k == 0 || k >= self.p {
            return Err(Error::out_of_range(
                "depth",
                format!("A*_k requires 1 <= k <= p - 1, got k = {k} at p = {}", self.p),
            ));
        }
        Ok(&self.values[(k - 1) as usize])
    }

    /// The whole row as a slice, `A*_1` first.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Computes the row by expanding `prod_{a=1}^{p-1} (X + 1/a)`: the
/// coefficient of `X^{p-1-k}` is `A*_k`.
pub fn mhs_row_poly_oracle(p: u64) -> Result<MhsRow> {
    let _ = PrimeModulus::new(p, 1)?;
    let mut coeffs: Vec<Rational> = Vec::with_capacity(p as usize);
    coeffs.push(Rational::one());
    for a in 1..p {
        let inv = Rational::new(Int::one(), Int::from(a));
        coeffs.push(Rational::from_integer(Int::from(0)));
        for i in (1..coeffs.len()).rev() {
            let lower = coeffs[i - 1].clone();
            coeffs[i] = lower + &inv * &coeffs[i];
        }
        coeffs[0] *= &inv;
    }
    let values = (1..p)
        .map(|k| coeffs[(p - 1 - k) as usize].clone())
        .collect();
    Ok(MhsRow { p, values })
}

/// Computes the same row through the Newton–Girard recurrence on the
/// harmonic power sums `H_k(p)`:
///
/// `A*_k = ((-1)^{k-1} / k) (H_k + sum_{r=1}^{k-1} (-1)^r A*_r H_{k-r})`.
pub fn mhs_row_newton(p: u64) -> Result<MhsRow> {
    let _ = PrimeModulus::new(p, 1)?;
    let hs = harmonic_power_sums_upto(p, (p - 1) as u32);
    let mut values: Vec<Rational> = Vec::with_capacity((p - 1) as usize);
    for k in 1..p {
        let mut s = hs[(k - 1) as usize].clone();
        for r in 1..k {
            let sign = if r % 2 == 1 { -1 } else { 1 };
            s += rat_int(sign) * &values[(r - 1) as usize] * &hs[(k - r - 1) as usize];
        }
        let lead = if (k - 1) % 2 == 1 { -1i64 } else { 1 };
        values.push(Rational::new(Int::from(lead), Int::from(k)) * s);
    }
    Ok(MhsRow { p, values })
}

/// Closed-form residue of `A*_k` modulo `p^3` for `p >= 5`, split into five
/// regimes (`D_n = B_n / n`, `T` the truncated convolution, `AG_p` the
/// Agoh–Giuga residue):
///
/// - odd `k <= p - 4`: `((k+1)/2) p^2 D_{p-2-k}`;
/// - even `k <= p - 5`: `p (2 D_{p-1-k} - D_{2(p-1)-k}) + (p^2/2) T(p, k)`;
/// - `k = p - 3`: `p/12 - 11 p^2 / 24 + (p^2/12) AG_p`;
/// - `k = p - 2`: `p/2 - p^2 + (AG_p/2) p^2`;
/// - `k = p - 1`: `3 (p D_{p-1} - 1) - p D_{2(p-1)} - (p^2/2) D_{p-1}^2`.
pub fn mhs_mod_formula(p: u64, k: u64) -> Result<Residue> {
    let m = PrimeModulus::new(p, 3)?;
    if p < 5 || k == 0 || k >= p {
        return Err(Error::out_of_range(
            "depth",
            format!("requires p >= 5 and 1 <= k <= p - 1, got k = {k} at p = {p}"),
        ));
    }
    let pr = rat_int(p);
    let p2 = &pr * &pr;
    let value = if k == p - 1 {
        let b = divided_bernoulli((p - 1) as usize)?;
        rat_int(3) * (&pr * &b - rat_int(1))
            - &pr * divided_bernoulli((2 * (p - 1)) as usize)?
            - &p2 * ratio(1, 2) * &b * &b
    } else if k == p - 2 {
        let ag = rat_int(agoh_quotient(p)?.value().clone());
        &pr * ratio(1, 2) - &p2 + ag * ratio(1, 2) * &p2
    } else if k == p - 3 {
        let ag = rat_int(agoh_quotient(p)?.value().clone());
        &pr * ratio(1, 12) - &p2 * ratio(11, 24) + &p2 * ratio(1, 12) * ag
    } else if k % 2 == 1 {
        Rational::new(Int::from(k + 1), Int::from(2)) * &p2
            * divided_bernoulli((p - 2 - k) as usize)?
    } else {
        &pr * (rat_int(2) * divided_bernoulli((p - 1 - k) as usize)?
            - divided_bernoulli((2 * (p - 1) - k) as usize)?)
            + &p2 * ratio(1, 2) * truncated_conv(p, k)?
    };
    mod_reduce(&value, &m)
}

/// Both reflection relations between the multiple harmonic sums and the
/// Stirling row, each as a `(lhs, rhs)` pair of residues modulo `p^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Pair {
    /// `A*_k` vs `-A_{p-1-k} + (-1)^k w_p p^2 D_{p-1-k}` (with `w_p` the
    /// Wilson quotient residue).
    pub relation_ii: (Residue, Residue),
    /// `A_{p-1-k}` vs `(p B_{p-1} - p) A*_k`.
    pub relation_iii: (Residue, Residue),
}

/// Evaluates both reflection relations at depth `k` for `1 <= k <= p - 2`.
pub fn theorem2_relations(p: u64, k: u64) -> Result<Theorem2Pair> {
    let m = PrimeModulus::new(p, 3)?;
    if p < 5 || k == 0 || k > p - 2 {
        return Err(Error::out_of_range(
            "depth",
            format!("requires p >= 5 and 1 <= k <= p - 2, got k = {k} at p = {p}"),
        ));
    }
    let mhs = mhs_row_poly_oracle(p)?;
    let stirling = crate::stirling::stirling_row_exact(p)?;
    let ak = mhs.value(k)?;
    let a_mirror = rat_int(stirling.a(p - 1 - k)?.clone());
    let w = rat_int(wilson_quotient_mod_p(p)?);
    let pr = rat_int(p);
    let p2 = &pr * &pr;
    let sign = if k % 2 == 1 { -1 } else { 1 };

    let rhs_ii = -&a_mirror + rat_int(sign) * &w * &p2 * divided_bernoulli((p - 1 - k) as usize)?;
    let rhs_iii = (&pr * bernoulli((p - 1) as usize)? - &pr) * ak;

    Ok(Theorem2Pair {
        relation_ii: (mod_reduce(ak, &m)?, mod_reduce(&rhs_ii, &m)?),
        relation_iii: (mod_reduce(&a_mirror, &m)?, mod_reduce(&rhs_iii, &m)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_row_for_five_matches_hand_computed_values() {
        let row = mhs_row_poly_oracle(5).unwrap();
        assert_eq!(
            row.values(),
            &[ratio(25, 12), ratio(35, 24), ratio(5, 12), ratio(1, 24)]
        );
    }

    #[test]
    fn named_values_match_hand_computed_values() {
        let row = mhs_row_poly_oracle(7).unwrap();
        assert_eq!(row.value(2).unwrap(), &ratio(203, 90));
        assert_eq!(row.value(5).unwrap(), &ratio(7, 240));
        assert!(row.value(0).is_err());
        assert!(row.value(7).is_err());
    }

    #[test]
    fn newton_route_agrees_with_polynomial_route() {
        for p in [5u64, 7, 11, 13, 17, 19] {
            assert_eq!(
                mhs_row_newton(p).unwrap(),
                mhs_row_poly_oracle(p).unwrap(),
                "rows at p = {p}"
            );
        }
    }

    #[test]
    fn first_depth_is_the_harmonic_sum_and_last_is_inverse_factorial() {
        for p in [5u64, 7, 11, 13] {
            let row = mhs_row_poly_oracle(p).unwrap();
            assert_eq!(
                row.value(1).unwrap(),
                &crate::sums::harmonic_power_sum(p, 1).unwrap()
            );
            let fact = crate::exactnum::factorial(p - 1);
            assert_eq!(
                row.value(p - 1).unwrap(),
                &Rational::new(Int::one(), fact)
            );
        }
    }

    #[test]
    fn closed_residues_match_exact_row_reduction() {
        let expect5: [u64; 4] = [75, 90, 115, 99];
        for (i, want) in expect5.iter().enumerate() {
            let got = mhs_mod_formula(5, (i + 1) as u64).unwrap();
            assert_eq!(got.value_u64(), Some(*want), "A*_{} at p = 5", i + 1);
        }
        for p in [5u64, 7, 11, 13, 17] {
            let row = mhs_row_poly_oracle(p).unwrap();
            let m = PrimeModulus::new(p, 3).unwrap();
            for k in 1..p {
                let exact = mod_reduce(row.value(k).unwrap(), &m).unwrap();
                assert_eq!(
                    mhs_mod_formula(p, k).unwrap(),
                    exact,
                    "A*_{k} at p = {p}"
                );
            }
        }
        assert!(mhs_mod_formula(5, 0).is_err());
        assert!(mhs_mod_formula(5, 5).is_err());
    }

    #[test]
    fn reflection_relations_hold_at_small_primes() {
        let pair = theorem2_relations(5, 2).unwrap();
        assert_eq!(pair.relation_ii.0.value_u64(), Some(90));
        assert_eq!(pair.relation_ii.1.value_u64(), Some(90));
        assert_eq!(pair.relation_iii.0.value_u64(), Some(35));
        assert_eq!(pair.relation_iii.1.value_u64(), Some(35));
        for p in [5u64, 7, 11, 13] {
            for k in 1..=p - 2 {
                let pair = theorem2_relations(p, k).unwrap();
                assert_eq!(pair.relation_ii.0, pair.relation_ii.1, "II at p={p}, k={k}");
                assert_eq!(
                    pair.relation_iii.0, pair.relation_iii.1,
                    "III at p={p}, k={k}"
                );
            }
        }
        assert!(theorem2_relations(5, 4).is_err());
    }

    #[test]
    fn mirror_relation_holds_exactly_over_the_rationals() {
        // Complementary elementary symmetric functions of 1, ..., p-1 give
        // (p-1)! A*_k = A_{p-1-k} exactly over the rationals.
        for p in [5u64, 7, 11] {
            let mhs = mhs_row_poly_oracle(p).unwrap();
            let st = crate::stirling::stirling_row_exact(p).unwrap();
            let fact = crate::exactnum::factorial(p - 1);
            for k in 1..p {
                let lhs = mhs.value(k).unwrap() * Rational::from_integer(fact.clone());
                let rhs = Rational::from_integer(st.a(p - 1 - k).unwrap().clone());
                assert_eq!(lhs, rhs, "mirror at p = {p}, k = {k}");
            }
        }
    }
}
