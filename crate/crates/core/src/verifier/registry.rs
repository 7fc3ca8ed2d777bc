//! The declarative check catalog: every congruence family the runner can
//! verify, each with an applicability gate, an index sweep, and an exact
//! evaluator producing both sides as rationals.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use num_traits::Zero;

use crate::bernoulli::{bernoulli, divided_bernoulli};
use crate::convolutions::{
    conv_divided_partial, full_conv_divided, identity_residual, ordinary_conv, truncated_conv,
    Identity,
};
use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, factorial, mod_reduce, rat_int, ratio, Int, PrimeModulus, Rational,
};
use crate::padic_roots::result13_root;
use crate::verifier::context::PrimeContext;

/// What an evaluator produced for one (prime, index) cell.
#[derive(Debug, Clone)]
pub enum Evaluation {
    /// Both sides evaluated exactly; the runner reduces them at
    /// `p^exponent` (0 means compare the rationals exactly).
    Compared {
        /// Power of `p` both sides are reduced at (0 = exact comparison).
        exponent: u32,
        /// Exact left-hand side.
        lhs: Rational,
        /// Exact right-hand side.
        rhs: Rational,
    },
    /// The cell does not apply at this prime/index combination.
    Skipped {
        /// Why the cell was not evaluated.
        reason: String,
    },
}

impl Evaluation {
    fn compared(exponent: u32, lhs: Rational, rhs: Rational) -> Self {
        Evaluation::Compared { exponent, lhs, rhs }
    }

    fn skipped(reason: impl Into<String>) -> Self {
        Evaluation::Skipped {
            reason: reason.into(),
        }
    }
}

/// One family of congruence checks.
///
/// `applicability` gates the whole family at a prime (returning the skip
/// reason when it does not apply); `sweep` lists the auxiliary indices to
/// evaluate there (`None` for index-free families); `eval` produces both
/// exact sides for one cell, or a per-index skip. The `force` flag asks
/// `eval` to compute even where the family is documented not to hold, for
/// negative-control audits.
pub struct CheckSpec {
    /// Unique id, stable across runs (`"R4a"`, `"EQ70"`, ...).
    pub id: &'static str,
    /// One-line statement of what is being checked.
    pub description: &'static str,
    /// Citation tag attached to every outcome row.
    pub paper_anchor: &'static str,
    /// Representative modulus exponent, used to label skipped rows
    /// (0 = exact identity).
    pub nominal_exponent: u32,
    /// Family-level gate: `Some(reason)` when the family does not apply
    /// at `p`.
    pub applicability: fn(u64) -> Option<String>,
    /// The auxiliary indices to evaluate at `p`.
    pub sweep: fn(u64) -> Vec<Option<i64>>,
    /// Exact evaluator for one cell.
    pub eval: fn(&PrimeContext, Option<i64>, bool) -> Result<Evaluation>,
}

// ---- small shared helpers ----

fn b(n: u64) -> Result<Rational> {
    bernoulli(n as usize)
}

fn db(n: u64) -> Result<Rational> {
    divided_bernoulli(n as usize)
}

fn p_pow(p: u64, k: u32) -> Rational {
    rat_int(Int::from(p).pow(k))
}

fn neg_one_pow(k: u64) -> Rational {
    if k % 2 == 0 {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

fn idx(index: Option<i64>) -> Result<u64> {
    match index {
        Some(i) if i >= 0 => Ok(i as u64),
        other => Err(Error::out_of_range(
            "check index",
            format!("expected a non-negative index, got {other:?}"),
        )),
    }
}

fn min_prime_gate(p: u64, min: u64) -> Option<String> {
    (p < min).then(|| format!("requires p >= {min}"))
}

fn stepped(lo: i64, hi: i64, step: i64) -> Vec<Option<i64>> {
    let mut out = Vec::new();
    let mut x = lo;
    while x <= hi {
        out.push(Some(x));
        x += step;
    }
    out
}

fn no_index(_p: u64) -> Vec<Option<i64>> {
    vec![None]
}

/// Exact sum of `1/(l_1 ... l_n)` over all compositions of `p` into `n`
/// positive parts. Compositions sharing a product are counted together, so
/// the rational additions stay proportional to the number of distinct
/// products rather than the number of compositions.
pub(crate) fn composition_reciprocal_sum(p: u64, n: u64) -> Rational {
    fn rec(rem: u64, parts: u64, prod: u64, counts: &mut BTreeMap<u64, u64>) {
        if parts == 1 {
            *counts.entry(prod * rem).or_insert(0) += 1;
            return;
        }
        for v in 1..=(rem - parts + 1) {
            rec(rem - v, parts - 1, prod * v, counts);
        }
    }
    debug_assert!(n >= 1 && p >= n);
    let mut counts = BTreeMap::new();
    rec(p, n, 1, &mut counts);
    let mut acc = Rational::zero();
    for (denominator, count) in counts {
        acc += Rational::new(Int::from(count), Int::from(denominator));
    }
    acc
}

// ---- evaluators ----

fn eval_r1(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let lhs = rat_int(ctx.factorial().clone());
    let rhs = rat_int(p) * b(p - 1)? - rat_int(p);
    Ok(Evaluation::compared(2, lhs, rhs))
}

fn eval_r2(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let k = idx(index)?;
    let p = ctx.prime();
    let lhs = rat_int(ctx.power_sum(k as u32));
    let rhs = rat_int(p) * b(k)?
        + p_pow(p, 2) * ratio(1, 2) * rat_int(k) * b(k - 1)?
        + p_pow(p, 3) * ratio(1, 6) * rat_int(k) * rat_int(k - 1) * b(k - 2)?;
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_r3(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let m = idx(index)?;
    let exponent = if m % 2 == 0 { 1 } else { 2 };
    Ok(Evaluation::compared(
        exponent,
        ctx.harmonic(m)?.clone(),
        Rational::zero(),
    ))
}

fn eval_r4a(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let k = idx(index)?;
    let p = ctx.prime();
    let lhs = ctx.harmonic(k)?.clone();
    let rhs = if k % 2 == 1 {
        ratio((k * (k + 1)) as i64, 2) * db(p - 2 - k)? * p_pow(p, 2)
    } else {
        rat_int(k) * (db(2 * p - 2 - k)? - rat_int(2) * db(p - 1 - k)?) * rat_int(p)
    };
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_r4b(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let lhs = ctx.harmonic(p - 3)?.clone();
    let rhs = (ratio(1, 2) - rat_int(3) * b(p + 1)?) * rat_int(p) - ratio(4, 3) * p_pow(p, 2);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_r4c(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let lhs = ctx.harmonic(p - 2)?.clone();
    let rhs = -(rat_int(2) + rat_int(p) * b(p - 1)?) * rat_int(p) + ratio(5, 2) * p_pow(p, 2);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_r4d(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let lhs = ctx.harmonic(p - 1)?.clone();
    let rhs =
        rat_int(p) * b(2 * p - 2)? - rat_int(3) * rat_int(p) * b(p - 1)? + rat_int(3 * (p - 1));
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_r5(_ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let b_ = idx(index)?;
    let p = _ctx.prime();
    Ok(Evaluation::compared(1, db(p - 1 + b_)?, db(b_)?))
}

fn eval_r5b(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let b_ = idx(index)?;
    let p = ctx.prime();
    let lhs = db(2 * (p - 1) + b_)?;
    let rhs = rat_int(2) * db(p - 1 + b_)?
        - (rat_int(1) - p_pow(p, (b_ - 1) as u32)) * db(b_)?;
    Ok(Evaluation::compared(2, lhs, rhs))
}

fn eval_r6(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let n = idx(index)?;
    let p = ctx.prime();
    let lhs = db(p - 1 + n)?;
    let rhs = db(n)? - rat_int(p) * ratio(1, 2) * rat_int(ctx.em(n as i64)?.value().clone());
    Ok(Evaluation::compared(2, lhs, rhs))
}

fn eval_r7(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let tk = idx(index)?;
    let p = ctx.prime();
    let lhs = ctx.harmonic(tk)?.clone();
    let rhs = ratio(tk as i64, (tk + 1) as i64) * rat_int(p) * b(p - 1 - tk)?;
    Ok(Evaluation::compared(2, lhs, rhs))
}

fn eval_r8(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let j = idx(index)?;
    let p = ctx.prime();
    let lhs = rat_int(ctx.stirling()?.a(j)?.clone());
    let rhs = if j == 1 {
        rat_int(p) * rat_int(p - 1) * ratio(1, 2)
    } else if j == 2 {
        (rat_int(p) * ratio(-1, 6) + p_pow(p, 2) * ratio(3, 4)) * ratio(1, 2)
    } else if j % 2 == 1 {
        p_pow(p, 2) * ratio(1, 2) * ratio(j as i64, (j - 1) as i64) * b(j - 1)?
    } else {
        let mut conv = Rational::zero();
        for r in 1..(j / 2) {
            conv += db(2 * r)? * b(j - 2 * r)?;
        }
        -(rat_int(p) * b(j)? - p_pow(p, 2) * conv) / rat_int(j)
    };
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_gla_even(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let tn = idx(index)?;
    let n = tn / 2;
    let p = ctx.prime();
    let lhs = rat_int(ctx.stirling()?.bracket(tn)?.clone());
    let rhs = ratio(n as i64, (tn + 1) as i64) * p_pow(p, 2) * b(p - tn - 1)?;
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq5(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let tn = idx(index)?;
    let n = tn / 2;
    let p = ctx.prime();
    let p2 = p_pow(p, 2);
    let lhs = rat_int(ctx.stirling()?.bracket(tn)?.clone());
    let rhs = rat_int(n)
        * ratio((2 * n * n + 3 * n + 2) as i64, (tn + 1) as i64)
        * &p2
        * b(p - tn - 1)?
        - ratio((n * (tn + 1)) as i64, 2) * &p2 * b(2 * p - tn - 2)?;
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq6(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let tn = idx(index)?;
    let n = tn / 2;
    let p = ctx.prime();
    let lhs = b(2 * p - tn - 2)?;
    let rhs = ratio((2 * (n + 1)) as i64, (tn + 1) as i64) * b(p - tn - 1)?;
    Ok(Evaluation::compared(1, lhs, rhs))
}

fn eval_cor1(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let tn = idx(index)?;
    let n = tn / 2;
    let p = ctx.prime();
    let lhs = rat_int(ctx.stirling()?.bracket(tn)?.clone());
    let rhs = rat_int(n + 1) * ctx.harmonic(tn - 1)?.clone()
        + rat_int(n) * rat_int(ctx.power_sum((2 * p - tn - 1) as u32))
        - rat_int(tn + 1) * rat_int(ctx.power_sum((p - tn) as u32));
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq44(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let j = idx(index)?;
    let p = ctx.prime();
    let lhs = rat_int(binomial(p - 1, j));
    let rhs = neg_one_pow(j) * (rat_int(1) - rat_int(p) * ctx.plain_harmonic(j)?.clone());
    Ok(Evaluation::compared(2, lhs, rhs))
}

fn eval_lemma6(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let tn = idx(index)?;
    let p = ctx.prime();
    let lhs = rat_int(p)
        * (ctx.plain_harmonic(2 * (p - 1) - tn)?.clone() - ctx.plain_harmonic(p - 1 - tn)?);
    let rhs = rat_int(1) + rat_int(p) / rat_int(tn + 1);
    Ok(Evaluation::compared(2, lhs, rhs))
}

fn eval_eq55(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let d = db(p - 1)?;
    let lhs = rat_int(ctx.factorial().clone());
    let rhs = -rat_int(p) * &d + rat_int(p) * db(2 * p - 2)?
        - p_pow(p, 2) * ratio(1, 2) * (&d * &d);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq70(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let tn = idx(index)?;
    let p = ctx.prime();
    let ag = rat_int(ctx.agoh()?);
    let lhs = rat_int(ctx.stirling()?.bracket(tn + 1)?.clone());
    let rhs = -p_pow(p, 2) * ratio(1, 2) * truncated_conv(p, tn)?
        + rat_int(p) * db(2 * p - tn - 2)?
        + (rat_int(p) * ag - rat_int(p) - rat_int(2)) * rat_int(p) * db(p - 1 - tn)?;
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq74(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let p2 = p_pow(p, 2);
    let ag = rat_int(ctx.agoh()?);
    let lhs = rat_int(ctx.stirling()?.bracket(p - 2)?.clone());
    let rhs = -&p2 * ratio(1, 2) * truncated_conv(p, p - 3)?
        + rat_int(p) * b(p + 1)?
        + &p2 * ratio(1, 12) * ag
        + &p2 * ratio(1, 3)
        - rat_int(p) * ratio(1, 6);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_p1_i(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let tn = idx(index)?;
    let p = ctx.prime();
    let p2 = p_pow(p, 2);
    let ag = rat_int(ctx.agoh()?);
    let lhs = &p2 * ratio(1, 2) * truncated_conv(p, tn)?;
    let rhs = -&p2 * ratio(1, 2) * full_conv_divided(p - 1 - tn)?
        + rat_int(p) * (db(2 * (p - 1) - tn)? - db(p - 1 - tn)?)
        + &p2 * (ag - rat_int(1)) * db(p - 1 - tn)?;
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq79(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let tn = idx(index)?;
    let p = ctx.prime();
    let p2 = p_pow(p, 2);
    let ag = rat_int(ctx.agoh()?);
    let lhs = &p2 * truncated_conv(p, tn)?;
    let rhs = -&p2 * full_conv_divided(p - 1 - tn)?
        + rat_int(2) * rat_int(p) * db(2 * (p - 1) - tn)?
        - rat_int(2) * (rat_int(p) + &p2) * db(p - 1 - tn)?
        + rat_int(2) * ag * &p2 * db(p - 1 - tn)?;
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_p1_ii(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let lhs = p_pow(p, 2) * truncated_conv(p, p - 3)?;
    let rhs = rat_int(2) * rat_int(p) * db(p + 1)?
        + p_pow(p, 2) * db(2)?
        + rat_int(2) * rat_int(p) * db(2)? * (rat_int(p) * b(p - 1)?);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_p1_iii(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let lhs = p_pow(p, 2) * truncated_conv(p, p - 5)?;
    let rhs = ratio(7, 720) * p_pow(p, 2)
        + rat_int(2) * rat_int(p) * db(p + 3)?
        + rat_int(2) * rat_int(p) * db(4)? * (rat_int(p) * b(p - 1)?);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_p2_53(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let tn = idx(index)?;
    let p = ctx.prime();
    let lhs = p_pow(p, 2) * ratio(1, 2) * full_conv_divided(p - 1 - tn)?;
    let rhs = rat_int(ctx.stirling()?.bracket(tn + 1)?.clone()) + rat_int(p) * db(p - 1 - tn)?;
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_p2_54(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let d = db(p - 1)?;
    let lhs = p_pow(p, 2) * ratio(1, 2) * full_conv_divided(p - 1)?;
    let rhs = rat_int(p) * db(2 * p - 2)? - p_pow(p, 2) * ratio(1, 2) * (&d * &d);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_t2_i(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let k = idx(index)?;
    let p = ctx.prime();
    let p2 = p_pow(p, 2);
    let lhs = ctx.mhs()?.value(k)?.clone();
    let rhs = if k == p - 1 {
        let d = db(p - 1)?;
        rat_int(3) * (rat_int(p) * &d - rat_int(1))
            - rat_int(p) * db(2 * (p - 1))?
            - &p2 * ratio(1, 2) * (&d * &d)
    } else if k == p - 2 {
        rat_int(p) * ratio(1, 2) - &p2 + rat_int(ctx.agoh()?) * ratio(1, 2) * &p2
    } else if k == p - 3 {
        rat_int(p) * ratio(1, 12) - ratio(11, 24) * &p2
            + &p2 * ratio(1, 12) * rat_int(ctx.agoh()?)
    } else if k % 2 == 1 {
        ratio((k + 1) as i64, 2) * &p2 * db(p - 2 - k)?
    } else {
        rat_int(p) * (rat_int(2) * db(p - 1 - k)? - db(2 * (p - 1) - k)?)
            + &p2 * ratio(1, 2) * truncated_conv(p, k)?
    };
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_t2_ii(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let k = idx(index)?;
    let p = ctx.prime();
    let w = rat_int(ctx.wilson_mod_p()?);
    let lhs = ctx.mhs()?.value(k)?.clone();
    let rhs = -rat_int(ctx.stirling()?.a(p - 1 - k)?.clone())
        + neg_one_pow(k) * w * p_pow(p, 2) * db(p - 1 - k)?;
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_t2_iii(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let k = idx(index)?;
    let p = ctx.prime();
    let lhs = rat_int(ctx.stirling()?.a(p - 1 - k)?.clone());
    let rhs = (rat_int(p) * b(p - 1)? - rat_int(p)) * ctx.mhs()?.value(k)?;
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_t00(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let lhs = ctx.harmonic(1)?.clone();
    let rhs = -p_pow(p, 2) * (db(2 * p - 4)? - rat_int(2) * db(p - 3)?);
    Ok(Evaluation::compared(4, lhs, rhs))
}

fn eval_t01(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let lhs = rat_int(ctx.stirling()?.bracket(3)?.clone());
    let rhs = (rat_int(p) * b(p - 1)? - rat_int(p)) * rat_int(p) * db(p - 3)?
        - p_pow(p, 2) * ratio(1, 2) * rat_int(ctx.em(-2)?.value().clone());
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_t02(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let w = rat_int(ctx.wilson_mod_p()?);
    let lhs = full_conv_divided(p - 3)?;
    let rhs = rat_int(2) * w * db(p - 3)? - rat_int(ctx.em(-2)?.value().clone());
    Ok(Evaluation::compared(1, lhs, rhs))
}

fn eval_zhao14(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let lhs = ctx.harmonic(1)?.clone();
    let rhs = rat_int(p) * ctx.mhs()?.value(2)?;
    Ok(Evaluation::compared(4, lhs, rhs))
}

fn eval_t03(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let sub = idx(index)?;
    let p = ctx.prime();
    let p2 = p_pow(p, 2);
    let w = rat_int(ctx.wilson_mod_p()?);
    let d3 = db(p - 3)?;
    // Canonical first digit of D_{2(p-3)} - D_{p-5}, which the Kummer
    // congruence makes divisible by p.
    let digit = {
        let q = (db(2 * p - 6)? - db(p - 5)?) / rat_int(p);
        rat_int(mod_reduce(&q, &PrimeModulus::new(p, 1)?)?.value().clone())
    };
    match sub {
        0 => {
            let lhs = ctx.mhs()?.value(4)?.clone();
            let rhs =
                rat_int(p) * db(p - 5)? + &p2 * (ratio(1, 2) * (&d3 * &d3) - digit);
            Ok(Evaluation::compared(3, lhs, rhs))
        }
        1 => {
            let lhs = rat_int(ctx.stirling()?.bracket(5)?.clone());
            let rhs = -rat_int(p) * db(p - 5)?
                + &p2 * (ratio(-1, 2) * (&d3 * &d3) + w * db(p - 5)? + digit);
            Ok(Evaluation::compared(3, lhs, rhs))
        }
        2 => {
            let lhs = full_conv_divided(p - 5)?;
            let rhs = -(&d3 * &d3) + rat_int(2) * w * db(p - 5)? + rat_int(2) * digit;
            Ok(Evaluation::compared(1, lhs, rhs))
        }
        other => Err(Error::out_of_range(
            "sub-index",
            format!("sub-index {other} not in 0..=2"),
        )),
    }
}

fn mhs_sign(k: u64) -> Rational {
    ratio(if k % 2 == 1 { 1 } else { -1 }, k as i64)
}

fn eval_eq82(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let k = idx(index)?;
    let lhs = ctx.mhs()?.value(k)?.clone();
    let rhs = mhs_sign(k) * ctx.harmonic(k)?;
    Ok(Evaluation::compared(2, lhs, rhs))
}

fn eval_eq83(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let k = idx(index)?;
    let lhs = ctx.mhs()?.value(k)?.clone();
    let mut s = Rational::zero();
    for r in 1..k {
        s += ctx.harmonic(r)?.clone() * ctx.harmonic(k - r)? / rat_int(r);
    }
    let rhs = mhs_sign(k) * (ctx.harmonic(k)?.clone() - s);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq84(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let k = idx(index)?;
    let p = ctx.prime();
    let lhs = ctx.mhs()?.value(k)?.clone();
    let mut s = Rational::zero();
    for r in 1..k {
        s += rat_int(k - r) * db(p - 1 - r)? * db(p - 1 - k + r)?;
    }
    let rhs = mhs_sign(k) * (ctx.harmonic(k)?.clone() - p_pow(p, 2) * s);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq85(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let k = idx(index)?;
    let p = ctx.prime();
    let lhs = ctx.mhs()?.value(k)?.clone();
    let mut s = Rational::zero();
    for i in (p - k)..=(p - 2) {
        s += rat_int(i + 1) * db(i)? * db(2 * (p - 1) - k - i)?;
    }
    let rhs = mhs_sign(k) * (ctx.harmonic(k)?.clone() + p_pow(p, 2) * s);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq86(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let k = idx(index)?;
    let p = ctx.prime();
    let lhs = ctx.mhs()?.value(k)?.clone();
    let s = conv_divided_partial(p + 1 - k, p - 3, 2 * (p - 1) - k)?;
    let rhs =
        mhs_sign(k) * (ctx.harmonic(k)?.clone() - ratio(k as i64, 2) * p_pow(p, 2) * s);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq91(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let lhs = ctx.mhs()?.value(2)?.clone();
    let rhs = ratio(-1, 2) * ctx.harmonic(2)?;
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_eq92(ctx: &PrimeContext, _index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let p = ctx.prime();
    let lhs = ctx.mhs()?.value(2)?.clone();
    let rhs = -rat_int(p) * (db(2 * p - 4)? - rat_int(2) * db(p - 3)?);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_rmk3(ctx: &PrimeContext, index: Option<i64>, force: bool) -> Result<Evaluation> {
    let gap = idx(index)?;
    let p = ctx.prime();
    match gap {
        3 => Ok(Evaluation::compared(
            1,
            ordinary_conv(p - 3)?,
            rat_int(-2) * b(p - 3)?,
        )),
        5 => {
            if p < 11 && !force {
                return Ok(Evaluation::skipped("requires p >= 11"));
            }
            let b3 = b(p - 3)?;
            let lhs = ordinary_conv(p - 5)?;
            let rhs = ratio(-2, 3) * (&b3 * &b3) - rat_int(2) * b(p - 5)?;
            Ok(Evaluation::compared(1, lhs, rhs))
        }
        other => Err(Error::out_of_range(
            "convolution gap",
            format!("gap = {other} not in {{3, 5}}"),
        )),
    }
}

fn eval_r13(ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let i = idx(index)?;
    let p = ctx.prime();
    let lhs = rat_int(result13_root(p, i)?.value().clone());
    let rhs = rat_int(ctx.lifted_roots()?.root(i)?);
    Ok(Evaluation::compared(3, lhs, rhs))
}

fn eval_curious(ctx: &PrimeContext, index: Option<i64>, force: bool) -> Result<Evaluation> {
    let n = idx(index)?;
    if !(2..=6).contains(&n) {
        return Err(Error::out_of_range(
            "composition parts",
            format!("n = {n} outside 2..=6"),
        ));
    }
    let p = ctx.prime();
    if n % 2 == 1 {
        if p < n + 2 && !force {
            return Ok(Evaluation::skipped(format!("requires p >= {}", n + 2)));
        }
        if p < n {
            return Ok(Evaluation::skipped(format!(
                "requires p >= {n} even when forced"
            )));
        }
        let lhs = composition_reciprocal_sum(p, n);
        let rhs = -rat_int(factorial(n - 1)) * b(p - n)?;
        Ok(Evaluation::compared(1, lhs, rhs))
    } else {
        if p < n + 3 && !force {
            return Ok(Evaluation::skipped(format!("requires p >= {}", n + 3)));
        }
        if p < n + 1 {
            return Ok(Evaluation::skipped(format!(
                "requires p >= {} even when forced",
                n + 1
            )));
        }
        let lhs = composition_reciprocal_sum(p, n);
        let rhs = -rat_int(factorial(n) * Int::from(n) * Int::from(p)) / rat_int(2 * (n + 1))
            * b(p - n - 1)?;
        Ok(Evaluation::compared(2, lhs, rhs))
    }
}

fn eval_ident_euler(_ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let n = idx(index)?;
    Ok(Evaluation::compared(
        0,
        identity_residual(Identity::Euler { n })?,
        Rational::zero(),
    ))
}

fn eval_ident_miki(_ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let n = idx(index)?;
    Ok(Evaluation::compared(
        0,
        identity_residual(Identity::Miki { n })?,
        Rational::zero(),
    ))
}

fn eval_ident_ds(_ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let n = idx(index)?;
    Ok(Evaluation::compared(
        0,
        identity_residual(Identity::DunneSchubert { n })?,
        Rational::zero(),
    ))
}

fn eval_ident_spivey(_ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let n = idx(index)?;
    Ok(Evaluation::compared(
        0,
        identity_residual(Identity::Spivey { n })?,
        Rational::zero(),
    ))
}

fn eval_ident_chu(_ctx: &PrimeContext, index: Option<i64>, _force: bool) -> Result<Evaluation> {
    let code = idx(index)?;
    let m = code / 10_000;
    let n = (code / 100) % 100;
    let r = code % 100;
    Ok(Evaluation::compared(
        0,
        identity_residual(Identity::Chu { m, n, r })?,
        Rational::zero(),
    ))
}

// ---- the catalog ----

static REGISTRY: LazyLock<Vec<CheckSpec>> = LazyLock::new(|| {
    vec![
        CheckSpec {
            id: "R1",
            description: "(p-1)! = p B_{p-1} - p (mod p^2)",
            paper_anchor: "Result 1",
            nominal_exponent: 2,
            applicability: |p| min_prime_gate(p, 5),
            sweep: no_index,
            eval: eval_r1,
        },
        CheckSpec {
            id: "R2",
            description: "S_k(p) = p B_k + (p^2/2) k B_{k-1} + (p^3/6) k(k-1) B_{k-2} (mod p^3)",
            paper_anchor: "Result 2",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(2, (2 * p as i64 - 2).min(30), 1),
            eval: eval_r2,
        },
        CheckSpec {
            id: "R3",
            description: "H_{p,m} = 0 (mod p) for even m, (mod p^2) for odd m",
            paper_anchor: "Result 3",
            nominal_exponent: 2,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, (p as i64 - 3).min(8), 1),
            eval: eval_r3,
        },
        CheckSpec {
            id: "R4a",
            description: "H_{p,k} closed forms (mod p^3) for 1 <= k <= p-4",
            paper_anchor: "Result 4",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, p as i64 - 4, 1),
            eval: eval_r4a,
        },
        CheckSpec {
            id: "R4b",
            description: "H_{p,p-3} = (1/2 - 3 B_{p+1}) p - (4/3) p^2 (mod p^3)",
            paper_anchor: "Result 4",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: no_index,
            eval: eval_r4b,
        },
        CheckSpec {
            id: "R4c",
            description: "H_{p,p-2} = -(2 + p B_{p-1}) p + (5/2) p^2 (mod p^3)",
            paper_anchor: "Result 4",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: no_index,
            eval: eval_r4c,
        },
        CheckSpec {
            id: "R4d",
            description: "H_{p,p-1} = p B_{2p-2} - 3 p B_{p-1} + 3(p-1) (mod p^3)",
            paper_anchor: "Result 4",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: no_index,
            eval: eval_r4d,
        },
        CheckSpec {
            id: "R5",
            description: "D_{p-1+b} = D_b (mod p) for even b <= p-3",
            paper_anchor: "Result 5",
            nominal_exponent: 1,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(2, p as i64 - 3, 2),
            eval: eval_r5,
        },
        CheckSpec {
            id: "R5b",
            description: "D_{2(p-1)+b} = 2 D_{p-1+b} - (1 - p^{b-1}) D_b (mod p^2)",
            paper_anchor: "Result 5",
            nominal_exponent: 2,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(2, p as i64 - 3, 2),
            eval: eval_r5b,
        },
        CheckSpec {
            id: "R6",
            description: "D_{p-1+n} = D_n - (p/2) sum q_a^2 a^n (mod p^2) for even n in [4, p-3]",
            paper_anchor: "Result 6",
            nominal_exponent: 2,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(4, p as i64 - 3, 2),
            eval: eval_r6,
        },
        CheckSpec {
            id: "R7",
            description: "H_{p,2k} = (2k/(2k+1)) p B_{p-1-2k} (mod p^2)",
            paper_anchor: "Result 7",
            nominal_exponent: 2,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(2, p as i64 - 3, 2),
            eval: eval_r7,
        },
        CheckSpec {
            id: "R8",
            description: "brackets A_j = [p, p-j] closed forms (mod p^3), four parity/edge cases",
            paper_anchor: "Result 8",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, p as i64 - 1, 1),
            eval: eval_r8,
        },
        CheckSpec {
            id: "GLA-EVEN",
            description: "[p, 2n] = (n/(2n+1)) p^2 B_{p-2n-1} (mod p^3)",
            paper_anchor: "Section 2.1 (Glaisher)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(2, p as i64 - 3, 2),
            eval: eval_gla_even,
        },
        CheckSpec {
            id: "EQ5",
            description: "[p, 2n] refined with B_{2p-2n-2} (mod p^3)",
            paper_anchor: "Eq. (5)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(2, p as i64 - 3, 2),
            eval: eval_eq5,
        },
        CheckSpec {
            id: "EQ6",
            description: "B_{2p-2n-2} = (2(n+1)/(2n+1)) B_{p-2n-1} (mod p)",
            paper_anchor: "Eq. (6)",
            nominal_exponent: 1,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(2, p as i64 - 3, 2),
            eval: eval_eq6,
        },
        CheckSpec {
            id: "COR1",
            description: "[p, 2n] = (n+1) H_{p,2n-1} + n S_{2p-2n-1}(p) - (2n+1) S_{p-2n}(p) (mod p^3)",
            paper_anchor: "Corollary 1",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(2, p as i64 - 3, 2),
            eval: eval_cor1,
        },
        CheckSpec {
            id: "EQ44",
            description: "C(p-1, j) = (-1)^j (1 - p H_j) (mod p^2)",
            paper_anchor: "Eq. (44)",
            nominal_exponent: 2,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(0, p as i64 - 1, 1),
            eval: eval_eq44,
        },
        CheckSpec {
            id: "LEMMA6",
            description: "p (H_{2(p-1)-2n} - H_{p-1-2n}) = 1 + p/(2n+1) (mod p^2)",
            paper_anchor: "Lemma 6",
            nominal_exponent: 2,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(2, p as i64 - 7, 2),
            eval: eval_lemma6,
        },
        CheckSpec {
            id: "EQ55",
            description: "(p-1)! = -p D_{p-1} + p D_{2p-2} - (p^2/2) D_{p-1}^2 (mod p^3)",
            paper_anchor: "Eq. (55)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: no_index,
            eval: eval_eq55,
        },
        CheckSpec {
            id: "EQ70",
            description: "[p, 2n+1] via the truncated convolution and the Agoh-Giuga quotient (mod p^3)",
            paper_anchor: "Eq. (70)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(2, p as i64 - 5, 2),
            eval: eval_eq70,
        },
        CheckSpec {
            id: "EQ74",
            description: "[p, p-2] via the truncated convolution at 2n = p-3 (mod p^3)",
            paper_anchor: "Eq. (74)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: no_index,
            eval: eval_eq74,
        },
        CheckSpec {
            id: "P1-i",
            description: "(p^2/2) TC(p, 2n) reduced to the full convolution (mod p^3), 4 <= 2n <= p-7",
            paper_anchor: "Proposition 1(i)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(4, p as i64 - 7, 2),
            eval: eval_p1_i,
        },
        CheckSpec {
            id: "T1-i",
            description: "(p^2/2) TC(p, 2n) reduced to the full convolution (mod p^3), 4 <= 2n <= p-7",
            paper_anchor: "Theorem 1(i)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(4, p as i64 - 7, 2),
            eval: eval_p1_i,
        },
        CheckSpec {
            id: "EQ79",
            description: "doubled arrangement of the truncated-to-full convolution bridge (mod p^3)",
            paper_anchor: "Eq. (79)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(4, p as i64 - 7, 2),
            eval: eval_eq79,
        },
        CheckSpec {
            id: "P1-ii",
            description: "p^2 TC(p, p-3) = 2p D_{p+1} + p^2 D_2 + 2p D_2 (p B_{p-1}) (mod p^3)",
            paper_anchor: "Proposition 1(ii)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: no_index,
            eval: eval_p1_ii,
        },
        CheckSpec {
            id: "T1-ii",
            description: "p^2 TC(p, p-3) = 2p D_{p+1} + p^2 D_2 + 2p D_2 (p B_{p-1}) (mod p^3)",
            paper_anchor: "Theorem 1(ii)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: no_index,
            eval: eval_p1_ii,
        },
        CheckSpec {
            id: "P1-iii",
            description: "p^2 TC(p, p-5) = (7/720) p^2 + 2p D_{p+3} + 2p D_4 (p B_{p-1}) (mod p^3)",
            paper_anchor: "Proposition 1(iii)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 7),
            sweep: no_index,
            eval: eval_p1_iii,
        },
        CheckSpec {
            id: "T1-iii",
            description: "p^2 TC(p, p-5) = (7/720) p^2 + 2p D_{p+3} + 2p D_4 (p B_{p-1}) (mod p^3)",
            paper_anchor: "Theorem 1(iii)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 7),
            sweep: no_index,
            eval: eval_p1_iii,
        },
        CheckSpec {
            id: "P2-53",
            description: "(p^2/2) C(p-1-2n) = [p, 2n+1] + p D_{p-1-2n} (mod p^3), 0 <= 2n <= p-5",
            paper_anchor: "Proposition 2, Eq. (53)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(0, p as i64 - 5, 2),
            eval: eval_p2_53,
        },
        CheckSpec {
            id: "P2-54",
            description: "(p^2/2) C(p-1) = p D_{2p-2} - (p^2/2) D_{p-1}^2 (mod p^3)",
            paper_anchor: "Proposition 2, Eq. (54)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: no_index,
            eval: eval_p2_54,
        },
        CheckSpec {
            id: "T2-I",
            description: "A*_k closed forms (mod p^3), five cases by k",
            paper_anchor: "Theorem 2(I)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, p as i64 - 1, 1),
            eval: eval_t2_i,
        },
        CheckSpec {
            id: "T2-II",
            description: "A*_k = -A_{p-1-k} + (-1)^k w p^2 D_{p-1-k} (mod p^3)",
            paper_anchor: "Theorem 2(II)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, p as i64 - 2, 1),
            eval: eval_t2_ii,
        },
        CheckSpec {
            id: "T2-III",
            description: "A_{p-1-k} = (p B_{p-1} - p) A*_k (mod p^3)",
            paper_anchor: "Theorem 2(III)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, p as i64 - 2, 1),
            eval: eval_t2_iii,
        },
        CheckSpec {
            id: "T00",
            description: "H_{p,1} = -p^2 (D_{2p-4} - 2 D_{p-3}) (mod p^4)",
            paper_anchor: "Theorem 0.0",
            nominal_exponent: 4,
            applicability: |p| min_prime_gate(p, 7),
            sweep: no_index,
            eval: eval_t00,
        },
        CheckSpec {
            id: "T01",
            description: "[p, 3] = (p B_{p-1} - p) p D_{p-3} - (p^2/2) sum q_a^2 a^{-2} (mod p^3)",
            paper_anchor: "Theorem 0.1",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 7),
            sweep: no_index,
            eval: eval_t01,
        },
        CheckSpec {
            id: "T02",
            description: "C(p-3) = 2 w D_{p-3} - sum q_a^2 a^{-2} (mod p)",
            paper_anchor: "Theorem 0.2",
            nominal_exponent: 1,
            applicability: |p| min_prime_gate(p, 7),
            sweep: no_index,
            eval: eval_t02,
        },
        CheckSpec {
            id: "ZHAO14",
            description: "H_{p,1} = p A*_2 (mod p^4)",
            paper_anchor: "Section 3, Zhao's congruence (14)",
            nominal_exponent: 4,
            applicability: |p| min_prime_gate(p, 7),
            sweep: no_index,
            eval: eval_zhao14,
        },
        CheckSpec {
            id: "T03",
            description: "A*_4, [p, 5], and C(p-5) via D_{p-3}^2 and the digit of D_{2(p-3)} - D_{p-5}",
            paper_anchor: "Theorem 0.3",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 11),
            sweep: |_| stepped(0, 2, 1),
            eval: eval_t03,
        },
        CheckSpec {
            id: "EQ82",
            description: "A*_k = ((-1)^{k-1}/k) H_{p,k} (mod p^2)",
            paper_anchor: "Eq. (82)",
            nominal_exponent: 2,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, p as i64 - 1, 1),
            eval: eval_eq82,
        },
        CheckSpec {
            id: "EQ83",
            description: "A*_k corrected by the quadratic harmonic double sum (mod p^3)",
            paper_anchor: "Eq. (83)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, p as i64 - 1, 1),
            eval: eval_eq83,
        },
        CheckSpec {
            id: "EQ84",
            description: "A*_k corrected by the divided Bernoulli double sum (mod p^3)",
            paper_anchor: "Eq. (84)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, p as i64 - 1, 1),
            eval: eval_eq84,
        },
        CheckSpec {
            id: "EQ85",
            description: "A*_k corrected by the shifted divided Bernoulli sum (mod p^3)",
            paper_anchor: "Eq. (85)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, p as i64 - 1, 1),
            eval: eval_eq85,
        },
        CheckSpec {
            id: "EQ86",
            description: "A*_k corrected by the truncated convolution (mod p^3)",
            paper_anchor: "Eq. (86)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: |p| stepped(1, p as i64 - 1, 1),
            eval: eval_eq86,
        },
        CheckSpec {
            id: "EQ91",
            description: "A*_2 = -(1/2) H_{p,2} (mod p^3)",
            paper_anchor: "Eq. (91)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 5),
            sweep: no_index,
            eval: eval_eq91,
        },
        CheckSpec {
            id: "EQ92",
            description: "A*_2 = -p (D_{2p-4} - 2 D_{p-3}) (mod p^3)",
            paper_anchor: "Eq. (92)",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 7),
            sweep: no_index,
            eval: eval_eq92,
        },
        CheckSpec {
            id: "RMK3",
            description: "ordinary Bernoulli convolutions CB(p-3) and CB(p-5) (mod p); index = gap",
            paper_anchor: "Remark 3",
            nominal_exponent: 1,
            applicability: |p| min_prime_gate(p, 7),
            sweep: |_| vec![Some(3), Some(5)],
            eval: eval_rmk3,
        },
        CheckSpec {
            id: "R13",
            description: "closed-form roots of X^{p-1} + (p-1)! match Hensel lifting (mod p^3)",
            paper_anchor: "Result 13",
            nominal_exponent: 3,
            applicability: |p| min_prime_gate(p, 7),
            sweep: |p| stepped(1, p as i64 - 1, 1),
            eval: eval_r13,
        },
        CheckSpec {
            id: "CURIOUS",
            description: "reciprocal composition sums of p into n parts (index n; mod p odd n, p^2 even n)",
            paper_anchor: "Section 1.1",
            nominal_exponent: 2,
            applicability: |p| {
                min_prime_gate(p, 5).or_else(|| {
                    (p > 31).then(|| "composition enumeration capped at p <= 31".to_string())
                })
            },
            sweep: |_| stepped(2, 6, 1),
            eval: eval_curious,
        },
        CheckSpec {
            id: "IDENT-EULER",
            description: "sum C(n,j) B_j B_{n-j} = -n B_{n-1} - (n-1) B_n exactly",
            paper_anchor: "Euler's identity",
            nominal_exponent: 0,
            applicability: |_| None,
            sweep: |_| stepped(1, 12, 1),
            eval: eval_ident_euler,
        },
        CheckSpec {
            id: "IDENT-MIKI",
            description: "Miki's identity between plain and binomial divided convolutions, exactly",
            paper_anchor: "Miki's identity",
            nominal_exponent: 0,
            applicability: |_| None,
            sweep: |_| stepped(3, 12, 1),
            eval: eval_ident_miki,
        },
        CheckSpec {
            id: "IDENT-DS",
            description: "Dunne-Schubert arrangement of the even Bernoulli convolution, exactly",
            paper_anchor: "Dunne-Schubert identity",
            nominal_exponent: 0,
            applicability: |_| None,
            sweep: |_| stepped(2, 10, 1),
            eval: eval_ident_ds,
        },
        CheckSpec {
            id: "IDENT-SPIVEY",
            description: "sum (-1)^j C(n,j) H_j = -1/n exactly",
            paper_anchor: "Spivey's identity",
            nominal_exponent: 0,
            applicability: |_| None,
            sweep: |_| stepped(1, 12, 1),
            eval: eval_ident_spivey,
        },
        CheckSpec {
            id: "IDENT-CHU",
            description: "Vandermonde convolution of binomials, exactly (index encodes m*10^4 + n*10^2 + r)",
            paper_anchor: "Chu-Vandermonde identity",
            nominal_exponent: 0,
            applicability: |_| None,
            sweep: |_| vec![Some(40503), Some(60606), Some(100807), Some(120113)],
            eval: eval_ident_chu,
        },
    ]
});

/// The fixed, deterministic catalog of every check family.
pub fn registry() -> &'static [CheckSpec] {
    &REGISTRY
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn catalog_ids_are_unique_and_fixed() {
        let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
        let unique: HashSet<&str> = ids.iter().copied().collect();
        assert_eq!(ids.len(), unique.len(), "duplicate check id");
        assert_eq!(ids.len(), 53);
        let p1iii = registry().iter().find(|s| s.id == "P1-iii").unwrap();
        assert_eq!(p1iii.nominal_exponent, 3);
    }

    #[test]
    fn sweeps_match_their_documented_ranges() {
        let by_id = |id: &str| registry().iter().find(|s| s.id == id).unwrap();
        assert_eq!((by_id("R2").sweep)(5).len(), 7); // k = 2..=8
        assert_eq!((by_id("R2").sweep)(101).len(), 29); // k = 2..=30
        assert_eq!((by_id("R3").sweep)(7).len(), 4);
        assert!((by_id("LEMMA6").sweep)(7).is_empty());
        assert_eq!((by_id("LEMMA6").sweep)(11), vec![Some(2), Some(4)]);
        assert!((by_id("P1-i").sweep)(7).is_empty());
        assert_eq!((by_id("P1-i").sweep)(11), vec![Some(4)]);
        assert_eq!((by_id("P2-53").sweep)(7), vec![Some(0), Some(2)]);
        assert_eq!((by_id("EQ70").sweep)(7), vec![Some(2)]);
        assert_eq!((by_id("CURIOUS").sweep)(7).len(), 5);
        assert_eq!((by_id("IDENT-CHU").sweep)(7).len(), 4);
    }

    #[test]
    fn gates_report_their_thresholds() {
        let by_id = |id: &str| registry().iter().find(|s| s.id == id).unwrap();
        assert_eq!(
            (by_id("T00").applicability)(5),
            Some("requires p >= 7".to_string())
        );
        assert_eq!((by_id("T00").applicability)(7), None);
        assert_eq!(
            (by_id("T03").applicability)(7),
            Some("requires p >= 11".to_string())
        );
        assert_eq!(
            (by_id("CURIOUS").applicability)(37),
            Some("composition enumeration capped at p <= 31".to_string())
        );
        assert_eq!((by_id("CURIOUS").applicability)(31), None);
        assert_eq!((by_id("IDENT-EULER").applicability)(3), None);
    }

    #[test]
    fn pinned_cells_evaluate_to_their_published_residues() {
        let by_id = |id: &str| registry().iter().find(|s| s.id == id).unwrap();

        let ctx = PrimeContext::new(11);
        match (by_id("P1-iii").eval)(&ctx, None, false).unwrap() {
            Evaluation::Compared { exponent, lhs, rhs } => {
                let cell = ctx.compare(exponent, &lhs, &rhs).unwrap();
                assert!(cell.pass);
                assert_eq!(cell.lhs, "1210");
                assert_eq!(cell.modulus, "11^3");
            }
            other => panic!("expected Compared, got {other:?}"),
        }

        let ctx = PrimeContext::new(17);
        match (by_id("P1-ii").eval)(&ctx, None, false).unwrap() {
            Evaluation::Compared { exponent, lhs, rhs } => {
                let cell = ctx.compare(exponent, &lhs, &rhs).unwrap();
                assert!(cell.pass);
                assert_eq!(cell.lhs, "1734");
                assert_eq!(cell.modulus, "17^3");
            }
            other => panic!("expected Compared, got {other:?}"),
        }

        let ctx = PrimeContext::new(7);
        match (by_id("T01").eval)(&ctx, None, false).unwrap() {
            Evaluation::Compared { exponent, lhs, rhs } => {
                let cell = ctx.compare(exponent, &lhs, &rhs).unwrap();
                assert!(cell.pass);
                assert_eq!(cell.lhs, "252");
            }
            other => panic!("expected Compared, got {other:?}"),
        }
    }

    #[test]
    fn per_index_skips_carry_reasons() {
        let ctx = PrimeContext::new(7);
        let by_id = |id: &str| registry().iter().find(|s| s.id == id).unwrap();
        match (by_id("RMK3").eval)(&ctx, Some(5), false).unwrap() {
            Evaluation::Skipped { reason } => assert_eq!(reason, "requires p >= 11"),
            other => panic!("expected Skipped, got {other:?}"),
        }
        match (by_id("CURIOUS").eval)(&ctx, Some(6), false).unwrap() {
            Evaluation::Skipped { reason } => assert_eq!(reason, "requires p >= 9"),
            other => panic!("expected Skipped, got {other:?}"),
        }
        // Index validation is defensive even though sweeps never emit these.
        assert!((by_id("RMK3").eval)(&ctx, Some(4), false).is_err());
        assert!((by_id("CURIOUS").eval)(&ctx, Some(7), false).is_err());
        assert!((by_id("R2").eval)(&ctx, None, false).is_err());
    }

    #[test]
    fn composition_sums_match_direct_enumeration() {
        assert_eq!(composition_reciprocal_sum(7, 3), ratio(29, 15));
        assert_eq!(composition_reciprocal_sum(7, 2), ratio(7, 10));
        assert_eq!(composition_reciprocal_sum(5, 3), ratio(7, 4));
        assert_eq!(composition_reciprocal_sum(5, 4), ratio(2, 1));

        // Cross-check the grouped enumeration against a plain one.
        fn plain(p: u64, n: u64) -> Rational {
            fn rec(rem: u64, parts: u64, prod: u64, acc: &mut Rational) {
                if parts == 1 {
                    *acc += Rational::new(Int::from(1), Int::from(prod * rem));
                    return;
                }
                for v in 1..=(rem - parts + 1) {
                    rec(rem - v, parts - 1, prod * v, acc);
                }
            }
            let mut acc = Rational::zero();
            rec(p, n, 1, &mut acc);
            acc
        }
        for (p, n) in [(9, 3), (11, 4), (8, 2), (13, 5)] {
            assert_eq!(composition_reciprocal_sum(p, n), plain(p, n), "p={p} n={n}");
        }
    }
}
