//! Congruence verification: a fixed catalog of check families and a
//! deterministic, optionally parallel runner that produces one outcome row
//! per evaluated cell.
//!
//! A *check family* states one congruence (or exact identity) together with
//! the primes and auxiliary indices it applies to. Running a family at a
//! prime yields a row per index carrying both residues, so every pass and
//! fail is auditable after the fact. Families that do not apply at a prime
//! produce an explicit skipped row rather than silence; the `force` option
//! evaluates them anyway, recording honest failures at documented
//! boundaries.

mod context;
mod outcome;
mod registry;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{PrimeModulus, Rational};

pub use context::{ComparedCell, PrimeContext};
pub use outcome::{modulus_label, CheckOutcome, Status};
pub use registry::{registry, CheckSpec, Evaluation};

/// Options controlling a verification run.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Restrict the run to these check ids; `None` runs the whole catalog.
    /// Unknown ids are rejected, duplicates collapse, and execution always
    /// follows catalog order.
    pub check_ids: Option<Vec<String>>,
    /// Worker threads for the per-prime sweep; `None` uses the global pool.
    /// The produced rows are identical either way.
    pub jobs: Option<usize>,
    /// Evaluate cells even where the family is documented not to apply,
    /// turning gate skips into honest comparisons (and evaluation errors
    /// into explained skips).
    pub force: bool,
}

/// Run the selected check families over `primes` and return one row per
/// cell, sorted by `(prime, check id, index)`.
///
/// Every entry of `primes` must be an odd prime. The row set is fully
/// deterministic: reruns, restricted selections, and any `jobs` setting
/// reproduce byte-identical rows for the cells they cover.
pub fn run_checks(primes: &[u64], options: &RunOptions) -> Result<Vec<CheckOutcome>> {
    for &p in primes {
        PrimeModulus::new(p, 1)?;
    }
    let specs = selected_specs(options.check_ids.as_deref())?;
    let force = options.force;
    let run = || -> Result<Vec<CheckOutcome>> {
        let nested: Vec<Vec<CheckOutcome>> = primes
            .par_iter()
            .map(|&p| run_prime(p, &specs, force))
            .collect::<Result<_>>()?;
        let mut rows: Vec<CheckOutcome> = nested.into_iter().flatten().collect();
        rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(rows)
    };
    match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::out_of_range("worker thread count", e.to_string()))?
            .install(run),
        None => run(),
    }
}

/// Exact reciprocal-product sum over the compositions of `p` into `n`
/// positive parts, together with the congruence row checking it against its
/// Bernoulli closed form.
///
/// `p` must be an odd prime exceeding `n`, and `n` must lie in `2..=6`.
pub fn curious_sum(p: u64, n: u64) -> Result<(Rational, CheckOutcome)> {
    PrimeModulus::new(p, 1)?;
    if !(2..=6).contains(&n) {
        return Err(Error::out_of_range(
            "composition parts",
            format!("n = {n} outside 2..=6"),
        ));
    }
    if p <= n {
        return Err(Error::out_of_range(
            "composition parts",
            format!("p = {p} must exceed the part count n = {n}"),
        ));
    }
    let spec = registry()
        .iter()
        .find(|s| s.id == "CURIOUS")
        .expect("the composition-sum family is in the catalog");
    let outcome = if let Some(reason) = (spec.applicability)(p) {
        skipped_row(p, spec, Some(n as i64), reason)
    } else {
        let ctx = PrimeContext::new(p);
        execute_cell(&ctx, spec, Some(n as i64), false)?
    };
    Ok((registry::composition_reciprocal_sum(p, n), outcome))
}

fn selected_specs(ids: Option<&[String]>) -> Result<Vec<&'static CheckSpec>> {
    match ids {
        None => Ok(registry().iter().collect()),
        Some(list) => {
            let mut wanted: Vec<&str> = Vec::new();
            for id in list {
                if !registry().iter().any(|s| s.id == id) {
                    return Err(Error::UnknownCheckId(id.clone()));
                }
                if !wanted.contains(&id.as_str()) {
                    wanted.push(id);
                }
            }
            Ok(registry()
                .iter()
                .filter(|s| wanted.contains(&s.id))
                .collect())
        }
    }
}

fn run_prime(p: u64, specs: &[&'static CheckSpec], force: bool) -> Result<Vec<CheckOutcome>> {
    let ctx = PrimeContext::new(p);
    let mut rows = Vec::new();
    for spec in specs {
        if let Some(reason) = (spec.applicability)(p) {
            if !force {
                rows.push(skipped_row(p, spec, None, reason));
                continue;
            }
        }
        for index in (spec.sweep)(p) {
            rows.push(execute_cell(&ctx, spec, index, force)?);
        }
    }
    Ok(rows)
}

fn skipped_row(p: u64, spec: &CheckSpec, index: Option<i64>, reason: String) -> CheckOutcome {
    CheckOutcome {
        prime: p,
        check_id: spec.id.to_string(),
        index,
        status: Status::Skipped,
        modulus: modulus_label(p, spec.nominal_exponent),
        lhs: None,
        rhs: None,
        reason: Some(reason),
        paper_anchor: spec.paper_anchor.to_string(),
    }
}

fn execute_cell(
    ctx: &PrimeContext,
    spec: &CheckSpec,
    index: Option<i64>,
    force: bool,
) -> Result<CheckOutcome> {
    let p = ctx.prime();
    let evaluation = match (spec.eval)(ctx, index, force) {
        Ok(evaluation) => evaluation,
        Err(e) if force => Evaluation::Skipped {
            reason: format!("forced evaluation failed: {e}"),
        },
        Err(e) => return Err(e),
    };
    match evaluation {
        Evaluation::Skipped { reason } => Ok(skipped_row(p, spec, index, reason)),
        Evaluation::Compared { exponent, lhs, rhs } => {
            let cell = match ctx.compare(exponent, &lhs, &rhs) {
                Ok(cell) => cell,
                Err(e) if force => {
                    return Ok(skipped_row(
                        p,
                        spec,
                        index,
                        format!("forced evaluation failed: {e}"),
                    ))
                }
                Err(e) => return Err(e),
            };
            Ok(CheckOutcome {
                prime: p,
                check_id: spec.id.to_string(),
                index,
                status: cell.status(),
                modulus: cell.modulus,
                lhs: Some(cell.lhs),
                rhs: Some(cell.rhs),
                reason: None,
                paper_anchor: spec.paper_anchor.to_string(),
            })
        }
    }
}
