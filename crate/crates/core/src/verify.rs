//! Cross checks between the three routes to the Alexander polynomial.

use std::fmt;

use crate::analysis::{Analysis, AnalysisOptions};
use crate::curve::Curve;
use crate::error::Result;
use crate::exactmath::{ExpVec, MultiPoly};
use crate::filtration::Filtration;
use crate::resolution::{en_alexander, resolve, ResolveOptions};

/// Extra free-point blow-ups used by the resolution invariance check.
pub const EXTRA_BLOWUPS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}", self.status, self.name)?;
        if !self.detail.is_empty() {
            write!(f, "\t{}", self.detail)?;
        }
        Ok(())
    }
}

pub const CHECK_NAMES: [&str; 6] = [
    "poincare-equals-alexander",
    "fiber-euler-equals-alexander",
    "fiber-series-times-cycle-equals-pprime",
    "pprime-divisible",
    "resolution-invariance",
    "window-stability",
];

type Check = fn(&Analysis) -> Result<(Status, String)>;

/// Runs every check on one curve. Errors inside a check turn into a `FAIL`
/// carrying the error name; only failing to set up the analysis is an `Err`.
pub fn verify(c: &Curve, opts: &AnalysisOptions) -> Result<Vec<CheckResult>> {
    let a = Analysis::new(c, opts)?;
    let checks: [(&'static str, Check); 6] = [
        (CHECK_NAMES[0], poincare_equals_alexander),
        (CHECK_NAMES[1], fiber_euler_equals_alexander),
        (CHECK_NAMES[2], fiber_series_times_cycle),
        (CHECK_NAMES[3], pprime_divisible),
        (CHECK_NAMES[4], resolution_invariance),
        (CHECK_NAMES[5], window_stability),
    ];
    Ok(checks
        .iter()
        .map(|(name, check)| {
            let (status, detail) =
                check(&a).unwrap_or_else(|e| (Status::Fail, e.name().to_string()));
            CheckResult {
                name,
                status,
                detail,
            }
        })
        .collect())
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|c| c.status != Status::Fail)
}

fn compare(left: &MultiPoly, right: &MultiPoly) -> (Status, String) {
    if left == right {
        (Status::Pass, String::new())
    } else {
        let diff = left.sub(right).expect("same number of variables");
        let (e, _) = diff.leading().expect("nonzero difference");
        (Status::Fail, format!("first difference at {e}"))
    }
}

fn poincare_equals_alexander(a: &Analysis) -> Result<(Status, String)> {
    Ok(compare(&a.poincare()?, &a.alexander()?))
}

fn fiber_euler_equals_alexander(a: &Analysis) -> Result<(Status, String)> {
    Ok(compare(&a.fiber_series()?, &a.alexander()?))
}

fn fiber_series_times_cycle(a: &Analysis) -> Result<(Status, String)> {
    let r = a.r();
    let product = a.fiber_series()?.mul(&MultiPoly::cycle(r))?;
    let pprime = a.pprime()?;
    if r > 1 {
        return Ok(compare(&product, &pprime));
    }
    let top = ExpVec::splat(1, a.bound().min(a.conductor()[0] + 1));
    Ok(compare(&product.truncate(&top), &pprime.truncate(&top)))
}

fn pprime_divisible(a: &Analysis) -> Result<(Status, String)> {
    if a.r() == 1 {
        return Ok((Status::Skip, "single branch".to_string()));
    }
    let cycle = MultiPoly::cycle(a.r());
    let pprime = a.pprime()?;
    let quotient = pprime.exact_div(&cycle)?;
    Ok(compare(&quotient.mul(&cycle)?, &pprime))
}

fn resolution_invariance(a: &Analysis) -> Result<(Status, String)> {
    let opts = ResolveOptions {
        budget: a
            .graph()
            .vertices()
            .len()
            .max(crate::resolution::DEFAULT_BUDGET),
        extra_free_points: EXTRA_BLOWUPS,
        extra_branch_points: 0,
    };
    let bigger = resolve(a.curve(), &opts)?;
    let (status, detail) = compare(&en_alexander(&bigger.graph, a.bound())?, &a.alexander()?);
    let detail = if detail.is_empty() {
        format!(
            "{} -> {} vertices",
            a.graph().vertices().len(),
            bigger.graph.vertices().len()
        )
    } else {
        detail
    };
    Ok((status, detail))
}

/// `c(v)` for every `v <= delta` under windows `delta + 2` and `delta + 4`.
pub fn c_tables(c: &Curve, delta: &ExpVec) -> Result<(Vec<usize>, Vec<usize>)> {
    let r = c.r();
    let table = |extra: i64| -> Result<Vec<usize>> {
        let f = Filtration::new(c, &(delta + &ExpVec::splat(r, extra)))?;
        ExpVec::box_points(&ExpVec::zeros(r), delta)
            .iter()
            .map(|v| f.c_dim(v))
            .collect()
    };
    Ok((table(2)?, table(4)?))
}

fn window_stability(a: &Analysis) -> Result<(Status, String)> {
    let (small, large) = c_tables(a.curve(), a.conductor())?;
    Ok(if small == large {
        (Status::Pass, format!("{} values", small.len()))
    } else {
        let at = small.iter().zip(&large).position(|(x, y)| x != y).unwrap();
        (Status::Fail, format!("differs at index {at}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn tacnode_passes_everything() {
        let res = verify(&corpus::tacnode(), &AnalysisOptions::default()).unwrap();
        assert_eq!(res.len(), 6);
        assert!(res.iter().all(|c| c.status == Status::Pass), "{res:?}");
        assert_eq!(res.iter().map(|c| c.name).collect::<Vec<_>>(), CHECK_NAMES);
    }

    #[test]
    fn single_branch_skips_divisibility() {
        let res = verify(&corpus::cusp(), &AnalysisOptions::default()).unwrap();
        assert_eq!(res[3].status, Status::Skip);
        assert!(all_passed(&res), "{res:?}");
        assert_eq!(res.iter().filter(|c| c.status == Status::Pass).count(), 5);
    }

    #[test]
    fn result_lines() {
        let c = CheckResult {
            name: "x",
            status: Status::Pass,
            detail: String::new(),
        };
        assert_eq!(c.to_string(), "PASS\tx");
    }
}
