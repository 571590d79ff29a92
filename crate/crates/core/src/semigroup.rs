//! The semigroup of values: membership through the rank criterion, the
//! conductor, and the structure of the semigroup of an irreducible branch.

use std::collections::BTreeSet;

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::exactmath::ExpVec;
use crate::filtration::Filtration;
use crate::resolution::{conductor_bound, dead_end_data, resolve, Resolution, ResolveOptions};

/// How far past the conductor membership and vanishing are probed.
pub const DEFAULT_PROBE: i64 = 3;

const MAX_ENLARGEMENTS: usize = 4;

/// `v` is a value of some germ: `b_{v+e_i} < b_v` for every branch `i`.
pub fn contains(f: &Filtration, v: &ExpVec) -> Result<bool> {
    if !v.is_nonnegative() {
        return Ok(false);
    }
    let b = f.b_dim(v)?;
    for i in 0..f.r() {
        if f.b_dim(&(v + &ExpVec::unit(f.r(), i)))? >= b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finds the conductor starting from the bound read off the resolution, and
/// returns it together with a filtration whose window reaches
/// `conductor + probe + 2`.
pub fn locate_conductor(c: &Curve, res: &Resolution, probe: i64) -> Result<(ExpVec, Filtration)> {
    let r = c.r();
    let mut bound = conductor_bound(res);
    for _ in 0..MAX_ENLARGEMENTS {
        let top = &bound + &ExpVec::splat(r, probe);
        let f = Filtration::new(c, &(&top + &ExpVec::splat(r, 2)))?;
        if let Some(delta) = conductor_within(&f, &bound, &top)? {
            if r == 1 || vanishes_past(&f, &delta, probe)? {
                return Ok((delta, f));
            }
        }
        bound = &bound.scale(2) + &ExpVec::ones(r);
    }
    Err(Error::WindowTooSmall {
        needed: bound.into_vec(),
        window: Vec::new(),
    })
}

/// Smallest `d <= bound` such that every point of `[d, top]` is a member.
fn conductor_within(f: &Filtration, bound: &ExpVec, top: &ExpVec) -> Result<Option<ExpVec>> {
    let r = f.r();
    let mut gaps = Vec::new();
    for v in ExpVec::box_points(&ExpVec::zeros(r), top) {
        if !contains(f, &v)? {
            gaps.push(v);
        }
    }
    let valid = |d: &ExpVec| !gaps.iter().any(|g| d.le_all(g));
    let mut delta: Option<ExpVec> = None;
    for d in ExpVec::box_points(&ExpVec::zeros(r), bound) {
        if valid(&d) {
            delta = Some(match delta {
                Some(m) => m.meet(&d),
                None => d,
            });
        }
    }
    Ok(delta.filter(|d| valid(d)))
}

fn vanishes_past(f: &Filtration, delta: &ExpVec, probe: i64) -> Result<bool> {
    let hi = delta + &ExpVec::splat(f.r(), probe);
    for v in ExpVec::box_points(delta, &hi) {
        if f.fiber_euler(&v)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The conductor `delta`: the minimal vector with `delta + Z_{>=0}^r` inside
/// the semigroup.
pub fn conductor(c: &Curve) -> Result<ExpVec> {
    let res = resolve(c, &ResolveOptions::default())?;
    Ok(locate_conductor(c, &res, DEFAULT_PROBE)?.0)
}

/// The members of the semigroup inside the box `[0, bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupBox {
    bound: ExpVec,
    members: BTreeSet<ExpVec>,
}

impl SemigroupBox {
    /// Scans the box with the rank criterion; the filtration window must
    /// exceed `bound`.
    pub fn scan(f: &Filtration, bound: &ExpVec) -> Result<Self> {
        let mut members = BTreeSet::new();
        for v in ExpVec::box_points(&ExpVec::zeros(f.r()), bound) {
            if contains(f, &v)? {
                members.insert(v);
            }
        }
        Ok(Self {
            bound: bound.clone(),
            members,
        })
    }

    pub fn compute(c: &Curve, bound: &ExpVec) -> Result<Self> {
        let f = Filtration::new(c, &(bound + &ExpVec::ones(c.r())))?;
        Self::scan(&f, bound)
    }

    pub fn bound(&self) -> &ExpVec {
        &self.bound
    }

    pub fn members(&self) -> &BTreeSet<ExpVec> {
        &self.members
    }

    pub fn contains(&self, v: &ExpVec) -> bool {
        self.members.contains(v)
    }

    /// Sums of members that stay in the box are members.
    pub fn is_closed(&self) -> bool {
        self.members.iter().all(|a| {
            self.members.iter().all(|b| {
                let s = a + b;
                !s.le_all(&self.bound) || self.members.contains(&s)
            })
        })
    }
}

/// Minimal generators of the semigroup of a single branch, ascending.
pub fn minimal_generators_r1(c: &Curve) -> Result<Vec<u64>> {
    if c.r() != 1 {
        return Err(Error::RequiresSingleBranch(c.r()));
    }
    let res = resolve(c, &ResolveOptions::default())?;
    let (delta, f) = locate_conductor(c, &res, DEFAULT_PROBE)?;
    let member =
        |s: i64| -> Result<bool> { Ok(s >= delta[0] || contains(&f, &ExpVec::new(vec![s]))?) };
    let mut first = 1;
    while !member(first)? {
        first += 1;
    }
    // Past delta + first - 1 everything is a sum of `first` and smaller members.
    let limit = (delta[0] + first - 1).max(first) as usize;
    let mut gens = Vec::new();
    let mut generated = vec![false; limit + 1];
    generated[0] = true;
    for s in 1..=limit {
        if generated[s] || !member(s as i64)? {
            continue;
        }
        gens.push(s as u64);
        for t in s..=limit {
            if generated[t - s] {
                generated[t] = true;
            }
        }
    }
    Ok(gens)
}

/// `{s in S, s <= bound : s - m not in S}` for a single-branch box.
pub fn apery_set(s: &SemigroupBox, m: i64) -> Result<BTreeSet<i64>> {
    let one = |k: i64| ExpVec::new(vec![k]);
    if s.bound.len() != 1 {
        return Err(Error::RequiresSingleBranch(s.bound.len()));
    }
    if m < 0 || !s.contains(&one(m)) {
        return Err(Error::NotInSemigroup(m.max(0) as u64));
    }
    Ok(s.members
        .iter()
        .map(|v| v[0])
        .filter(|&k| !s.contains(&one(k - m)))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupReport {
    pub generators: Vec<u64>,
    pub n: Vec<Option<u64>>,
    pub conductor: i64,
    pub checks: Vec<PropertyCheck>,
}

impl SemigroupReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks the structure of the semigroup of a single branch against the
/// integers `n_j` read from its resolution graph.
pub fn verify_semigroup_properties(c: &Curve) -> Result<SemigroupReport> {
    if c.r() != 1 {
        return Err(Error::RequiresSingleBranch(c.r()));
    }
    let res = resolve(c, &ResolveOptions::default())?;
    let (delta, f) = locate_conductor(c, &res, DEFAULT_PROBE)?;
    let delta = delta[0];
    let gens = minimal_generators_r1(c)?;
    let n = dead_end_data(&res.graph).expect("single branch").n;
    let g = gens.len().saturating_sub(1);
    let nj = |j: usize| n.get(j - 1).copied().flatten();
    let mut checks = Vec::new();

    let predicted: Option<i64> = (1..=g)
        .map(|j| nj(j).map(|k| k as i64 * gens[j] as i64))
        .sum::<Option<i64>>()
        .map(|s| s - gens[0] as i64);
    checks.push(PropertyCheck {
        name: "largest-gap",
        passed: n.len() == g && predicted == Some(delta - 1),
        detail: format!("delta - 1 = {}, predicted {:?}", delta - 1, predicted),
    });

    let top = delta + DEFAULT_PROBE;
    let mut unique = n.len() == g && (1..=g).all(|j| nj(j).is_some());
    let mut bad = None;
    if unique {
        for s in 0..=top {
            let member = contains(&f, &ExpVec::new(vec![s]))?;
            let reps = count_representations(s, &gens, &n);
            if reps != u64::from(member) {
                unique = false;
                bad = Some((s, reps));
                break;
            }
        }
    }
    checks.push(PropertyCheck {
        name: "unique-representation",
        passed: unique,
        detail: match bad {
            Some((s, k)) => format!("{s} has {k} representations"),
            None => format!("checked 0..={top}"),
        },
    });

    let growth = (1..g).all(|j| nj(j).is_some_and(|k| (k + 1) * gens[j] < gens[j + 1]));
    checks.push(PropertyCheck {
        name: "generator-growth",
        passed: n.len() == g && growth,
        detail: format!("generators {gens:?}, n {n:?}"),
    });

    let nested = (1..=g).all(|j| nj(j).is_some_and(|k| in_span((k + 1) * gens[j], &gens[..j])));
    checks.push(PropertyCheck {
        name: "multiple-in-previous",
        passed: n.len() == g && nested,
        detail: format!("generators {gens:?}, n {n:?}"),
    });

    Ok(SemigroupReport {
        generators: gens,
        n,
        conductor: delta,
        checks,
    })
}

/// Number of ways to write `s = k_0 g_0 + sum k_j g_j` with `0 <= k_j <= n_j`.
fn count_representations(s: i64, gens: &[u64], n: &[Option<u64>]) -> u64 {
    fn go(s: i64, j: usize, gens: &[u64], n: &[Option<u64>]) -> u64 {
        if j == 0 {
            return u64::from(s >= 0 && s % gens[0] as i64 == 0);
        }
        let cap = n[j - 1].unwrap_or(0) as i64;
        (0..=cap)
            .map(|k| s - k * gens[j] as i64)
            .take_while(|&rest| rest >= 0)
            .map(|rest| go(rest, j - 1, gens, n))
            .sum()
    }
    go(s, gens.len() - 1, gens, n)
}

fn in_span(s: u64, gens: &[u64]) -> bool {
    let mut reach = vec![false; s as usize + 1];
    reach[0] = true;
    for t in 1..=s as usize {
        reach[t] = gens
            .iter()
            .any(|&g| g as usize <= t && reach[t - g as usize]);
    }
    reach[s as usize]
}
