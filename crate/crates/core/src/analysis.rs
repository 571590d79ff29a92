//! One curve, resolved once, with its conductor and filtration at hand; the
//! three Alexander routes are read from here.

use num_bigint::BigInt;

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::exactmath::{expand_truncated, ExpVec, MultiPoly};
use crate::filtration::Filtration;
use crate::resolution::{
    en_alexander, resolve, ResGraph, Resolution, ResolveOptions, DEFAULT_BUDGET,
};
use crate::semigroup::{locate_conductor, DEFAULT_PROBE};

const MAX_DOUBLINGS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub budget: usize,
    /// Truncation degree for single-branch series; `2 delta + 2` if unset.
    pub bound: Option<i64>,
    /// Filtration window; must be at least `delta + 2`.
    pub window: Option<ExpVec>,
    pub probe: i64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            bound: None,
            window: None,
            probe: DEFAULT_PROBE,
        }
    }
}

#[derive(Debug)]
pub struct Analysis {
    curve: Curve,
    resolution: Resolution,
    conductor: ExpVec,
    filtration: Filtration,
    bound: i64,
}

impl Analysis {
    pub fn new(c: &Curve, opts: &AnalysisOptions) -> Result<Self> {
        let r = c.r();
        let resolution = resolve(c, &ResolveOptions::with_budget(opts.budget))?;
        let (conductor, default_filtration) = locate_conductor(c, &resolution, opts.probe)?;
        let filtration = match &opts.window {
            None => default_filtration,
            Some(w) => {
                if w.len() != r {
                    return Err(Error::DimensionMismatch {
                        expected: r,
                        found: w.len(),
                    });
                }
                let needed = &conductor + &ExpVec::splat(r, 2);
                if !needed.le_all(w) {
                    return Err(Error::WindowTooSmall {
                        needed: needed.into_vec(),
                        window: w.as_slice().to_vec(),
                    });
                }
                Filtration::new(c, w)?
            }
        };
        let top = conductor.as_slice().iter().copied().max().unwrap_or(0);
        Ok(Self {
            curve: c.clone(),
            resolution,
            bound: opts.bound.unwrap_or(2 * top + 2),
            conductor,
            filtration,
        })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn r(&self) -> usize {
        self.curve.r()
    }

    pub fn resolution(&self) -> &Resolution {
        &self.resolution
    }

    pub fn graph(&self) -> &ResGraph {
        &self.resolution.graph
    }

    pub fn conductor(&self) -> &ExpVec {
        &self.conductor
    }

    pub fn filtration(&self) -> &Filtration {
        &self.filtration
    }

    /// Truncation degree used for single-branch series.
    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Alexander polynomial from the resolution graph.
    pub fn alexander(&self) -> Result<MultiPoly> {
        en_alexander(self.graph(), self.bound)
    }

    /// `P'_C` on the box `[0, delta + 1]`, which holds its whole support.
    pub fn pprime(&self) -> Result<MultiPoly> {
        self.filtration
            .pprime_box(&(&self.conductor + &ExpVec::ones(self.r())))
    }

    /// `P_C = P'_C / (t_1 ... t_r - 1)`. For one branch, the Poincaré series
    /// `-P'_C / (1 - t)` truncated at the bound.
    pub fn poincare(&self) -> Result<MultiPoly> {
        let pp = self.pprime()?;
        if self.r() > 1 {
            return pp.exact_div(&MultiPoly::cycle(self.r()));
        }
        let geometric = expand_truncated(1, &[], &[(ExpVec::ones(1), 1)], self.bound);
        pp.neg()
            .mul_trunc(&geometric, &ExpVec::splat(1, self.bound))
    }

    /// `sum chi(PF_v) t^v`. For several branches the sum runs over
    /// `[0, delta]` after checking that `chi` vanishes on the rest of the
    /// window; for one branch it is truncated at the bound.
    pub fn fiber_series(&self) -> Result<MultiPoly> {
        Ok(MultiPoly::from_terms(
            self.r(),
            self.fiber_table()?
                .into_iter()
                .map(|(v, chi)| (v, BigInt::from(chi))),
        ))
    }

    /// `(v, chi(PF_v))` for every `v` in the box of [`Analysis::fiber_series`].
    pub fn fiber_table(&self) -> Result<Vec<(ExpVec, i64)>> {
        let r = self.r();
        let upper = if r > 1 {
            self.conductor.clone()
        } else {
            ExpVec::splat(1, self.bound)
        };
        let table = |f: &Filtration| -> Result<Vec<(ExpVec, i64)>> {
            ExpVec::box_points(&ExpVec::zeros(r), &upper)
                .into_iter()
                .map(|v| f.fiber_euler(&v).map(|chi| (v, chi)))
                .collect()
        };
        if r == 1 {
            let needed = &upper + &ExpVec::ones(1);
            if needed.le_all(self.filtration.window()) {
                return table(&self.filtration);
            }
            return table(&Filtration::new(&self.curve, &needed)?);
        }
        match self.filtration.check_fiber_shell(&upper) {
            Ok(()) => return table(&self.filtration),
            Err(Error::BoundaryNonzero { .. }) => {}
            Err(e) => return Err(e),
        }
        let mut w = self.filtration.window().scale(2);
        for attempt in 1..=MAX_DOUBLINGS {
            let f = Filtration::new(&self.curve, &w)?;
            match f.check_fiber_shell(&upper) {
                Ok(()) => return table(&f),
                Err(Error::BoundaryNonzero { .. }) if attempt < MAX_DOUBLINGS => w = w.scale(2),
                Err(e) => return Err(e),
            }
        }
        unreachable!("the last attempt returns")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exactmath::ExpVec;

    fn poly(r: usize, terms: &[(&[i64], i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            r,
            terms
                .iter()
                .map(|(e, c)| (ExpVec::new(e.to_vec()), BigInt::from(*c))),
        )
    }

    fn analyse(c: &Curve) -> Analysis {
        Analysis::new(c, &AnalysisOptions::default()).unwrap()
    }

    #[test]
    fn node_and_tacnode() {
        let a = analyse(&corpus::node());
        assert_eq!(a.fiber_series().unwrap(), MultiPoly::one(2));
        assert_eq!(a.pprime().unwrap(), poly(2, &[(&[0, 0], -1), (&[1, 1], 1)]));
        assert_eq!(a.poincare().unwrap(), MultiPoly::one(2));
        let a = analyse(&corpus::tacnode());
        let expected = poly(2, &[(&[0, 0], 1), (&[1, 1], 1)]);
        assert_eq!(a.fiber_series().unwrap(), expected);
        assert_eq!(a.poincare().unwrap(), expected);
        assert_eq!(a.pprime().unwrap(), poly(2, &[(&[0, 0], -1), (&[2, 2], 1)]));
    }

    #[test]
    fn three_lines_poincare() {
        let a = analyse(&corpus::three_lines());
        assert_eq!(
            a.poincare().unwrap(),
            poly(3, &[(&[0, 0, 0], 1), (&[1, 1, 1], -1)])
        );
        assert_eq!(a.fiber_series().unwrap(), a.alexander().unwrap());
    }

    #[test]
    fn cusp_series() {
        let a = analyse(&corpus::cusp());
        assert_eq!(a.bound(), 6);
        assert_eq!(
            a.pprime().unwrap(),
            poly(1, &[(&[0], -1), (&[1], 1), (&[2], -1)])
        );
        let s = poly(
            1,
            &[
                (&[0], 1),
                (&[2], 1),
                (&[3], 1),
                (&[4], 1),
                (&[5], 1),
                (&[6], 1),
            ],
        );
        assert_eq!(a.poincare().unwrap(), s);
        assert_eq!(a.fiber_series().unwrap(), s);
        assert_eq!(a.alexander().unwrap(), s);
    }

    #[test]
    fn explicit_windows() {
        let opts = AnalysisOptions {
            window: Some(ExpVec::new(vec![3, 3])),
            ..Default::default()
        };
        assert_eq!(
            Analysis::new(&corpus::node(), &opts)
                .unwrap()
                .poincare()
                .unwrap(),
            MultiPoly::one(2)
        );
        let opts = AnalysisOptions {
            window: Some(ExpVec::new(vec![3, 3])),
            ..Default::default()
        };
        assert_eq!(
            Analysis::new(&corpus::tacnode(), &opts).unwrap_err().name(),
            "WindowTooSmall"
        );
    }

    #[test]
    fn top_level_helpers() {
        use crate::filtration::{fiber_series, poincare_poly, pprime_poly};
        let c = corpus::cusp_transverse_line();
        let delta = analyse(&c).alexander().unwrap();
        assert_eq!(poincare_poly(&c).unwrap(), delta);
        assert_eq!(fiber_series(&c).unwrap(), delta);
        assert_eq!(
            pprime_poly(&c).unwrap(),
            delta.mul(&MultiPoly::cycle(2)).unwrap()
        );
    }
}
