//! The multi-index filtration `J(v) = {g : v_i(g) >= v_i}` on the ring of the
//! curve, computed through jets of monomials below a window `w`.
//!
//! The jet of a germ is the vector of its `tau^k` coefficients, `k < w_i`, on
//! every branch. Germs with `v(g) >= w` have zero jet, so
//! `b_v = dim J(v)/J(w)` is the dimension of the jets vanishing in the
//! columns below `v`:
//!
//! ```text
//! b_v = rank(M) - rank(M restricted to the columns (i, k) with k < v_i)
//! ```
//!
//! Everything else (`c(v)`, fiber dimensions, fiber Euler characteristics,
//! the series `P'`) is an inclusion-exclusion over `b`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;

use crate::curve::{monomial_jet, Curve};
use crate::error::{Error, Result};
use crate::exactmath::{rank, ExpVec, MultiPoly, Order, Rat};

/// Jets of every monomial `x^a y^b` that is nonzero somewhere below the
/// window. Columns are branch-major, order-ascending.
#[derive(Clone, Debug)]
pub struct JetMatrix {
    window: ExpVec,
    monomials: Vec<(u32, u32)>,
    rows: Vec<Vec<Rat>>,
    offsets: Vec<usize>,
}

impl JetMatrix {
    pub fn window(&self) -> &ExpVec {
        &self.window
    }

    pub fn monomials(&self) -> &[(u32, u32)] {
        &self.monomials
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn ncols(&self) -> usize {
        self.window.sum() as usize
    }

    /// Rank of the submatrix made of the columns `(i, k)` with `k < v_i`.
    fn rank_below(&self, v: &ExpVec) -> usize {
        let cols: Vec<usize> = (0..self.window.len())
            .flat_map(|i| (0..v[i] as usize).map(move |k| (i, k)))
            .map(|(i, k)| self.offsets[i] + k)
            .collect();
        if cols.is_empty() {
            return 0;
        }
        rank(
            self.rows
                .iter()
                .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                .collect(),
        )
    }
}

pub fn build_jet_matrix(c: &Curve, w: &ExpVec) -> Result<JetMatrix> {
    if w.len() != c.r() {
        return Err(Error::DimensionMismatch {
            expected: c.r(),
            found: w.len(),
        });
    }
    if !ExpVec::ones(c.r()).le_all(w) {
        return Err(Error::WindowTooSmall {
            needed: vec![1; c.r()],
            window: w.as_slice().to_vec(),
        });
    }
    let max_exp = |ord: fn(&crate::curve::BranchParam) -> Order| -> u32 {
        c.branches()
            .iter()
            .enumerate()
            .filter_map(|(i, b)| ord(b).finite().map(|o| ((w[i] - 1) as u64 / o) as u32))
            .max()
            .unwrap_or(0)
    };
    let amax = max_exp(|b| b.x.order());
    let bmax = max_exp(|b| b.y.order());
    let mut monomials = Vec::new();
    for a in 0..=amax {
        for b in 0..=bmax {
            let visible = c
                .branches()
                .iter()
                .enumerate()
                .any(|(i, br)| br.monomial_order(a, b) < Order::Finite(w[i] as u64));
            if visible {
                monomials.push((a, b));
            }
        }
    }
    let rows = monomials
        .iter()
        .map(|&(a, b)| monomial_jet(c, a, b, w))
        .collect();
    let mut offsets = Vec::with_capacity(c.r());
    let mut acc = 0;
    for i in 0..c.r() {
        offsets.push(acc);
        acc += w[i] as usize;
    }
    Ok(JetMatrix {
        window: w.clone(),
        monomials,
        rows,
        offsets,
    })
}

/// Dimensions of the filtration below a fixed window, with `b_v` memoized.
///
/// Lookups may run concurrently; the memo only ever receives identical
/// values for a key.
#[derive(Debug)]
pub struct Filtration {
    jets: JetMatrix,
    full_rank: usize,
    memo: Mutex<HashMap<ExpVec, usize>>,
}

impl Filtration {
    pub fn new(c: &Curve, window: &ExpVec) -> Result<Self> {
        let jets = build_jet_matrix(c, window)?;
        let full_rank = rank(jets.rows.clone());
        Ok(Self {
            jets,
            full_rank,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn r(&self) -> usize {
        self.jets.window.len()
    }

    pub fn window(&self) -> &ExpVec {
        &self.jets.window
    }

    pub fn jets(&self) -> &JetMatrix {
        &self.jets
    }

    fn require(&self, v: &ExpVec) -> Result<()> {
        if v.le_all(self.window()) {
            Ok(())
        } else {
            Err(Error::WindowTooSmall {
                needed: v.as_slice().to_vec(),
                window: self.window().as_slice().to_vec(),
            })
        }
    }

    /// `b_v = dim J(v)/J(w)`, with negative components of `v` clamped to 0.
    pub fn b_dim(&self, v: &ExpVec) -> Result<usize> {
        let v = v.clamp_nonnegative();
        self.require(&v)?;
        if let Some(&b) = self.memo.lock().unwrap().get(&v) {
            return Ok(b);
        }
        let b = self.full_rank - self.jets.rank_below(&v);
        self.memo.lock().unwrap().insert(v, b);
        Ok(b)
    }

    /// `c(v) = dim J(v)/J(v+1)`.
    pub fn c_dim(&self, v: &ExpVec) -> Result<usize> {
        let r = self.r();
        Ok(self.b_dim(v)? - self.b_dim(&(v + &ExpVec::ones(r)))?)
    }

    /// `dim (C(v) n L_I) = b_{v+1_I} - b_{v+1}`, `I` given as a bit mask.
    pub fn fiber_dim(&self, v: &ExpVec, subset: u32) -> Result<usize> {
        let r = self.r();
        Ok(self.b_dim(&(v + &ExpVec::indicator(r, subset)))?
            - self.b_dim(&(v + &ExpVec::ones(r)))?)
    }

    /// Euler characteristic of the projectivized fiber `PF_v`, by
    /// inclusion-exclusion over the coordinate subspaces `L_I`.
    pub fn fiber_euler(&self, v: &ExpVec) -> Result<i64> {
        let r = self.r();
        let mut chi = 0i64;
        for mask in 0..(1u32 << r) {
            let d = self.fiber_dim(v, mask)? as i64;
            chi += if mask.count_ones() % 2 == 0 { d } else { -d };
        }
        Ok(chi)
    }

    /// Coefficient of `t^v` in `P'(t) = L(t) prod (t_i - 1)`.
    pub fn pprime_coeff(&self, v: &ExpVec) -> Result<i64> {
        let r = self.r();
        let shifted = v - &ExpVec::ones(r);
        let mut acc = 0i64;
        for mask in 0..(1u32 << r) {
            let c = self.c_dim(&(&shifted + &ExpVec::indicator(r, mask)))? as i64;
            acc += if mask.count_ones() % 2 == 0 { c } else { -c };
        }
        Ok(acc)
    }

    /// `sum chi(PF_v) t^v` over the box `0 <= v <= upper`.
    pub fn fiber_series_box(&self, upper: &ExpVec) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(self.r());
        for v in ExpVec::box_points(&ExpVec::zeros(self.r()), upper) {
            let chi = self.fiber_euler(&v)?;
            out.add_term(v, BigInt::from(chi));
        }
        Ok(out)
    }

    /// `P'` restricted to the box `0 <= v <= upper`.
    pub fn pprime_box(&self, upper: &ExpVec) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(self.r());
        for v in ExpVec::box_points(&ExpVec::zeros(self.r()), upper) {
            let c = self.pprime_coeff(&v)?;
            out.add_term(v, BigInt::from(c));
        }
        Ok(out)
    }

    /// Checks that `chi(PF_v) = 0` for every `v <= w - 1` outside the box
    /// `[0, upper]`.
    pub fn check_fiber_shell(&self, upper: &ExpVec) -> Result<()> {
        let r = self.r();
        let top = self.window() - &ExpVec::ones(r);
        for v in ExpVec::box_points(&ExpVec::zeros(r), &top) {
            if v.le_all(upper) {
                continue;
            }
            let chi = self.fiber_euler(&v)?;
            if chi != 0 {
                return Err(Error::BoundaryNonzero {
                    point: v.into_vec(),
                    chi,
                });
            }
        }
        Ok(())
    }
}

/// `sum chi(PF_v) t^v` for a curve, using the default analysis options.
/// For `r = 1` the series is truncated at the default bound.
pub fn fiber_series(c: &Curve) -> Result<MultiPoly> {
    crate::analysis::Analysis::new(c, &Default::default())?.fiber_series()
}

/// `P'_C = L_C prod (t_i - 1)` for a curve.
pub fn pprime_poly(c: &Curve) -> Result<MultiPoly> {
    crate::analysis::Analysis::new(c, &Default::default())?.pprime()
}

/// Poincaré polynomial `P_C = P'_C / (t_1 ... t_r - 1)`; for `r = 1` the
/// Poincaré series truncated at the default bound.
pub fn poincare_poly(c: &Curve) -> Result<MultiPoly> {
    crate::analysis::Analysis::new(c, &Default::default())?.poincare()
}
