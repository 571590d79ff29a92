//! Truncated power series in one variable, used for local branch
//! parametrizations during blow-ups.

use num_traits::{One, Zero};

use crate::exactmath::{Rat, UniPoly};

/// Coefficients of `tau^k` are known for `k < prec`; `prec == None` means the
/// series is an exact polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Series {
    coeffs: Vec<Rat>,
    prec: Option<usize>,
}

/// The requested coefficient lies beyond the known precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Unknown;

impl Series {
    pub fn exact(p: &UniPoly) -> Self {
        let len = p.degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rat::zero(); len];
        for (e, c) in p.terms() {
            coeffs[e as usize] = c.clone();
        }
        Self { coeffs, prec: None }
    }

    fn normalize(mut self) -> Self {
        if let Some(p) = self.prec {
            self.coeffs.truncate(p);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    fn to_poly(&self) -> UniPoly {
        UniPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (k as u32, c.clone())),
        )
    }

    pub fn coeff(&self, k: usize) -> Result<Rat, Unknown> {
        match self.prec {
            Some(p) if k >= p => Err(Unknown),
            _ => Ok(self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)),
        }
    }

    /// Order and leading coefficient. `Ok(None)` means the series is exactly
    /// zero.
    pub fn ord_lead(&self) -> Result<Option<(usize, Rat)>, Unknown> {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(k) => Ok(Some((k, self.coeffs[k].clone()))),
            None if self.prec.is_none() => Ok(None),
            None => Err(Unknown),
        }
    }

    pub fn sub_constant(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        if out.coeffs.is_empty() {
            out.coeffs.push(Rat::zero());
        }
        out.coeffs[0] -= c;
        out.normalize()
    }

    /// `num / den` where `ord num >= ord den = shift` (both known). The
    /// result has precision at most `cap` unless the quotient is an exact
    /// polynomial.
    pub fn divide(num: &Series, den: &Series, shift: usize, cap: usize) -> Self {
        if num.is_exact() && den.is_exact() {
            if let Some(q) = num.to_poly().div_exact(&den.to_poly()) {
                return Series::exact(&q);
            }
        }
        let avail = |s: &Series| s.prec.map_or(usize::MAX, |p| p - shift);
        let prec = avail(num).min(avail(den)).min(cap);
        let d0 = den.coeffs[shift].clone();
        let dinv = Rat::one() / &d0;
        let mut q: Vec<Rat> = Vec::with_capacity(prec);
        for n in 0..prec {
            let mut acc = num.coeffs.get(n + shift).cloned().unwrap_or_else(Rat::zero);
            let top = n.min(den.coeffs.len().saturating_sub(shift + 1));
            for j in 1..=top {
                let dj = &den.coeffs[j + shift];
                if !dj.is_zero() {
                    acc -= dj * &q[n - j];
                }
            }
            q.push(acc * &dinv);
        }
        Series {
            coeffs: q,
            prec: Some(prec),
        }
        .normalize()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::from_terms(cs.iter().enumerate().map(|(k, &c)| (k as u32, int(c))))
    }

    #[test]
    fn exact_quotients_stay_exact() {
        let a = Series::exact(&poly(&[0, 0, 1, 1])); // t^2 + t^3
        let b = Series::exact(&poly(&[0, 1, 1])); // t + t^2
        let q = Series::divide(&a, &b, 1, 16);
        assert!(q.is_exact());
        assert_eq!(q, Series::exact(&poly(&[0, 1])));
    }

    #[test]
    fn inexact_quotient_is_a_geometric_series() {
        // t^2 / (t^2 + t^3) = 1 - t + t^2 - ...
        let a = Series::exact(&poly(&[0, 0, 1]));
        let b = Series::exact(&poly(&[0, 0, 1, 1]));
        let q = Series::divide(&a, &b, 2, 6);
        assert!(!q.is_exact());
        for k in 0..6 {
            assert_eq!(q.coeff(k).unwrap(), int(if k % 2 == 0 { 1 } else { -1 }));
        }
        assert_eq!(q.coeff(6), Err(Unknown));
        let z = q.sub_constant(&int(1));
        assert_eq!(z.ord_lead().unwrap(), Some((1, int(-1))));
    }

    #[test]
    fn precision_limits_known_orders() {
        let a = Series::exact(&poly(&[0, 0, 1]));
        let b = Series::exact(&poly(&[0, 0, 1, 1]));
        let q = Series::divide(&a, &b, 2, 3);
        // shifting consumes precision
        let r = Series::divide(
            &q.sub_constant(&int(1)),
            &Series::exact(&poly(&[0, 1])),
            1,
            100,
        );
        assert_eq!(r.coeff(1).unwrap(), int(1));
        assert_eq!(r.coeff(2), Err(Unknown));
        assert_eq!(Series::exact(&UniPoly::zero()).ord_lead(), Ok(None));
    }
}
