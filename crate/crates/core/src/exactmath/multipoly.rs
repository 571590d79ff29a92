use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ExpVec;
use crate::error::{Error, Result};

/// Sparse polynomial in `t_1, ..., t_r` with integer coefficients.
///
/// Terms are kept in a `BTreeMap`, so iteration (and the text format) is in
/// lexicographic exponent order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    r: usize,
    terms: BTreeMap<ExpVec, BigInt>,
}

impl MultiPoly {
    pub fn zero(r: usize) -> Self {
        Self {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: usize) -> Self {
        Self::monomial(ExpVec::zeros(r), BigInt::one())
    }

    pub fn monomial(exp: ExpVec, coeff: BigInt) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, coeff);
        p
    }

    /// `1 - t^m`
    pub fn one_minus(m: &ExpVec) -> Self {
        let mut p = Self::one(m.len());
        p.add_term(m.clone(), -BigInt::one());
        p
    }

    /// `t_1 * ... * t_r - 1`
    pub fn cycle(r: usize) -> Self {
        let mut p = Self::monomial(ExpVec::ones(r), BigInt::one());
        p.add_term(ExpVec::zeros(r), -BigInt::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (ExpVec, BigInt)>>(r: usize, terms: I) -> Self {
        let mut p = Self::zero(r);
        for (e, c) in terms {
            assert_eq!(e.len(), r, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: ExpVec, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(exp.len(), self.r);
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExpVec) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<(&ExpVec, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn check_r(&self, other: &Self) -> Result<()> {
        if self.r != other.r {
            return Err(Error::DimensionMismatch {
                expected: self.r,
                found: other.r,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_r(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_r(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            r: self.r,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_r(other)?;
        let mut out = Self::zero(self.r);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.r);
        for _ in 0..k {
            acc = acc.mul(self).expect("same r");
        }
        acc
    }

    /// Exact quotient `self / den` by long division on the lexicographic
    /// leading term. Fails with `NotDivisible` on a nonzero remainder.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        self.check_r(den)?;
        let (dexp, dcoeff) = match den.leading() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.r);
        while let Some((exp, coeff)) = rem.leading() {
            let shift = exp - &dexp;
            let (q, r) = coeff.div_rem(&dcoeff);
            if !shift.is_nonnegative() || !r.is_zero() {
                return Err(Error::NotDivisible {
                    exponent: exp.clone().into_vec(),
                });
            }
            let term = Self::monomial(shift.clone(), q.clone());
            rem = rem.sub(&term.mul(den)?)?;
            quot.add_term(shift, q);
        }
        Ok(quot)
    }

    /// Keeps the terms whose exponents are all `<= bound`.
    pub fn truncate(&self, bound: &ExpVec) -> Self {
        Self {
            r: self.r,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.le_all(bound))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product truncated to exponents `<= bound`.
    pub fn mul_trunc(&self, other: &Self, bound: &ExpVec) -> Result<Self> {
        self.check_r(other)?;
        let mut out = Self::zero(self.r);
        for (ea, ca) in &self.terms {
            if !ea.le_all(bound) {
                continue;
            }
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if e.le_all(bound) {
                    out.add_term(e, ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Text form: one `coefficient<TAB>e1,...,er` line per term, in
    /// lexicographic exponent order. The zero polynomial prints nothing.
    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        for (e, c) in &self.terms {
            s.push_str(&format!("{c}\t{e}\n"));
        }
        s
    }

    /// Inverse of [`MultiPoly::to_lines`].
    pub fn from_lines(r: usize, text: &str) -> Result<Self> {
        let mut p = Self::zero(r);
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (c, e) = line
                .split_once('\t')
                .ok_or_else(|| Error::Parse(format!("bad term line {line:?}")))?;
            let coeff: BigInt = c
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            let exps = e
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
            if exps.len() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    found: exps.len(),
                });
            }
            p.add_term(ExpVec::new(exps), coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (k, a) in e.as_slice().iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "*t{}", k + 1)?,
                    _ => write!(f, "*t{}^{a}", k + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// Power series expansion of `prod (1 - t^m)^k / prod (1 - t^m)^k`, keeping
/// the terms with every exponent `<= bound`.
///
/// Each factor of the denominator is expanded as a geometric series. Every
/// `m` must be nonzero and nonnegative.
pub fn expand_truncated(
    r: usize,
    numerator: &[(ExpVec, u32)],
    denominator: &[(ExpVec, u32)],
    bound: i64,
) -> MultiPoly {
    let top = ExpVec::splat(r, bound);
    let mut acc = MultiPoly::one(r).truncate(&top);
    for (m, k) in numerator {
        assert!(
            m.is_nonnegative() && m.sum() > 0,
            "factor exponent {m} must be > 0"
        );
        let factor = MultiPoly::one_minus(m).truncate(&top);
        for _ in 0..*k {
            acc = acc.mul_trunc(&factor, &top).expect("same r");
        }
    }
    for (m, k) in denominator {
        assert!(
            m.is_nonnegative() && m.sum() > 0,
            "factor exponent {m} must be > 0"
        );
        let mut geometric = MultiPoly::zero(r);
        let mut e = ExpVec::zeros(r);
        while e.le_all(&top) {
            geometric.add_term(e.clone(), BigInt::one());
            e = &e + m;
        }
        for _ in 0..*k {
            acc = acc.mul_trunc(&geometric, &top).expect("same r");
        }
    }
    acc
}
