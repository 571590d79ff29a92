use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Order, Rat};

/// Univariate polynomial in `tau` with rational coefficients, stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    terms: BTreeMap<u32, Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rat::one())
    }

    pub fn monomial(exp: u32, coeff: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: u32, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: u32) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent with nonzero coefficient together with that
    /// coefficient; `None` for the zero polynomial (order infinity).
    pub fn ord_lead(&self) -> Option<(u32, &Rat)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    pub fn order(&self) -> Order {
        match self.ord_lead() {
            Some((e, _)) => Order::Finite(e as u64),
            None => Order::Infinite,
        }
    }

    /// gcd of all exponents in the support (0 for the zero polynomial).
    pub fn support_gcd(&self) -> u32 {
        self.terms.keys().fold(0u32, |g, e| g.gcd(e))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Product keeping only exponents `< limit`.
    pub fn mul_trunc(&self, other: &Self, limit: u32) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            if *ea >= limit {
                break;
            }
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if e >= limit {
                    break;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Drops every term with exponent `>= limit`.
    pub fn truncate(&self, limit: u32) -> Self {
        Self {
            terms: self
                .terms
                .range(..limit)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_trunc(&self, mut e: u32, limit: u32) -> Self {
        let mut base = self.truncate(limit);
        let mut acc = Self::one().truncate(limit);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_trunc(&base, limit);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_trunc(&base, limit);
            }
        }
        acc
    }

    /// Exact division, `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dlead_exp, dlead) = {
            let (e, c) = divisor.terms.iter().next_back()?;
            (*e, c.clone())
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&e, c)) = rem.terms.iter().next_back() {
            if e < dlead_exp {
                return None;
            }
            let q = Self::monomial(e - dlead_exp, c / &dlead);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        Some(quot)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use proptest::prelude::*;

    fn tau(e: u32) -> UniPoly {
        UniPoly::monomial(e, int(1))
    }

    #[test]
    fn ord_lead_examples() {
        let p = UniPoly::from_terms([(3, int(1)), (5, int(2))]);
        assert_eq!(p.ord_lead(), Some((3, &int(1))));
        assert_eq!(UniPoly::zero().ord_lead(), None);
        assert_eq!(UniPoly::zero().order(), Order::Infinite);
        let prod = &tau(2) * &tau(3);
        assert_eq!(prod.ord_lead(), Some((5, &int(1))));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = UniPoly::from_terms([(1, int(1)), (1, int(-1))]);
        assert!(p.is_zero());
        let q = &tau(4) - &tau(4);
        assert!(q.is_zero());
    }

    #[test]
    fn exact_division() {
        // (1 + t)(1 - t + t^2) = 1 + t^3
        let a = UniPoly::from_terms([(0, int(1)), (1, int(1))]);
        let b = UniPoly::from_terms([(0, int(1)), (1, int(-1)), (2, int(1))]);
        let p = &a * &b;
        assert_eq!(p, UniPoly::from_terms([(0, int(1)), (3, int(1))]));
        assert_eq!(p.div_exact(&a), Some(b));
        assert_eq!(tau(3).div_exact(&a), None);
    }

    #[test]
    fn powers_and_truncation() {
        let a = UniPoly::from_terms([(0, int(1)), (1, rat(1, 2))]);
        let cube = a.pow(3);
        assert_eq!(cube.coeff(3), rat(1, 8));
        assert_eq!(cube.coeff(1), rat(3, 2));
        assert_eq!(a.pow_trunc(3, 2), cube.truncate(2));
        assert_eq!(tau(6).support_gcd(), 6);
        assert_eq!((&tau(4) + &tau(6)).support_gcd(), 2);
    }

    fn arb_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec((0u32..8, -5i64..6, 1i64..4), 0..5)
            .prop_map(|ts| UniPoly::from_terms(ts.into_iter().map(|(e, n, d)| (e, rat(n, d)))))
    }

    proptest! {
        #[test]
        fn orders_add_and_leads_multiply(p in arb_poly(), q in arb_poly()) {
            let pq = &p * &q;
            prop_assert_eq!(pq.order(), p.order() + q.order());
            if let (Some((_, a)), Some((_, b))) = (p.ord_lead(), q.ord_lead()) {
                prop_assert_eq!(pq.ord_lead().unwrap().1, &(a * b));
            }
        }
    }
}
