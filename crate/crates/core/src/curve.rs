//! Plane curve germs given by polynomial branch parametrizations.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{ExpVec, Order, Rat, UniPoly};

/// One branch `tau -> (x(tau), y(tau))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchParam {
    pub x: UniPoly,
    pub y: UniPoly,
}

impl BranchParam {
    pub fn new(x: UniPoly, y: UniPoly) -> Self {
        Self { x, y }
    }

    /// Valuation of the monomial `x^a y^b` on this branch. Exact: the
    /// leading terms of a product of nonzero series never cancel.
    pub fn monomial_order(&self, a: u32, b: u32) -> Order {
        (a as u64) * self.x.order() + (b as u64) * self.y.order()
    }

    /// Multiplicity of the branch at the origin.
    pub fn multiplicity(&self) -> Order {
        self.x.order().min(self.y.order())
    }
}

/// A reduced plane curve germ `C = C_1 u ... u C_r`; branch order is the
/// branch numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub name: Option<String>,
    branches: Vec<BranchParam>,
}

impl Curve {
    /// Builds and validates a curve.
    pub fn new(branches: Vec<BranchParam>) -> Result<Self> {
        let c = Self {
            name: None,
            branches,
        };
        validate_curve(&c)?;
        Ok(c)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Builds a curve without validation.
    pub fn new_unchecked(branches: Vec<BranchParam>) -> Self {
        Self {
            name: None,
            branches,
        }
    }

    pub fn r(&self) -> usize {
        self.branches.len()
    }

    pub fn branches(&self) -> &[BranchParam] {
        &self.branches
    }

    pub fn branch(&self, i: usize) -> &BranchParam {
        &self.branches[i]
    }
}

/// Checks that every branch is a genuine uniformization through the origin.
pub fn validate_curve(c: &Curve) -> Result<()> {
    if c.branches.is_empty() {
        return Err(Error::EmptyCurve);
    }
    for (i, b) in c.branches.iter().enumerate() {
        let branch = i + 1;
        if b.x.is_zero() && b.y.is_zero() {
            return Err(Error::ZeroBranch { branch });
        }
        if b.multiplicity() == Order::Finite(0) {
            return Err(Error::OrderZero { branch });
        }
        let g = num_integer::gcd(b.x.support_gcd(), b.y.support_gcd());
        if g > 1 {
            return Err(Error::NonPrimitive { branch, gcd: g });
        }
    }
    Ok(())
}

/// Polynomial `g(x, y)` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rat)>>(terms: I) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            *out.entry(e).or_insert_with(Rat::zero) += c;
        }
        out.retain(|_, c: &mut Rat| !c.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> + '_ {
        self.terms.iter()
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().flat_map(|((a, b), c)| {
            other
                .terms
                .iter()
                .map(move |((a2, b2), c2)| ((a + a2, b + b2), c * c2))
        }))
    }

    /// `g(x(tau), y(tau))`, computed exactly.
    pub fn compose(&self, branch: &BranchParam) -> UniPoly {
        let mut out = UniPoly::zero();
        for ((a, b), c) in &self.terms {
            let m = &branch.x.pow(*a) * &branch.y.pow(*b);
            out = &out + &m.scale(c);
        }
        out
    }
}

/// Valuation `v(g)` and leading coefficient `a(g)` of `g` on a branch;
/// `(Infinite, None)` if `g` vanishes on it.
pub fn germ_valuation(g: &BiPoly, branch: &BranchParam) -> (Order, Option<Rat>) {
    let comp = g.compose(branch);
    match comp.ord_lead() {
        Some((e, c)) => (Order::Finite(e as u64), Some(c.clone())),
        None => (Order::Infinite, None),
    }
}

/// Coefficients of `tau^k`, `0 <= k < w_i`, of `x_i^a y_i^b` on every branch,
/// branch-major.
pub fn monomial_jet(c: &Curve, a: u32, b: u32, w: &ExpVec) -> Vec<Rat> {
    let mut out = Vec::new();
    for (i, br) in c.branches.iter().enumerate() {
        let limit = w[i].max(0) as u32;
        let m =
            br.x.pow_trunc(a, limit)
                .mul_trunc(&br.y.pow_trunc(b, limit), limit);
        out.extend((0..limit).map(|k| m.coeff(k)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;
    use proptest::prelude::*;

    fn tau(e: u32) -> UniPoly {
        UniPoly::monomial(e, int(1))
    }

    fn cusp() -> Curve {
        Curve::new(vec![BranchParam::new(tau(2), tau(3))]).unwrap()
    }

    fn node() -> Curve {
        Curve::new(vec![
            BranchParam::new(tau(1), UniPoly::zero()),
            BranchParam::new(UniPoly::zero(), tau(1)),
        ])
        .unwrap()
    }

    #[test]
    fn validation() {
        assert!(validate_curve(&cusp()).is_ok());
        let err = Curve::new(vec![BranchParam::new(tau(2), tau(4))]).unwrap_err();
        assert_eq!(err, Error::NonPrimitive { branch: 1, gcd: 2 });
        let err =
            Curve::new(vec![BranchParam::new(&UniPoly::one() + &tau(1), tau(1))]).unwrap_err();
        assert_eq!(err, Error::OrderZero { branch: 1 });
        let err = Curve::new(vec![BranchParam::new(UniPoly::zero(), UniPoly::zero())]).unwrap_err();
        assert_eq!(err, Error::ZeroBranch { branch: 1 });
        assert_eq!(Curve::new(vec![]).unwrap_err(), Error::EmptyCurve);
    }

    #[test]
    fn valuations() {
        let br = &cusp().branches[0];
        let y = BiPoly::from_terms([((0, 1), int(1))]);
        assert_eq!(germ_valuation(&y, br), (Order::Finite(3), Some(int(1))));
        let f = BiPoly::from_terms([((0, 2), int(1)), ((3, 0), int(-1))]);
        assert_eq!(germ_valuation(&f, br), (Order::Infinite, None));
        let xy = BiPoly::from_terms([((1, 1), int(1))]);
        assert_eq!(germ_valuation(&xy, br), (Order::Finite(5), Some(int(1))));
    }

    #[test]
    fn jets() {
        let w = ExpVec::new(vec![2, 2]);
        assert_eq!(
            monomial_jet(&node(), 1, 0, &w),
            vec![int(0), int(1), int(0), int(0)]
        );
        assert_eq!(
            monomial_jet(&node(), 0, 0, &ExpVec::ones(2)),
            vec![int(1), int(1)]
        );
        assert_eq!(
            monomial_jet(&cusp(), 0, 1, &ExpVec::new(vec![5])),
            vec![int(0), int(0), int(0), int(1), int(0)]
        );
    }

    #[test]
    fn monomial_orders_use_infinity() {
        let n = node();
        assert_eq!(n.branch(0).monomial_order(1, 1), Order::Infinite);
        assert_eq!(n.branch(0).monomial_order(2, 0), Order::Finite(2));
        assert_eq!(n.branch(1).monomial_order(0, 0), Order::Finite(0));
    }

    fn arb_branch() -> impl Strategy<Value = BranchParam> {
        let poly = prop::collection::vec((1u32..6, -3i64..4), 0..3)
            .prop_map(|ts| UniPoly::from_terms(ts.into_iter().map(|(e, c)| (e, int(c)))));
        (poly.clone(), poly).prop_map(|(x, y)| BranchParam::new(x, y))
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(((0u32..3, 0u32..3), -3i64..4), 0..4)
            .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(e, c)| (e, int(c)))))
    }

    proptest! {
        #[test]
        fn valuation_is_multiplicative(br in arb_branch(), g in arb_bipoly(), h in arb_bipoly()) {
            let (vg, ag) = germ_valuation(&g, &br);
            let (vh, ah) = germ_valuation(&h, &br);
            let (vgh, agh) = germ_valuation(&g.mul(&h), &br);
            prop_assert_eq!(vgh, vg + vh);
            if let (Some(a), Some(b)) = (ag, ah) {
                prop_assert_eq!(agh, Some(a * b));
            }
        }

        #[test]
        fn jets_are_truncated_products(br in arb_branch(), a in 0u32..4, b in 0u32..4, w in 1i64..9) {
            let c = Curve::new_unchecked(vec![br.clone()]);
            let wv = ExpVec::new(vec![w]);
            let jet = monomial_jet(&c, a, b, &wv);
            let jx = monomial_jet(&c, 1, 0, &wv);
            let jy = monomial_jet(&c, 0, 1, &wv);
            let to_poly = |v: &[Rat]| UniPoly::from_terms(v.iter().enumerate().map(|(k, c)| (k as u32, c.clone())));
            let expect = to_poly(&jx).pow_trunc(a, w as u32).mul_trunc(&to_poly(&jy).pow_trunc(b, w as u32), w as u32);
            prop_assert_eq!(to_poly(&jet), expect);
            let order = br.monomial_order(a, b);
            let first = jet.iter().position(|c| !c.is_zero()).map(|k| Order::Finite(k as u64));
            match order {
                Order::Finite(n) if n < w as u64 => prop_assert_eq!(first, Some(Order::Finite(n))),
                _ => prop_assert_eq!(first, None),
            }
        }
    }
}
