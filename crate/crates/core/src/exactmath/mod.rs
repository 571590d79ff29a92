//! Exact arithmetic: rationals, univariate polynomials, exponent vectors and
//! sparse multivariate integer polynomials with exact division.

mod expvec;
mod linalg;
mod multipoly;
mod order;
mod unipoly;

pub use expvec::ExpVec;
pub use linalg::rank;
pub use multipoly::{expand_truncated, MultiPoly};
pub use order::Order;
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// Arbitrary precision integer.
pub type Int = BigInt;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(Rat::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalize() {
        let a = rat(6, -4);
        assert_eq!(a, rat(-3, 2));
        assert!(a.denom() > &BigInt::from(0));
        assert_eq!(rat(0, 7), int(0));
        assert_eq!(*rat(0, 7).denom(), BigInt::from(1));
    }

    #[test]
    fn parse_rational_strings() {
        assert_eq!(parse_rat("3/6"), Some(rat(1, 2)));
        assert_eq!(parse_rat("-5"), Some(int(-5)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("0.5"), None);
    }
}
