//! Standard small curves with polynomial parametrizations.

use crate::curve::{BranchParam, Curve};
use crate::exactmath::{int, UniPoly};

/// `sum c tau^e` over `(e, c)` pairs with integer coefficients.
pub fn poly(terms: &[(u32, i64)]) -> UniPoly {
    UniPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
}

pub fn branch(x: &[(u32, i64)], y: &[(u32, i64)]) -> BranchParam {
    BranchParam::new(poly(x), poly(y))
}

fn curve(name: &str, branches: Vec<BranchParam>) -> Curve {
    Curve::new(branches)
        .expect("corpus curves are valid")
        .named(name)
}

/// `xy = 0`.
pub fn node() -> Curve {
    curve("node", vec![branch(&[(1, 1)], &[]), branch(&[], &[(1, 1)])])
}

/// `y(y - x^2) = 0`.
pub fn tacnode() -> Curve {
    curve(
        "tacnode",
        vec![branch(&[(1, 1)], &[]), branch(&[(1, 1)], &[(2, 1)])],
    )
}

/// `xy(x - y) = 0`.
pub fn three_lines() -> Curve {
    curve(
        "three-lines",
        vec![
            branch(&[(1, 1)], &[]),
            branch(&[], &[(1, 1)]),
            branch(&[(1, 1)], &[(1, 1)]),
        ],
    )
}

/// `y^2 = x^3`.
pub fn cusp() -> Curve {
    curve("cusp", vec![branch(&[(2, 1)], &[(3, 1)])])
}

/// A cusp with its tangent line `y = 0`.
pub fn cusp_tangent_line() -> Curve {
    curve(
        "cusp-tangent-line",
        vec![branch(&[(2, 1)], &[(3, 1)]), branch(&[(1, 1)], &[])],
    )
}

/// A cusp with the transverse line `x = 0`.
pub fn cusp_transverse_line() -> Curve {
    curve(
        "cusp-transverse-line",
        vec![branch(&[(2, 1)], &[(3, 1)]), branch(&[], &[(1, 1)])],
    )
}

/// Two distinct cusps `y^2 = x^3` and `y^2 = 4x^3` sharing a tangent.
pub fn tangent_cusps() -> Curve {
    curve(
        "tangent-cusps",
        vec![branch(&[(2, 1)], &[(3, 1)]), branch(&[(2, 1)], &[(3, 2)])],
    )
}

/// The branch `(tau^4, tau^6 + tau^7)` with two characteristic pairs.
pub fn two_pairs() -> Curve {
    curve("two-pairs", vec![branch(&[(4, 1)], &[(6, 1), (7, 1)])])
}

/// A smooth branch.
pub fn smooth() -> Curve {
    curve("smooth", vec![branch(&[(1, 1)], &[])])
}

/// Every curve above with more than one branch.
pub fn multi_branch() -> Vec<Curve> {
    vec![
        node(),
        tacnode(),
        three_lines(),
        cusp_tangent_line(),
        cusp_transverse_line(),
        tangent_cusps(),
    ]
}

/// Every curve above.
pub fn all() -> Vec<Curve> {
    let mut out = multi_branch();
    out.extend([cusp(), two_pairs(), smooth()]);
    out
}

/// Looks a corpus curve up by name.
pub fn by_name(name: &str) -> Option<Curve> {
    all().into_iter().find(|c| c.name.as_deref() == Some(name))
}
