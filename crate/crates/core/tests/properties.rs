use num_bigint::BigInt;
use proptest::prelude::*;

use plane_alexander::corpus::branch;
use plane_alexander::curve::{BranchParam, Curve};
use plane_alexander::exactmath::{ExpVec, MultiPoly};
use plane_alexander::filtration::Filtration;
use plane_alexander::resolution::{noether_intersections, resolve, ResolveOptions};
use plane_alexander::semigroup::contains;
use plane_alexander::{Analysis, AnalysisOptions};

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(tau^p, c tau^q)` with `p < q` coprime and `c > 0`; distinct triples give
/// distinct germs `y^p = c^p x^q`.
fn quasi_homogeneous() -> impl Strategy<Value = (u32, u32, i64)> {
    (1u32..4, 1u32..5, 1i64..4)
        .prop_map(|(p, d, c)| (p, p + d, c))
        .prop_filter("coprime", |(p, q, _)| gcd(*p, *q) == 1)
}

fn as_branch((p, q, c): (u32, u32, i64)) -> BranchParam {
    branch(&[(p, 1)], &[(q, c)])
}

fn two_branches() -> impl Strategy<Value = Curve> {
    (quasi_homogeneous(), quasi_homogeneous())
        .prop_filter("distinct", |(a, b)| a != b)
        .prop_map(|(a, b)| Curve::new(vec![as_branch(a), as_branch(b)]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn routes_agree_on_two_branch_curves(c in two_branches()) {
        let a = Analysis::new(&c, &AnalysisOptions::default()).unwrap();
        let delta = a.alexander().unwrap();
        prop_assert_eq!(&a.poincare().unwrap(), &delta);
        prop_assert_eq!(&a.fiber_series().unwrap(), &delta);
        prop_assert_eq!(delta.coeff(&ExpVec::zeros(2)), BigInt::from(1));
        prop_assert_eq!(a.pprime().unwrap(), delta.mul(&MultiPoly::cycle(2)).unwrap());
    }

    #[test]
    fn support_lies_in_the_semigroup(c in two_branches()) {
        let a = Analysis::new(&c, &AnalysisOptions::default()).unwrap();
        for (v, _) in a.alexander().unwrap().terms() {
            prop_assert!(contains(a.filtration(), v).unwrap(), "{}", v);
        }
    }

    #[test]
    fn intersections_are_symmetric(c in two_branches()) {
        let res = resolve(&c, &ResolveOptions::default()).unwrap();
        let t = noether_intersections(&res);
        prop_assert_eq!(t[0][1], t[1][0]);
        prop_assert!(t[0][1].finite().unwrap() >= 1);
    }

    #[test]
    fn single_branch_series_is_the_semigroup(b in quasi_homogeneous()) {
        let c = Curve::new(vec![as_branch(b)]).unwrap();
        let a = Analysis::new(&c, &AnalysisOptions::default()).unwrap();
        let series = a.alexander().unwrap();
        let f = Filtration::new(&c, &ExpVec::splat(1, a.bound() + 1)).unwrap();
        for k in 0..=a.bound() {
            let v = ExpVec::new(vec![k]);
            let member = contains(&f, &v).unwrap();
            prop_assert_eq!(series.coeff(&v), BigInt::from(member as i64), "{}", k);
        }
        prop_assert_eq!(a.poincare().unwrap(), series);
    }

    #[test]
    fn extra_blowups_leave_the_polynomial_unchanged(c in two_branches(), k in 1usize..4, j in 0usize..3) {
        let a = Analysis::new(&c, &AnalysisOptions::default()).unwrap();
        let opts = ResolveOptions { extra_free_points: k, extra_branch_points: j, ..Default::default() };
        let bigger = resolve(&c, &opts).unwrap();
        prop_assert_eq!(plane_alexander::resolution::en_alexander(&bigger.graph, a.bound()).unwrap(), a.alexander().unwrap());
    }
}
