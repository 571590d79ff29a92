//! Sparse integer polynomials: products, exact division, and truncated
//! expansion of a quotient of binomials.

use num_bigint::BigInt;
use plane_alexander::exactmath::{expand_truncated, ExpVec, MultiPoly};

fn main() -> plane_alexander::Result<()> {
    let e = |v: &[i64]| ExpVec::new(v.to_vec());
    let a = MultiPoly::one_minus(&e(&[2, 3]));
    let b = MultiPoly::one_minus(&e(&[1, 1]));
    let product = a.mul(&b)?;
    println!("({a}) * ({b}) = {product}");
    println!("quotient by ({b}) = {}", product.exact_div(&b)?);
    match a.exact_div(&b) {
        Ok(q) => println!("unexpected quotient {q}"),
        Err(err) => println!("({a}) / ({b}): {err}"),
    }
    let cycle = MultiPoly::cycle(2);
    let pprime = MultiPoly::from_terms(
        2,
        [
            (e(&[0, 0]), BigInt::from(-1)),
            (e(&[2, 2]), BigInt::from(1)),
        ],
    );
    println!("({pprime}) / ({cycle}) = {}", pprime.exact_div(&cycle)?);
    let series = expand_truncated(
        1,
        &[(e(&[6]), 1), (e(&[1]), 1)],
        &[(e(&[2]), 1), (e(&[3]), 1)],
        12,
    );
    print!(
        "(1-t^6)(1-t)/((1-t^2)(1-t^3)) to degree 12:\n{}",
        series.to_lines()
    );
    Ok(())
}
