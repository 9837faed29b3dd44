//! λ and m for the arrangements worked out by hand in the literature.
//!
//! cargo run --example compute_rlct

use hyperrlct::{normalize, parse_factored_product, rlct_central, ArrangementSpec, RationalMatrix};

pub fn run() -> Result<(), hyperrlct::Error> {
    // From a coefficient matrix and multiplicities.
    let normals = RationalMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
    let arr = normalize(&ArrangementSpec::central(normals, vec![1, 2, 2, 1]))?;
    let res = rlct_central(&arr)?;
    println!("x y^2 z^2 (x+y+z): rlct = {}", res.pair);
    for f in &res.witness_chain {
        println!("  codim {} s {} normals {}", f.codim, f.s, f.normal_space);
    }

    // From factored text.
    for poly in ["x", "x*y", "x^2*y^3", "x*y*(x+y)*(x-y)", "x*y*(x-y)^2"] {
        let arr = normalize(&parse_factored_product(poly)?)?;
        println!("{poly:>18}: rlct = {}", rlct_central(&arr)?.pair);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), hyperrlct::Error> {
    run()
}
