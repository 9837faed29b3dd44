//! Affine arrangements: the threshold is the minimum over the central
//! localizations at the points where hyperplanes meet.
//!
//! cargo run --example affine_localization

use hyperrlct::{normalize, parse_factored_product, rlct_affine};

pub fn run() -> Result<(), hyperrlct::Error> {
    for poly in ["x*(x-1)", "x^2*(x-1)", "x*y*(x+y-1)", "x^2*y*(x-1)*(y-1)^3"] {
        let arr = normalize(&parse_factored_product(poly)?)?;
        let report = rlct_affine(&arr)?;
        println!("{poly}: rlct = {}", report.global_pair);
        for l in &report.localizations {
            let point: Vec<String> = l.localization.point.iter().map(ToString::to_string).collect();
            println!("  at ({}): hyperplanes {:?}, local rlct {}", point.join(", "), l.localization.members, l.result.pair);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), hyperrlct::Error> {
    run()
}
