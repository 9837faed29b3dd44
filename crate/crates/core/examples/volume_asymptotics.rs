//! Monte Carlo check of V(ε) ~ C ε^λ (-ln ε)^(m-1) against the exact pair.
//!
//! cargo run --release --example volume_asymptotics -- "x*y^2*z^2*(x+y+z)"

use hyperrlct::volume::{self, SamplingBox};
use hyperrlct::{normalize, parse_factored_product, rational, rlct_affine};

pub fn run(poly: &str, samples: u64) -> Result<(), hyperrlct::Error> {
    let arr = normalize(&parse_factored_product(poly)?)?;
    let exact = rlct_affine(&arr)?.global_pair;

    let grid = volume::geometric_grid(volume::DEFAULT_EPS_MIN, volume::DEFAULT_EPS_MAX, volume::DEFAULT_EPS_POINTS)?;
    let region = SamplingBox::symmetric_unit(arr.dim());
    let data = volume::estimate_volume_grid(&arr, &region, &grid, samples, 2024)?;

    println!("f = {poly}, exact rlct = {exact}");
    for s in &data {
        println!("  eps {:9.3e}  V {:11.5e} +- {:9.3e}", s.epsilon, s.volume_estimate, s.std_error);
    }
    let free = volume::fit_asymptotics(&data)?;
    let lam = volume::fit_lambda_given_m(&data, exact.m as f64)?;
    let m = volume::fit_m_given_lambda(&data, rational::to_f64(&exact.lambda))?;
    println!("free fit:      lambda {:.4}  m {:.4}", free.lambda_hat, free.m_hat);
    println!("m = {} fixed:   lambda {:.4}", exact.m, lam.lambda_hat);
    println!("lambda fixed:  m {:.4}", m.m_hat);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), hyperrlct::Error> {
    let poly = std::env::args().nth(1).unwrap_or_else(|| "x*y".to_string());
    run(&poly, volume::DEFAULT_SAMPLES)
}
