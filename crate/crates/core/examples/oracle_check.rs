//! The closure-built lattice and the chain DP against the brute-force
//! subset enumeration, on a handful of arrangements.
//!
//! cargo run --example oracle_check

use hyperrlct::oracle::{lattice_bruteforce, longest_chain_bruteforce};
use hyperrlct::{build_lattice, normalize, parse_factored_product, rlct_central};

pub fn run() -> Result<(), hyperrlct::Error> {
    let polys = [
        "x*y^2*z^2*(x+y+z)",
        "x*y*z*(x+y)*(y+z)*(x+y+z)",
        "(x+y)^2*(x-y)^2*(x+2y)*(z)*(w+z)",
        "a*b*c*d*(a+b+c+d)^3",
    ];
    for poly in polys {
        let arr = normalize(&parse_factored_product(poly)?)?;
        let fast = build_lattice(&arr)?;
        let brute = lattice_bruteforce(&arr)?;
        assert_eq!(fast, brute);
        let res = rlct_central(&arr)?;
        assert_eq!(longest_chain_bruteforce(&res.minimizer_flats)?, res.pair.m);
        println!("{poly}: {} flats, rlct {} (oracles agree)", fast.len(), res.pair);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), hyperrlct::Error> {
    run()
}
