//! Lines through the origin of the plane: the closed form against the
//! lattice computation.
//!
//! cargo run --example line_arrangements_2d

use hyperrlct::rational::{int, one};
use hyperrlct::{normalize, rlct_central, rlct_line_arrangement_2d, ArrangementSpec, RationalMatrix};

pub fn run() -> Result<(), hyperrlct::Error> {
    for mults in [vec![1u64, 1], vec![2, 3], vec![1, 1, 2], vec![1, 1, 1, 1], vec![1, 2, 2, 5], vec![3, 1, 1, 1, 1]] {
        // Line k is x + k y = 0.
        let rows = (0..mults.len()).map(|k| vec![one(), int(k as i64)]).collect();
        let normals = RationalMatrix::from_rows(rows, 2)?;
        let spec = ArrangementSpec::central(normals, mults.iter().map(|&s| s as i64).collect());
        let lattice = rlct_central(&normalize(&spec)?)?.pair;
        let closed = rlct_line_arrangement_2d(&mults)?;
        assert_eq!(lattice, closed);
        println!("s = {mults:?}: rlct = {closed}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), hyperrlct::Error> {
    run()
}
