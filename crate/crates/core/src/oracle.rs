//! Naive reference implementations, kept independent of the production
//! paths so the two can be compared (tests, and `--verify` on the CLI).
//!
//! The lattice oracle enumerates every subset of hyperplanes and works with
//! kernels (the flats themselves) instead of normal spaces; the chain
//! oracle is an exhaustive search using [`subspace_leq`] for containment.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::arrangement::NormalizedArrangement;
use crate::error::{Error, Result};
use crate::lattice::{Flat, IntersectionLattice};
use crate::ratlinalg::{subspace_leq, RationalMatrix};
use crate::rational::Rational;

pub const MAX_BRUTEFORCE_HYPERPLANES: usize = 20;
pub const MAX_BRUTEFORCE_FLATS: usize = 50;

pub fn lattice_bruteforce(arr: &NormalizedArrangement) -> Result<IntersectionLattice> {
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    let n = arr.len();
    if n > MAX_BRUTEFORCE_HYPERPLANES {
        return Err(Error::TooLarge { what: "brute-force lattice", size: n, limit: MAX_BRUTEFORCE_HYPERPLANES });
    }
    if n == 0 {
        return Err(Error::EmptyArrangement);
    }
    let d = arr.dim();

    // Keyed by the canonical kernel basis, i.e. by the flat itself.
    let mut by_kernel: BTreeSet<RationalMatrix> = BTreeSet::new();
    for mask in 1u32..(1u32 << n) {
        let subset: Vec<usize> = (0..n).filter(|&j| mask & (1 << j) != 0).collect();
        let kernel = arr.normals().select_rows(&subset).kernel_basis();
        by_kernel.insert(kernel);
    }

    let mut flats = Vec::with_capacity(by_kernel.len());
    for kernel in by_kernel {
        let dim_w = kernel.rows();
        let members: Vec<usize> = (0..n)
            .filter(|&j| {
                kernel.row_iter().all(|v| {
                    let dot: Rational = arr.normal(j).iter().zip(v).map(|(a, x)| a * x).sum();
                    dot.is_zero()
                })
            })
            .collect();
        let s = members.iter().map(|&j| arr.multiplicities()[j]).sum();
        // The annihilator of the flat is its normal space.
        let normal_space = if dim_w == 0 {
            RationalMatrix::identity(d)
        } else {
            kernel.kernel_basis()
        };
        flats.push(Flat { codim: d - dim_w, normal_space, s, members });
    }
    flats.sort_by(|a, b| (a.codim, &a.normal_space).cmp(&(b.codim, &b.normal_space)));
    Ok(IntersectionLattice { dim: d, flats })
}

/// Length of the longest strictly nested chain, by exhaustive search.
pub fn longest_chain_bruteforce(flats: &[Flat]) -> Result<usize> {
    if flats.len() > MAX_BRUTEFORCE_FLATS {
        return Err(Error::TooLarge { what: "brute-force chain search", size: flats.len(), limit: MAX_BRUTEFORCE_FLATS });
    }
    let k = flats.len();
    let mut strictly_below = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let inside = subspace_leq(&flats[i].normal_space, &flats[j].normal_space)?;
                let back = subspace_leq(&flats[j].normal_space, &flats[i].normal_space)?;
                strictly_below[i][j] = inside && !back;
            }
        }
    }
    fn extend(from: usize, rel: &[Vec<bool>]) -> usize {
        (0..rel.len())
            .filter(|&j| rel[from][j])
            .map(|j| 1 + extend(j, rel))
            .max()
            .unwrap_or(1)
    }
    Ok((0..k).map(|i| extend(i, &strictly_below)).max().unwrap_or(0))
}
