#![allow(dead_code)]

use hyperrlct::rational::{self, Rational};
use hyperrlct::{normalize, ArrangementSpec, NormalizedArrangement, RationalMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small entries so that coincidences (non-generic flats) are common, with
/// an occasional genuine fraction.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p = rng.gen_range(-2i64..=2);
    if rng.gen_bool(0.15) {
        rational::ratio(p, rng.gen_range(2i64..=3))
    } else {
        rational::int(p)
    }
}

pub fn random_nonzero_row(rng: &mut ChaCha8Rng, d: usize) -> Vec<Rational> {
    loop {
        let row: Vec<Rational> = (0..d).map(|_| small_rational(rng)).collect();
        if row.iter().any(|x| *x != rational::zero()) {
            return row;
        }
    }
}

/// Random central arrangement with `d <= max_d`, `n <= max_n` raw rows and
/// multiplicities in `1..=max_s`.
pub fn random_central(rng: &mut ChaCha8Rng, max_d: usize, max_n: usize, max_s: i64) -> NormalizedArrangement {
    let d = rng.gen_range(1..=max_d);
    let n = rng.gen_range(1..=max_n);
    random_central_sized(rng, d, n, max_s)
}

pub fn random_central_sized(rng: &mut ChaCha8Rng, d: usize, n: usize, max_s: i64) -> NormalizedArrangement {
    let rows: Vec<Vec<Rational>> = (0..n).map(|_| random_nonzero_row(rng, d)).collect();
    let mults = (0..n).map(|_| rng.gen_range(1..=max_s)).collect();
    let spec = ArrangementSpec::central(RationalMatrix::from_rows(rows, d).unwrap(), mults);
    normalize(&spec).unwrap()
}

/// Generic normals: wide random integer entries.
pub fn random_generic(rng: &mut ChaCha8Rng, d: usize, n: usize) -> NormalizedArrangement {
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|_| (0..d).map(|_| rational::int(rng.gen_range(-1000i64..=1000))).collect())
        .collect();
    normalize(&ArrangementSpec::central(RationalMatrix::from_rows(rows, d).unwrap(), vec![1; n])).unwrap()
}

/// Random invertible matrix, by rejection on the rank.
pub fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> RationalMatrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..d).map(|_| (0..d).map(|_| small_rational(rng)).collect()).collect();
        let t = RationalMatrix::from_rows(rows, d).unwrap();
        if t.rank() == d {
            return t;
        }
    }
}

/// The arrangement of `f(T x)`: each form `a . x` becomes `(a T) . x`.
pub fn substitute(arr: &NormalizedArrangement, t: &RationalMatrix) -> NormalizedArrangement {
    let spec = arr.to_spec();
    let normals = spec.normals.mul(t).unwrap();
    normalize(&ArrangementSpec { normals, ..spec }).unwrap()
}

/// `n` pairwise distinct lines through the origin of the plane.
pub fn random_lines_2d(rng: &mut ChaCha8Rng, max_n: usize, max_s: i64) -> NormalizedArrangement {
    let n = rng.gen_range(1..=max_n);
    let mut slopes: Vec<Option<Rational>> = Vec::new();
    while slopes.len() < n {
        let cand = if rng.gen_bool(0.1) {
            None
        } else {
            Some(rational::ratio(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4)))
        };
        if !slopes.contains(&cand) {
            slopes.push(cand);
        }
    }
    let rows: Vec<Vec<Rational>> = slopes
        .into_iter()
        .map(|s| match s {
            None => vec![rational::zero(), rational::one()],
            Some(k) => vec![rational::one(), k],
        })
        .collect();
    let mults = (0..n).map(|_| rng.gen_range(1..=max_s)).collect();
    normalize(&ArrangementSpec::central(RationalMatrix::from_rows(rows, 2).unwrap(), mults)).unwrap()
}
