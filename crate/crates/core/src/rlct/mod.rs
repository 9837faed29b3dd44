//! The real log canonical threshold `(λ, m)` of an arrangement.
//!
//! For a central arrangement `f = L_1^{s_1} ... L_n^{s_n}`,
//! `λ = min codim(W) / s(W)` over all flats `W`, and `m` is the length of
//! the longest strictly nested chain of flats attaining that minimum.
//! Affine arrangements reduce to the central case at finitely many points,
//! see [`affine`].

pub mod affine;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arrangement::NormalizedArrangement;
use crate::error::{Error, Result};
use crate::lattice::{build_lattice, inclusion_dag, Flat, IntersectionLattice};
use crate::rational::{self, Rational};

pub use affine::{maximal_central_localizations, rlct_affine, LocalRlct, Localization, LocalizationReport};

/// `(λ, m)`, ordered so that "more singular" pairs are smaller: smaller λ
/// first, and for equal λ the larger multiplicity first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RlctPair {
    #[serde(with = "rational::serde_str")]
    pub lambda: Rational,
    pub m: usize,
}

impl RlctPair {
    pub fn new(lambda: Rational, m: usize) -> Self {
        Self { lambda, m }
    }
}

impl Ord for RlctPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lambda.cmp(&other.lambda).then_with(|| other.m.cmp(&self.m))
    }
}

impl PartialOrd for RlctPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RlctPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lambda, self.m)
    }
}

/// `p < q`: `p.λ < q.λ`, or equal λ and `p.m > q.m`.
pub fn pair_less(p: &RlctPair, q: &RlctPair) -> bool {
    p < q
}

/// The pair plus the flats that certify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RlctResult {
    #[serde(flatten)]
    pub pair: RlctPair,
    /// All flats with `codim / s = λ`, in lattice order.
    pub minimizer_flats: Vec<Flat>,
    /// A longest chain of minimizers, smallest flat first.
    pub witness_chain: Vec<Flat>,
}

pub(crate) fn ratio(f: &Flat) -> Rational {
    Rational::new(BigInt::from(f.codim), BigInt::from(f.s))
}

pub fn rlct_central(arr: &NormalizedArrangement) -> Result<RlctResult> {
    let lattice = build_lattice(arr)?;
    Ok(rlct_from_lattice(&lattice))
}

/// Evaluates the threshold formula on an already-built lattice.
pub fn rlct_from_lattice(lattice: &IntersectionLattice) -> RlctResult {
    let lambda = lattice
        .flats
        .iter()
        .map(ratio)
        .min()
        .expect("lattice of a nonempty arrangement has flats");
    let minimizer_flats: Vec<Flat> = lattice
        .flats
        .iter()
        .filter(|f| ratio(f) == lambda)
        .cloned()
        .collect();
    let chain = longest_chain(&minimizer_flats);
    let witness_chain: Vec<Flat> = chain.iter().map(|&i| minimizer_flats[i].clone()).collect();
    RlctResult { pair: RlctPair::new(lambda, witness_chain.len()), minimizer_flats, witness_chain }
}

/// Longest strictly nested chain among `flats`, as indices from the
/// smallest flat to the largest.
///
/// Dynamic programming over decreasing codimension: `best[j]` is the
/// longest chain whose top element is `flats[j]`. Ties go to the
/// lowest-index predecessor, and the top is the lowest-index flat achieving
/// the maximum, so the witness is deterministic for a fixed flat order.
pub fn longest_chain(flats: &[Flat]) -> Vec<usize> {
    if flats.is_empty() {
        return Vec::new();
    }
    let dag = inclusion_dag(flats);
    let mut best = vec![1usize; flats.len()];
    let mut prev: Vec<Option<usize>> = vec![None; flats.len()];
    for &j in &dag.topo_order {
        for &i in &dag.below[j] {
            if best[i] + 1 > best[j] {
                best[j] = best[i] + 1;
                prev[j] = Some(i);
            }
        }
    }
    let top = (0..flats.len())
        .max_by(|&a, &b| best[a].cmp(&best[b]).then(b.cmp(&a)))
        .expect("nonempty");
    let mut chain = vec![top];
    while let Some(p) = prev[*chain.last().unwrap()] {
        chain.push(p);
    }
    chain.reverse();
    chain
}

/// Closed form for `n` distinct lines through the origin of the plane.
///
/// With `s_1 <= ... <= s_n`, the only flats are the lines and the origin,
/// so `λ = min(1 / s_n, 2 / Σ s_i)` and `m = 2` exactly when the two
/// candidates tie, i.e. when `Σ_{i<n} s_i = s_n`.
pub fn rlct_line_arrangement_2d(multiplicities: &[u64]) -> Result<RlctPair> {
    if multiplicities.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    if let Some(i) = multiplicities.iter().position(|&s| s == 0) {
        return Err(Error::InvalidMultiplicity { index: i, value: 0 });
    }
    let mut s = multiplicities.to_vec();
    s.sort_unstable();
    let largest = *s.last().unwrap();
    let rest: u64 = s[..s.len() - 1].iter().sum();
    let total = rest + largest;
    let pair = match rest.cmp(&largest) {
        Ordering::Less => RlctPair::new(Rational::new(1.into(), largest.into()), 1),
        Ordering::Equal => RlctPair::new(Rational::new(1.into(), largest.into()), 2),
        Ordering::Greater => RlctPair::new(Rational::new(2.into(), total.into()), 1),
    };
    Ok(pair)
}
