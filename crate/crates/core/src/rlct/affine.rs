//! Affine arrangements, handled by localization.
//!
//! The threshold of an affine arrangement is the minimum, under the pair
//! order, of the thresholds of its central localizations `f_x` (the
//! factors vanishing at `x`). Only the maximal member sets matter, and each
//! is realized by a minimal affine flat; we enumerate affine flats by the
//! same closure as the central lattice, using augmented rows `[a_i | b_i]`.

use std::collections::HashSet;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{rlct_central, RlctPair, RlctResult};
use crate::arrangement::NormalizedArrangement;
use crate::error::{Error, Result};
use crate::lattice::is_sorted_subset;
use crate::ratlinalg::RationalMatrix;
use crate::rational::{self, Rational};

/// A point and the central arrangement of all hyperplanes through it,
/// translated to the origin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Localization {
    #[serde(with = "rational::serde_vec")]
    pub point: Vec<Rational>,
    /// Indices into the source arrangement.
    pub members: Vec<usize>,
    pub arrangement: NormalizedArrangement,
}

/// Flats in `result` list members by their index in the source arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalRlct {
    #[serde(flatten)]
    pub localization: Localization,
    pub result: RlctResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalizationReport {
    pub localizations: Vec<LocalRlct>,
    pub global_pair: RlctPair,
    /// Index of the first localization attaining `global_pair`.
    pub global_index: usize,
}

impl LocalizationReport {
    pub fn global_result(&self) -> &RlctResult {
        &self.localizations[self.global_index].result
    }
}

struct AffineFlat {
    augmented: RationalMatrix,
    members: Vec<usize>,
}

fn is_consistent(canonical_augmented: &RationalMatrix) -> bool {
    let d = canonical_augmented.cols() - 1;
    canonical_augmented
        .row_iter()
        .all(|row| row[..d].iter().any(|x| !x.is_zero()))
}

fn affine_flats(arr: &NormalizedArrangement) -> Result<Vec<AffineFlat>> {
    let n = arr.len();
    let d = arr.dim();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut r = arr.normal(j).to_vec();
            r.push(arr.offsets()[j].clone());
            r
        })
        .collect();

    let mut seen = HashSet::new();
    let mut wave = Vec::new();
    for r in &rows {
        let m = RationalMatrix::new(1, d + 1, r.clone())?;
        if seen.insert(m.clone()) {
            wave.push(m);
        }
    }
    let mut flats = Vec::new();
    while !wave.is_empty() {
        let expanded: Vec<(Vec<usize>, Vec<RationalMatrix>)> = wave
            .par_iter()
            .map(|basis| {
                let mut members = Vec::new();
                let mut next = Vec::new();
                for (j, r) in rows.iter().enumerate() {
                    match basis.extend_canonical(r) {
                        None => members.push(j),
                        Some(larger) if is_consistent(&larger) => next.push(larger),
                        Some(_) => {}
                    }
                }
                (members, next)
            })
            .collect();
        let mut next_wave = Vec::new();
        for (augmented, (members, next)) in wave.into_iter().zip(expanded) {
            for cand in next {
                if seen.insert(cand.clone()) {
                    next_wave.push(cand);
                }
            }
            flats.push(AffineFlat { augmented, members });
        }
        wave = next_wave;
    }
    Ok(flats)
}

/// Particular solution of the canonical augmented system with every free
/// variable set to zero.
fn particular_point(canonical_augmented: &RationalMatrix) -> Vec<Rational> {
    let d = canonical_augmented.cols() - 1;
    let mut x = vec![Rational::zero(); d];
    for row in canonical_augmented.row_iter() {
        let p = row.iter().position(|v| !v.is_zero()).expect("canonical rows are nonzero");
        // a . x + b = 0 with a[p] = 1 and all other pivots/free vars zero.
        x[p] = -row[d].clone();
    }
    x
}

/// The maximal central localizations, one witness point each, ordered by
/// member set.
pub fn maximal_central_localizations(arr: &NormalizedArrangement) -> Result<Vec<Localization>> {
    if arr.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    let flats = affine_flats(arr)?;
    let mut out = Vec::new();
    for f in &flats {
        let dominated = flats.iter().any(|g| {
            g.members.len() > f.members.len() && is_sorted_subset(&f.members, &g.members)
        });
        if dominated {
            continue;
        }
        out.push(Localization {
            point: particular_point(&f.augmented),
            members: f.members.clone(),
            arrangement: arr.central_restriction(&f.members)?,
        });
    }
    out.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(out)
}

pub fn rlct_affine(arr: &NormalizedArrangement) -> Result<LocalizationReport> {
    let locs = maximal_central_localizations(arr)?;
    let localizations = locs
        .into_par_iter()
        .map(|localization| {
            let mut result = rlct_central(&localization.arrangement)?;
            // Local row k is source row members[k]: restriction keeps the sorted order.
            for f in result.minimizer_flats.iter_mut().chain(result.witness_chain.iter_mut()) {
                for j in f.members.iter_mut() {
                    *j = localization.members[*j];
                }
            }
            Ok(LocalRlct { localization, result })
        })
        .collect::<Result<Vec<_>>>()?;
    let global_index = (0..localizations.len())
        .min_by(|&a, &b| {
            localizations[a].result.pair.cmp(&localizations[b].result.pair).then(a.cmp(&b))
        })
        .expect("at least one localization");
    let global_pair = localizations[global_index].result.pair.clone();
    Ok(LocalizationReport { localizations, global_pair, global_index })
}
