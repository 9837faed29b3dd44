//! Intersection lattice of a central arrangement.
//!
//! Flats are identified by the canonical basis of their normal space. The
//! lattice is built by closure: starting from the hyperplanes, each flat of
//! codimension `c` is intersected with every hyperplane to produce the
//! flats of codimension `c + 1`. Each flat is visited once, and the same
//! pass that generates its successors also finds its member hyperplanes
//! (those whose normal reduces to zero against the flat's basis).

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::NormalizedArrangement;
use crate::error::{Error, Result};
use crate::ratlinalg::RationalMatrix;

/// An element `W` of the intersection lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flat {
    /// Canonical basis of the span of the normals of hyperplanes containing `W`.
    pub normal_space: RationalMatrix,
    pub codim: usize,
    /// Sum of multiplicities of the hyperplanes containing `W`.
    pub s: u64,
    /// Sorted indices of the hyperplanes containing `W`.
    pub members: Vec<usize>,
}

impl Flat {
    /// Strict containment `self ⊊ other`, read off the member sets: a flat
    /// is the intersection of its members, so `W ⊊ W'` iff the members of
    /// `W'` form a proper subset of the members of `W`.
    pub fn strictly_inside(&self, other: &Flat) -> bool {
        other.members.len() < self.members.len() && is_sorted_subset(&other.members, &self.members)
    }
}

pub(crate) fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// All flats of a central arrangement, ordered by codimension and then by
/// canonical normal space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionLattice {
    pub dim: usize,
    pub flats: Vec<Flat>,
}

impl IntersectionLattice {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn index_of(&self, normal_space: &RationalMatrix) -> Option<usize> {
        self.flats
            .binary_search_by(|f| (f.codim, &f.normal_space).cmp(&(normal_space.rows(), normal_space)))
            .ok()
    }
}

pub fn build_lattice(arr: &NormalizedArrangement) -> Result<IntersectionLattice> {
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    if arr.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    let n = arr.len();
    let normals: Vec<&[_]> = (0..n).map(|j| arr.normal(j)).collect();

    let mut seen: HashSet<RationalMatrix> = HashSet::new();
    let mut wave: Vec<RationalMatrix> = Vec::with_capacity(n);
    for j in 0..n {
        // Normalized rows already have leading entry 1, hence are canonical.
        let single = RationalMatrix::new(1, arr.dim(), normals[j].to_vec())?;
        debug_assert_eq!(single, single.row_space_canonical());
        if seen.insert(single.clone()) {
            wave.push(single);
        }
    }

    let mut flats = Vec::new();
    while !wave.is_empty() {
        let expanded: Vec<(Vec<usize>, Vec<RationalMatrix>)> = wave
            .par_iter()
            .map(|basis| {
                let mut members = Vec::new();
                let mut next = Vec::new();
                for (j, a) in normals.iter().enumerate() {
                    match basis.extend_canonical(a) {
                        None => members.push(j),
                        Some(larger) => next.push(larger),
                    }
                }
                (members, next)
            })
            .collect();

        let mut next_wave = Vec::new();
        for (basis, (members, next)) in wave.into_iter().zip(expanded) {
            for cand in next {
                if seen.insert(cand.clone()) {
                    next_wave.push(cand);
                }
            }
            let s = members.iter().map(|&j| arr.multiplicities()[j]).sum();
            flats.push(Flat { codim: basis.rows(), normal_space: basis, s, members });
        }
        wave = next_wave;
    }

    flats.sort_by(|a, b| (a.codim, &a.normal_space).cmp(&(b.codim, &b.normal_space)));
    Ok(IntersectionLattice { dim: arr.dim(), flats })
}

/// Strict containment relation between the flats of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionDag {
    /// `below[j]` lists every `i` with `flats[i] ⊊ flats[j]`.
    pub below: Vec<Vec<usize>>,
    /// Flat indices by decreasing codimension (smallest flats first).
    pub topo_order: Vec<usize>,
}

impl InclusionDag {
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.below[j].binary_search(&i).is_ok()
    }

    /// Every pair `(i, j)` with `flats[i] ⊊ flats[j]`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.below
            .iter()
            .enumerate()
            .flat_map(|(j, below)| below.iter().map(move |&i| (i, j)))
    }
}

pub fn inclusion_dag(flats: &[Flat]) -> InclusionDag {
    let below = (0..flats.len())
        .into_par_iter()
        .map(|j| {
            (0..flats.len())
                .filter(|&i| flats[i].codim > flats[j].codim && flats[i].strictly_inside(&flats[j]))
                .collect()
        })
        .collect();
    let mut topo_order: Vec<usize> = (0..flats.len()).collect();
    topo_order.sort_by(|&a, &b| flats[b].codim.cmp(&flats[a].codim).then(a.cmp(&b)));
    InclusionDag { below, topo_order }
}
