//! Arrangement data model: raw input, validation and normalization.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratlinalg::RationalMatrix;
use crate::rational::{self, Rational};

/// Hyperplanes `a_i . x + b_i = 0` with multiplicities, as read from input.
///
/// Represents `f = L_1^{s_1} ... L_n^{s_n}`. Nothing is validated until
/// [`normalize`] runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementSpec {
    pub variables: Option<Vec<String>>,
    pub normals: RationalMatrix,
    pub offsets: Vec<Rational>,
    pub multiplicities: Vec<i64>,
}

impl ArrangementSpec {
    pub fn central(normals: RationalMatrix, multiplicities: Vec<i64>) -> Self {
        let offsets = vec![Rational::zero(); normals.rows()];
        Self { variables: None, normals, offsets, multiplicities }
    }

    pub fn affine(normals: RationalMatrix, offsets: Vec<Rational>, multiplicities: Vec<i64>) -> Self {
        Self { variables: None, normals, offsets, multiplicities }
    }

    pub fn dim(&self) -> usize {
        self.normals.cols()
    }
}

/// A validated arrangement: every multiplicity positive, every normal
/// nonzero with leading entry 1, no two rows describing the same hyperplane,
/// rows sorted by `(normal, offset)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizedArrangement {
    #[serde(skip_serializing_if = "Option::is_none")]
    variables: Option<Vec<String>>,
    normals: RationalMatrix,
    #[serde(with = "rational::serde_vec")]
    offsets: Vec<Rational>,
    multiplicities: Vec<u64>,
    is_central: bool,
}

impl NormalizedArrangement {
    pub fn dim(&self) -> usize {
        self.normals.cols()
    }

    /// Number of distinct hyperplanes.
    pub fn len(&self) -> usize {
        self.normals.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_central(&self) -> bool {
        self.is_central
    }

    pub fn normals(&self) -> &RationalMatrix {
        &self.normals
    }

    pub fn normal(&self, i: usize) -> &[Rational] {
        self.normals.row(i)
    }

    pub fn offsets(&self) -> &[Rational] {
        &self.offsets
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.multiplicities.iter().copied().max().unwrap_or(0)
    }

    pub fn variables(&self) -> Option<&[String]> {
        self.variables.as_deref()
    }

    /// Variable names, falling back to `x1..xd`.
    pub fn variable_names(&self) -> Vec<String> {
        match &self.variables {
            Some(v) => v.clone(),
            None => (1..=self.dim()).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn to_spec(&self) -> ArrangementSpec {
        ArrangementSpec {
            variables: self.variables.clone(),
            normals: self.normals.clone(),
            offsets: self.offsets.clone(),
            multiplicities: self.multiplicities.iter().map(|&m| m as i64).collect(),
        }
    }

    /// Sub-arrangement on the given rows with offsets dropped.
    pub fn central_restriction(&self, rows: &[usize]) -> Result<NormalizedArrangement> {
        let spec = ArrangementSpec {
            variables: self.variables.clone(),
            normals: self.normals.select_rows(rows),
            offsets: vec![Rational::zero(); rows.len()],
            multiplicities: rows.iter().map(|&i| self.multiplicities[i] as i64).collect(),
        };
        normalize(&spec)
    }

    /// Evaluates `|f(x)| = prod |a_i . x + b_i|^{s_i}` in floating point.
    pub fn float_evaluator(&self) -> FloatForms {
        FloatForms {
            dim: self.dim(),
            normals: self
                .normals
                .row_iter()
                .map(|r| r.iter().map(rational::to_f64).collect())
                .collect(),
            offsets: self.offsets.iter().map(rational::to_f64).collect(),
            multiplicities: self.multiplicities.iter().map(|&m| m as i32).collect(),
        }
    }
}

/// Floating-point copy of the linear forms, for sampling.
#[derive(Clone, Debug)]
pub struct FloatForms {
    dim: usize,
    normals: Vec<Vec<f64>>,
    offsets: Vec<f64>,
    multiplicities: Vec<i32>,
}

impl FloatForms {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn abs_value(&self, x: &[f64]) -> f64 {
        let mut acc = 1.0;
        for ((a, b), &s) in self.normals.iter().zip(&self.offsets).zip(&self.multiplicities) {
            let l: f64 = a.iter().zip(x).map(|(ai, xi)| ai * xi).sum::<f64>() + b;
            acc *= l.abs().powi(s);
        }
        acc
    }
}

/// Validates and canonicalizes an arrangement.
///
/// Zero multiplicities are dropped, proportional affine forms are merged
/// with summed multiplicity, each row is scaled so the first nonzero normal
/// entry is 1, and rows are sorted.
pub fn normalize(spec: &ArrangementSpec) -> Result<NormalizedArrangement> {
    let n = spec.normals.rows();
    if spec.offsets.len() != n {
        return Err(Error::Dimension(format!(
            "number of offsets ({}) must equal the number of hyperplanes ({n})",
            spec.offsets.len()
        )));
    }
    if spec.multiplicities.len() != n {
        return Err(Error::Dimension(format!(
            "number of multiplicities ({}) must equal the number of hyperplanes ({n})",
            spec.multiplicities.len()
        )));
    }
    if let Some(vars) = &spec.variables {
        if vars.len() != spec.dim() {
            return Err(Error::Dimension(format!(
                "{} variable names for {} columns",
                vars.len(),
                spec.dim()
            )));
        }
    }

    let mut merged: BTreeMap<(Vec<Rational>, Rational), u64> = BTreeMap::new();
    for (i, (row, offset)) in spec.normals.row_iter().zip(&spec.offsets).enumerate() {
        let mult = spec.multiplicities[i];
        if mult < 0 {
            return Err(Error::InvalidMultiplicity { index: i, value: mult });
        }
        if mult == 0 {
            continue;
        }
        let Some(lead) = row.iter().find(|x| !x.is_zero()) else {
            return Err(Error::InvalidHyperplane { index: i });
        };
        let inv = lead.recip();
        let normal: Vec<Rational> = row.iter().map(|x| x * &inv).collect();
        let offset = offset * &inv;
        *merged.entry((normal, offset)).or_insert(0) += mult as u64;
    }
    if merged.is_empty() {
        return Err(Error::EmptyArrangement);
    }

    let d = spec.dim();
    let mut normals = RationalMatrix::zeros(0, d);
    let mut offsets = Vec::with_capacity(merged.len());
    let mut multiplicities = Vec::with_capacity(merged.len());
    for ((normal, offset), mult) in merged {
        normals.push_row(&normal)?;
        offsets.push(offset);
        multiplicities.push(mult);
    }
    let is_central = offsets.iter().all(Zero::is_zero);
    Ok(NormalizedArrangement {
        variables: spec.variables.clone(),
        normals,
        offsets,
        multiplicities,
        is_central,
    })
}
