//! Exact dense linear algebra over the rationals.
//!
//! Flats of an arrangement are identified by their normal spaces, so the
//! central tool here is the canonical row-space form: the reduced row
//! echelon form with zero rows dropped. Two matrices span the same row
//! space iff their canonical forms are equal entry for entry.

use std::fmt;

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Output of [`RationalMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if cols == 0 {
            return Err(Error::Dimension("matrix must have at least one column".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries do not fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds from explicit rows; `cols` is needed to describe a 0-row matrix.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Self::new(n, cols, data)
    }

    /// Convenience constructor from small integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(1, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&v| rational::int(v))
            })
            .collect();
        Self::new(rows.len(), cols, data).expect("well-formed integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Rational::zero(); rows * cols]).expect("cols >= 1")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.data.chunks(self.cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.row_iter().map(<[Rational]>::to_vec).collect()
    }

    /// Selects the given rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Self { rows: idx.len(), cols: self.cols, data }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot stack {} columns onto {}",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn push_row(&mut self, row: &[Rational]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Dimension(format!(
                "row has {} entries, expected {}",
                row.len(),
                self.cols
            )));
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Fails on a 0-row matrix, whose transpose would have no columns.
    pub fn transpose(&self) -> Result<Self> {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Self::new(self.cols, self.rows, data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Gauss-Jordan elimination to the unique reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = &m.data[r * m.cols + j] * &inv;
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let delta = &factor * m.get(r, j);
                    if !delta.is_zero() {
                        m.data[i * m.cols + j] -= delta;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of `{x : M x = 0}` in canonical (RREF) form; `cols - rank` rows.
    pub fn kernel_basis(&self) -> Self {
        let Rref { matrix: r, pivot_cols, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivot_cols {
            is_pivot[p] = true;
        }
        let mut basis = Self::zeros(0, self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (i, &p) in pivot_cols.iter().enumerate() {
                v[p] = -r.get(i, free).clone();
            }
            basis.push_row(&v).expect("width matches");
        }
        basis.row_space_canonical()
    }

    /// RREF with zero rows removed; equal row spaces give identical output.
    pub fn row_space_canonical(&self) -> Self {
        let Rref { mut matrix, rank, .. } = self.rref();
        matrix.data.truncate(rank * matrix.cols);
        matrix.rows = rank;
        matrix
    }

    /// Reduces `v` against `self`, which must already be canonical. The
    /// result is zero iff `v` lies in the row space.
    pub fn reduce_canonical(&self, v: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = v.to_vec();
        for row in self.row_iter() {
            let p = row.iter().position(|x| !x.is_zero()).expect("canonical rows are nonzero");
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for j in p..self.cols {
                if !row[j].is_zero() {
                    out[j] -= &factor * &row[j];
                }
            }
        }
        out
    }

    /// True iff `v` lies in the row space of the canonical matrix `self`.
    pub fn canonical_contains(&self, v: &[Rational]) -> bool {
        self.reduce_canonical(v).iter().all(Zero::is_zero)
    }

    /// Extends a canonical matrix by one vector and returns the new
    /// canonical form, or `None` when `v` is already in the row space.
    ///
    /// Costs O(rank * cols) rational operations instead of a full
    /// re-elimination.
    pub fn extend_canonical(&self, v: &[Rational]) -> Option<Self> {
        let mut res = self.reduce_canonical(v);
        let p = res.iter().position(|x| !x.is_zero())?;
        let inv = res[p].recip();
        for x in res.iter_mut().skip(p) {
            *x *= &inv;
        }
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(self.rows + 1);
        for row in self.row_iter() {
            let mut row = row.to_vec();
            if !row[p].is_zero() {
                let factor = row[p].clone();
                for j in p..self.cols {
                    if !res[j].is_zero() {
                        row[j] -= &factor * &res[j];
                    }
                }
            }
            rows.push(row);
        }
        let at = rows
            .iter()
            .position(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero") > p)
            .unwrap_or(rows.len());
        rows.insert(at, res);
        Some(Self::from_rows(rows, self.cols).expect("width matches"))
    }
}

/// Is the flat with normal space `w1` contained in the flat with normal
/// space `w2`? Containment of flats reverses containment of normal spaces.
pub fn subspace_leq(w1_normals: &RationalMatrix, w2_normals: &RationalMatrix) -> Result<bool> {
    if w1_normals.cols() != w2_normals.cols() {
        return Err(Error::Dimension(format!(
            "normal spaces live in dimensions {} and {}",
            w1_normals.cols(),
            w2_normals.cols()
        )));
    }
    let w1 = w1_normals.row_space_canonical();
    Ok(w2_normals.row_iter().all(|v| w1.canonical_contains(v)))
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Serializes as nested row-major arrays of `"p/q"` strings.
impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for row in self.row_iter() {
            let row: Vec<String> = row.iter().map(rational::format).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64(rows)
    }

    #[test]
    fn rref_identity() {
        let r = RationalMatrix::identity(2).rref();
        assert_eq!(r.matrix, RationalMatrix::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
    }

    #[test]
    fn rref_proportional_rows() {
        let r = m(&[&[1, 1], &[2, 2]]).rref();
        assert_eq!(r.matrix, m(&[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
    }

    #[test]
    fn rref_fractional_entries() {
        // Expected value from a hand elimination with exact fractions.
        let a = RationalMatrix::from_rows(
            vec![vec![ratio(1, 2), int(1), int(0)], vec![int(0), ratio(1, 3), int(1)]],
            3,
        )
        .unwrap();
        let r = a.rref();
        assert_eq!(r.matrix, m(&[&[1, 0, -6], &[0, 1, 3]]));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
    }

    #[test]
    fn rref_empty_matrix() {
        let e = RationalMatrix::zeros(0, 3);
        let r = e.rref();
        assert_eq!(r.matrix, e);
        assert_eq!(r.rank, 0);
        assert!(r.pivot_cols.is_empty());
    }

    #[test]
    fn kernel_examples() {
        let k = m(&[&[1, 0, 0]]).kernel_basis();
        assert_eq!(k.rows(), 2);
        assert_eq!(k, m(&[&[0, 1, 0], &[0, 0, 1]]));

        let k = RationalMatrix::identity(3).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (0, 3));

        let a = m(&[&[1, 1, 1], &[1, -1, 0]]);
        let k = a.kernel_basis();
        assert_eq!(k, m(&[&[1, 1, -2]]));
        assert!(a.mul(&k.transpose().unwrap()).unwrap().is_zero());
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(m(&[&[2, 0], &[0, 3]]).row_space_canonical(), RationalMatrix::identity(2));
        assert_eq!(m(&[&[1, 1], &[2, 2]]).row_space_canonical(), m(&[&[1, 1]]));
        let a = m(&[&[1, 2, 3], &[0, 1, 1]]).row_space_canonical();
        let b = m(&[&[1, 1, 2], &[0, 1, 1]]).row_space_canonical();
        assert_eq!(a, b);
        assert_eq!(a, m(&[&[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn subspace_leq_examples() {
        let origin = RationalMatrix::identity(2);
        let x0 = m(&[&[1, 0]]);
        let y0 = m(&[&[0, 1]]);
        assert!(subspace_leq(&origin, &x0).unwrap());
        assert!(!subspace_leq(&x0, &origin).unwrap());
        assert!(!subspace_leq(&x0, &y0).unwrap());
        assert!(subspace_leq(&x0, &x0).unwrap());
        assert!(matches!(
            subspace_leq(&origin, &m(&[&[1, 0, 0]])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn extend_matches_full_elimination() {
        let base = m(&[&[1, 2, 0, 1], &[0, 0, 1, 3]]).row_space_canonical();
        let v = vec![int(2), int(1), int(5), int(-1)];
        let ext = base.extend_canonical(&v).unwrap();
        let mut stacked = base.clone();
        stacked.push_row(&v).unwrap();
        assert_eq!(ext, stacked.row_space_canonical());
        assert!(base.extend_canonical(&[int(2), int(4), int(3), int(11)]).is_none());
    }

    #[test]
    fn serializes_as_strings() {
        let a = RationalMatrix::from_rows(vec![vec![ratio(1, 2), int(-3)]], 2).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"[["1/2","-3"]]"#);
    }
}
