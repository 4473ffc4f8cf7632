//! Exact linear algebra over the rationals.
//!
//! Matrices are dense and row-major. Every subspace is kept as the unique
//! reduced row-echelon basis of its row space, so two subspaces are equal
//! exactly when their bases are equal entrywise.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(rows, cols).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [Rational] {
        &mut self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// In-place Gauss-Jordan elimination; returns the pivot columns.
    fn reduce_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.entries.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self[(r, c)].recip();
            for x in self.row_mut(r)[c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            let pivot_row: Vec<(usize, Rational)> = self.row(r)[c..]
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (c + j, x.clone()))
                .collect();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)].clone();
                if factor.is_zero() {
                    continue;
                }
                let row = self.row_mut(i);
                for (j, x) in &pivot_row {
                    row[*j] -= &factor * x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(fmt_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form and rank.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, usize) {
    let mut r = m.clone();
    let rank = r.reduce_in_place().len();
    (r, rank)
}

pub fn rank(m: &ExactMatrix) -> usize {
    rref(m).1
}

/// Basis of the right kernel `{x : m x = 0}`, one vector per free column.
pub fn kernel(m: &ExactMatrix) -> Vec<Vec<Rational>> {
    let mut r = m.clone();
    let pivots = r.reduce_in_place();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            v
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: ExactMatrix,
    pivot_columns: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: ExactMatrix::zeros(0, ambient_dim),
            pivot_columns: Vec::new(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &ExactMatrix) -> Self {
        let (mut r, rank) = rref(m);
        r.entries.truncate(rank * r.cols);
        r.rows = rank;
        let pivot_columns = (0..rank)
            .map(|i| r.row(i).iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        Self {
            ambient_dim: m.cols,
            basis: r,
            pivot_columns,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivot_columns
    }

    /// Reduces `v` against the echelon basis; the remainder is zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (row, &p) in self.pivot_columns.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, b) in v.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *x -= &factor * b;
                }
            }
        }
        v
    }

    /// Adds `v` to the subspace, keeping the basis in RREF. Returns whether
    /// the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> Result<bool> {
        check_len(v.len(), self.ambient_dim)?;
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].recip();
        for x in r.iter_mut().filter(|x| !x.is_zero()) {
            *x *= &inv;
        }
        let nonzero: Vec<(usize, Rational)> = r
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        for i in 0..self.dim() {
            let factor = self.basis[(i, p)].clone();
            if factor.is_zero() {
                continue;
            }
            let row = self.basis.row_mut(i);
            for (j, x) in &nonzero {
                row[*j] -= &factor * x;
            }
        }
        let pos = self.pivot_columns.partition_point(|&c| c < p);
        let cols = self.ambient_dim;
        let at = pos * cols;
        self.basis.entries.splice(at..at, r);
        self.basis.rows += 1;
        self.pivot_columns.insert(pos, p);
        Ok(true)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        check_len(v.len(), self.ambient_dim)?;
        Ok(self.reduce(v).iter().all(Zero::is_zero))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_len(other.ambient_dim, self.ambient_dim)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection from the left kernel of the stacked bases: a kernel
    /// vector `(alpha, beta)` of `[A; -B]^T` gives `alpha A = beta B`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        check_len(other.ambient_dim, self.ambient_dim)?;
        let mut neg_b = other.basis.clone();
        for x in neg_b.entries.iter_mut() {
            *x = -x.clone();
        }
        let stacked = self.basis.vstack(&neg_b)?.transpose();
        let rows: Vec<Vec<Rational>> = kernel(&stacked)
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![Rational::zero(); self.ambient_dim];
                for (i, c) in coeffs[..self.dim()].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, b) in v.iter_mut().zip(self.basis.row(i)) {
                        *x += c * b;
                    }
                }
                v
            })
            .collect();
        let n = rows.len();
        let m = ExactMatrix::from_rows(rows, self.ambient_dim)?;
        debug_assert_eq!(m.rows, n);
        Ok(Self::row_space(&m))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        check_len(other.ambient_dim, self.ambient_dim)?;
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_len(found: usize, expected: usize) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Row space of a set of coordinate vectors.
pub fn span(vectors: &[Vec<Rational>], ambient_dim: usize) -> Result<Subspace> {
    for v in vectors {
        check_len(v.len(), ambient_dim)?;
    }
    if vectors.is_empty() {
        return Ok(Subspace::zero(ambient_dim));
    }
    let m = ExactMatrix::from_rows(vectors.to_vec(), ambient_dim)?;
    Ok(Subspace::row_space(&m))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    /// The first space is properly contained in the second.
    FirstInSecond,
    SecondInFirst,
    Incomparable,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Comparison {
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_intersection: usize,
    pub verdict: Verdict,
}

pub fn subspace_compare(a: &Subspace, b: &Subspace) -> Result<Comparison> {
    let meet = a.intersection(b)?;
    let k = meet.dim();
    let verdict = match (k == a.dim(), k == b.dim()) {
        (true, true) => Verdict::Equal,
        (true, false) => Verdict::FirstInSecond,
        (false, true) => Verdict::SecondInFirst,
        (false, false) => Verdict::Incomparable,
    };
    Ok(Comparison {
        dim_a: a.dim(),
        dim_b: b.dim(),
        dim_intersection: k,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_identity() {
        let id = ExactMatrix::identity(3);
        assert_eq!(rref(&id), (id.clone(), 3));
    }

    #[test]
    fn rref_dependent_rows() {
        let m = ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, k) = rref(&m);
        assert_eq!(k, 1);
        assert_eq!(r, ExactMatrix::from_i64(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_fractional_pivots() {
        let m = ExactMatrix::from_i64(&[&[2, 1, 0], &[0, 3, 1]]);
        let (r, k) = rref(&m);
        assert_eq!(k, 2);
        assert_eq!(r[(0, 2)], rat_frac(-1, 6));
        assert_eq!(r[(1, 2)], rat_frac(1, 3));
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = ExactMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = kernel(&m);
        assert_eq!(ker.len(), 2);
        for x in ker {
            let col = ExactMatrix::from_rows(x.into_iter().map(|e| vec![e]).collect(), 1).unwrap();
            assert!(m.mul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn empty_span() {
        let s = span(&[], 4).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s.ambient_dim(), 4);
    }

    #[test]
    fn spanning_set_of_plane() {
        let s = span(&[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])], 2).unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn span_rejects_mismatched_lengths() {
        assert!(matches!(
            span(&[v(&[1, 0]), v(&[1, 0, 0])], 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn compare_reflexive() {
        let s = span(&[v(&[1, 2, 3]), v(&[0, 1, 1])], 3).unwrap();
        assert_eq!(subspace_compare(&s, &s).unwrap().verdict, Verdict::Equal);
    }

    #[test]
    fn compare_line_in_plane() {
        let line = span(&[v(&[1, 0])], 2).unwrap();
        let plane = span(&[v(&[1, 0]), v(&[0, 1])], 2).unwrap();
        let c = subspace_compare(&line, &plane).unwrap();
        assert_eq!(c.verdict, Verdict::FirstInSecond);
        assert_eq!(c.dim_intersection, 1);
        let c = subspace_compare(&plane, &line).unwrap();
        assert_eq!(c.verdict, Verdict::SecondInFirst);
    }

    #[test]
    fn compare_skew_planes() {
        let a = span(&[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])], 4).unwrap();
        let b = span(&[v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])], 4).unwrap();
        let c = subspace_compare(&a, &b).unwrap();
        assert_eq!(c.verdict, Verdict::Incomparable);
        assert_eq!(c.dim_intersection, 1);
    }

    #[test]
    fn incremental_insert_matches_batch_rref() {
        let vs = [
            v(&[0, 2, 1, 0]),
            v(&[1, 1, 0, 0]),
            v(&[1, 3, 1, 0]),
            v(&[0, 0, 0, 5]),
        ];
        let mut s = Subspace::zero(4);
        let grew: Vec<bool> = vs.iter().map(|x| s.insert(x).unwrap()).collect();
        assert_eq!(grew, vec![true, true, false, true]);
        assert_eq!(s, span(&vs, 4).unwrap());
    }

    #[test]
    fn compare_rejects_ambient_mismatch() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(subspace_compare(&a, &b).is_err());
    }
}
