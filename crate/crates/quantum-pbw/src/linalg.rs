//! Exact dense linear algebra over the field `Q(t)` of rational functions:
//! Gaussian elimination with a "simplest entry" pivot rule, linear solves,
//! inversion, determinants, and expansion of a vector in a spanning family.
//!
//! Everything here is exact; there is no floating point and no numerical
//! tolerance anywhere.

use crate::arith::RatFun;
use std::collections::BTreeMap;

/// A dense matrix over `Q(t)`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<RatFun>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![RatFun::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = RatFun::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFun>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &RatFun {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut RatFun {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[RatFun] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) = &*out.at(i, j) + &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Row-reduce in place (augmented with `aug` extra columns kept in step),
    /// returning the pivot columns. The pivot in each column is the nonzero
    /// entry with the fewest numerator + denominator terms, which keeps the
    /// intermediate rational functions small in practice.
    fn eliminate(&mut self, aug: Option<&mut Mat>) -> Vec<usize> {
        let mut aug = aug;
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            let pivot = (next_row..self.rows)
                .filter(|&r| !self.at(r, col).is_zero())
                .min_by_key(|&r| complexity(self.at(r, col)));
            let Some(pr) = pivot else { continue };
            self.swap_rows(pr, next_row);
            if let Some(a) = aug.as_deref_mut() {
                a.swap_rows(pr, next_row);
            }
            let inv = self.at(next_row, col).inv();
            self.scale_row(next_row, &inv);
            if let Some(a) = aug.as_deref_mut() {
                a.scale_row(next_row, &inv);
            }
            for r in 0..self.rows {
                if r != next_row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    self.sub_scaled_row(r, next_row, &factor);
                    if let Some(a) = aug.as_deref_mut() {
                        a.sub_scaled_row(r, next_row, &factor);
                    }
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let ai = a * self.cols + j;
            let bi = b * self.cols + j;
            self.data.swap(ai, bi);
        }
    }

    fn scale_row(&mut self, r: usize, f: &RatFun) {
        for j in 0..self.cols {
            let v = self.at(r, j);
            if !v.is_zero() {
                *self.at_mut(r, j) = v * f;
            }
        }
    }

    fn sub_scaled_row(&mut self, r: usize, src: usize, f: &RatFun) {
        for j in 0..self.cols {
            let s = self.at(src, j).clone();
            if !s.is_zero() {
                *self.at_mut(r, j) = &*self.at(r, j) - &(&s * f);
            }
        }
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.eliminate(None).len()
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let mut work = self.clone();
        let mut aug = Mat::identity(self.rows);
        let pivots = work.eliminate(Some(&mut aug));
        (pivots.len() == self.rows).then_some(aug)
    }

    /// Determinant via elimination, tracking row swaps and pivot scalings.
    pub fn determinant(&self) -> RatFun {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut work = self.clone();
        let mut det = RatFun::one();
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !work.at(r, col).is_zero())
                .min_by_key(|&r| complexity(work.at(r, col)));
            let Some(pr) = pivot else {
                return RatFun::zero();
            };
            if pr != col {
                work.swap_rows(pr, col);
                det = &det * &RatFun::from_int(-1);
            }
            let p = work.at(col, col).clone();
            det = &det * &p;
            let inv = p.inv();
            for r in col + 1..n {
                if !work.at(r, col).is_zero() {
                    let factor = &*work.at(r, col) * &inv;
                    work.sub_scaled_row(r, col, &factor);
                }
            }
        }
        det
    }

    /// A basis of the right nullspace `{x : self * x = 0}`, one vector per
    /// free column of the reduced row-echelon form.
    pub fn nullspace(&self) -> Vec<Vec<RatFun>> {
        let mut work = self.clone();
        let pivots = work.eliminate(None);
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivots.contains(&f) {
                continue;
            }
            let mut x = vec![RatFun::zero(); self.cols];
            x[f] = RatFun::one();
            for (r, &p) in pivots.iter().enumerate() {
                if !work.at(r, f).is_zero() {
                    x[p] = &RatFun::zero() - work.at(r, f);
                }
            }
            basis.push(x);
        }
        basis
    }

    /// Solve `self * x = b` for square or overdetermined systems with a
    /// unique solution; `None` if inconsistent or underdetermined.
    pub fn solve(&self, b: &[RatFun]) -> Option<Vec<RatFun>> {
        assert_eq!(b.len(), self.rows);
        let mut work = self.clone();
        let mut aug = Mat::from_rows(b.iter().map(|v| vec![v.clone()]).collect());
        let pivots = work.eliminate(Some(&mut aug));
        if pivots.len() < self.cols {
            return None;
        }
        // Consistency: rows beyond the pivot count must have zero rhs.
        for r in pivots.len()..self.rows {
            if !aug.at(r, 0).is_zero() {
                return None;
            }
        }
        let mut x = vec![RatFun::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, 0).clone();
        }
        Some(x)
    }
}

/// Pivot-choice heuristic: number of terms across numerator and denominator.
fn complexity(f: &RatFun) -> usize {
    f.numerator().iter().count() + f.denominator().iter().count()
}

/// Expand `target` in the family `basis` of sparse vectors indexed by an
/// ordered key type; returns the coefficient vector, or `None` if `target`
/// is outside the span or the family is linearly dependent.
pub fn express_in_span<K: Ord + Clone>(
    basis: &[BTreeMap<K, RatFun>],
    target: &BTreeMap<K, RatFun>,
) -> Option<Vec<RatFun>> {
    let mut keys: Vec<K> = Vec::new();
    for v in basis.iter().chain(std::iter::once(target)) {
        for k in v.keys() {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    keys.sort();
    let a = Mat::from_rows(
        keys.iter()
            .map(|k| {
                basis
                    .iter()
                    .map(|v| v.get(k).cloned().unwrap_or_else(RatFun::zero))
                    .collect()
            })
            .collect(),
    );
    let b: Vec<RatFun> = keys
        .iter()
        .map(|k| target.get(k).cloned().unwrap_or_else(RatFun::zero))
        .collect();
    a.solve(&b)
}
