//! Exact rational linear algebra: a dense matrix with rank, inverse and
//! solve, and an incremental row reducer for span queries.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for k in 0..size {
            m.set(k, k, Rational::one());
        }
        m
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ExactMatrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
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

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * other.cols + c;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Gauss-Jordan elimination in place; returns the pivot columns.
    fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(p) = (lead..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, p);
            let inv = self.get(lead, c).recip();
            for k in c..self.cols {
                let idx = lead * self.cols + k;
                if !self.data[idx].is_zero() {
                    self.data[idx] *= &inv;
                }
            }
            let pivot_row: Vec<Rational> = self.row(lead).to_vec();
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for k in c..self.cols {
                    if !pivot_row[k].is_zero() {
                        let idx = r * self.cols + k;
                        self.data[idx] -= &factor * &pivot_row[k];
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// `None` when singular or non-square.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let pivots = aug.reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = ExactMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Some solution of `self · x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = ExactMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.reduce();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }
}

/// Incrementally maintained echelon basis of a subspace of `Q^len`.
///
/// Each stored row has a pivot entry equal to one and zeros at the pivots
/// of all earlier rows, so reducing by the rows in insertion order clears
/// every pivot.
#[derive(Clone, Debug)]
pub struct RowReducer {
    len: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowReducer {
    pub fn new(len: usize) -> Self {
        RowReducer { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduced(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduced(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds `v` if it is independent of the current span; reports whether it
    /// was added.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduced(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut().filter(|x| !x.is_zero()) {
            *x *= &inv;
        }
        self.rows.push((pivot, v));
        true
    }
}
