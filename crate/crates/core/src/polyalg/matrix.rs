use serde::{Serialize, Serializer};

use super::IntPolynomial;

/// Dense rectangular matrix of integer polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<IntPolynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![IntPolynomial::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, IntPolynomial::one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<IntPolynomial>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &IntPolynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: IntPolynomial) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[IntPolynomial] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<IntPolynomial>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Copy without column `c` (zero-based).
    pub fn delete_column(&self, c: usize) -> Self {
        assert!(c < self.cols, "column {c} out of range");
        let rows = (0..self.rows)
            .map(|r| self.row(r).iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
            .collect();
        let mut m = Self::from_rows(rows);
        m.cols = self.cols - 1;
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

/// Determinant by fraction-free elimination.
///
/// Every division is exact in the integer polynomial ring, so intermediate
/// entries stay polynomial. Pivots are chosen as the first nonzero entry in
/// row order, which keeps the trace reproducible.
pub fn bareiss_determinant(m: &PolyMatrix) -> IntPolynomial {
    assert!(m.is_square(), "determinant of a {}x{} matrix", m.rows(), m.cols());
    let n = m.rows();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return IntPolynomial::zero();
            };
            a.swap(k, r);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let num = &(&row[j] * &pivot_row[k]) - &(&row[k] * &pivot_row[j]);
                row[j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            row[k] = IntPolynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
