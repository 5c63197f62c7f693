use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows: rows.len(), cols, data: rows.iter().flatten().map(|&x| x.into()).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Diagonal entries `(0,0), (1,1), …` up to the shorter side.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Rows `from..` as a new matrix.
    pub fn rows_from(&self, from: usize) -> IntMatrix {
        IntMatrix { rows: self.rows - from, cols: self.cols, data: self.data[from * self.cols..].to_vec() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += k * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let x = &self.data[src * self.cols + j] * k;
            if !x.is_zero() {
                self.data[dst * self.cols + j] += x;
            }
        }
    }

    /// `col[dst] += k * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let x = &self.data[i * self.cols + src] * k;
            if !x.is_zero() {
                self.data[i * self.cols + dst] += x;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `U · m · V = D` with `D` diagonal, `d₁ | d₂ | …`, all `dᵢ ≥ 0`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: Option<IntMatrix>,
    pub d: IntMatrix,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal().into_iter().take(self.rank).collect()
    }
}

/// Full Smith normal form with both transforms and `V⁻¹`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    smith(m, true, true)
}

/// Computes the Smith form, tracking the left transform and/or the right
/// transform (with its inverse) on request.
pub fn smith(m: &IntMatrix, track_left: bool, track_right: bool) -> SmithForm {
    let mut a = m.clone();
    let (r, c) = (a.rows, a.cols);
    let mut u = track_left.then(|| IntMatrix::identity(r));
    let mut v = track_right.then(|| IntMatrix::identity(c));
    let mut vi = track_right.then(|| IntMatrix::identity(c));

    let mut t = 0;
    while t < r.min(c) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = &a[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        row_swap(&mut a, &mut u, t, pi);
        col_swap(&mut a, &mut v, &mut vi, t, pj);

        loop {
            let mut settled = true;
            for i in t + 1..r {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                row_add(&mut a, &mut u, i, t, &-q);
                if !a[(i, t)].is_zero() {
                    settled = false;
                }
            }
            for j in t + 1..c {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                col_add(&mut a, &mut v, &mut vi, j, t, &-q);
                if !a[(t, j)].is_zero() {
                    settled = false;
                }
            }
            if settled {
                // the pivot must divide the whole trailing block
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)])));
                match bad {
                    None => break,
                    Some(i) => row_add(&mut a, &mut u, t, i, &BigInt::one()),
                }
            }
            // move the smallest remaining entry of row/column t to the pivot
            let mut best = (t, t);
            for i in t..r {
                if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[best].abs() {
                    best = (i, t);
                }
            }
            for j in t..c {
                if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[best].abs() {
                    best = (t, j);
                }
            }
            row_swap(&mut a, &mut u, t, best.0);
            col_swap(&mut a, &mut v, &mut vi, t, best.1);
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
        t += 1;
    }
    SmithForm { u, d: a, v, v_inv: vi, rank: t }
}

fn row_swap(a: &mut IntMatrix, u: &mut Option<IntMatrix>, i: usize, j: usize) {
    a.swap_rows(i, j);
    if let Some(u) = u {
        u.swap_rows(i, j);
    }
}

fn col_swap(a: &mut IntMatrix, v: &mut Option<IntMatrix>, vi: &mut Option<IntMatrix>, i: usize, j: usize) {
    a.swap_cols(i, j);
    if let (Some(v), Some(vi)) = (v, vi) {
        v.swap_cols(i, j);
        vi.swap_rows(i, j);
    }
}

fn row_add(a: &mut IntMatrix, u: &mut Option<IntMatrix>, dst: usize, src: usize, k: &BigInt) {
    a.add_row(dst, src, k);
    if let Some(u) = u {
        u.add_row(dst, src, k);
    }
}

// col[dst] += k col[src]; the inverse subtracts k row[dst] from row[src]
fn col_add(a: &mut IntMatrix, v: &mut Option<IntMatrix>, vi: &mut Option<IntMatrix>, dst: usize, src: usize, k: &BigInt) {
    a.add_col(dst, src, k);
    if let (Some(v), Some(vi)) = (v, vi) {
        v.add_col(dst, src, k);
        vi.add_row(src, dst, &-k);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diag_two_three() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
        let (u, v) = (s.u.unwrap(), s.v.unwrap());
        assert_eq!(&(&u * &m) * &v, s.d);
        assert_eq!(&v * &s.v_inv.unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn zero_matrix() {
        let s = smith_normal_form(&IntMatrix::zeros(3, 2));
        assert_eq!(s.rank, 0);
        assert!(s.d.is_zero());
    }

    #[test]
    fn rectangular() {
        let m = IntMatrix::from_rows(&[vec![4, 6, 8], vec![6, 9, 12]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1)]);
        assert_eq!(&(s.u.as_ref().unwrap() * &m) * s.v.as_ref().unwrap(), s.d);
    }
}
