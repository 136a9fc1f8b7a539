//! Dense matrices over exact rationals with fraction-free elimination.
//!
//! Forward elimination runs on integer rows (Bareiss: every intermediate
//! entry is a minor of the cleared input, divisions are exact), which keeps
//! entry growth polynomial instead of exponential. Normalization to reduced
//! row echelon form happens in a final rational pass.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::{zeros, Scalar};
use super::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: zeros(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: nrows, cols: ncols, data }
    }

    /// Builds from i64 entries; test and fixture convenience.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| super::scalar::int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += self.get(r, c) * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a + b)
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a - b)
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * k).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }
}

/// Clears denominators and strips the content so a row becomes a primitive
/// integer row. Zero rows stay zero.
fn primitive_int_row(row: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for v in &out {
        g = g.gcd(v);
    }
    if !g.is_zero() && !g.is_one() {
        for v in &mut out {
            *v /= &g;
        }
    }
    out
}

/// Bareiss forward elimination. Returns the echelonized integer rows and the
/// pivot (row, col) list. Pivot choice is the first nonzero entry scanning
/// down, so the result is deterministic.
fn bareiss_forward(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<(usize, usize)>) {
    let rows = a.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i].iter().all(|x| x.is_zero()) {
                continue;
            }
            for j in 0..cols {
                if j == c {
                    continue;
                }
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    (a, pivots)
}

/// Reduced row echelon form and rank.
///
/// Deterministic and idempotent; the output has the same shape as the input
/// with zero rows collected at the bottom.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let (rows, pivots) = rref_rows(&m.to_rows(), m.cols());
    let rank = pivots.len();
    let mut out = Matrix::zero(m.rows(), m.cols());
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            out.set(r, c, v);
        }
    }
    (out, rank)
}

/// RREF on raw rows: returns only the nonzero rows (rank many) plus the pivot
/// columns, in pivot order.
pub(crate) fn rref_rows(rows: &[Vec<Scalar>], cols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| primitive_int_row(r)).collect();
    let (ech, pivots) = bareiss_forward(int_rows, cols);
    // Normalize: each pivot row divided by its pivot, then clear above.
    let mut rat: Vec<Vec<Scalar>> = pivots
        .iter()
        .map(|&(r, c)| {
            let p = ech[r][c].clone();
            ech[r]
                .iter()
                .map(|v| Scalar::new(v.clone(), p.clone()))
                .collect::<Vec<Scalar>>()
        })
        .collect();
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    for k in (0..pivot_cols.len()).rev() {
        let c = pivot_cols[k];
        for i in 0..k {
            if !rat[i][c].is_zero() {
                let f = rat[i][c].clone();
                for j in 0..cols {
                    let v = &rat[i][j] - &f * &rat[k][j];
                    rat[i][j] = v;
                }
            }
        }
    }
    (rat, pivot_cols)
}

/// Basis of `{x : m·x = 0}` in canonical form.
pub fn nullspace(m: &Matrix) -> Subspace {
    let (rref_rows, pivot_cols) = rref_rows(&m.to_rows(), m.cols());
    nullspace_from_rref(&rref_rows, &pivot_cols, m.cols())
}

/// Nullspace basis from precomputed RREF rows. Shared with the incremental
/// constraint accumulator.
pub(crate) fn nullspace_from_rref(
    rref_rows: &[Vec<Scalar>],
    pivot_cols: &[usize],
    cols: usize,
) -> Subspace {
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for free in 0..cols {
        if pivot_set[free] {
            continue;
        }
        let mut v = zeros(cols);
        v[free] = Scalar::one();
        for (row, &pc) in rref_rows.iter().zip(pivot_cols.iter()) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    Subspace::from_rows(cols, basis)
}

/// Solves `m·x = rhs`. `None` when inconsistent; otherwise a particular
/// solution (free variables set to zero) plus the homogeneous nullspace.
pub fn solve_affine(m: &Matrix, rhs: &[Scalar]) -> Option<(Vec<Scalar>, Subspace)> {
    assert_eq!(rhs.len(), m.rows(), "rhs length mismatch");
    let cols = m.cols();
    let mut aug_rows: Vec<Vec<Scalar>> = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut row = m.row_vec(r);
        row.push(rhs[r].clone());
        aug_rows.push(row);
    }
    let (rref_rows, pivot_cols) = rref_rows(&aug_rows, cols + 1);
    if pivot_cols.contains(&cols) {
        return None;
    }
    let mut particular = zeros(cols);
    for (row, &pc) in rref_rows.iter().zip(pivot_cols.iter()) {
        particular[pc] = row[cols].clone();
    }
    Some((particular, nullspace(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::{int, ratio};

    #[test]
    fn rref_identity_is_fixed_point() {
        let m = Matrix::identity(3);
        let (r, rank) = rref(&m);
        assert_eq!(r, m);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_zero() {
        let m = Matrix::zero(2, 4);
        let (r, rank) = rref(&m);
        assert_eq!(r, m);
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        // hand row-reduction: R2 := R2 - 2*R1 leaves [[1,2],[0,0]]
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, rank) = rref(&m);
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn rref_idempotent_and_deterministic() {
        let m = Matrix::from_i64(&[&[2, 4, 1], &[3, 1, 0], &[5, 5, 1]]);
        let (r1, k1) = rref(&m);
        let (r2, k2) = rref(&r1);
        assert_eq!(r1, r2);
        assert_eq!(k1, k2);
        let (r3, _) = rref(&m);
        assert_eq!(r1, r3);
    }

    #[test]
    fn rref_fractional_entries() {
        let m = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), int(1)],
        ]);
        let (r, rank) = rref(&m);
        assert_eq!(rank, 1);
        assert_eq!(r.row(0), &[int(1), ratio(2, 3)][..]);
    }

    #[test]
    fn nullspace_identity_trivial() {
        assert_eq!(nullspace(&Matrix::identity(4)).dim(), 0);
    }

    #[test]
    fn nullspace_zero_full() {
        let s = nullspace(&Matrix::zero(3, 5));
        assert_eq!(s.dim(), 5);
    }

    #[test]
    fn nullspace_line() {
        // solve by hand: x0 + x1 = 0 -> (1, -1) after canonicalization
        let s = nullspace(&Matrix::from_i64(&[&[1, 1]]));
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis()[0], vec![int(1), int(-1)]);
    }

    #[test]
    fn solve_affine_identity() {
        let rhs = vec![int(3), int(-1)];
        let (p, h) = solve_affine(&Matrix::identity(2), &rhs).unwrap();
        assert_eq!(p, rhs);
        assert_eq!(h.dim(), 0);
    }

    #[test]
    fn solve_affine_inconsistent() {
        assert!(solve_affine(&Matrix::from_i64(&[&[0, 0]]), &[int(1)]).is_none());
    }

    #[test]
    fn solve_affine_underdetermined() {
        // hand solve: x0 + x1 = 2 -> particular (2, 0), homogeneous span{(1,-1)}
        let (p, h) = solve_affine(&Matrix::from_i64(&[&[1, 1]]), &[int(2)]).unwrap();
        assert_eq!(p, vec![int(2), int(0)]);
        assert_eq!(h.basis()[0], vec![int(1), int(-1)]);
    }
}
