//! Exact rational linear algebra: scalars, dense matrices, canonical
//! subspaces. All values are immutable after construction and every
//! operation is a pure function, so sharing across threads is safe.

pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use matrix::{nullspace, rref, solve_affine, Matrix};
pub use scalar::{format_scalar, format_vec, int, parse_scalar, ratio, Scalar, ScalarParseError};
pub use subspace::Subspace;

/// Incremental RREF accumulator for large stacked constraint systems.
///
/// Rows are folded in one at a time; the accumulator maintains the RREF of
/// the row space seen so far, which stays at most `cols` rows tall no matter
/// how many rows are pushed. The final nullspace is read off the accumulated
/// RREF. The result is identical to `nullspace` of the fully stacked matrix
/// because RREF of a row space is unique.
#[derive(Debug, Clone)]
pub struct RowAccumulator {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowAccumulator {
    pub fn new(cols: usize) -> Self {
        RowAccumulator { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn push_row(&mut self, row: Vec<Scalar>) {
        use num_traits::Zero;
        assert_eq!(row.len(), self.cols, "row length mismatch");
        let mut r = row;
        for (base, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, b) in r.iter_mut().zip(base.iter()) {
                    *x -= &f * b;
                }
            }
        }
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let lead = r[p].clone();
        for x in r.iter_mut() {
            *x /= &lead;
        }
        // clear the new pivot from existing rows, keep rows sorted by pivot
        for (base, _) in self.rows.iter_mut().zip(self.pivots.iter()) {
            if !base[p].is_zero() {
                let f = base[p].clone();
                for (b, x) in base.iter_mut().zip(r.iter()) {
                    *b -= &f * x;
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
    }

    pub fn push_rows(&mut self, rows: Vec<Vec<Scalar>>) {
        for r in rows {
            self.push_row(r);
        }
    }

    /// Nullspace of the accumulated constraints, in canonical form.
    pub fn kernel(&self) -> Subspace {
        matrix::nullspace_from_rref(&self.rows, &self.pivots, self.cols)
    }

    /// The accumulated row space, in canonical form.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_rref_rows(self.cols, self.rows.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accumulator_matches_batch_nullspace() {
        let rows = vec![
            vec![int(1), int(2), int(0), int(1)],
            vec![int(0), int(1), int(1), int(0)],
            vec![int(1), int(3), int(1), int(1)],
            vec![int(2), int(4), int(0), int(2)],
        ];
        let m = Matrix::from_rows(rows.clone());
        let mut acc = RowAccumulator::new(4);
        acc.push_rows(rows);
        assert_eq!(acc.kernel(), nullspace(&m));
        assert_eq!(acc.rank(), 2);
    }
}
