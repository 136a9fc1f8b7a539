//! Linear subspaces in canonical form.
//!
//! A subspace is stored as the RREF basis of its row span, so equality of
//! subspaces is entry-wise equality of bases and every set operation is
//! syntactic on the canonical form.

use num_traits::Zero;

use super::matrix::{nullspace, Matrix};
use super::scalar::{zeros, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    /// Canonicalizes arbitrary spanning rows into an RREF basis.
    pub fn from_rows(ambient_dim: usize, rows: Vec<Vec<Scalar>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient_dim, "spanning row length mismatch");
        }
        let (rref, _) = super::matrix::rref_rows(&rows, ambient_dim);
        Subspace { ambient_dim, basis: rref }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let mut basis = Vec::with_capacity(ambient_dim);
        for i in 0..ambient_dim {
            let mut v = zeros(ambient_dim);
            v[i] = num_traits::One::one();
            basis.push(v);
        }
        Subspace { ambient_dim, basis }
    }

    /// Constructor for rows already known to be in RREF (used internally by
    /// the elimination routines).
    pub(crate) fn from_rref_rows(ambient_dim: usize, basis: Vec<Vec<Scalar>>) -> Self {
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    fn pivot_of(row: &[Scalar]) -> usize {
        row.iter().position(|x| !x.is_zero()).expect("zero basis row")
    }

    /// Membership test: reduce against the RREF basis and check the residue.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        let mut residue = v.to_vec();
        for row in &self.basis {
            let p = Self::pivot_of(row);
            if !residue[p].is_zero() {
                let f = residue[p].clone();
                for (r, x) in residue.iter_mut().zip(row.iter()) {
                    *r -= &f * x;
                }
            }
        }
        residue.iter().all(|x| x.is_zero())
    }

    /// Set containment `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        self.basis.iter().all(|r| other.contains(r))
    }

    /// Exact intersection: solve a·x = b·y over the stacked column matrix
    /// [selfᵀ | -otherᵀ] and read off the combinations of `self`'s basis.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        let da = self.dim();
        let db = other.dim();
        if da == 0 || db == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        let mut m = Matrix::zero(self.ambient_dim, da + db);
        for (j, row) in self.basis.iter().enumerate() {
            for i in 0..self.ambient_dim {
                m.set(i, j, row[i].clone());
            }
        }
        for (j, row) in other.basis.iter().enumerate() {
            for i in 0..self.ambient_dim {
                m.set(i, da + j, -row[i].clone());
            }
        }
        let ker = nullspace(&m);
        let mut rows = Vec::with_capacity(ker.dim());
        for combo in ker.basis() {
            let mut v = zeros(self.ambient_dim);
            for (j, row) in self.basis.iter().enumerate() {
                if !combo[j].is_zero() {
                    for i in 0..self.ambient_dim {
                        v[i] += &combo[j] * &row[i];
                    }
                }
            }
            rows.push(v);
        }
        Subspace::from_rows(self.ambient_dim, rows)
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        let mut rows = self.basis.clone();
        rows.extend(other.basis.clone());
        Subspace::from_rows(self.ambient_dim, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::matrix::{nullspace, Matrix};
    use crate::exactlin::scalar::int;

    fn span(ambient: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::from_rows(
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn intersect_self_is_identity() {
        let v = span(3, &[&[1, 2, 0], &[0, 0, 1]]);
        assert_eq!(v.intersect(&v), v);
    }

    #[test]
    fn transverse_lines_meet_at_zero() {
        let a = span(2, &[&[1, 0]]);
        let b = span(2, &[&[0, 1]]);
        assert_eq!(a.intersect(&b), Subspace::zero(2));
    }

    #[test]
    fn intersect_planes() {
        let a = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b), span(3, &[&[0, 1, 0]]));
    }

    #[test]
    fn contains_matches_nullspace_membership() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[0, 1, 1]]);
        let ker = nullspace(&m);
        for v in ker.basis() {
            assert!(crate::exactlin::scalar::vec_is_zero(&m.mul_vec(v)));
            assert!(ker.contains(v));
        }
        assert!(!ker.contains(&[int(1), int(0), int(0)]));
    }

    #[test]
    fn leq_antisymmetry_is_equality() {
        let a = span(3, &[&[1, 1, 0], &[0, 0, 2]]);
        let b = span(3, &[&[2, 2, 2], &[0, 0, 1]]);
        assert!(a.leq(&b) && b.leq(&a));
        assert_eq!(a, b);
        let c = span(3, &[&[1, 1, 0]]);
        assert!(c.leq(&a) && !a.leq(&c));
    }
}
