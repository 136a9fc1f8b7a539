//! Algebra file format and matrix-subalgebra ingestion.
//!
//! The on-disk form is JSON with every scalar spelled as a string `"p/q"`:
//! `{ "name", "dim", "unit": [..], "structure": dim×dim×dim }` where
//! `structure[i][j]` holds the coordinates of `e_i·e_j`. Validation errors
//! name the failing index path.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Algebra, AlgebraError};
use crate::exactlin::{format_scalar, parse_scalar, rref, solve_affine, Matrix, Scalar};

#[derive(Debug, Error)]
pub enum AlgebraFileError {
    #[error("scalar at {path}: {source}")]
    Scalar {
        path: String,
        source: crate::exactlin::ScalarParseError,
    },
    #[error("structure tensor shape mismatch at {0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub unit: Vec<String>,
    pub structure: Vec<Vec<Vec<String>>>,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &Algebra) -> Self {
        let dim = alg.dim();
        let structure = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        (0..dim)
                            .map(|k| format_scalar(alg.structure_entry(i, j, k)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        AlgebraFile {
            name: alg.name().to_string(),
            dim,
            unit: alg.unit_coords().iter().map(format_scalar).collect(),
            structure,
        }
    }

    pub fn to_algebra(&self) -> Result<Arc<Algebra>, AlgebraFileError> {
        let dim = self.dim;
        if self.structure.len() != dim {
            return Err(AlgebraFileError::Shape(format!(
                "structure has {} rows, expected {}",
                self.structure.len(),
                dim
            )));
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for (i, plane) in self.structure.iter().enumerate() {
            if plane.len() != dim {
                return Err(AlgebraFileError::Shape(format!("structure[{i}] has {} entries", plane.len())));
            }
            for (j, row) in plane.iter().enumerate() {
                if row.len() != dim {
                    return Err(AlgebraFileError::Shape(format!(
                        "structure[{i}][{j}] has {} entries",
                        row.len()
                    )));
                }
                for (k, s) in row.iter().enumerate() {
                    flat.push(parse_scalar(s).map_err(|source| AlgebraFileError::Scalar {
                        path: format!("structure[{i}][{j}][{k}]"),
                        source,
                    })?);
                }
            }
        }
        let mut unit = Vec::with_capacity(dim);
        for (i, s) in self.unit.iter().enumerate() {
            unit.push(parse_scalar(s).map_err(|source| AlgebraFileError::Scalar {
                path: format!("unit[{i}]"),
                source,
            })?);
        }
        Ok(Algebra::new(self.name.clone(), dim, flat, unit)?)
    }
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for r in 0..m.rows() {
        v.extend(m.row_vec(r));
    }
    v
}

/// Converts a multiplicatively closed, linearly independent list of n×n
/// matrices (with a designated unit in their span) into a structure-constant
/// presentation. This is the ingestion path for matrix subalgebras such as
/// CSL pattern algebras.
pub fn from_matrix_basis(
    name: impl Into<String>,
    basis: &[Matrix],
    unit: &Matrix,
) -> Result<Arc<Algebra>, AlgebraError> {
    let d = basis.len();
    assert!(d > 0, "empty basis");
    let n = basis[0].rows();
    let mut coeff = Matrix::zero(n * n, d);
    for (j, b) in basis.iter().enumerate() {
        assert_eq!((b.rows(), b.cols()), (n, n), "basis matrices must share shape");
        for (idx, v) in flatten(b).into_iter().enumerate() {
            coeff.set(idx, j, v);
        }
    }
    let (_, rank) = rref(&coeff);
    if rank != d {
        return Err(AlgebraError::BasisDependent);
    }
    let coords_of = |m: &Matrix| solve_affine(&coeff, &flatten(m)).map(|(p, _)| p);

    let unit_coords = coords_of(unit).ok_or(AlgebraError::UnitOutsideSpan)?;
    let mut structure = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            let prod = basis[i].mul(&basis[j]);
            let coords = coords_of(&prod).ok_or(AlgebraError::BasisNotClosed { i, j })?;
            structure.extend(coords);
        }
    }
    Algebra::new(name, d, structure, unit_coords)
}

/// Full matrix algebra M_n(ℚ) with matrix units in row-major order.
pub fn matrix_units_algebra(name: impl Into<String>, n: usize) -> Arc<Algebra> {
    let mut basis = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut m = Matrix::zero(n, n);
            m.set(r, c, num_traits::One::one());
            basis.push(m);
        }
    }
    from_matrix_basis(name, &basis, &Matrix::identity(n)).expect("matrix units form an algebra")
}

/// Commutative algebra of diagonal n×n matrices.
pub fn diagonal_algebra(name: impl Into<String>, n: usize) -> Arc<Algebra> {
    let mut basis = Vec::with_capacity(n);
    for r in 0..n {
        let mut m = Matrix::zero(n, n);
        m.set(r, r, num_traits::One::one());
        basis.push(m);
    }
    from_matrix_basis(name, &basis, &Matrix::identity(n)).expect("diagonal matrices form an algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    #[test]
    fn matrix_units_structure() {
        let alg = matrix_units_algebra("m2", 2);
        assert_eq!(alg.dim(), 4);
        // e12·e21 = e11, e12·e12 = 0
        assert_eq!(alg.structure_entry(1, 2, 0), &int(1));
        assert_eq!(alg.structure_entry(1, 1, 0), &int(0));
        assert_eq!(alg.unit_coords(), &[int(1), int(0), int(0), int(1)][..]);
    }

    #[test]
    fn rejects_non_closed_basis() {
        // span{e11, e12 + e21} is not closed: (e12+e21)² = I ∉ span
        let mats = vec![
            Matrix::from_i64(&[&[1, 0], &[0, 0]]),
            Matrix::from_i64(&[&[0, 1], &[1, 0]]),
        ];
        let err = from_matrix_basis("bad", &mats, &Matrix::identity(2)).unwrap_err();
        assert!(matches!(err, AlgebraError::UnitOutsideSpan | AlgebraError::BasisNotClosed { .. }));
    }

    #[test]
    fn rejects_dependent_basis() {
        let m = Matrix::from_i64(&[&[1, 0], &[0, 1]]);
        let err = from_matrix_basis("dep", &[m.clone(), m.clone()], &m).unwrap_err();
        assert_eq!(err, AlgebraError::BasisDependent);
    }

    #[test]
    fn file_round_trip() {
        let alg = matrix_units_algebra("m2", 2);
        let file = AlgebraFile::from_algebra(&alg);
        let back = file.to_algebra().unwrap();
        assert_eq!(*alg, *back);
        let json = serde_json::to_string(&file).unwrap();
        let reparsed: AlgebraFile = serde_json::from_str(&json).unwrap();
        assert_eq!(file, reparsed);
    }

    #[test]
    fn file_errors_name_the_entry() {
        let alg = diagonal_algebra("d2", 2);
        let mut file = AlgebraFile::from_algebra(&alg);
        file.structure[1][0][1] = "1/0".into();
        let err = file.to_algebra().unwrap_err();
        assert!(err.to_string().contains("structure[1][0][1]"), "got: {err}");
    }
}
