//! Finite commutative subspace lattices and their pattern algebras.
//!
//! Lattice projections are diagonal 0/1 matrices (coordinate projections),
//! which commute automatically; the algebra that leaves every projection
//! invariant is then the pattern algebra spanned by the matrix units E_ij
//! with `P[j] ⇒ P[i]` for every projection P. The pattern is closed under
//! multiplication and contains all diagonal matrix units.

use std::sync::Arc;

use num_traits::One;
use thiserror::Error;

use crate::algebra::format::from_matrix_basis;
use crate::algebra::{Algebra, AlgebraError, Element};
use crate::exactlin::{Matrix, Scalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CslError {
    #[error("lattice must live on a space of positive dimension")]
    EmptyDimension,
    #[error("projection {index} has {got} entries, expected {expected}")]
    BadProjectionLength { index: usize, got: usize, expected: usize },
    #[error("lattice does not contain the zero projection")]
    MissingZero,
    #[error("lattice does not contain the identity projection")]
    MissingIdentity,
    #[error("lattice is not closed under meet of projections {i} and {j}")]
    NotClosedMeet { i: usize, j: usize },
    #[error("lattice is not closed under join of projections {i} and {j}")]
    NotClosedJoin { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsLattice {
    name: String,
    n: usize,
    projections: Vec<Vec<bool>>,
}

impl CsLattice {
    /// Validated construction: 0 and I must be present, and the set must be
    /// closed under entrywise meet and join.
    pub fn new(
        name: impl Into<String>,
        n: usize,
        projections: Vec<Vec<bool>>,
    ) -> Result<CsLattice, CslError> {
        if n == 0 {
            return Err(CslError::EmptyDimension);
        }
        for (index, p) in projections.iter().enumerate() {
            if p.len() != n {
                return Err(CslError::BadProjectionLength { index, got: p.len(), expected: n });
            }
        }
        let mut list: Vec<Vec<bool>> = Vec::new();
        for p in projections {
            if !list.contains(&p) {
                list.push(p);
            }
        }
        if !list.iter().any(|p| p.iter().all(|&b| !b)) {
            return Err(CslError::MissingZero);
        }
        if !list.iter().any(|p| p.iter().all(|&b| b)) {
            return Err(CslError::MissingIdentity);
        }
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                let meet: Vec<bool> = list[i].iter().zip(&list[j]).map(|(&a, &b)| a && b).collect();
                if !list.contains(&meet) {
                    return Err(CslError::NotClosedMeet { i, j });
                }
                let join: Vec<bool> = list[i].iter().zip(&list[j]).map(|(&a, &b)| a || b).collect();
                if !list.contains(&join) {
                    return Err(CslError::NotClosedJoin { i, j });
                }
            }
        }
        Ok(CsLattice { name: name.into(), n, projections: list })
    }

    /// Totally ordered lattice 0 ⊂ e_{0..1} ⊂ e_{0..2} ⊂ … ⊂ I on ℚⁿ.
    pub fn chain(name: impl Into<String>, n: usize) -> CsLattice {
        let projections = (0..=n)
            .map(|k| (0..n).map(|i| i < k).collect())
            .collect();
        CsLattice::new(name, n, projections).expect("a chain is a valid lattice")
    }

    /// The two trivial projections only; alg L is then the full matrix
    /// algebra.
    pub fn trivial(name: impl Into<String>, n: usize) -> CsLattice {
        CsLattice::new(name, n, vec![vec![false; n], vec![true; n]])
            .expect("the trivial lattice is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space_dim(&self) -> usize {
        self.n
    }

    pub fn projections(&self) -> &[Vec<bool>] {
        &self.projections
    }

    /// Cell (i, j) survives in the pattern algebra iff no projection
    /// separates it: `P[j] ⇒ P[i]` for every P.
    pub fn cell_allowed(&self, i: usize, j: usize) -> bool {
        self.projections.iter().all(|p| !p[j] || p[i])
    }
}

/// The pattern algebra together with its matrix realization.
#[derive(Debug, Clone)]
pub struct CslAlgebra {
    algebra: Arc<Algebra>,
    lattice: CsLattice,
    /// Matrix cell of each basis element, row-major order.
    cells: Vec<(usize, usize)>,
}

impl CslAlgebra {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn lattice(&self) -> &CsLattice {
        &self.lattice
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    /// A lattice projection as an element of the pattern algebra (it is a
    /// 0/1 diagonal matrix, and diagonal cells are always allowed).
    pub fn projection_element(&self, proj: &[bool]) -> Element {
        let mut coords = vec![Scalar::from_integer(0.into()); self.algebra.dim()];
        for (idx, &(i, j)) in self.cells.iter().enumerate() {
            if i == j && proj[i] {
                coords[idx] = Scalar::one();
            }
        }
        Element::from_coords(&self.algebra, coords)
    }

    /// Every projection of the lattice as an algebra element.
    pub fn projection_elements(&self) -> Vec<Element> {
        self.lattice
            .projections()
            .iter()
            .map(|p| self.projection_element(p))
            .collect()
    }

    /// Realizes an element back as an n×n matrix (for oracles and display).
    pub fn element_to_matrix(&self, x: &Element) -> Matrix {
        let n = self.lattice.space_dim();
        let mut m = Matrix::zero(n, n);
        for (idx, &(i, j)) in self.cells.iter().enumerate() {
            m.set(i, j, x.coords()[idx].clone());
        }
        m
    }
}

/// Builds `{T : (I−P)·T·P = 0 for all P in the lattice}` as a validated
/// structure-constant algebra with matrix-unit basis.
pub fn csl_algebra(lattice: &CsLattice) -> Result<CslAlgebra, AlgebraError> {
    let n = lattice.space_dim();
    let mut cells = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lattice.cell_allowed(i, j) {
                cells.push((i, j));
            }
        }
    }
    let basis: Vec<Matrix> = cells
        .iter()
        .map(|&(i, j)| {
            let mut m = Matrix::zero(n, n);
            m.set(i, j, Scalar::one());
            m
        })
        .collect();
    let algebra = from_matrix_basis(lattice.name(), &basis, &Matrix::identity(n))?;
    Ok(CslAlgebra { algebra, lattice: lattice.clone(), cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_lattice_gives_full_matrix_algebra() {
        let l = CsLattice::trivial("full2", 2);
        let csl = csl_algebra(&l).unwrap();
        assert_eq!(csl.algebra().dim(), 4);
    }

    #[test]
    fn one_step_lattice_gives_upper_triangular() {
        // solve (I-P)TP = 0 for P = e11: forbids the (1,0) cell
        let l = CsLattice::new("t2", 2, vec![
            vec![false, false],
            vec![true, false],
            vec![true, true],
        ])
        .unwrap();
        let csl = csl_algebra(&l).unwrap();
        assert_eq!(csl.algebra().dim(), 3);
        assert_eq!(csl.cells(), &[(0, 0), (0, 1), (1, 1)]);
    }

    #[test]
    fn chain_on_q3_gives_full_upper_triangular() {
        let l = CsLattice::chain("csl3", 3);
        let csl = csl_algebra(&l).unwrap();
        assert_eq!(csl.algebra().dim(), 6);
        assert!(csl.cells().iter().all(|&(i, j)| i <= j));
    }

    #[test]
    fn closure_violations_are_rejected() {
        // {0, e1, e2, I} on Q^2 without the join of e1, e2 is fine (join = I),
        // but dropping I breaks both membership and closure
        let err = CsLattice::new("bad", 2, vec![
            vec![false, false],
            vec![true, false],
            vec![false, true],
        ])
        .unwrap_err();
        assert_eq!(err, CslError::MissingIdentity);

        // closure under meet fails without 0 present — reported as missing zero
        let err = CsLattice::new("bad2", 2, vec![vec![true, false], vec![true, true]]).unwrap_err();
        assert_eq!(err, CslError::MissingZero);

        // genuine join-closure failure on Q^3
        let err = CsLattice::new("bad3", 3, vec![
            vec![false, false, false],
            vec![true, false, false],
            vec![false, true, false],
            vec![true, true, true],
        ])
        .unwrap_err();
        assert!(matches!(err, CslError::NotClosedJoin { .. }));
    }

    #[test]
    fn projection_elements_are_idempotent_members() {
        let l = CsLattice::chain("csl3", 3);
        let csl = csl_algebra(&l).unwrap();
        for p in csl.projection_elements() {
            assert_eq!(p.mul(&p), p);
        }
    }
}
