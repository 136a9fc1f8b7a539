//! Finite-dimensional unital associative algebras over the rationals,
//! presented by structure constants.
//!
//! An [`Algebra`] stores the tensor `c[i][j][k]` with
//! `e_i · e_j = Σ_k c[i][j][k] e_k` and the coordinates of the unit.
//! Construction validates associativity and the unit laws on every basis
//! triple; a validated algebra is immutable and shared behind an `Arc`.

mod element;
pub mod format;
pub mod idempotent;

pub use element::Element;

use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{nullspace, solve_affine, Matrix, Scalar, Subspace};

/// Dimension cap. Solver unknowns scale as dim², and every shipped instance
/// stays well below this.
pub const MAX_DIM: usize = 32;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum AlgebraError {
    #[error("algebra dimension {0} exceeds the cap of {MAX_DIM}")]
    DimensionCap(usize),
    #[error("algebra dimension must be at least 1")]
    ZeroDimension,
    #[error("structure tensor has {got} entries, expected {expected}")]
    StructureSize { expected: usize, got: usize },
    #[error("unit vector has {got} coordinates, expected {expected}")]
    UnitSize { expected: usize, got: usize },
    #[error("associativity fails at basis triple ({i}, {j}, {k}): (e{i}·e{j})·e{k} ≠ e{i}·(e{j}·e{k})")]
    Associativity { i: usize, j: usize, k: usize },
    #[error("unit law fails on basis element {i} ({side} multiplication)")]
    UnitLaw { side: &'static str, i: usize },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("matrix basis is not closed under multiplication (product of basis {i} and {j})")]
    BasisNotClosed { i: usize, j: usize },
    #[error("matrix basis is linearly dependent")]
    BasisDependent,
    #[error("unit matrix does not lie in the span of the basis")]
    UnitOutsideSpan,
}

#[derive(Debug)]
pub struct Algebra {
    name: String,
    dim: usize,
    /// Flattened structure tensor, `c[(i*dim + j)*dim + k]`.
    structure: Vec<Scalar>,
    unit: Vec<Scalar>,
    /// Sparse view `products[i][j] = [(k, c_ijk) | c_ijk ≠ 0]` for fast
    /// element multiplication.
    products: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.structure == other.structure && self.unit == other.unit
    }
}

impl Algebra {
    /// Validated construction from a structure tensor.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        structure: Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if dim > MAX_DIM {
            return Err(AlgebraError::DimensionCap(dim));
        }
        let expected = dim * dim * dim;
        if structure.len() != expected {
            return Err(AlgebraError::StructureSize { expected, got: structure.len() });
        }
        if unit.len() != dim {
            return Err(AlgebraError::UnitSize { expected: dim, got: unit.len() });
        }
        let mut products = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let mut entries = Vec::new();
                for k in 0..dim {
                    let c = &structure[(i * dim + j) * dim + k];
                    if !c.is_zero() {
                        entries.push((k, c.clone()));
                    }
                }
                products[i][j] = entries;
            }
        }
        let alg = Algebra { name: name.into(), dim, structure, unit, products };
        alg.check_unit_laws()?;
        alg.check_associativity()?;
        Ok(Arc::new(alg))
    }

    fn mul_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for (k, c) in &self.products[i][j] {
                    out[*k] += &f * c;
                }
            }
        }
        out
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (k, c) in &self.products[i][j] {
            out[*k] = c.clone();
        }
        out
    }

    fn check_unit_laws(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            let mut e = vec![Scalar::zero(); self.dim];
            e[i] = Scalar::one();
            if self.mul_coords(&self.unit, &e) != e {
                return Err(AlgebraError::UnitLaw { side: "left", i });
            }
            if self.mul_coords(&e, &self.unit) != e {
                return Err(AlgebraError::UnitLaw { side: "right", i });
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), AlgebraError> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let mut e_k = vec![Scalar::zero(); self.dim];
                    e_k[k] = Scalar::one();
                    let lhs = self.mul_coords(&ij, &e_k);
                    let jk = self.basis_product(j, k);
                    let mut e_i = vec![Scalar::zero(); self.dim];
                    e_i[i] = Scalar::one();
                    let rhs = self.mul_coords(&e_i, &jk);
                    if lhs != rhs {
                        return Err(AlgebraError::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_coords(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn structure_entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure(&self) -> &[Scalar] {
        &self.structure
    }

    pub(crate) fn product_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.mul_coords(x, y)
    }

    /// Matrix of left multiplication by `x`: column `j` holds `x·e_j`.
    pub fn left_mult_operator(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (k, c) in &self.products[i][j] {
                    let v = m.get(*k, j) + xi * c;
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `x`: column `j` holds `e_j·x`.
    pub fn right_mult_operator(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for (k, c) in &self.products[j][i] {
                    let v = m.get(*k, j) + xi * c;
                    m.set(*k, j, v);
                }
            }
        }
        m
    }
}

/// Center `{z : z·e_i = e_i·z for all basis i}` as a subspace of coordinate
/// space. Rows stack the commutation constraints for every basis element.
pub fn center(algebra: &Arc<Algebra>) -> Subspace {
    let dim = algebra.dim();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(dim * dim);
    // unknown z: for each basis j and coordinate k, Σ_i z_i (c[i][j][k] - c[j][i][k]) = 0
    for j in 0..dim {
        for k in 0..dim {
            let mut row = vec![Scalar::zero(); dim];
            for (i, slot) in row.iter_mut().enumerate() {
                *slot = algebra.structure_entry(i, j, k) - algebra.structure_entry(j, i, k);
            }
            rows.push(row);
        }
    }
    nullspace(&Matrix::from_rows(rows))
}

/// Invertibility of the left regular representation; in a finite-dimensional
/// unital algebra this is equivalent to two-sided invertibility.
pub fn is_invertible(x: &Element) -> bool {
    let alg = x.algebra();
    let op = alg.left_mult_operator(x.coords());
    let (_, rank) = crate::exactlin::rref(&op);
    rank == alg.dim()
}

/// Exact inverse. Fails when the element is not invertible.
pub fn inverse(x: &Element) -> Result<Element, AlgebraError> {
    let alg = x.algebra().clone();
    let op = alg.left_mult_operator(x.coords());
    let Some((y, _)) = solve_affine(&op, alg.unit_coords()) else {
        return Err(AlgebraError::NotInvertible);
    };
    let candidate = Element::from_coords(&alg, y);
    // x·y = 1 gives y·x = 1 as well in finite dimension; assert both anyway.
    debug_assert_eq!(x.mul(&candidate), Element::unit(&alg));
    debug_assert_eq!(candidate.mul(x), Element::unit(&alg));
    Ok(candidate)
}

/// Smallest integer k (ordered 0, 1, -1, 2, -2, …) with `k·I + x` invertible.
/// Over the rationals the left-multiplication operator has at most `dim`
/// rational eigenvalues, so the scan terminates.
pub fn find_invertible_shift(x: &Element) -> i64 {
    let alg = x.algebra();
    let mut k: i64 = 0;
    loop {
        let shifted = Element::unit(alg).scale(&crate::exactlin::int(k)).add(x);
        if is_invertible(&shifted) {
            return k;
        }
        k = if k > 0 { -k } else { -k + 1 };
        assert!(
            k <= alg.dim() as i64 + 1,
            "no invertible shift within the spectral bound"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, ratio};

    pub(crate) fn m2() -> Arc<Algebra> {
        // matrix units e11, e12, e21, e22
        format::matrix_units_algebra("m2-test", 2)
    }

    pub(crate) fn t2() -> Arc<Algebra> {
        // basis e11, e12, e22 of the upper triangular 2x2 algebra
        let mats = vec![
            Matrix::from_i64(&[&[1, 0], &[0, 0]]),
            Matrix::from_i64(&[&[0, 1], &[0, 0]]),
            Matrix::from_i64(&[&[0, 0], &[0, 1]]),
        ];
        format::from_matrix_basis("t2-test", &mats, &Matrix::identity(2)).unwrap()
    }

    #[test]
    fn unit_acts_as_identity() {
        let alg = m2();
        let x = Element::from_coords(&alg, vec![int(2), int(-1), ratio(1, 3), int(5)]);
        let one = Element::unit(&alg);
        assert_eq!(one.mul(&x), x);
        assert_eq!(x.mul(&one), x);
    }

    #[test]
    fn matrix_unit_products() {
        let alg = m2();
        let e11 = Element::basis(&alg, 0);
        let e12 = Element::basis(&alg, 1);
        assert_eq!(e11.mul(&e12), e12);
        assert_eq!(e12.mul(&e11), Element::zero(&alg));
        assert_eq!(e11.commutator(&e12), e12);
    }

    #[test]
    fn commutator_and_jordan_identities() {
        let alg = t2();
        let x = Element::from_coords(&alg, vec![int(1), int(2), int(-3)]);
        assert_eq!(x.commutator(&x), Element::zero(&alg));
        let one = Element::unit(&alg);
        assert_eq!(one.jordan(&x), x.scale(&int(2)));
    }

    #[test]
    fn center_dimensions() {
        assert_eq!(center(&m2()).dim(), 1);
        // hand nullspace of the commutation constraints: z = a·e11 + b·e12 + c·e22
        // commutes with e12 iff a = c and with e11 iff b = 0, so dim 1
        assert_eq!(center(&t2()).dim(), 1);
        let diag = format::diagonal_algebra("diag2-test", 2);
        assert_eq!(center(&diag).dim(), 2);
    }

    #[test]
    fn invertibility_and_shifts() {
        let alg = m2();
        let one = Element::unit(&alg);
        assert!(is_invertible(&one));
        assert_eq!(find_invertible_shift(&one.sub(&one)), 1);
        assert_eq!(find_invertible_shift(&one), 0);
        let e12 = Element::basis(&alg, 1);
        assert!(!is_invertible(&e12));
        assert_eq!(find_invertible_shift(&e12), 1);
        let minus_one = one.neg();
        assert_eq!(find_invertible_shift(&minus_one), 0);
    }

    #[test]
    fn inverse_round_trips() {
        let alg = m2();
        let one = Element::unit(&alg);
        assert_eq!(inverse(&one).unwrap(), one);
        let e12 = Element::basis(&alg, 1);
        let u = one.add(&e12); // I + e12, unipotent
        assert_eq!(inverse(&u).unwrap(), one.sub(&e12));
        let two = one.scale(&int(2));
        assert_eq!(inverse(&two).unwrap(), one.scale(&ratio(1, 2)));
        assert_eq!(inverse(&e12), Err(AlgebraError::NotInvertible));
    }

    #[test]
    fn construction_rejects_broken_associativity() {
        let alg = m2();
        let mut structure = alg.structure().to_vec();
        // tamper with e12·e21: add a spurious e12 component (invisible to the
        // unit laws, so the associativity check is what has to catch it)
        let dim = 4;
        structure[(1 * dim + 2) * dim + 1] = int(1);
        let err = Algebra::new("broken", dim, structure, alg.unit_coords().to_vec()).unwrap_err();
        assert!(matches!(err, AlgebraError::Associativity { .. }));
    }

    #[test]
    fn construction_rejects_broken_unit() {
        let alg = m2();
        let mut unit = alg.unit_coords().to_vec();
        unit[3] = int(0); // e11 is not a two-sided unit
        let err = Algebra::new("broken", 4, alg.structure().to_vec(), unit).unwrap_err();
        assert!(matches!(err, AlgebraError::UnitLaw { .. }));
    }

    #[test]
    fn construction_rejects_oversized() {
        let err = Algebra::new("big", MAX_DIM + 1, vec![], vec![]).unwrap_err();
        assert_eq!(err, AlgebraError::DimensionCap(MAX_DIM + 1));
    }

    #[test]
    fn mult_operators_agree_with_products() {
        let alg = t2();
        let x = Element::from_coords(&alg, vec![int(1), int(-2), int(3)]);
        let y = Element::from_coords(&alg, vec![ratio(1, 2), int(0), int(7)]);
        let lx = alg.left_mult_operator(x.coords());
        assert_eq!(lx.mul_vec(y.coords()), x.mul(&y).coords().to_vec());
        let rx = alg.right_mult_operator(x.coords());
        assert_eq!(rx.mul_vec(y.coords()), y.mul(&x).coords().to_vec());
    }

    #[test]
    fn center_elements_commute_with_random_elements() {
        use rand::{Rng, SeedableRng};
        let alg = t2();
        let z_space = center(&alg);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for zb in z_space.basis() {
            let z = Element::from_coords(&alg, zb.clone());
            for _ in 0..100 {
                let coords: Vec<_> = (0..alg.dim()).map(|_| int(rng.gen_range(-4..=4))).collect();
                let x = Element::from_coords(&alg, coords);
                assert_eq!(z.mul(&x), x.mul(&z));
            }
        }
    }

    #[test]
    fn inverse_round_trip_on_random_invertibles() {
        use rand::{Rng, SeedableRng};
        let alg = m2();
        let one = Element::unit(&alg);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut seen = 0;
        while seen < 100 {
            let coords: Vec<_> = (0..alg.dim()).map(|_| int(rng.gen_range(-3..=3))).collect();
            let x = Element::from_coords(&alg, coords);
            if !is_invertible(&x) {
                continue;
            }
            seen += 1;
            let inv = inverse(&x).unwrap();
            assert_eq!(x.mul(&inv), one);
            assert_eq!(inv.mul(&x), one);
        }
    }
}
