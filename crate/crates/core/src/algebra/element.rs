//! Elements of a structure-constant algebra: a coordinate vector plus a
//! shared handle to the owning algebra.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::Algebra;
use crate::exactlin::{format_vec, Scalar};

#[derive(Clone)]
pub struct Element {
    algebra: Arc<Algebra>,
    coords: Vec<Scalar>,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.algebra.name(), format_vec(&self.coords))
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.coords == other.coords
    }
}
impl Eq for Element {}

impl Element {
    pub fn from_coords(algebra: &Arc<Algebra>, coords: Vec<Scalar>) -> Self {
        assert_eq!(coords.len(), algebra.dim(), "coordinate length mismatch");
        Element { algebra: algebra.clone(), coords }
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Element { algebra: algebra.clone(), coords: vec![Scalar::zero(); algebra.dim()] }
    }

    pub fn unit(algebra: &Arc<Algebra>) -> Self {
        Element { algebra: algebra.clone(), coords: algebra.unit_coords().to_vec() }
    }

    pub fn basis(algebra: &Arc<Algebra>, i: usize) -> Self {
        let mut coords = vec![Scalar::zero(); algebra.dim()];
        coords[i] = Scalar::one();
        Element { algebra: algebra.clone(), coords }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    fn same_algebra(&self, other: &Element) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    fn check_same_algebra(&self, other: &Element) {
        assert!(self.same_algebra(other), "elements belong to different algebras");
    }

    pub fn add(&self, other: &Element) -> Element {
        self.check_same_algebra(other);
        let coords = self
            .coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a + b)
            .collect();
        Element { algebra: self.algebra.clone(), coords }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.check_same_algebra(other);
        let coords = self
            .coords
            .iter()
            .zip(other.coords.iter())
            .map(|(a, b)| a - b)
            .collect();
        Element { algebra: self.algebra.clone(), coords }
    }

    pub fn neg(&self) -> Element {
        let coords = self.coords.iter().map(|a| -a).collect();
        Element { algebra: self.algebra.clone(), coords }
    }

    pub fn scale(&self, k: &Scalar) -> Element {
        let coords = self.coords.iter().map(|a| a * k).collect();
        Element { algebra: self.algebra.clone(), coords }
    }

    /// Product through the structure tensor.
    pub fn mul(&self, other: &Element) -> Element {
        self.check_same_algebra(other);
        let coords = self.algebra.product_coords(&self.coords, &other.coords);
        Element { algebra: self.algebra.clone(), coords }
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self, other: &Element) -> Element {
        self.mul(other).sub(&other.mul(self))
    }

    /// `x∘y = xy + yx`.
    pub fn jordan(&self, other: &Element) -> Element {
        self.mul(other).add(&other.mul(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::format::matrix_units_algebra;
    use crate::exactlin::int;
    use rand::{Rng, SeedableRng};

    #[test]
    fn mul_is_bilinear() {
        let alg = matrix_units_algebra("m2", 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut rand_el = || {
            let coords: Vec<_> = (0..4).map(|_| int(rng.gen_range(-5..=5))).collect();
            Element::from_coords(&alg, coords)
        };
        for _ in 0..50 {
            let (x, y, z) = (rand_el(), rand_el(), rand_el());
            let k = int(3);
            assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            assert_eq!(x.add(&y).mul(&z), x.mul(&z).add(&y.mul(&z)));
            assert_eq!(x.scale(&k).mul(&y), x.mul(&y).scale(&k));
            assert_eq!(x.mul(&y.scale(&k)), x.mul(&y).scale(&k));
        }
    }

    #[test]
    #[should_panic(expected = "different algebras")]
    fn cross_algebra_mul_panics() {
        let a = matrix_units_algebra("a", 2);
        let b = crate::algebra::format::diagonal_algebra("b", 4);
        let _ = Element::unit(&a).mul(&Element::unit(&b));
    }
}
