//! Generalized matrix algebra assembly.
//!
//! The assembled algebra has basis A-basis, M-basis, N-basis, B-basis in
//! that order, so corner bookkeeping is deterministic and reports are
//! reproducible. Multiplication follows the 2×2 block rule
//! `[[A,M],[N,B]]·[[A',M'],[N',B']] =
//!  [[AA'+φ(M,N'), AM'+MB'],[NA'+BN', ψ(N,M')+BB']]`.

use std::sync::Arc;

use num_traits::Zero;

use super::{basis_vec, validate_context, MoritaContext, MoritaError};
use crate::algebra::{Algebra, Element};
use crate::exactlin::{Scalar, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corner {
    A,
    M,
    N,
    B,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::A, Corner::M, Corner::N, Corner::B];

    pub fn index(self) -> usize {
        match self {
            Corner::A => 0,
            Corner::M => 1,
            Corner::N => 2,
            Corner::B => 3,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GmAlgebra {
    algebra: Arc<Algebra>,
    context: MoritaContext,
    dims: [usize; 4],
    offsets: [usize; 4],
    corner_index: Vec<Corner>,
    p: Element,
}

/// Assembles the generalized matrix algebra of a context. Refuses contexts
/// that fail validation; the assembled structure tensor is re-validated by
/// the algebra constructor (associativity is a consequence of the pairing
/// axioms, and this re-check keeps the two modules honest with each other).
pub fn assemble(ctx: &MoritaContext) -> Result<GmAlgebra, MoritaError> {
    let report = validate_context(ctx);
    if !report.is_valid() {
        return Err(MoritaError::InvalidContext(report));
    }
    let da = ctx.a().dim();
    let dm = ctx.m().dim();
    let dn = ctx.n().dim();
    let db = ctx.b().dim();
    let dims = [da, dm, dn, db];
    let offsets = [0, da, da + dm, da + dm + dn];
    let total = da + dm + dn + db;

    let mut corner_index = Vec::with_capacity(total);
    for (c, &d) in Corner::ALL.iter().zip(dims.iter()) {
        corner_index.extend(std::iter::repeat(*c).take(d));
    }

    // place corner-local coordinates into a global coordinate vector
    let place = |corner: Corner, coords: &[Scalar]| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); total];
        let off = offsets[corner.index()];
        for (k, x) in coords.iter().enumerate() {
            v[off + k] = x.clone();
        }
        v
    };

    let mut structure = Vec::with_capacity(total * total * total);
    for gi in 0..total {
        let ci = corner_index[gi];
        let li = gi - offsets[ci.index()];
        for gj in 0..total {
            let cj = corner_index[gj];
            let lj = gj - offsets[cj.index()];
            let prod: Vec<Scalar> = match (ci, cj) {
                (Corner::A, Corner::A) => place(
                    Corner::A,
                    &ctx.a().product_coords(&basis_vec(da, li), &basis_vec(da, lj)),
                ),
                (Corner::A, Corner::M) => place(
                    Corner::M,
                    &ctx.m().apply_left(&basis_vec(da, li), &basis_vec(dm, lj)),
                ),
                (Corner::M, Corner::B) => place(
                    Corner::M,
                    &ctx.m().apply_right(&basis_vec(dm, li), &basis_vec(db, lj)),
                ),
                (Corner::M, Corner::N) => place(
                    Corner::A,
                    &ctx.phi(&basis_vec(dm, li), &basis_vec(dn, lj)),
                ),
                (Corner::N, Corner::M) => place(
                    Corner::B,
                    &ctx.psi(&basis_vec(dn, li), &basis_vec(dm, lj)),
                ),
                (Corner::N, Corner::A) => place(
                    Corner::N,
                    &ctx.n().apply_right(&basis_vec(dn, li), &basis_vec(da, lj)),
                ),
                (Corner::B, Corner::N) => place(
                    Corner::N,
                    &ctx.n().apply_left(&basis_vec(db, li), &basis_vec(dn, lj)),
                ),
                (Corner::B, Corner::B) => place(
                    Corner::B,
                    &ctx.b().product_coords(&basis_vec(db, li), &basis_vec(db, lj)),
                ),
                _ => vec![Scalar::zero(); total],
            };
            structure.extend(prod);
        }
    }
    let mut unit = vec![Scalar::zero(); total];
    for (k, x) in ctx.a().unit_coords().iter().enumerate() {
        unit[k] = x.clone();
    }
    for (k, x) in ctx.b().unit_coords().iter().enumerate() {
        unit[offsets[3] + k] = x.clone();
    }

    let algebra = Algebra::new(ctx.name(), total, structure, unit)?;
    let p_coords = place(Corner::A, ctx.a().unit_coords());
    let p = Element::from_coords(&algebra, p_coords);
    debug_assert_eq!(p.mul(&p), p, "I_A ⊕ 0 must be idempotent");

    Ok(GmAlgebra { algebra, context: ctx.clone(), dims, offsets, corner_index, p })
}

impl GmAlgebra {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn context(&self) -> &MoritaContext {
        &self.context
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn corner_dim(&self, corner: Corner) -> usize {
        self.dims[corner.index()]
    }

    pub fn corner_offset(&self, corner: Corner) -> usize {
        self.offsets[corner.index()]
    }

    pub fn corner_of(&self, global_index: usize) -> Corner {
        self.corner_index[global_index]
    }

    /// The idempotent I_A ⊕ 0.
    pub fn p(&self) -> &Element {
        &self.p
    }

    /// Corner-local coordinates lifted into the full algebra.
    pub fn embed(&self, corner: Corner, coords: &[Scalar]) -> Element {
        assert_eq!(coords.len(), self.corner_dim(corner), "corner coordinate length");
        let mut v = vec![Scalar::zero(); self.dim()];
        let off = self.corner_offset(corner);
        for (k, x) in coords.iter().enumerate() {
            v[off + k] = x.clone();
        }
        Element::from_coords(&self.algebra, v)
    }

    /// Projection of a full element onto one corner's local coordinates.
    pub fn project(&self, corner: Corner, x: &Element) -> Vec<Scalar> {
        let off = self.corner_offset(corner);
        x.coords()[off..off + self.corner_dim(corner)].to_vec()
    }

    /// Element `[[a, m], [n, b]]` from the four corner coordinate vectors.
    pub fn element_from_corners(
        &self,
        a: &[Scalar],
        m: &[Scalar],
        n: &[Scalar],
        b: &[Scalar],
    ) -> Element {
        assert_eq!(a.len(), self.dims[0]);
        assert_eq!(m.len(), self.dims[1]);
        assert_eq!(n.len(), self.dims[2]);
        assert_eq!(b.len(), self.dims[3]);
        let mut v = Vec::with_capacity(self.dim());
        v.extend(a.iter().cloned());
        v.extend(m.iter().cloned());
        v.extend(n.iter().cloned());
        v.extend(b.iter().cloned());
        Element::from_coords(&self.algebra, v)
    }

    /// The corner as a subspace of the full coordinate space.
    pub fn corner_subspace(&self, corner: Corner) -> Subspace {
        let off = self.corner_offset(corner);
        let rows = (0..self.corner_dim(corner))
            .map(|k| {
                let mut v = vec![Scalar::zero(); self.dim()];
                v[off + k] = num_traits::One::one();
                v
            })
            .collect();
        Subspace::from_rows(self.dim(), rows)
    }

    /// True when the element has support only in the given corner.
    pub fn lies_in_corner(&self, corner: Corner, x: &Element) -> bool {
        let off = self.corner_offset(corner);
        let d = self.corner_dim(corner);
        x.coords()
            .iter()
            .enumerate()
            .all(|(i, v)| (off..off + d).contains(&i) || v.is_zero())
    }
}
