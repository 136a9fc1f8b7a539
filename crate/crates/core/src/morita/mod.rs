//! Morita contexts, generalized matrix algebras, and finite CSL pattern
//! algebras.
//!
//! A context bundles two algebras A, B, an (A,B)-bimodule M, a (B,A)-bimodule
//! N, and two pairings `phi: M⊗N → A`, `psi: N⊗M → B`. Different pairing
//! choices give different algebras for the same quadruple, so the file format
//! always requires both pairings explicitly. When the pairing axioms hold the
//! 2×2 block multiplication rule yields an associative algebra.

pub mod csl;
pub mod format;
mod gma;

pub use csl::{csl_algebra, CsLattice, CslAlgebra, CslError};
pub use gma::{Corner, GmAlgebra};

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, Element};
use crate::exactlin::{format_vec, nullspace, Matrix, Scalar};

#[derive(Debug, Error)]
pub enum MoritaError {
    #[error("context failed validation:\n{0}")]
    InvalidContext(ValidationReport),
    #[error("bimodule `{label}` failed validation:\n{report}")]
    InvalidBimodule { label: String, report: ValidationReport },
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}

/// One violated axiom with its witnessing basis tuple.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Violation {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "  {} at {:?}: {}", v.axiom, v.indices, v.detail)?;
        }
        Ok(())
    }
}

/// A bimodule presented by action tensors.
///
/// `left_action[a_idx][m_idx]` holds the coordinates of `a·m`;
/// `right_action[m_idx][b_idx]` holds the coordinates of `m·b`. Unit laws,
/// associativity of each action, and commutation of the two actions are
/// checked on basis triples at construction.
#[derive(Debug, Clone)]
pub struct Bimodule {
    label: String,
    dim: usize,
    left_algebra: Arc<Algebra>,
    right_algebra: Arc<Algebra>,
    left_action: Vec<Scalar>,
    right_action: Vec<Scalar>,
}

impl Bimodule {
    pub fn new(
        label: impl Into<String>,
        left_algebra: Arc<Algebra>,
        right_algebra: Arc<Algebra>,
        dim: usize,
        left_action: Vec<Scalar>,
        right_action: Vec<Scalar>,
    ) -> Result<Bimodule, MoritaError> {
        let label = label.into();
        assert_eq!(
            left_action.len(),
            left_algebra.dim() * dim * dim,
            "left action tensor size"
        );
        assert_eq!(
            right_action.len(),
            dim * right_algebra.dim() * dim,
            "right action tensor size"
        );
        let b = Bimodule { label: label.clone(), dim, left_algebra, right_algebra, left_action, right_action };
        let violations = b.axiom_violations();
        if violations.is_empty() {
            Ok(b)
        } else {
            Err(MoritaError::InvalidBimodule { label, report: ValidationReport { violations } })
        }
    }

    /// Zero module between two algebras.
    pub fn zero(label: impl Into<String>, left_algebra: Arc<Algebra>, right_algebra: Arc<Algebra>) -> Bimodule {
        Bimodule {
            label: label.into(),
            dim: 0,
            left_algebra,
            right_algebra,
            left_action: Vec::new(),
            right_action: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left_algebra
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right_algebra
    }

    fn left_basis_action(&self, a_idx: usize, m_idx: usize) -> &[Scalar] {
        let d = self.dim;
        let off = (a_idx * d + m_idx) * d;
        &self.left_action[off..off + d]
    }

    fn right_basis_action(&self, m_idx: usize, b_idx: usize) -> &[Scalar] {
        let d = self.dim;
        let off = (m_idx * self.right_algebra.dim() + b_idx) * d;
        &self.right_action[off..off + d]
    }

    /// `a·m` for arbitrary coordinates, by bilinear extension.
    pub fn apply_left(&self, a: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, mj) in m.iter().enumerate() {
                if mj.is_zero() {
                    continue;
                }
                let f = ai * mj;
                for (k, c) in self.left_basis_action(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &f * c;
                    }
                }
            }
        }
        out
    }

    /// `m·b` for arbitrary coordinates.
    pub fn apply_right(&self, m: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (j, mj) in m.iter().enumerate() {
            if mj.is_zero() {
                continue;
            }
            for (i, bi) in b.iter().enumerate() {
                if bi.is_zero() {
                    continue;
                }
                let f = mj * bi;
                for (k, c) in self.right_basis_action(j, i).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &f * c;
                    }
                }
            }
        }
        out
    }

    fn axiom_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let la = &self.left_algebra;
        let ra = &self.right_algebra;
        let d = self.dim;
        let mut record = |axiom: &str, indices: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]| {
            if lhs != rhs {
                out.push(Violation {
                    axiom: format!("bimodule {}: {}", self.label, axiom),
                    indices,
                    detail: format!("{} ≠ {}", format_vec(lhs), format_vec(rhs)),
                });
            }
        };
        for j in 0..d {
            let m = basis_vec(d, j);
            record("unit acts as identity (left)", vec![j], &self.apply_left(la.unit_coords(), &m), &m);
            record("unit acts as identity (right)", vec![j], &self.apply_right(&m, ra.unit_coords()), &m);
        }
        for i in 0..la.dim() {
            for i2 in 0..la.dim() {
                let prod = la.product_coords(&basis_vec(la.dim(), i), &basis_vec(la.dim(), i2));
                for j in 0..d {
                    let m = basis_vec(d, j);
                    let lhs = self.apply_left(&prod, &m);
                    let rhs = self.apply_left(&basis_vec(la.dim(), i), &self.apply_left(&basis_vec(la.dim(), i2), &m));
                    record("left action associativity", vec![i, i2, j], &lhs, &rhs);
                }
            }
        }
        for i in 0..ra.dim() {
            for i2 in 0..ra.dim() {
                let prod = ra.product_coords(&basis_vec(ra.dim(), i), &basis_vec(ra.dim(), i2));
                for j in 0..d {
                    let m = basis_vec(d, j);
                    let lhs = self.apply_right(&m, &prod);
                    let rhs = self.apply_right(&self.apply_right(&m, &basis_vec(ra.dim(), i)), &basis_vec(ra.dim(), i2));
                    record("right action associativity", vec![j, i, i2], &lhs, &rhs);
                }
            }
        }
        for i in 0..la.dim() {
            for j in 0..d {
                for k in 0..ra.dim() {
                    let m = basis_vec(d, j);
                    let lhs = self.apply_right(&self.apply_left(&basis_vec(la.dim(), i), &m), &basis_vec(ra.dim(), k));
                    let rhs = self.apply_left(&basis_vec(la.dim(), i), &self.apply_right(&m, &basis_vec(ra.dim(), k)));
                    record("actions commute", vec![i, j, k], &lhs, &rhs);
                }
            }
        }
        out
    }
}

pub(crate) fn basis_vec(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = num_traits::One::one();
    v
}

/// The full context. Construction checks only shapes; the pairing axioms are
/// reported by [`validate_context`] and enforced by [`GmAlgebra::assemble`].
#[derive(Debug, Clone)]
pub struct MoritaContext {
    name: String,
    a: Arc<Algebra>,
    b: Arc<Algebra>,
    m: Bimodule,
    n: Bimodule,
    /// `phi[(m_idx*dimN + n_idx)*dimA ..]`: coordinates of φ(m⊗n) in A.
    phi: Vec<Scalar>,
    /// `psi[(n_idx*dimM + m_idx)*dimB ..]`: coordinates of ψ(n⊗m) in B.
    psi: Vec<Scalar>,
}

impl MoritaContext {
    pub fn new(
        name: impl Into<String>,
        a: Arc<Algebra>,
        b: Arc<Algebra>,
        m: Bimodule,
        n: Bimodule,
        phi: Vec<Scalar>,
        psi: Vec<Scalar>,
    ) -> MoritaContext {
        assert_eq!(*m.left_algebra(), a, "M must be a left A-module");
        assert_eq!(*m.right_algebra(), b, "M must be a right B-module");
        assert_eq!(*n.left_algebra(), b, "N must be a left B-module");
        assert_eq!(*n.right_algebra(), a, "N must be a right A-module");
        assert_eq!(phi.len(), m.dim() * n.dim() * a.dim(), "phi tensor size");
        assert_eq!(psi.len(), n.dim() * m.dim() * b.dim(), "psi tensor size");
        MoritaContext { name: name.into(), a, b, m, n, phi, psi }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn a(&self) -> &Arc<Algebra> {
        &self.a
    }

    pub fn b(&self) -> &Arc<Algebra> {
        &self.b
    }

    pub fn m(&self) -> &Bimodule {
        &self.m
    }

    pub fn n(&self) -> &Bimodule {
        &self.n
    }

    /// φ(m⊗n) by bilinear extension; result in A-coordinates.
    pub fn phi(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        pairing_apply(&self.phi, m, n, self.a.dim())
    }

    /// ψ(n⊗m) by bilinear extension; result in B-coordinates.
    pub fn psi(&self, n: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        pairing_apply(&self.psi, n, m, self.b.dim())
    }
}

fn pairing_apply(tensor: &[Scalar], x: &[Scalar], y: &[Scalar], out_dim: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); out_dim];
    let y_dim = y.len();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let f = xi * yj;
            let off = (i * y_dim + j) * out_dim;
            for k in 0..out_dim {
                let c = &tensor[off + k];
                if !c.is_zero() {
                    out[k] += &f * c;
                }
            }
        }
    }
    out
}

/// Checks every context axiom on basis tuples and reports each violation
/// with its witness. An empty report means the context is a valid input for
/// assembly.
pub fn validate_context(ctx: &MoritaContext) -> ValidationReport {
    let mut violations = Vec::new();
    violations.extend(ctx.m.axiom_violations());
    violations.extend(ctx.n.axiom_violations());

    let da = ctx.a.dim();
    let db = ctx.b.dim();
    let dm = ctx.m.dim();
    let dn = ctx.n.dim();
    let mut record = |axiom: &str, indices: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]| {
        if lhs != rhs {
            violations.push(Violation {
                axiom: axiom.to_string(),
                indices,
                detail: format!("{} ≠ {}", format_vec(lhs), format_vec(rhs)),
            });
        }
    };

    for p in 0..da {
        let a = basis_vec(da, p);
        for i in 0..dm {
            let m = basis_vec(dm, i);
            for j in 0..dn {
                let n = basis_vec(dn, j);
                // φ((a·m)⊗n) = a·φ(m⊗n)
                let lhs = ctx.phi(&ctx.m.apply_left(&a, &m), &n);
                let rhs = ctx.a.product_coords(&a, &ctx.phi(&m, &n));
                record("phi: left A-linear", vec![p, i, j], &lhs, &rhs);
                // φ(m⊗(n·a)) = φ(m⊗n)·a
                let lhs = ctx.phi(&m, &ctx.n.apply_right(&n, &a));
                let rhs = ctx.a.product_coords(&ctx.phi(&m, &n), &a);
                record("phi: right A-linear", vec![i, j, p], &lhs, &rhs);
                // ψ((n·a)⊗m) = ψ(n⊗(a·m))
                let lhs = ctx.psi(&ctx.n.apply_right(&n, &a), &m);
                let rhs = ctx.psi(&n, &ctx.m.apply_left(&a, &m));
                record("psi: balanced over A", vec![j, p, i], &lhs, &rhs);
            }
        }
    }
    for p in 0..db {
        let b = basis_vec(db, p);
        for i in 0..dm {
            let m = basis_vec(dm, i);
            for j in 0..dn {
                let n = basis_vec(dn, j);
                // ψ((b·n)⊗m) = b·ψ(n⊗m)
                let lhs = ctx.psi(&ctx.n.apply_left(&b, &n), &m);
                let rhs = ctx.b.product_coords(&b, &ctx.psi(&n, &m));
                record("psi: left B-linear", vec![p, j, i], &lhs, &rhs);
                // ψ(n⊗(m·b)) = ψ(n⊗m)·b
                let lhs = ctx.psi(&n, &ctx.m.apply_right(&m, &b));
                let rhs = ctx.b.product_coords(&ctx.psi(&n, &m), &b);
                record("psi: right B-linear", vec![j, i, p], &lhs, &rhs);
                // φ((m·b)⊗n) = φ(m⊗(b·n))
                let lhs = ctx.phi(&ctx.m.apply_right(&m, &b), &n);
                let rhs = ctx.phi(&m, &ctx.n.apply_left(&b, &n));
                record("phi: balanced over B", vec![i, p, j], &lhs, &rhs);
            }
        }
    }
    // compatibility: φ(m⊗n)·m' = m·ψ(n⊗m') and ψ(n⊗m)·n' = n·φ(m⊗n')
    for i in 0..dm {
        let m = basis_vec(dm, i);
        for j in 0..dn {
            let n = basis_vec(dn, j);
            for k in 0..dm {
                let m2 = basis_vec(dm, k);
                let lhs = ctx.m.apply_left(&ctx.phi(&m, &n), &m2);
                let rhs = ctx.m.apply_right(&m, &ctx.psi(&n, &m2));
                record("compatibility: φ(m⊗n)·m' = m·ψ(n⊗m')", vec![i, j, k], &lhs, &rhs);
            }
            for k in 0..dn {
                let n2 = basis_vec(dn, k);
                let lhs = ctx.n.apply_left(&ctx.psi(&n, &m), &n2);
                let rhs = ctx.n.apply_right(&n, &ctx.phi(&m, &n2));
                record("compatibility: ψ(n⊗m)·n' = n·φ(m⊗n')", vec![j, i, k], &lhs, &rhs);
            }
        }
    }
    ValidationReport { violations }
}

/// Faithfulness flags for the two bimodules of a context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaithfulnessFlags {
    /// A acts faithfully on M from the left.
    pub m_left_faithful: bool,
    /// B acts faithfully on M from the right.
    pub m_right_faithful: bool,
    /// B acts faithfully on N from the left.
    pub n_left_faithful: bool,
    /// A acts faithfully on N from the right.
    pub n_right_faithful: bool,
}

impl FaithfulnessFlags {
    /// M is a faithful (A,B)-bimodule.
    pub fn m_faithful_bimodule(&self) -> bool {
        self.m_left_faithful && self.m_right_faithful
    }

    /// N is a faithful (B,A)-bimodule.
    pub fn n_faithful_bimodule(&self) -> bool {
        self.n_left_faithful && self.n_right_faithful
    }

    /// Any of the hypotheses licensing the structure theorems: M faithful,
    /// N faithful, both left-faithful, or both right-faithful.
    pub fn any_theorem_hypothesis(&self) -> bool {
        self.m_faithful_bimodule()
            || self.n_faithful_bimodule()
            || (self.m_left_faithful && self.n_left_faithful)
            || (self.m_right_faithful && self.n_right_faithful)
    }
}

fn action_is_injective(
    alg_dim: usize,
    mod_dim: usize,
    action: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
) -> bool {
    if alg_dim == 0 {
        return true;
    }
    // rows: for each module basis j and output coordinate k, the linear
    // functional x ↦ (x·m_j)_k over the algebra coordinates x
    let mut rows = Vec::with_capacity(mod_dim * mod_dim);
    for j in 0..mod_dim {
        let m = basis_vec(mod_dim, j);
        let images: Vec<Vec<Scalar>> = (0..alg_dim)
            .map(|p| action(&basis_vec(alg_dim, p), &m))
            .collect();
        for k in 0..mod_dim {
            let row: Vec<Scalar> = (0..alg_dim).map(|p| images[p][k].clone()).collect();
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return false; // zero module: every element acts as zero
    }
    nullspace(&Matrix::from_rows(rows)).dim() == 0
}

/// Computes the four faithfulness flags of a context.
pub fn faithfulness(ctx: &MoritaContext) -> FaithfulnessFlags {
    let m = ctx.m();
    let n = ctx.n();
    FaithfulnessFlags {
        m_left_faithful: action_is_injective(ctx.a.dim(), m.dim(), |a, x| m.apply_left(a, x)),
        m_right_faithful: action_is_injective(ctx.b.dim(), m.dim(), |b, x| m.apply_right(x, b)),
        n_left_faithful: action_is_injective(ctx.b.dim(), n.dim(), |b, x| n.apply_left(b, x)),
        n_right_faithful: action_is_injective(ctx.a.dim(), n.dim(), |a, x| n.apply_right(x, a)),
    }
}

/// P·U·P corner check: the A-corner of the assembled algebra multiplies like
/// A itself (after the basis identification). Used as a cross-module
/// consistency test.
pub fn corner_matches_a(gm: &GmAlgebra) -> bool {
    let a = gm.context().a();
    let da = a.dim();
    for i in 0..da {
        for j in 0..da {
            let ei = gm.embed(Corner::A, &basis_vec(da, i));
            let ej = gm.embed(Corner::A, &basis_vec(da, j));
            let prod = ei.mul(&ej);
            let expected = a.product_coords(&basis_vec(da, i), &basis_vec(da, j));
            if gm.project(Corner::A, &prod) != expected {
                return false;
            }
            // the product must also stay inside the corner
            if gm.embed(Corner::A, &gm.project(Corner::A, &prod)) != prod {
                return false;
            }
        }
    }
    true
}

pub use gma::assemble;

#[cfg(test)]
mod tests;
