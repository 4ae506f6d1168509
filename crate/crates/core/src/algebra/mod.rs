//! Exact arithmetic kernels: prime field, quadratic extension, univariate
//! polynomials, and dense linear algebra over a field.
//!
//! Everything here is deterministic: the same inputs produce bit-identical
//! outputs across runs.

pub mod factor;
pub mod fp;
pub mod fp2;
pub mod matrix;
pub mod poly;

pub use fp::{is_prime_u64, FpCtx};
pub use fp2::{Fp2Ctx, Fp2El};
pub use matrix::Matrix;
pub use poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("modulus {0} is not an odd prime >= 5")]
    BadModulus(u64),
    #[error("no square root: {0} is a quadratic non-residue")]
    NoRoot(u64),
    #[error("division by zero polynomial")]
    ZeroPolyDivisor,
}

/// A field given as a context value; elements are plain `Copy` data.
///
/// Polynomial and matrix code is generic over this so the same routines run
/// over `F_p` and `F_{p²}`.
pub trait Field {
    type Elem: Copy + Eq + core::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }
}

impl Field for FpCtx {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        FpCtx::add(self, a, b)
    }
    fn sub(&self, a: u64, b: u64) -> u64 {
        FpCtx::sub(self, a, b)
    }
    fn neg(&self, a: u64) -> u64 {
        FpCtx::neg(self, a)
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        FpCtx::mul(self, a, b)
    }
    fn inv(&self, a: u64) -> Option<u64> {
        FpCtx::inv(self, a)
    }
}

impl Field for Fp2Ctx {
    type Elem = Fp2El;

    fn zero(&self) -> Fp2El {
        Fp2El::new(0, 0)
    }
    fn one(&self) -> Fp2El {
        Fp2El::new(1, 0)
    }
    fn add(&self, a: Fp2El, b: Fp2El) -> Fp2El {
        Fp2Ctx::add(self, a, b)
    }
    fn sub(&self, a: Fp2El, b: Fp2El) -> Fp2El {
        Fp2Ctx::sub(self, a, b)
    }
    fn neg(&self, a: Fp2El) -> Fp2El {
        Fp2Ctx::neg(self, a)
    }
    fn mul(&self, a: Fp2El, b: Fp2El) -> Fp2El {
        Fp2Ctx::mul(self, a, b)
    }
    fn inv(&self, a: Fp2El) -> Option<Fp2El> {
        Fp2Ctx::inv(self, a)
    }
}
