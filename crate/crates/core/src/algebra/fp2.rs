//! The quadratic extension `F_{p²} = F_p(t)` with `t² = s` for the smallest
//! positive non-residue `s` mod `p`.

use super::fp::FpCtx;
use super::AlgebraError;

/// An element `c0 + c1·t` of `F_{p²}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp2El {
    pub c0: u64,
    pub c1: u64,
}

impl Fp2El {
    pub const fn new(c0: u64, c1: u64) -> Self {
        Fp2El { c0, c1 }
    }

    pub fn is_in_base_field(&self) -> bool {
        self.c1 == 0
    }
}

/// Context for `F_{p²}` arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp2Ctx {
    fp: FpCtx,
    s: u64,
}

impl Fp2Ctx {
    /// Builds the extension over `fp`, choosing `s` as the smallest positive
    /// non-residue (verified at construction).
    pub fn new(fp: FpCtx) -> Self {
        let s = fp.smallest_nonresidue();
        debug_assert_eq!(fp.legendre(s), -1);
        Fp2Ctx { fp, s }
    }

    #[inline]
    pub fn base(&self) -> &FpCtx {
        &self.fp
    }

    #[inline]
    pub fn nonresidue(&self) -> u64 {
        self.s
    }

    #[inline]
    pub fn lift(&self, a: u64) -> Fp2El {
        Fp2El::new(a, 0)
    }

    /// The generator `t` with `t² = s`.
    pub fn gen(&self) -> Fp2El {
        Fp2El::new(0, 1)
    }

    pub fn add(&self, a: Fp2El, b: Fp2El) -> Fp2El {
        Fp2El::new(self.fp.add(a.c0, b.c0), self.fp.add(a.c1, b.c1))
    }

    pub fn sub(&self, a: Fp2El, b: Fp2El) -> Fp2El {
        Fp2El::new(self.fp.sub(a.c0, b.c0), self.fp.sub(a.c1, b.c1))
    }

    pub fn neg(&self, a: Fp2El) -> Fp2El {
        Fp2El::new(self.fp.neg(a.c0), self.fp.neg(a.c1))
    }

    pub fn mul(&self, a: Fp2El, b: Fp2El) -> Fp2El {
        // (a0 + a1 t)(b0 + b1 t) = a0 b0 + s a1 b1 + (a0 b1 + a1 b0) t
        let f = &self.fp;
        Fp2El::new(
            f.add(f.mul(a.c0, b.c0), f.mul(self.s, f.mul(a.c1, b.c1))),
            f.add(f.mul(a.c0, b.c1), f.mul(a.c1, b.c0)),
        )
    }

    pub fn mul_base(&self, a: Fp2El, b: u64) -> Fp2El {
        Fp2El::new(self.fp.mul(a.c0, b), self.fp.mul(a.c1, b))
    }

    /// Galois conjugate `c0 - c1·t` (the image under Frobenius x ↦ x^p).
    pub fn conj(&self, a: Fp2El) -> Fp2El {
        Fp2El::new(a.c0, self.fp.neg(a.c1))
    }

    /// Norm to the base field: `a · conj(a) = c0² - s·c1²`.
    pub fn norm(&self, a: Fp2El) -> u64 {
        let f = &self.fp;
        f.sub(f.mul(a.c0, a.c0), f.mul(self.s, f.mul(a.c1, a.c1)))
    }

    pub fn inv(&self, a: Fp2El) -> Option<Fp2El> {
        let n = self.norm(a);
        let ni = self.fp.inv(n)?;
        Some(self.mul_base(self.conj(a), ni))
    }

    pub fn div(&self, a: Fp2El, b: Fp2El) -> Option<Fp2El> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, base: Fp2El, mut exp: u64) -> Fp2El {
        let mut acc = self.lift(1);
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// Quadratic character of `F_{p²}`: computed through the norm, since
    /// `a^((p²-1)/2) = N(a)^((p-1)/2)`.
    pub fn legendre(&self, a: Fp2El) -> i32 {
        self.fp.legendre(self.norm(a))
    }

    /// Square root of a base-field element inside `F_{p²}`; always exists.
    pub fn sqrt_of_base(&self, a: u64) -> Fp2El {
        match self.fp.sqrt(a) {
            Ok(r) => Fp2El::new(r, 0),
            Err(_) => {
                // a = s·(a/s) with a/s a residue, so √a = t·√(a/s)
                let r = self
                    .fp
                    .sqrt(self.fp.div(a, self.s).expect("s nonzero"))
                    .expect("a/s must be a residue");
                let out = Fp2El::new(0, r.min(self.fp.neg(r)));
                debug_assert_eq!(self.mul(out, out), self.lift(a));
                out
            }
        }
    }

    /// Roots of a monic quadratic `x² + a1·x + a0` over `F_p`, as a pair in
    /// `F_{p²}`. Fails only when the discriminant has no square root, which
    /// cannot happen over `F_{p²}`.
    pub fn roots_of_monic_quadratic(&self, a1: u64, a0: u64) -> Result<(Fp2El, Fp2El), AlgebraError> {
        let f = &self.fp;
        let disc = f.sub(f.mul(a1, a1), f.mul(4, a0));
        let sq = self.sqrt_of_base(disc);
        let half = f.inv(2).expect("p odd");
        let mb = self.lift(f.neg(a1));
        let r1 = self.mul_base(self.add(mb, sq), half);
        let r2 = self.mul_base(self.sub(mb, sq), half);
        Ok((r1, r2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_basics() {
        let fp = FpCtx::new(13).unwrap();
        let k = Fp2Ctx::new(fp);
        assert_eq!(k.nonresidue(), 2); // smallest non-residue mod 13
        let t = k.gen();
        assert_eq!(k.mul(t, t), k.lift(2));
        // norm and inverse
        let a = Fp2El::new(5, 7);
        let ai = k.inv(a).unwrap();
        assert_eq!(k.mul(a, ai), k.lift(1));
        // Frobenius: a^p = conj(a)
        assert_eq!(k.pow(a, 13), k.conj(a));
    }

    #[test]
    fn sqrt_of_base_covers_nonresidues() {
        let fp = FpCtx::new(997).unwrap();
        let k = Fp2Ctx::new(fp);
        for a in 1..60u64 {
            let r = k.sqrt_of_base(a);
            assert_eq!(k.mul(r, r), k.lift(a));
        }
    }

    #[test]
    fn quadratic_roots() {
        let fp = FpCtx::new(13).unwrap();
        let k = Fp2Ctx::new(fp);
        // x² - 1: roots ±1
        let (r1, r2) = k.roots_of_monic_quadratic(0, 12).unwrap();
        assert!(r1.is_in_base_field() && r2.is_in_base_field());
        assert_eq!(k.mul(r1, r2), k.lift(12));
        // irreducible x² - 2: conjugate roots
        let (r1, r2) = k.roots_of_monic_quadratic(0, 11).unwrap();
        assert!(!r1.is_in_base_field());
        assert_eq!(k.conj(r1), r2);
        assert_eq!(k.mul(r1, r1), k.lift(2));
    }
}
