//! The genus-2 curve model `H: Y² = F(X,Z)` in the weighted projective space
//! `WPS(1,3,1)`, for a squarefree homogeneous sextic `F` over `F_p`.

use crate::algebra::{factor, Field, Fp2Ctx, Fp2El, FpCtx, Poly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error("F is not squarefree: gcd(f, f') != 1")]
    NotSquarefree,
    #[error("repeated root at infinity: F_6 = F_5 = 0")]
    RepeatedRootAtInfinity,
}

/// A point `(X:Y:Z)` on the curve, normalized so `Z ∈ {0,1}` and `X = 1`
/// when `Z = 0`. The coordinate type is generic so the same struct serves
/// `F_p` and `F_{p²}` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurvePoint<E> {
    pub x: E,
    pub y: E,
    pub z: E,
}

impl<E: Copy + Eq + core::fmt::Debug> CurvePoint<E> {
    pub fn affine<F: Field<Elem = E>>(f: &F, x: E, y: E) -> Self {
        CurvePoint { x, y, z: f.one() }
    }

    pub fn at_infinity<F: Field<Elem = E>>(f: &F, y: E) -> Self {
        CurvePoint {
            x: f.one(),
            y,
            z: f.zero(),
        }
    }

    pub fn is_at_infinity<F: Field<Elem = E>>(&self, f: &F) -> bool {
        f.is_zero(self.z)
    }

    /// The hyperelliptic involution `(X:Y:Z) ↦ (X:-Y:Z)`.
    pub fn involution<F: Field<Elem = E>>(&self, f: &F) -> Self {
        CurvePoint {
            x: self.x,
            y: f.neg(self.y),
            z: self.z,
        }
    }
}

/// Evaluates the sextic `F(X,Z) = Σ F_i X^i Z^(6-i)` with coefficients lifted
/// into an arbitrary field.
pub fn eval_sextic<E: Copy + Eq + core::fmt::Debug, F: Field<Elem = E>>(
    f: &F,
    coeffs: &[E; 7],
    x: E,
    z: E,
) -> E {
    let mut out = f.zero();
    let mut xp = f.one();
    for i in 0..7 {
        let mut term = f.mul(coeffs[i], xp);
        for _ in 0..(6 - i) {
            term = f.mul(term, z);
        }
        out = f.add(out, term);
        xp = f.mul(xp, x);
    }
    out
}

/// A genus-2 curve `Y² = F(X,Z)` over `F_p`, `p ∉ {2,3}` prime.
#[derive(Debug, Clone)]
pub struct Genus2Curve {
    fp: FpCtx,
    coeffs: [u64; 7],
    f: Poly<u64>,
    /// Canonical `√F_6` when `F_6` is a nonzero residue.
    sqrt_f6: Option<u64>,
    /// The branch-contact cubic `V₊` with `deg(f - V₊²) ≤ 2`, when `√F_6 ∈ F_p`.
    vplus: Option<Poly<u64>>,
}

impl Genus2Curve {
    pub fn new(p: u64, coeffs_raw: [u64; 7]) -> Result<Self, CurveError> {
        let fp = FpCtx::new(p)?;
        let mut coeffs = coeffs_raw;
        for c in &mut coeffs {
            *c = fp.reduce_u64(*c);
        }
        if coeffs[6] == 0 && coeffs[5] == 0 {
            return Err(CurveError::RepeatedRootAtInfinity);
        }
        let f = Poly::new(&fp, coeffs.to_vec());
        let df = f.derivative(&fp);
        if !f.gcd(&fp, &df).is_one(&fp) {
            return Err(CurveError::NotSquarefree);
        }
        let (sqrt_f6, vplus) = if coeffs[6] != 0 {
            match fp.sqrt(coeffs[6]) {
                Ok(s0) => {
                    let v = branch_contact_cubic(&fp, &coeffs, s0);
                    (Some(s0), Some(v))
                }
                Err(_) => (None, None),
            }
        } else {
            (None, None)
        };
        Ok(Genus2Curve {
            fp,
            coeffs,
            f,
            sqrt_f6,
            vplus,
        })
    }

    pub fn fp(&self) -> &FpCtx {
        &self.fp
    }

    pub fn modulus(&self) -> u64 {
        self.fp.modulus()
    }

    /// The sextic coefficients `(F_0, …, F_6)`.
    pub fn coeffs(&self) -> &[u64; 7] {
        &self.coeffs
    }

    /// `f(x) = F(x, 1)`.
    pub fn f(&self) -> &Poly<u64> {
        &self.f
    }

    pub fn f6(&self) -> u64 {
        self.coeffs[6]
    }

    /// Canonical square root of `F_6` in `F_p`, when one exists and `F_6 ≠ 0`.
    pub fn sqrt_f6(&self) -> Option<u64> {
        self.sqrt_f6
    }

    /// The cubic `V₊` with leading coefficient `√F_6` and `deg(f - V₊²) ≤ 2`;
    /// present exactly when `√F_6 ∈ F_p^×`.
    pub fn branch_cubic(&self) -> Option<&Poly<u64>> {
        self.vplus.as_ref()
    }

    pub fn is_on_curve(&self, p: &CurvePoint<u64>) -> bool {
        let rhs = eval_sextic(&self.fp, &self.coeffs, p.x, p.z);
        self.fp.mul(p.y, p.y) == rhs
    }

    pub fn is_on_curve_ext(&self, k: &Fp2Ctx, p: &CurvePoint<Fp2El>) -> bool {
        let lifted = self.coeffs.map(|c| k.lift(c));
        let rhs = eval_sextic(k, &lifted, p.x, p.z);
        k.mul(p.y, p.y) == rhs
    }

    /// The two points of the divisor at infinity, over `F_{p²}` when `F_6` is
    /// a non-residue. For `F_6 = 0` the single point `(1:0:0)` is returned
    /// twice (it has multiplicity 2 in `D_∞`).
    pub fn infinity_points(&self, k: &Fp2Ctx) -> [CurvePoint<Fp2El>; 2] {
        if self.coeffs[6] == 0 {
            let p = CurvePoint::at_infinity(k, k.lift(0));
            return [p, p];
        }
        let r = match self.sqrt_f6 {
            Some(s0) => k.lift(s0),
            None => k.sqrt_of_base(self.coeffs[6]),
        };
        [
            CurvePoint::at_infinity(k, r),
            CurvePoint::at_infinity(k, k.neg(r)),
        ]
    }

    /// The Weierstrass divisor: the six projective roots of `F`, resolved
    /// into `F_p` and `F_{p²}` where possible. Roots of irreducible factors
    /// of degree ≥ 3 are reported by their factor.
    pub fn weierstrass_divisor(&self, k: &Fp2Ctx) -> Vec<WeierstrassPlace> {
        let mut out = Vec::new();
        if self.coeffs[6] == 0 {
            out.push(WeierstrassPlace::Infinity);
        }
        let monic = self.f.monic(&self.fp);
        for factor in factor::factor_squarefree(&self.fp, &monic) {
            match factor.degree().unwrap() {
                1 => out.push(WeierstrassPlace::Rational(
                    self.fp.neg(factor.coeff(&self.fp, 0)),
                )),
                2 => {
                    let (r1, r2) = k
                        .roots_of_monic_quadratic(
                            factor.coeff(&self.fp, 1),
                            factor.coeff(&self.fp, 0),
                        )
                        .expect("roots exist in the quadratic extension");
                    out.push(WeierstrassPlace::QuadraticPair(r1, r2));
                }
                _ => out.push(WeierstrassPlace::HigherDegree(factor)),
            }
        }
        debug_assert_eq!(out.iter().map(|w| w.multiplicity()).sum::<usize>(), 6);
        out
    }

    /// Smallest rational Weierstrass x-coordinate, if any.
    pub fn rational_weierstrass_x(&self) -> Option<u64> {
        factor::roots_in_fp(&self.fp, &self.f).into_iter().next()
    }
}

/// One place of the Weierstrass divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeierstrassPlace {
    /// Affine root `x ∈ F_p`, i.e. the point `(x : 0 : 1)`.
    Rational(u64),
    /// A conjugate pair of roots in `F_{p²} \ F_p`.
    QuadraticPair(Fp2El, Fp2El),
    /// The point `(1:0:0)`, present exactly when `F_6 = 0`.
    Infinity,
    /// An irreducible factor of degree ≥ 3, roots not materialized.
    HigherDegree(Poly<u64>),
}

impl WeierstrassPlace {
    pub fn multiplicity(&self) -> usize {
        match self {
            WeierstrassPlace::Rational(_) | WeierstrassPlace::Infinity => 1,
            WeierstrassPlace::QuadraticPair(_, _) => 2,
            WeierstrassPlace::HigherDegree(p) => p.degree().unwrap(),
        }
    }
}

/// The unique cubic with leading coefficient `s0 = √F_6` whose square matches
/// `f` down to degree 3, so that `deg(f - V₊²) ≤ 2`.
fn branch_contact_cubic(fp: &FpCtx, coeffs: &[u64; 7], s0: u64) -> Poly<u64> {
    let inv2s0 = fp.inv(fp.mul(2, s0)).expect("2·s0 nonzero");
    let s1 = fp.mul(coeffs[5], inv2s0);
    let s2 = fp.mul(fp.sub(coeffs[4], fp.mul(s1, s1)), inv2s0);
    let s3 = fp.mul(fp.sub(coeffs[3], fp.mul(2, fp.mul(s1, s2))), inv2s0);
    Poly::new(fp, vec![s3, s2, s1, s0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x6m1_f13() -> Genus2Curve {
        // y² = x⁶ - 1 over F_13
        Genus2Curve::new(13, [12, 0, 0, 0, 0, 0, 1]).unwrap()
    }

    fn paper_curve() -> Genus2Curve {
        Genus2Curve::new(997, [630, 503, 64, 363, 99, 113, 1]).unwrap()
    }

    #[test]
    fn validation() {
        // (x³ - 1)² = x⁶ - 2x³ + 1 is not squarefree
        let sq = [1u64, 0, 0, 11, 0, 0, 1];
        assert!(matches!(
            Genus2Curve::new(13, sq),
            Err(CurveError::NotSquarefree)
        ));
        assert!(matches!(
            Genus2Curve::new(13, [1, 2, 3, 4, 5, 0, 0]),
            Err(CurveError::RepeatedRootAtInfinity)
        ));
        assert!(Genus2Curve::new(15, [12, 0, 0, 0, 0, 0, 1]).is_err());
        // degree-5 model is fine
        assert!(Genus2Curve::new(13, [1, 1, 0, 0, 0, 1, 0]).is_ok());
    }

    #[test]
    fn on_curve_examples() {
        let h = x6m1_f13();
        let fp = *h.fp();
        assert!(h.is_on_curve(&CurvePoint::affine(&fp, 1, 0)));
        assert!(h.is_on_curve(&CurvePoint::at_infinity(&fp, 1)));
        assert!(!h.is_on_curve(&CurvePoint::affine(&fp, 0, 1)));
        // involution stability
        for &(x, y) in &[(1u64, 0u64), (0, 5), (2, 1)] {
            let p = CurvePoint::affine(&fp, x, y);
            assert_eq!(h.is_on_curve(&p), h.is_on_curve(&p.involution(&fp)));
        }
    }

    #[test]
    fn infinity_points_cases() {
        let k13 = Fp2Ctx::new(FpCtx::new(13).unwrap());
        let h = x6m1_f13();
        let pts = h.infinity_points(&k13);
        assert_eq!(pts[0].y, k13.lift(1));
        assert_eq!(pts[1].y, k13.lift(12));
        for p in &pts {
            assert!(h.is_on_curve_ext(&k13, p));
        }

        // F6 = 0: double point (1:0:0)
        let h5 = Genus2Curve::new(13, [1, 1, 0, 0, 0, 1, 0]).unwrap();
        let pts = h5.infinity_points(&k13);
        assert_eq!(pts[0], pts[1]);
        assert_eq!(pts[0].y, k13.lift(0));
        assert!(pts[0].is_at_infinity(&k13));

        // F6 a non-residue: conjugate points over F_{p²}
        let h2 = Genus2Curve::new(13, [12, 0, 0, 0, 0, 0, 2]).unwrap();
        let pts = h2.infinity_points(&k13);
        assert!(!pts[0].y.is_in_base_field());
        assert_eq!(k13.conj(pts[0].y), pts[1].y);
        for p in &pts {
            assert!(h2.is_on_curve_ext(&k13, p));
        }
    }

    #[test]
    fn weierstrass_divisor_examples() {
        let k13 = Fp2Ctx::new(FpCtx::new(13).unwrap());
        let h = x6m1_f13();
        let places = h.weierstrass_divisor(&k13);
        let mut roots: Vec<u64> = places
            .iter()
            .map(|w| match w {
                WeierstrassPlace::Rational(x) => *x,
                other => panic!("unexpected place {other:?}"),
            })
            .collect();
        roots.sort_unstable();
        assert_eq!(roots, vec![1, 3, 4, 9, 10, 12]);
        for &r in &roots {
            assert_eq!(h.f().eval(h.fp(), r), 0);
        }

        // degree-5 model: infinite Weierstrass point present
        let h5 = Genus2Curve::new(13, [1, 1, 0, 0, 0, 1, 0]).unwrap();
        let places = h5.weierstrass_divisor(&k13);
        assert!(places.contains(&WeierstrassPlace::Infinity));
        assert_eq!(places.iter().map(|w| w.multiplicity()).sum::<usize>(), 6);
    }

    #[test]
    fn weierstrass_vieta_paper_curve() {
        // product of the six roots = F_0 / F_6 = 630
        let h = paper_curve();
        let fp = *h.fp();
        let k = Fp2Ctx::new(fp);
        let mut prod = 1u64;
        for place in h.weierstrass_divisor(&k) {
            match place {
                WeierstrassPlace::Rational(x) => prod = fp.mul(prod, x),
                WeierstrassPlace::QuadraticPair(r, _) => prod = fp.mul(prod, k.norm(r)),
                WeierstrassPlace::HigherDegree(p) => {
                    let d = p.degree().unwrap();
                    let c0 = p.coeff(&fp, 0);
                    let signed = if d % 2 == 1 { fp.neg(c0) } else { c0 };
                    prod = fp.mul(prod, signed);
                }
                WeierstrassPlace::Infinity => panic!("F6 != 0"),
            }
        }
        assert_eq!(prod, 630);
    }

    #[test]
    fn branch_cubic_contact() {
        let h = paper_curve();
        let fp = *h.fp();
        let v = h.branch_cubic().expect("F6 = 1 is a residue");
        let diff = h.f().sub(&fp, &v.mul(&fp, v));
        assert!(diff.deg_i64() <= 2);
        assert_eq!(v.leading(), Some(h.sqrt_f6().unwrap()));
    }
}
