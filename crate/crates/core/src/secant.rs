//! Secant lines of the rational normal embedding and their intersections
//! with hyperplanes.
//!
//! The curve is embedded in `P^{2ℓ}` by the even monomials
//! `(X:Y:Z) ↦ (Z^{2ℓ} : XZ^{2ℓ-1} : … : X^{2ℓ})`, a double cover of a
//! rational normal curve that identifies `P` with `ι(P)`. For a nonzero
//! Jacobian element `e = ⟨a, b, d⟩` the secant `S(e)` through the embedded
//! support of `e` meets a hyperplane `H` in a single point with explicit
//! rational coordinates, split into four cases by the shape of `a`; this
//! module implements those closed forms together with a brute-force
//! geometric oracle that splits the support over `F_{p²}` and intersects by
//! linear algebra.

use crate::algebra::{Field, Fp2Ctx, Fp2El, FpCtx, Matrix, Poly};
use crate::curve::{CurvePoint, Genus2Curve};
use crate::jacobian::MumfordPoint;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SecantError {
    #[error("secant of the zero element is undefined")]
    ZeroElement,
    #[error("secant unexpectedly contained in the hyperplane")]
    UnexpectedContainment,
    #[error("hyperplane has wrong length or is zero")]
    BadHyperplane,
}

/// A point of `P^n` over `F_p`, normalized so its first nonzero coordinate
/// is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint(Vec<u64>);

impl ProjPoint {
    pub fn new(fp: &FpCtx, mut v: Vec<u64>) -> Self {
        normalize_proj(fp, &mut v);
        ProjPoint(v)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

pub fn normalize_proj<F: Field>(f: &F, v: &mut [F::Elem]) {
    if let Some(first) = v.iter().position(|&x| !f.is_zero(x)) {
        let inv = f.inv(v[first]).expect("nonzero leading coordinate");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
    }
}

/// A hyperplane `Σ H_i U_i = 0` in `P^{2ℓ}`, with the associated polynomial
/// `h(x) = Σ H_i x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    coeffs: Vec<u64>,
}

impl Hyperplane {
    pub fn new(coeffs: Vec<u64>) -> Result<Self, SecantError> {
        if coeffs.len() < 7 || coeffs.len() % 2 == 0 || coeffs.iter().all(|&x| x == 0) {
            return Err(SecantError::BadHyperplane);
        }
        Ok(Hyperplane { coeffs })
    }

    pub fn ell(&self) -> usize {
        (self.coeffs.len() - 1) / 2
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn h_poly(&self, fp: &FpCtx) -> Poly<u64> {
        Poly::new(fp, self.coeffs.clone())
    }
}

/// The rational normal embedding `(X:Y:Z) ↦ (Z^{2ℓ} : XZ^{2ℓ-1} : … : X^{2ℓ})`.
/// Ignores `Y`, so `rat_embed(P) = rat_embed(ι(P))`.
pub fn rat_embed<E: Copy + Eq + core::fmt::Debug, F: Field<Elem = E>>(
    f: &F,
    p: &CurvePoint<E>,
    ell: usize,
) -> Vec<E> {
    let n = 2 * ell;
    let mut out = Vec::with_capacity(n + 1);
    let mut xp = vec![f.one(); n + 1];
    let mut zp = vec![f.one(); n + 1];
    for i in 1..=n {
        xp[i] = f.mul(xp[i - 1], p.x);
        zp[i] = f.mul(zp[i - 1], p.z);
    }
    for i in 0..=n {
        out.push(f.mul(xp[i], zp[n - i]));
    }
    out
}

/// `σ_1..σ_n` for `a(x) = x² + a1·x + a0`: `σ_1 = 1`,
/// `σ_k = -a1·σ_{k-1} - a0·σ_{k-2}`, with `σ_k = 0` for `k < 1`.
/// For `a = (x-α)(x-β)` these are `(α^k - β^k)/(α - β)`.
pub fn sigma_seq(fp: &FpCtx, a1: u64, a0: u64, n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    let mut prev2 = 0u64; // σ_{k-2}
    let mut prev1 = 0u64; // σ_{k-1}
    for k in 1..=n {
        let cur = if k == 1 {
            1
        } else {
            fp.neg(fp.add(fp.mul(a1, prev1), fp.mul(a0, prev2)))
        };
        out.push(cur);
        prev2 = prev1;
        prev1 = cur;
    }
    out
}

/// `π_0..π_n`: `π_0 = 2`, `π_1 = -a1`, `π_k = -a1·π_{k-1} - a0·π_{k-2}`.
/// For `a = (x-α)(x-β)` these are the power sums `α^k + β^k`.
pub fn pi_seq(fp: &FpCtx, a1: u64, a0: u64, n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(2u64 % fp.modulus());
    if n >= 1 {
        out.push(fp.neg(a1));
    }
    for _k in 2..=n {
        let len = out.len();
        let cur = fp.neg(fp.add(
            fp.mul(a1, out[len - 1]),
            fp.mul(a0, out[len - 2]),
        ));
        out.push(cur);
    }
    out
}

/// Result of intersecting a secant with a hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SecantMeet {
    Point(ProjPoint),
    Contained,
}

/// Closed-form intersection `S(e) ∩ H` for a nonzero `e = ⟨a, b, d⟩`.
///
/// Four cases by the shape of `a`: constant (support at infinity only),
/// linear (one affine point plus infinity), quadratic with distinct roots,
/// and quadratic with a double root (tangent line).
pub fn secant_meets_hyperplane(
    fp: &FpCtx,
    e: &MumfordPoint,
    hp: &Hyperplane,
) -> Result<SecantMeet, SecantError> {
    if e.is_identity() {
        return Err(SecantError::ZeroElement);
    }
    let n = 2 * hp.ell();
    let h = hp.coeffs();
    let a = e.a();
    let deg_a = a.deg_i64();
    match deg_a {
        0 => {
            // support is twice a point at infinity; tangent at (0:…:0:1)
            if h[n] == 0 && h[n - 1] == 0 {
                return Ok(SecantMeet::Contained);
            }
            let mut v = vec![0u64; n + 1];
            v[n - 1] = h[n];
            v[n] = fp.neg(h[n - 1]);
            Ok(SecantMeet::Point(ProjPoint::new(fp, v)))
        }
        1 => {
            let alpha = fp.neg(a.coeff(fp, 0));
            let h_alpha = hp.h_poly(fp).eval(fp, alpha);
            if h_alpha == 0 && h[n] == 0 {
                return Ok(SecantMeet::Contained);
            }
            let mut v = Vec::with_capacity(n + 1);
            let mut pow = 1u64;
            for _ in 0..n {
                v.push(fp.mul(h[n], pow));
                pow = fp.mul(pow, alpha);
            }
            v.push(fp.sub(fp.mul(h[n], pow), h_alpha));
            Ok(SecantMeet::Point(ProjPoint::new(fp, v)))
        }
        2 => {
            let a1 = a.coeff(fp, 1);
            let a0 = a.coeff(fp, 0);
            if hp.h_poly(fp).rem(fp, a).expect("a nonzero").is_zero() {
                return Ok(SecantMeet::Contained);
            }
            let disc = fp.sub(fp.mul(a1, a1), fp.mul(4, a0));
            let v = if disc != 0 {
                // γ_i = Σ_j H_j (a0^j σ_{i-j} - a0^i σ_{j-i})
                let sig = sigma_seq(fp, a1, a0, n);
                let sigma = |k: i64| -> u64 {
                    if k < 1 {
                        0
                    } else {
                        sig[(k - 1) as usize]
                    }
                };
                let mut a0_pow = vec![1u64; n + 1];
                for i in 1..=n {
                    a0_pow[i] = fp.mul(a0_pow[i - 1], a0);
                }
                (0..=n as i64)
                    .map(|i| {
                        let mut acc = 0u64;
                        for j in 0..=n as i64 {
                            let hj = h[j as usize];
                            if hj == 0 {
                                continue;
                            }
                            let term = fp.sub(
                                fp.mul(a0_pow[j as usize], sigma(i - j)),
                                fp.mul(a0_pow[i as usize], sigma(j - i)),
                            );
                            acc = fp.add(acc, fp.mul(hj, term));
                        }
                        acc
                    })
                    .collect()
            } else {
                // double root α = -a1/2: γ_i = i·α^{i-1}·h(α) - α^i·h'(α)
                let alpha = fp.neg(fp.div(a1, 2).expect("p odd"));
                let hpoly = hp.h_poly(fp);
                let h_alpha = hpoly.eval(fp, alpha);
                let dh_alpha = hpoly.derivative(fp).eval(fp, alpha);
                let mut pow = vec![1u64; n + 1];
                for i in 1..=n {
                    pow[i] = fp.mul(pow[i - 1], alpha);
                }
                (0..=n)
                    .map(|i| {
                        let first = if i == 0 {
                            0
                        } else {
                            fp.mul(fp.reduce_u64(i as u64), fp.mul(pow[i - 1], h_alpha))
                        };
                        fp.sub(first, fp.mul(pow[i], dh_alpha))
                    })
                    .collect()
            };
            let pt = ProjPoint::new(fp, v);
            debug_assert!(!pt.is_zero(), "non-contained secant met H in no point");
            Ok(SecantMeet::Point(pt))
        }
        _ => Err(SecantError::ZeroElement),
    }
}

/// Brute-force oracle: splits the support of `e` over `F_{p²}` (or takes a
/// tangent direction for repeated support), spans the secant explicitly, and
/// intersects with the hyperplane by generic linear algebra. Agrees with
/// [`secant_meets_hyperplane`] on every case.
pub fn secant_oracle(
    h_curve: &Genus2Curve,
    e: &MumfordPoint,
    hp: &Hyperplane,
) -> Result<SecantMeet, SecantError> {
    if e.is_identity() {
        return Err(SecantError::ZeroElement);
    }
    let fp = h_curve.fp();
    let k = Fp2Ctx::new(*fp);
    let ell = hp.ell();
    let n = 2 * ell;
    let a = e.a();
    // rows spanning the secant in F_{p²}^{2ℓ+1}
    let embed_affine = |x: Fp2El| -> Vec<Fp2El> {
        let pt = CurvePoint::affine(&k, x, k.zero());
        rat_embed(&k, &pt, ell)
    };
    let tangent_affine = |x: Fp2El| -> Vec<Fp2El> {
        // derivative of t ↦ (1, t, t², …) at t = x
        let mut row = vec![k.zero(); n + 1];
        let mut pow = k.one();
        for i in 1..=n {
            row[i] = k.mul_base(pow, fp.reduce_u64(i as u64));
            pow = k.mul(pow, x);
        }
        row
    };
    let infinity_row = || -> Vec<Fp2El> {
        let pt = CurvePoint::at_infinity(&k, k.zero());
        rat_embed(&k, &pt, ell)
    };
    let tangent_infinity = || -> Vec<Fp2El> {
        // derivative of w ↦ (w^{2ℓ}, …, w, 1) at w = 0
        let mut row = vec![k.zero(); n + 1];
        row[n - 1] = k.one();
        row
    };
    let (row_a, row_b) = match a.deg_i64() {
        0 => (infinity_row(), tangent_infinity()),
        1 => {
            let alpha = k.lift(fp.neg(a.coeff(fp, 0)));
            (embed_affine(alpha), infinity_row())
        }
        2 => {
            let (r1, r2) = k
                .roots_of_monic_quadratic(a.coeff(fp, 1), a.coeff(fp, 0))
                .expect("roots in F_{p²}");
            if r1 == r2 {
                (embed_affine(r1), tangent_affine(r1))
            } else {
                (embed_affine(r1), embed_affine(r2))
            }
        }
        _ => return Err(SecantError::ZeroElement),
    };
    // intersect span{A, B} with H: kernel of the 1×2 matrix [H·A, H·B]
    let hl: Vec<Fp2El> = hp.coeffs().iter().map(|&c| k.lift(c)).collect();
    let dot = |r: &[Fp2El]| -> Fp2El {
        r.iter()
            .zip(&hl)
            .fold(k.zero(), |acc, (&x, &y)| k.add(acc, k.mul(x, y)))
    };
    let system = Matrix::new(1, 2, vec![dot(&row_a), dot(&row_b)]);
    let Some(kernel) = system.kernel(&k) else {
        unreachable!("a line always meets a hyperplane");
    };
    if kernel.rows() == 2 {
        return Ok(SecantMeet::Contained);
    }
    let (lambda, mu) = (kernel[(0, 0)], kernel[(0, 1)]);
    let mut point: Vec<Fp2El> = (0..=n)
        .map(|i| k.add(k.mul(lambda, row_a[i]), k.mul(mu, row_b[i])))
        .collect();
    normalize_proj(&k, &mut point);
    let coords: Vec<u64> = point
        .iter()
        .map(|c| {
            debug_assert!(c.is_in_base_field(), "rational secant met H off F_p");
            c.c0
        })
        .collect();
    Ok(SecantMeet::Point(ProjPoint::new(fp, coords)))
}

/// The ℓ = 3 specialization: the hyperplane is fixed to `Σ F_i U_i = 0`, and
/// containment cannot happen for torsion kernel elements (it would force
/// `a | f`, i.e. an element of order 2).
pub fn gamma_vector(h: &Genus2Curve, e: &MumfordPoint) -> Result<ProjPoint, SecantError> {
    let hp = Hyperplane::new(h.coeffs().to_vec()).expect("curve coefficients nonzero");
    match secant_meets_hyperplane(h.fp(), e, &hp)? {
        SecantMeet::Point(p) => Ok(p),
        SecantMeet::Contained => Err(SecantError::UnexpectedContainment),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobian::Jacobian;

    fn poly(fp: &FpCtx, c: &[i64]) -> Poly<u64> {
        Poly::new(fp, c.iter().map(|&x| fp.reduce_i64(x)).collect())
    }

    fn paper_curve() -> Genus2Curve {
        Genus2Curve::new(997, [630, 503, 64, 363, 99, 113, 1]).unwrap()
    }

    fn paper_half_set(fp: &FpCtx) -> [MumfordPoint; 4] {
        [
            MumfordPoint::new(poly(fp, &[208, 392, 1]), poly(fp, &[603, 579]), 2),
            MumfordPoint::new(poly(fp, &[527, 48, 1]), poly(fp, &[832, 918]), 2),
            MumfordPoint::new(poly(fp, &[880, 428, 1]), poly(fp, &[901, 252]), 2),
            MumfordPoint::new(poly(fp, &[292, 348, 1]), poly(fp, &[269, 596]), 2),
        ]
    }

    #[test]
    fn embed_examples() {
        let h = paper_curve();
        let fp = h.fp();
        // infinite point kills all but the last coordinate
        let pinf = CurvePoint::at_infinity(fp, 5);
        let v = rat_embed(fp, &pinf, 3);
        assert_eq!(v, vec![0, 0, 0, 0, 0, 0, 1]);
        // affine point gives the power sequence
        let p = CurvePoint::affine(fp, 7, 123);
        let v = rat_embed(fp, &p, 3);
        let mut want = Vec::new();
        let mut pow = 1u64;
        for _ in 0..7 {
            want.push(pow);
            pow = fp.mul(pow, 7);
        }
        assert_eq!(v, want);
        // ι-invariance
        assert_eq!(v, rat_embed(fp, &p.involution(fp), 3));
        // ℓ = 5 length
        assert_eq!(rat_embed(fp, &p, 5).len(), 11);
    }

    #[test]
    fn sigma_pi_against_split_roots() {
        let fp = FpCtx::new(13).unwrap();
        // a = (x - α)(x - β) for all distinct α, β
        for alpha in 0..13u64 {
            for beta in 0..13u64 {
                if alpha == beta {
                    continue;
                }
                let a1 = fp.neg(fp.add(alpha, beta));
                let a0 = fp.mul(alpha, beta);
                let sig = sigma_seq(&fp, a1, a0, 6);
                let pi = pi_seq(&fp, a1, a0, 6);
                assert_eq!(sig[0], 1);
                assert_eq!(pi[0], 2);
                let diff_inv = fp.inv(fp.sub(alpha, beta)).unwrap();
                for kk in 1..=6u32 {
                    let ak = fp.pow(alpha, kk as u64);
                    let bk = fp.pow(beta, kk as u64);
                    assert_eq!(sig[(kk - 1) as usize], fp.mul(fp.sub(ak, bk), diff_inv));
                    assert_eq!(pi[kk as usize], fp.add(ak, bk));
                }
            }
        }
        // degenerate recurrence: a1 = a0 = 0 → σ_k = 0 for k ≥ 2
        let sig = sigma_seq(&fp, 0, 0, 6);
        assert_eq!(sig, vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn case1_formula_and_containment() {
        let h = paper_curve();
        let fp = h.fp();
        let jac = Jacobian::new(&h);
        // e = [2·∞₊ - D_∞] = ⟨1, V₊, 2⟩
        let e = MumfordPoint::new(Poly::one(fp), h.branch_cubic().unwrap().clone(), 2);
        assert!(jac.validate(&e).is_ok());
        // generic H
        let mut coeffs = vec![0u64; 7];
        coeffs[5] = 3;
        coeffs[6] = 4;
        let hp = Hyperplane::new(coeffs).unwrap();
        let got = secant_meets_hyperplane(fp, &e, &hp).unwrap();
        let want = SecantMeet::Point(ProjPoint::new(fp, vec![0, 0, 0, 0, 0, 4, fp.neg(3)]));
        assert_eq!(got, want);
        assert_eq!(secant_oracle(&h, &e, &hp).unwrap(), want);
        // containment: H_{2ℓ} = H_{2ℓ-1} = 0
        let hp = Hyperplane::new(vec![1, 2, 3, 4, 5, 0, 0]).unwrap();
        assert_eq!(
            secant_meets_hyperplane(fp, &e, &hp).unwrap(),
            SecantMeet::Contained
        );
        assert_eq!(secant_oracle(&h, &e, &hp).unwrap(), SecantMeet::Contained);
    }

    #[test]
    fn gamma_on_the_worked_example() {
        let h = paper_curve();
        let fp = h.fp();
        let jac = Jacobian::new(&h);
        let hp = Hyperplane::new(h.coeffs().to_vec()).unwrap();
        let mut columns: Vec<Vec<u64>> = Vec::new();
        for e in paper_half_set(fp).iter() {
            let got = gamma_vector(&h, e).unwrap();
            // the brute-force oracle agrees exactly
            assert_eq!(
                secant_oracle(&h, e, &hp).unwrap(),
                SecantMeet::Point(got.clone()),
                "oracle disagrees for {e:?}"
            );
            // ±-invariance: S(e) = S(-e)
            assert_eq!(gamma_vector(&h, &jac.negate(e)).unwrap(), got);
            // F-row annihilates every v_e
            let mut dot = 0u64;
            for (i, &c) in got.coords().iter().enumerate() {
                dot = fp.add(dot, fp.mul(c, h.coeffs()[i]));
            }
            assert_eq!(dot, 0);
            columns.push(got.coords().to_vec());
        }
        // the four secant points span a plane: the 7×4 matrix has rank 3
        let m = Matrix::from_rows(columns.clone()).transpose();
        assert_eq!(m.rank(fp), 3);
        // the published projection rows annihilate the recomputed points,
        // so the kernel the construction depends on is reproduced exactly
        let phis: [[u64; 7]; 3] = [
            [0, 1, 0, 0, 549, 742, 121],
            [0, 0, 1, 0, 332, 642, 285],
            [0, 0, 0, 1, 454, 701, 889],
        ];
        for col in &columns {
            for phi in &phis {
                let mut dot = 0u64;
                for j in 0..7 {
                    dot = fp.add(dot, fp.mul(phi[j], col[j]));
                }
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn gamma_case1_specialization() {
        let h = paper_curve();
        let fp = h.fp();
        let e = MumfordPoint::new(Poly::one(fp), h.branch_cubic().unwrap().clone(), 2);
        let got = gamma_vector(&h, &e).unwrap();
        // (0,…,0, F6, -F5)
        let want = ProjPoint::new(fp, vec![0, 0, 0, 0, 0, h.coeffs()[6], fp.neg(h.coeffs()[5])]);
        assert_eq!(got, want);
    }

    #[test]
    fn gamma_rejects_two_torsion_and_zero() {
        let h = Genus2Curve::new(13, [12, 0, 0, 0, 0, 0, 1]).unwrap();
        let fp = h.fp();
        let two_torsion = MumfordPoint::new(poly(fp, &[-1, 0, 1]), Poly::zero(), 2);
        assert_eq!(
            gamma_vector(&h, &two_torsion),
            Err(SecantError::UnexpectedContainment)
        );
        let id = MumfordPoint::new(Poly::one(fp), Poly::zero(), 0);
        assert_eq!(gamma_vector(&h, &id), Err(SecantError::ZeroElement));
    }
}
