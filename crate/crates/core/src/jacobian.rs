//! Extended Mumford representation and exact Jacobian arithmetic.
//!
//! A divisor class `[P + Q - D_∞]` is encoded as a triple `⟨a, b, d⟩`: `a`
//! monic of degree ≤ 2, `b` of degree ≤ 3 matching the curve branch wherever
//! the support touches infinity, and `d` the degree of the homogenization of
//! `a`. The identity is `⟨1, 0, 0⟩`.
//!
//! Internally the group law is Cantor composition-and-reduction adapted to
//! the even-degree model: alongside the usual `(u, v)` pair we track the
//! multiplicity of each point at infinity in the representative, and the
//! reduction steps may use the branch-contact cubic `V₊` (with
//! `deg(f - V₊²) ≤ 2`) to steer weight away from infinity. The canonical
//! output is the unique reduced representative of the class.

use crate::algebra::{FpCtx, Poly};
use crate::curve::Genus2Curve;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JacobianError {
    #[error("a(x) is not monic")]
    NotMonic,
    #[error("a(x) does not divide b(x)^2 - f(x)")]
    DivisibilityFails,
    #[error("branch contact at infinity fails: {0}")]
    InfinityContactFails(&'static str),
    #[error("degree flag d = {d} inconsistent with deg a = {deg_a} on this curve")]
    BadDegreeFlag { d: u8, deg_a: i64 },
    #[error("element does not have order 3")]
    NotOrderThree,
    #[error("generators do not span a group of order 9")]
    GeneratorsDependent,
}

/// Extended Mumford triple `⟨a(x), b(x), d⟩` for a point of `Jac(H)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MumfordPoint {
    a: Poly<u64>,
    b: Poly<u64>,
    d: u8,
}

impl MumfordPoint {
    pub fn new(a: Poly<u64>, b: Poly<u64>, d: u8) -> Self {
        MumfordPoint { a, b, d }
    }

    pub fn a(&self) -> &Poly<u64> {
        &self.a
    }

    pub fn b(&self) -> &Poly<u64> {
        &self.b
    }

    pub fn d(&self) -> u8 {
        self.d
    }

    pub fn is_identity(&self) -> bool {
        self.d == 0
    }

    /// Deterministic ordering key: `(d, coefficients of a, coefficients of b)`.
    pub fn lex_key(&self, fp: &FpCtx) -> (u8, [u64; 3], [u64; 4]) {
        let mut ak = [0u64; 3];
        let mut bk = [0u64; 4];
        for i in 0..3 {
            ak[i] = self.a.coeff(fp, i);
        }
        for i in 0..4 {
            bk[i] = self.b.coeff(fp, i);
        }
        (self.d, ak, bk)
    }
}

/// The order-9 kernel subgroup `S = ⟨D1, D2⟩ ⊂ Jac(H)[3]`, with the half-set
/// `S^±` containing one representative of each `±` pair.
#[derive(Debug, Clone)]
pub struct KernelSubgroup {
    generators: (MumfordPoint, MumfordPoint),
    elements: Vec<MumfordPoint>,
    half_set: Vec<MumfordPoint>,
}

impl KernelSubgroup {
    pub fn generators(&self) -> (&MumfordPoint, &MumfordPoint) {
        (&self.generators.0, &self.generators.1)
    }

    /// All nine elements, identity first, the rest in lexicographic order.
    pub fn elements(&self) -> &[MumfordPoint] {
        &self.elements
    }

    /// The four canonical `±`-pair representatives, in lexicographic order.
    pub fn half_set(&self) -> &[MumfordPoint] {
        &self.half_set
    }

    /// Assembles a subgroup from raw parts without checking the group
    /// structure. Intended for tests and diagnostics only.
    #[doc(hidden)]
    pub fn new_unchecked(
        generators: (MumfordPoint, MumfordPoint),
        elements: Vec<MumfordPoint>,
        half_set: Vec<MumfordPoint>,
    ) -> Self {
        KernelSubgroup {
            generators,
            elements,
            half_set,
        }
    }
}

/// Group-law context for the Jacobian of a fixed curve.
pub struct Jacobian<'a> {
    h: &'a Genus2Curve,
}

/// Internal reduction state: affine part `(u, v)` with `v` reduced mod `u`,
/// plus the multiplicities `(n, m)` of `∞₊` and `∞₋` in the representative.
/// The represented class is `[div(u, y - v) + n·∞₊ + m·∞₋ - L·D_∞]` with
/// `L = (deg u + n + m)/2`.
#[derive(Debug, Clone)]
struct RedState {
    u: Poly<u64>,
    v: Poly<u64>,
    n: i64,
    m: i64,
}

impl<'a> Jacobian<'a> {
    pub fn new(h: &'a Genus2Curve) -> Self {
        Jacobian { h }
    }

    pub fn curve(&self) -> &Genus2Curve {
        self.h
    }

    fn fp(&self) -> &FpCtx {
        self.h.fp()
    }

    pub fn identity(&self) -> MumfordPoint {
        let fp = self.fp();
        MumfordPoint::new(Poly::one(fp), Poly::zero(), 0)
    }

    /// Checks every invariant of the extended Mumford encoding against `H`.
    pub fn validate(&self, e: &MumfordPoint) -> Result<(), JacobianError> {
        let fp = self.fp();
        let f6 = self.h.f6();
        let deg_a = e.a.deg_i64();
        if !e.a.is_monic(fp) {
            return Err(JacobianError::NotMonic);
        }
        if e.b.deg_i64() > 3 || deg_a > 2 || e.d > 2 || (deg_a as i64) > e.d as i64 {
            return Err(JacobianError::BadDegreeFlag { d: e.d, deg_a });
        }
        if e.d == 0 {
            return if e.a.is_one(fp) && e.b.is_zero() {
                Ok(())
            } else {
                Err(JacobianError::BadDegreeFlag { d: 0, deg_a })
            };
        }
        if f6 != 0 && e.d == 1 {
            // with two points at infinity, d must be 0 or 2
            return Err(JacobianError::BadDegreeFlag { d: 1, deg_a });
        }
        if f6 == 0 && e.d as i64 != deg_a {
            return Err(JacobianError::BadDegreeFlag { d: e.d, deg_a });
        }
        // affine consistency: a | b² - f
        let bb = e.b.mul(fp, &e.b).sub(fp, self.h.f());
        if !bb.rem(fp, &e.a).expect("a nonzero").is_zero() {
            return Err(JacobianError::DivisibilityFails);
        }
        // branch contact at infinity
        let k = e.d as i64 - deg_a;
        if k > 0 {
            let b3 = e.b.coeff(fp, 3);
            if fp.mul(b3, b3) != f6 {
                return Err(JacobianError::InfinityContactFails(
                    "leading coefficient of b is not a square root of F_6",
                ));
            }
            if bb.deg_i64() > 6 - 2 * k {
                return Err(JacobianError::InfinityContactFails(
                    "deg(b^2 - f) exceeds 6 - 2(d - deg a)",
                ));
            }
        }
        Ok(())
    }

    /// `⟨a, -b, d⟩`; the inverse for the group law.
    pub fn negate(&self, e: &MumfordPoint) -> MumfordPoint {
        MumfordPoint::new(e.a.clone(), e.b.neg(self.fp()), e.d)
    }

    /// Canonical sum of two valid elements.
    pub fn add(&self, e1: &MumfordPoint, e2: &MumfordPoint) -> Result<MumfordPoint, JacobianError> {
        self.validate(e1)?;
        self.validate(e2)?;
        Ok(self.add_unchecked(e1, e2))
    }

    fn add_unchecked(&self, e1: &MumfordPoint, e2: &MumfordPoint) -> MumfordPoint {
        let r1 = self.to_rep(e1);
        let r2 = self.to_rep(e2);
        let composed = self.compose(&r1, &r2);
        let reduced = self.reduce(composed);
        self.from_rep(&reduced)
    }

    /// `n·e` by double-and-add; negative `n` goes through the inverse.
    pub fn scalar_mul(&self, n: i64, e: &MumfordPoint) -> Result<MumfordPoint, JacobianError> {
        self.validate(e)?;
        let base = if n < 0 { self.negate(e) } else { e.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &sq);
            }
            sq = self.add_unchecked(&sq, &sq);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Least `k ≤ bound` with `k·e = 0`, if any.
    pub fn order_small(&self, e: &MumfordPoint, bound: u64) -> Result<Option<u64>, JacobianError> {
        self.validate(e)?;
        let id = self.identity();
        let mut acc = e.clone();
        for k in 1..=bound {
            if acc == id {
                return Ok(Some(k));
            }
            acc = self.add_unchecked(&acc, e);
        }
        Ok(None)
    }

    /// Builds the order-9 subgroup `⟨D1, D2⟩` with its canonical half-set.
    pub fn build_subgroup(
        &self,
        d1: &MumfordPoint,
        d2: &MumfordPoint,
    ) -> Result<KernelSubgroup, JacobianError> {
        let id = self.identity();
        for g in [d1, d2] {
            self.validate(g)?;
            if g == &id || self.scalar_mul(3, g)? != id {
                return Err(JacobianError::NotOrderThree);
            }
        }
        let mut elements = Vec::with_capacity(9);
        for i in 0..3i64 {
            let ei = self.scalar_mul(i, d1)?;
            for j in 0..3i64 {
                let s = self.add_unchecked(&ei, &self.scalar_mul(j, d2)?);
                if elements.contains(&s) {
                    return Err(JacobianError::GeneratorsDependent);
                }
                elements.push(s);
            }
        }
        let fp = self.fp();
        let mut half_set: Vec<MumfordPoint> = Vec::with_capacity(4);
        for e in elements.iter().filter(|e| !e.is_identity()) {
            let neg = self.negate(e);
            let rep = if e.lex_key(fp) <= neg.lex_key(fp) {
                e.clone()
            } else {
                neg
            };
            if !half_set.contains(&rep) {
                half_set.push(rep);
            }
        }
        debug_assert_eq!(half_set.len(), 4);
        half_set.sort_by_key(|e| e.lex_key(fp));
        let mut sorted = elements.clone();
        sorted.sort_by_key(|e| (!e.is_identity(), e.lex_key(fp)));
        Ok(KernelSubgroup {
            generators: (d1.clone(), d2.clone()),
            elements: sorted,
            half_set,
        })
    }

    /// Samples a class `[P1 + P2 - D_∞]` from two random affine points with
    /// distinct x-coordinates.
    pub fn random_element<R: rand::Rng>(&self, rng: &mut R) -> MumfordPoint {
        let fp = self.fp();
        let p = fp.modulus();
        loop {
            let x1 = rng.gen_range(0..p);
            let x2 = rng.gen_range(0..p);
            if x1 == x2 {
                continue;
            }
            let (f1, f2) = (self.h.f().eval(fp, x1), self.h.f().eval(fp, x2));
            let (Ok(mut y1), Ok(mut y2)) = (fp.sqrt(f1), fp.sqrt(f2)) else {
                continue;
            };
            if rng.gen_bool(0.5) {
                y1 = fp.neg(y1);
            }
            if rng.gen_bool(0.5) {
                y2 = fp.neg(y2);
            }
            let a = Poly::new(fp, vec![fp.mul(x1, x2), fp.neg(fp.add(x1, x2)), 1]);
            let v = Poly::interpolate(fp, &[(x1, y1), (x2, y2)]);
            let e = MumfordPoint::new(a, v, 2);
            debug_assert!(self.validate(&e).is_ok());
            return e;
        }
    }

    // ---- internal representation ----------------------------------------

    fn to_rep(&self, e: &MumfordPoint) -> RedState {
        let fp = self.fp();
        if e.d == 0 {
            return RedState {
                u: Poly::one(fp),
                v: Poly::zero(),
                n: 1,
                m: 1,
            };
        }
        let u = e.a.clone();
        let v = e.b.rem(fp, &u).expect("a nonzero");
        let k = e.d as i64 - u.deg_i64();
        let (n, m) = if self.h.f6() == 0 || k == 0 {
            (0, 0)
        } else {
            let s0 = self.h.sqrt_f6().expect("validated branch contact");
            if e.b.coeff(fp, 3) == s0 {
                (k, 0)
            } else {
                (0, k)
            }
        };
        RedState { u, v, n, m }
    }

    fn from_rep(&self, r: &RedState) -> MumfordPoint {
        let fp = self.fp();
        let du = r.u.deg_i64();
        if self.h.f6() == 0 {
            return MumfordPoint::new(r.u.clone(), r.v.clone(), du as u8);
        }
        debug_assert_eq!(du + r.n + r.m, 2);
        if du == 0 && r.n == 1 {
            return self.identity();
        }
        if du == 2 {
            return MumfordPoint::new(r.u.clone(), r.v.clone(), 2);
        }
        // support touches one branch at infinity: extend v to the canonical
        // branch-contact cubic
        let vplus = self.h.branch_cubic().expect("rational branch required");
        let vb = if r.n > 0 {
            vplus.clone()
        } else {
            vplus.neg(fp)
        };
        let adj = r.v.sub(fp, &vb).rem(fp, &r.u).expect("u nonzero");
        let b = vb.add(fp, &adj);
        MumfordPoint::new(r.u.clone(), b, 2)
    }

    /// Cantor composition of the affine parts, with infinity bookkeeping.
    fn compose(&self, r1: &RedState, r2: &RedState) -> RedState {
        let fp = self.fp();
        let f = self.h.f();
        let (d1, e1, e2) = r1.u.xgcd(fp, &r2.u);
        let vsum = r1.v.add(fp, &r2.v);
        let (dd, c1, c2) = d1.xgcd(fp, &vsum);
        let k = dd.deg_i64();
        let u = r1
            .u
            .mul(fp, &r2.u)
            .div_exact(fp, &dd.mul(fp, &dd))
            .expect("d² divides u1·u2");
        let w1 = e1.mul(fp, &r1.u).mul(fp, &r2.v);
        let w2 = e2.mul(fp, &r2.u).mul(fp, &r1.v);
        let vv = r1.v.mul(fp, &r2.v).add(fp, f);
        let vnum = c1.mul(fp, &w1.add(fp, &w2)).add(fp, &c2.mul(fp, &vv));
        let v = vnum
            .div_exact(fp, &dd)
            .expect("d divides the v numerator")
            .rem(fp, &u)
            .expect("u nonzero");
        debug_assert!(v
            .mul(fp, &v)
            .sub(fp, f)
            .rem(fp, &u)
            .unwrap()
            .is_zero());
        RedState {
            u,
            v,
            n: r1.n + r2.n + k,
            m: r1.m + r2.m + k,
        }
    }

    /// Reduction to the canonical representative.
    fn reduce(&self, state: RedState) -> RedState {
        let fp = self.fp();
        let f = self.h.f();
        let f6 = self.h.f6();
        let s0 = self.h.sqrt_f6();
        let mut u = state.u.monic(fp);
        let mut v = state.v;
        let mut n = state.n;
        let mut m = state.m;
        for _iter in 0..32 {
            // cancel conjugate pairs at infinity: ∞₊ + ∞₋ = D_∞
            let s = n.min(m);
            if s > 0 {
                n -= s;
                m -= s;
            }
            let du = u.deg_i64();
            if f6 == 0 {
                if du <= 2 {
                    return RedState { u, v, n: 0, m: 0 };
                }
            } else {
                if du + n + m == 2 && n >= 0 && m >= 0 {
                    return RedState { u, v, n, m };
                }
                if du == 0 && n == m {
                    // trivial class
                    return RedState {
                        u: Poly::one(fp),
                        v: Poly::zero(),
                        n: 1,
                        m: 1,
                    };
                }
            }
            // choose the chord function y - v*, v* ≡ v (mod u); contact with
            // the branch cubic steers weight away from the heavy infinity
            let contact = |branch_plus: bool| -> Poly<u64> {
                let vplus = self.h.branch_cubic().expect("contact requires √F_6 ∈ F_p");
                let vb = if branch_plus {
                    vplus.clone()
                } else {
                    vplus.neg(fp)
                };
                let adj = v.sub(fp, &vb).rem(fp, &u).expect("u nonzero");
                vb.add(fp, &adj)
            };
            let vstar = if f6 != 0 && s0.is_some() && (n > m || (du == 3 && n >= m)) {
                contact(true)
            } else if f6 != 0 && s0.is_some() && (m > n || du == 3) {
                contact(false)
            } else {
                debug_assert!(
                    n == m || s0.is_some() || f6 == 0,
                    "unbalanced infinite weight without a rational branch"
                );
                v.clone()
            };
            let fv = f.sub(fp, &vstar.mul(fp, &vstar));
            let d6 = fv.deg_i64();
            debug_assert!(d6 >= 0, "f - v*² vanished; f not squarefree?");
            let unew = fv.div_exact(fp, &u).expect("u divides f - v*²").monic(fp);
            let vnew = vstar.neg(fp).rem(fp, &unew).expect("u' nonzero");
            let t3 = vstar.coeff(fp, 3);
            let (cp, cm) = match s0 {
                Some(s) if f6 != 0 && t3 == s => (6 - d6, 0),
                Some(s) if f6 != 0 && t3 == fp.neg(s) => (0, 6 - d6),
                _ => (0, 0),
            };
            if f6 != 0 {
                n = n + 3 - cp;
                m = m + 3 - cm;
            }
            u = unew;
            v = vnew;
        }
        panic!("jacobian reduction did not terminate");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(fp: &FpCtx, c: &[i64]) -> Poly<u64> {
        Poly::new(fp, c.iter().map(|&x| fp.reduce_i64(x)).collect())
    }

    fn paper_curve() -> Genus2Curve {
        Genus2Curve::new(997, [630, 503, 64, 363, 99, 113, 1]).unwrap()
    }

    fn paper_d1(fp: &FpCtx) -> MumfordPoint {
        MumfordPoint::new(poly(fp, &[208, 392, 1]), poly(fp, &[603, 579]), 2)
    }

    fn paper_d2(fp: &FpCtx) -> MumfordPoint {
        MumfordPoint::new(poly(fp, &[527, 48, 1]), poly(fp, &[832, 918]), 2)
    }

    #[test]
    fn validate_paper_examples() {
        // H: y² = x⁶ - 1 over F_13
        let h = Genus2Curve::new(13, [12, 0, 0, 0, 0, 0, 1]).unwrap();
        let jac = Jacobian::new(&h);
        let fp = h.fp();
        assert!(jac.validate(&jac.identity()).is_ok());
        // ⟨x² - 1, 0, 2⟩
        let e = MumfordPoint::new(poly(fp, &[-1, 0, 1]), Poly::zero(), 2);
        assert!(jac.validate(&e).is_ok());
        // ⟨1, x³, 2⟩: b² - f = 1, degree 0 ≤ 6 - 4
        let e = MumfordPoint::new(Poly::one(fp), poly(fp, &[0, 0, 0, 1]), 2);
        assert!(jac.validate(&e).is_ok());
        // bad: d = 1 on a curve with two points at infinity
        let e = MumfordPoint::new(poly(fp, &[12, 1]), poly(fp, &[0]), 1);
        assert!(matches!(
            jac.validate(&e),
            Err(JacobianError::BadDegreeFlag { .. })
        ));
        // bad: non-monic a
        let e = MumfordPoint::new(poly(fp, &[1, 2]), Poly::zero(), 2);
        assert_eq!(jac.validate(&e), Err(JacobianError::NotMonic));
        // bad: a does not divide b² - f
        let e = MumfordPoint::new(poly(fp, &[5, 1]), poly(fp, &[1]), 2);
        assert!(matches!(
            jac.validate(&e),
            Err(JacobianError::DivisibilityFails | JacobianError::InfinityContactFails(_))
        ));
    }

    #[test]
    fn paper_generators_have_order_three() {
        let h = paper_curve();
        let jac = Jacobian::new(&h);
        let fp = h.fp();
        for g in [paper_d1(fp), paper_d2(fp)] {
            assert!(jac.validate(&g).is_ok());
            let twice = jac.add(&g, &g).unwrap();
            let thrice = jac.add(&twice, &g).unwrap();
            assert_eq!(thrice, jac.identity());
            assert_eq!(jac.scalar_mul(3, &g).unwrap(), jac.identity());
            // 2g = -g for order 3
            assert_eq!(twice, jac.negate(&g));
        }
    }

    #[test]
    fn negate_involution_and_inverse() {
        let h = paper_curve();
        let jac = Jacobian::new(&h);
        let fp = h.fp();
        let d1 = paper_d1(fp);
        let neg = jac.negate(&d1);
        assert_eq!(neg.b(), &poly(fp, &[-603, -579]));
        assert_eq!(jac.negate(&neg), d1);
        assert_eq!(jac.add(&d1, &neg).unwrap(), jac.identity());
        // identity and 2-torsion are self-inverse
        assert_eq!(jac.negate(&jac.identity()), jac.identity());
        let h13 = Genus2Curve::new(13, [12, 0, 0, 0, 0, 0, 1]).unwrap();
        let jac13 = Jacobian::new(&h13);
        let two_torsion = MumfordPoint::new(poly(h13.fp(), &[-1, 0, 1]), Poly::zero(), 2);
        assert_eq!(jac13.negate(&two_torsion), two_torsion);
    }

    #[test]
    fn identity_laws() {
        let h = paper_curve();
        let jac = Jacobian::new(&h);
        let fp = h.fp();
        let id = jac.identity();
        for e in [paper_d1(fp), paper_d2(fp), id.clone()] {
            assert_eq!(jac.add(&e, &id).unwrap(), e);
            assert_eq!(jac.add(&id, &e).unwrap(), e);
            assert_eq!(jac.scalar_mul(0, &e).unwrap(), id);
        }
    }

    #[test]
    fn subgroup_matches_paper_half_set() {
        let h = paper_curve();
        let jac = Jacobian::new(&h);
        let fp = h.fp();
        let s = jac.build_subgroup(&paper_d1(fp), &paper_d2(fp)).unwrap();
        assert_eq!(s.elements().len(), 9);
        assert_eq!(s.half_set().len(), 4);
        // the four printed elements, up to sign
        let printed = [
            MumfordPoint::new(poly(fp, &[208, 392, 1]), poly(fp, &[603, 579]), 2),
            MumfordPoint::new(poly(fp, &[527, 48, 1]), poly(fp, &[832, 918]), 2),
            MumfordPoint::new(poly(fp, &[880, 428, 1]), poly(fp, &[901, 252]), 2),
            MumfordPoint::new(poly(fp, &[292, 348, 1]), poly(fp, &[269, 596]), 2),
        ];
        for t in &printed {
            let found = s
                .half_set()
                .iter()
                .any(|e| e == t || e == &jac.negate(t));
            assert!(found, "printed element missing from S^±: {t:?}");
        }
        // degenerate generator pairs
        let d1 = paper_d1(fp);
        assert_eq!(
            jac.build_subgroup(&d1, &d1).unwrap_err(),
            JacobianError::GeneratorsDependent
        );
        let twice = jac.scalar_mul(2, &d1).unwrap();
        assert_eq!(
            jac.build_subgroup(&d1, &twice).unwrap_err(),
            JacobianError::GeneratorsDependent
        );
        let id = jac.identity();
        assert_eq!(
            jac.build_subgroup(&d1, &id).unwrap_err(),
            JacobianError::NotOrderThree
        );
    }

    #[test]
    fn closure_preserves_invariants() {
        let h = paper_curve();
        let jac = Jacobian::new(&h);
        let fp = h.fp();
        let d1 = paper_d1(fp);
        let d2 = paper_d2(fp);
        let mut acc = jac.identity();
        for _ in 0..6 {
            acc = jac.add(&acc, &d1).unwrap();
            assert!(jac.validate(&acc).is_ok());
            acc = jac.add(&acc, &d2).unwrap();
            assert!(jac.validate(&acc).is_ok());
        }
    }
}
