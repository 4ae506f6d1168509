//! Recovery of the codomain curve from the plane conic `Q` and cubic `C`:
//! the double cover of `Q` ramified over `Q ∩ C`. A nonsingular conic gives
//! a genus-2 sextic model; a rank-2 conic splits into two lines and yields a
//! one-point union of elliptic curves over `F_p(δ)`.

use crate::algebra::{matrix, Field, Fp2Ctx, Fp2El, FpCtx, Matrix, Poly};
use crate::curve::{CurveError, Genus2Curve};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecoveryError {
    #[error("recovered sextic is degenerate (ramification values collide)")]
    Degenerate,
    #[error("conic has rank < 2")]
    RankTooLow,
    #[error("quadric form is zero")]
    ZeroQuadric,
    #[error("cubic form is zero")]
    ZeroCubic,
    #[error("cubic is a multiple of the quadric")]
    CubicMultipleOfQuadric,
}

/// Monomial order for quadratic forms in `(V_0, V_1, V_2)`:
/// `V_0², V_0V_1, V_0V_2, V_1², V_1V_2, V_2²`.
pub const QUAD_MONOMIALS: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

/// Monomial order for cubic forms in `(V_0, V_1, V_2)`.
pub const CUBIC_MONOMIALS: [(usize, usize, usize); 10] = [
    (0, 0, 0),
    (0, 0, 1),
    (0, 0, 2),
    (0, 1, 1),
    (0, 1, 2),
    (0, 2, 2),
    (1, 1, 1),
    (1, 1, 2),
    (1, 2, 2),
    (2, 2, 2),
];

/// The interpolated plane forms: conic `Q` and cubic `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneForms {
    pub q: [u64; 6],
    pub c: [u64; 10],
}

impl PlaneForms {
    pub fn new(q: [u64; 6], c: [u64; 10]) -> Result<Self, RecoveryError> {
        if q.iter().all(|&x| x == 0) {
            return Err(RecoveryError::ZeroQuadric);
        }
        if c.iter().all(|&x| x == 0) {
            return Err(RecoveryError::ZeroCubic);
        }
        Ok(PlaneForms { q, c })
    }
}

pub fn eval_quadric<E: Copy + Eq + core::fmt::Debug, F: Field<Elem = E>>(
    f: &F,
    q: &[E; 6],
    v: &[E; 3],
) -> E {
    let mut acc = f.zero();
    for (k, &(i, j)) in QUAD_MONOMIALS.iter().enumerate() {
        acc = f.add(acc, f.mul(q[k], f.mul(v[i], v[j])));
    }
    acc
}

pub fn eval_cubic<E: Copy + Eq + core::fmt::Debug, F: Field<Elem = E>>(
    f: &F,
    c: &[E; 10],
    v: &[E; 3],
) -> E {
    let mut acc = f.zero();
    for (k, &(i, j, l)) in CUBIC_MONOMIALS.iter().enumerate() {
        acc = f.add(acc, f.mul(c[k], f.mul(v[i], f.mul(v[j], v[l]))));
    }
    acc
}

/// The symmetric matrix of the quadric: `M[i][i] = 2q_ii`, `M[i][j] = q_ij`.
/// `det(M) = 0` iff the conic is singular (p odd).
pub fn conic_matrix(fp: &FpCtx, q: &[u64; 6]) -> Matrix<u64> {
    let two = |x| fp.mul(2, x);
    Matrix::from_rows(vec![
        vec![two(q[0]), q[1], q[2]],
        vec![q[1], two(q[3]), q[4]],
        vec![q[2], q[4], two(q[5])],
    ])
}

fn bilinear(fp: &FpCtx, m: &Matrix<u64>, u: &[u64; 3], w: &[u64; 3]) -> u64 {
    let mut acc = 0;
    for i in 0..3 {
        for j in 0..3 {
            acc = fp.add(acc, fp.mul(u[i], fp.mul(m[(i, j)], w[j])));
        }
    }
    acc
}

fn normalize_proj3(fp: &FpCtx, v: &mut [u64; 3]) {
    if let Some(first) = v.iter().position(|&x| x != 0) {
        let inv = fp.inv(v[first]).unwrap();
        for x in v.iter_mut() {
            *x = fp.mul(*x, inv);
        }
    }
}

/// A rational point on a nonsingular conic, by deterministic search over
/// x-slices. Over a finite field such a point always exists. A `hint`
/// (typically the image of a rational Weierstrass point) short-circuits the
/// search; `exclude` forces a point projectively different from the given
/// one, which is used for re-parametrization checks.
pub fn find_point_on_conic(
    fp: &FpCtx,
    q: &[u64; 6],
    hint: Option<[u64; 3]>,
    exclude: Option<&[u64; 3]>,
) -> [u64; 3] {
    let ok = |v: &[u64; 3]| -> bool {
        v.iter().any(|&x| x != 0)
            && eval_quadric(fp, q, v) == 0
            && exclude.map_or(true, |e| e != v)
    };
    if let Some(h) = hint {
        let mut h = h;
        normalize_proj3(fp, &mut h);
        if ok(&h) {
            return h;
        }
    }
    let p = fp.modulus();
    // slices V = (x0 : t : 1)
    for x0 in 0..p {
        // quadratic in t: q11 t² + (q01 x0 + q12) t + (q00 x0² + q02 x0 + q22)
        let a = q[3];
        let b = fp.add(fp.mul(q[1], x0), q[4]);
        let c = fp.add(
            fp.add(fp.mul(q[0], fp.mul(x0, x0)), fp.mul(q[2], x0)),
            q[5],
        );
        let mut candidates: Vec<u64> = Vec::new();
        if a != 0 {
            let disc = fp.sub(fp.mul(b, b), fp.mul(4, fp.mul(a, c)));
            if let Ok(r) = fp.sqrt(disc) {
                let inv2a = fp.inv(fp.mul(2, a)).unwrap();
                candidates.push(fp.mul(fp.sub(r, b), inv2a));
                candidates.push(fp.mul(fp.sub(fp.neg(r), b), inv2a));
            }
        } else if b != 0 {
            candidates.push(fp.neg(fp.div(c, b).unwrap()));
        } else if c == 0 {
            candidates.push(0);
        }
        candidates.sort_unstable();
        for t in candidates {
            let mut v = [x0, t, 1];
            normalize_proj3(fp, &mut v);
            if ok(&v) {
                return v;
            }
        }
    }
    // line at infinity V = (x0 : 1 : 0), then (1 : 0 : 0)
    for x0 in 0..p {
        let mut v = [x0, 1, 0];
        normalize_proj3(fp, &mut v);
        if ok(&v) {
            return v;
        }
    }
    let v = [1, 0, 0];
    if ok(&v) {
        return v;
    }
    unreachable!("nonsingular conic over F_p has p+1 rational points");
}

/// Parametrization of a nonsingular conic by the pencil of lines through a
/// rational point `P` on it: three quadratic forms `(P_0, P_1, P_2)` in
/// `(X, Z)` with `Q(P_0, P_1, P_2) ≡ 0` and no common root.
/// Coefficients are returned per form as `(X², XZ, Z²)`.
pub fn parametrize_conic(fp: &FpCtx, q: &[u64; 6], point: &[u64; 3]) -> [[u64; 3]; 3] {
    debug_assert_eq!(eval_quadric(fp, q, point), 0);
    let m = conic_matrix(fp, q);
    // complete {P} to a basis with the two earliest standard vectors
    let mut basis: Vec<[u64; 3]> = Vec::new();
    for i in 0..3 {
        let mut e = [0u64; 3];
        e[i] = 1;
        let mut probe = Matrix::from_rows(
            std::iter::once(point.to_vec())
                .chain(basis.iter().map(|b| b.to_vec()))
                .chain(std::iter::once(e.to_vec()))
                .collect(),
        );
        let rank = probe.rref(fp).len();
        if rank == basis.len() + 2 {
            basis.push(e);
        }
        if basis.len() == 2 {
            break;
        }
    }
    let (d1, d2) = (basis[0], basis[1]);
    // second intersection of the line through P with direction X·d1 + Z·d2:
    // V(X,Z) = Q(D)·P − B(P,D)·D, which is quadratic in (X, Z)
    let q_d1 = eval_quadric(fp, q, &d1);
    let q_d2 = eval_quadric(fp, q, &d2);
    let b_12 = bilinear(fp, &m, &d1, &d2);
    let b_p1 = bilinear(fp, &m, point, &d1);
    let b_p2 = bilinear(fp, &m, point, &d2);
    let mut forms = [[0u64; 3]; 3];
    for k in 0..3 {
        // Q(D)·P_k: (q_d1 X² + b_12 XZ + q_d2 Z²)·P_k
        let mut xx = fp.mul(q_d1, point[k]);
        let mut xz = fp.mul(b_12, point[k]);
        let mut zz = fp.mul(q_d2, point[k]);
        // − B(P,D)·D_k: −(b_p1 X + b_p2 Z)(d1_k X + d2_k Z)
        xx = fp.sub(xx, fp.mul(b_p1, d1[k]));
        xz = fp.sub(xz, fp.add(fp.mul(b_p1, d2[k]), fp.mul(b_p2, d1[k])));
        zz = fp.sub(zz, fp.mul(b_p2, d2[k]));
        forms[k] = [xx, xz, zz];
    }
    forms
}

/// A one-point union of elliptic curves `Y² = C±(X,Z)` over `F_p(δ)`.
#[derive(Debug, Clone)]
pub struct EllipticPair {
    /// `δ² = -a/b` from the diagonalized conic.
    pub delta_sq: u64,
    /// Cubic coefficients of `C₊`, low degree first (`Z³ … X³`).
    pub c_plus: [Fp2El; 4],
    /// Cubic coefficients of `C₋`.
    pub c_minus: [Fp2El; 4],
    /// The two linear forms with `scale·L₊·L₋ = 2Q`.
    pub line_plus: [Fp2El; 3],
    pub line_minus: [Fp2El; 3],
    pub scale: u64,
    /// The split conic, kept for the factorization identity check.
    pub q: [u64; 6],
}

impl EllipticPair {
    pub fn delta_in_base_field(&self, fp: &FpCtx) -> bool {
        fp.legendre(self.delta_sq) >= 0
    }

    /// Exact check that the two recovered linear forms multiply to the conic:
    /// `scale·L₊(V)·L₋(V) = 2·Q(V)` coefficientwise.
    pub fn split_identity_holds(&self, fp: &FpCtx) -> bool {
        let k = Fp2Ctx::new(*fp);
        for (slot, &(i, j)) in QUAD_MONOMIALS.iter().enumerate() {
            // coefficient of V_i V_j in L₊·L₋
            let mut coeff = if i == j {
                k.mul(self.line_plus[i], self.line_minus[i])
            } else {
                k.add(
                    k.mul(self.line_plus[i], self.line_minus[j]),
                    k.mul(self.line_plus[j], self.line_minus[i]),
                )
            };
            coeff = k.mul_base(coeff, self.scale);
            let want = k.lift(fp.mul(2, self.q[slot]));
            if coeff != want {
                return false;
            }
        }
        true
    }

    /// Galois-conjugacy of the two components when `δ ∉ F_p`.
    pub fn components_conjugate(&self, fp: &FpCtx) -> bool {
        let k = Fp2Ctx::new(*fp);
        (0..4).all(|i| k.conj(self.c_plus[i]) == self.c_minus[i])
    }
}

/// Output of the recovery step.
#[derive(Debug, Clone)]
pub enum RecoveredCurve {
    Sextic { curve: Genus2Curve },
    EllipticPair(EllipticPair),
}

/// Runs the curve-recovery algorithm on `(Q, C)`. The `hint` seeds the conic
/// point search; `exclude` forces an independent parametrization (used by
/// verification).
pub fn recover(
    fp: &FpCtx,
    forms: &PlaneForms,
    hint: Option<[u64; 3]>,
    exclude: Option<&[u64; 3]>,
) -> Result<RecoveredCurve, RecoveryError> {
    if cubic_is_multiple_of_quadric(fp, forms) {
        return Err(RecoveryError::CubicMultipleOfQuadric);
    }
    let m = conic_matrix(fp, &forms.q);
    if m.determinant(fp) != 0 {
        let point = find_point_on_conic(fp, &forms.q, hint, exclude);
        let par = parametrize_conic(fp, &forms.q, &point);
        let g = substitute_cubic(fp, &forms.c, &par);
        match Genus2Curve::new(fp.modulus(), g) {
            Ok(curve) => Ok(RecoveredCurve::Sextic { curve }),
            Err(CurveError::NotSquarefree | CurveError::RepeatedRootAtInfinity) => {
                Err(RecoveryError::Degenerate)
            }
            Err(CurveError::Algebra(_)) => unreachable!("modulus already validated"),
        }
    } else {
        recover_split(fp, forms, &m)
    }
}

/// The point the recovery uses on the conic; exposed so callers can exclude
/// it when re-running with an independent parametrization.
pub fn recovery_point(fp: &FpCtx, forms: &PlaneForms, hint: Option<[u64; 3]>) -> Option<[u64; 3]> {
    let m = conic_matrix(fp, &forms.q);
    if m.determinant(fp) != 0 {
        Some(find_point_on_conic(fp, &forms.q, hint, None))
    } else {
        None
    }
}

fn recover_split(
    fp: &FpCtx,
    forms: &PlaneForms,
    m: &Matrix<u64>,
) -> Result<RecoveredCurve, RecoveryError> {
    let (t, diag) = matrix::diagonalize_symmetric3(fp, m);
    let [a, b, zero] = diag;
    if zero != 0 || b == 0 {
        // full rank was handled by the caller; rank ≤ 1 is unusable
        return Err(RecoveryError::RankTooLow);
    }
    let k = Fp2Ctx::new(*fp);
    let delta_sq = fp.neg(fp.div(a, b).unwrap());
    let delta = k.sqrt_of_base(delta_sq);
    // C±(X,Z) = C((t_i0 ± δ t_i1) Z + t_i2 X)
    let mut cubics: Vec<[Fp2El; 4]> = Vec::with_capacity(2);
    for sign in [1i64, -1] {
        let d = if sign > 0 { delta } else { k.neg(delta) };
        // V_i(X,Z) as a linear polynomial in x (with z = 1): t_i2·x + (t_i0 ± δ t_i1)
        let subs: Vec<Poly<Fp2El>> = (0..3)
            .map(|i| {
                let c0 = k.add(k.lift(t[(i, 0)]), k.mul_base(d, t[(i, 1)]));
                Poly::new(&k, vec![c0, k.lift(t[(i, 2)])])
            })
            .collect();
        let mut acc = Poly::zero();
        let clift: Vec<Fp2El> = forms.c.iter().map(|&x| k.lift(x)).collect();
        for (slot, &(i, j, l)) in CUBIC_MONOMIALS.iter().enumerate() {
            let term = subs[i]
                .mul(&k, &subs[j])
                .mul(&k, &subs[l])
                .mul_scalar(&k, clift[slot]);
            acc = acc.add(&k, &term);
        }
        let mut coeffs = [k.zero(); 4];
        for i in 0..4 {
            coeffs[i] = acc.coeff(&k, i);
        }
        cubics.push(coeffs);
    }
    // linear forms: L± = (T⁻¹V)_1 ± δ·(T⁻¹V)_0, so that b·L₊·L₋ = 2Q
    let tinv = t.inverse(fp).expect("T invertible");
    let mut line_plus = [k.zero(); 3];
    let mut line_minus = [k.zero(); 3];
    for j in 0..3 {
        let w0 = k.lift(tinv[(0, j)]);
        let w1 = k.lift(tinv[(1, j)]);
        line_plus[j] = k.add(w1, k.mul(delta, w0));
        line_minus[j] = k.sub(w1, k.mul(delta, w0));
    }
    let pair = EllipticPair {
        delta_sq,
        c_plus: cubics[0],
        c_minus: cubics[1],
        line_plus,
        line_minus,
        scale: b,
        q: forms.q,
    };
    debug_assert!(pair.split_identity_holds(fp));
    Ok(RecoveredCurve::EllipticPair(pair))
}

/// `C(P_0, P_1, P_2)` for quadratic forms `P_k`, as a sextic coefficient
/// vector.
pub fn substitute_cubic(fp: &FpCtx, c: &[u64; 10], par: &[[u64; 3]; 3]) -> [u64; 7] {
    // work with x = X, z = 1; the substitution is homogeneous of degree 6
    let ps: Vec<Poly<u64>> = par
        .iter()
        .map(|f| Poly::new(fp, vec![f[2], f[1], f[0]]))
        .collect();
    let mut acc = Poly::zero();
    for (slot, &(i, j, l)) in CUBIC_MONOMIALS.iter().enumerate() {
        let term = ps[i]
            .mul(fp, &ps[j])
            .mul(fp, &ps[l])
            .mul_scalar(fp, c[slot]);
        acc = acc.add(fp, &term);
    }
    let mut out = [0u64; 7];
    for i in 0..7 {
        out[i] = acc.coeff(fp, i);
    }
    out
}

/// Whether `C = L·Q` for some linear form `L`: a 10×3 exact linear solve.
fn cubic_is_multiple_of_quadric(fp: &FpCtx, forms: &PlaneForms) -> bool {
    // unknowns l0, l1, l2 with C = (l0 V0 + l1 V1 + l2 V2)·Q
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(10);
    let mut rhs: Vec<u64> = Vec::with_capacity(10);
    for (slot, &(i, j, l)) in CUBIC_MONOMIALS.iter().enumerate() {
        let mut row = vec![0u64; 3];
        // coefficient of V_iV_jV_l in V_k·Q: sum over ways to factor out V_k
        let mut mono = [0usize; 3];
        mono[i] += 1;
        mono[j] += 1;
        mono[l] += 1;
        for kvar in 0..3 {
            if mono[kvar] == 0 {
                continue;
            }
            let mut rest = mono;
            rest[kvar] -= 1;
            // rest is a degree-2 monomial; find its quadric slot
            let mut pair = Vec::new();
            for (v, &cnt) in rest.iter().enumerate() {
                for _ in 0..cnt {
                    pair.push(v);
                }
            }
            let qslot = QUAD_MONOMIALS
                .iter()
                .position(|&(x, y)| (x, y) == (pair[0], pair[1]))
                .unwrap();
            row[kvar] = fp.add(row[kvar], forms.q[qslot]);
        }
        rows.push(row);
        rhs.push(forms.c[slot]);
    }
    // consistent iff rank of [rows] equals rank of [rows | rhs]
    let a = Matrix::from_rows(rows.clone());
    let mut aug_rows = rows;
    for (r, row) in aug_rows.iter_mut().enumerate() {
        row.push(rhs[r]);
    }
    let aug = Matrix::from_rows(aug_rows);
    a.rank(fp) == aug.rank(fp)
}
