//! Dense univariate polynomials over a [`Field`] context.
//!
//! Coefficients are stored low degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and `degree()` returns `None` for it
//! (the `-∞` sentinel).

use super::{AlgebraError, Field};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    c: Vec<E>,
}

impl<E: Copy + Eq + core::fmt::Debug> Poly<E> {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn new<F: Field<Elem = E>>(f: &F, coeffs: Vec<E>) -> Self {
        let mut c = coeffs;
        while c.last().is_some_and(|&x| f.is_zero(x)) {
            c.pop();
        }
        Poly { c }
    }

    pub fn constant<F: Field<Elem = E>>(f: &F, a: E) -> Self {
        Poly::new(f, vec![a])
    }

    pub fn one<F: Field<Elem = E>>(f: &F) -> Self {
        Poly { c: vec![f.one()] }
    }

    /// The monomial `x`.
    pub fn x<F: Field<Elem = E>>(f: &F) -> Self {
        Poly {
            c: vec![f.zero(), f.one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with `None` as the `-∞` sentinel for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    /// Degree as an `i64`, with `-1` standing in for `-∞`.
    pub fn deg_i64(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[E] {
        &self.c
    }

    /// Coefficient of `x^i`, zero-padded beyond the degree.
    pub fn coeff<F: Field<Elem = E>>(&self, f: &F, i: usize) -> E {
        self.c.get(i).copied().unwrap_or_else(|| f.zero())
    }

    pub fn leading(&self) -> Option<E> {
        self.c.last().copied()
    }

    pub fn is_monic<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.leading() == Some(f.one())
    }

    pub fn is_one<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.c.len() == 1 && self.c[0] == f.one()
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.add(self.coeff(f, i), other.coeff(f, i)));
        }
        Poly::new(f, out)
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.sub(self.coeff(f, i), other.coeff(f, i)));
        }
        Poly::new(f, out)
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Poly {
            c: self.c.iter().map(|&x| f.neg(x)).collect(),
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![f.zero(); self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn mul_scalar<F: Field<Elem = E>>(&self, f: &F, s: E) -> Self {
        Poly::new(f, self.c.iter().map(|&x| f.mul(x, s)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift_up<F: Field<Elem = E>>(&self, f: &F, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![f.zero(); k];
        out.extend_from_slice(&self.c);
        Poly { c: out }
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divmod<F: Field<Elem = E>>(&self, f: &F, d: &Self) -> Result<(Self, Self), AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::ZeroPolyDivisor)?;
        let lead_inv = f.inv(d.leading().unwrap()).expect("leading coeff nonzero");
        let mut r = self.c.clone();
        if r.len() < dd + 1 {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let qe = f.mul(r[i], lead_inv);
            if f.is_zero(qe) {
                continue;
            }
            q[i - dd] = qe;
            for (j, &dc) in d.c.iter().enumerate() {
                r[i - dd + j] = f.sub(r[i - dd + j], f.mul(qe, dc));
            }
        }
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    /// Remainder of Euclidean division.
    pub fn rem<F: Field<Elem = E>>(&self, f: &F, d: &Self) -> Result<Self, AlgebraError> {
        Ok(self.divmod(f, d)?.1)
    }

    /// Exact quotient; panics in debug builds if the division has remainder.
    pub fn div_exact<F: Field<Elem = E>>(&self, f: &F, d: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.divmod(f, d)?;
        debug_assert!(r.is_zero(), "div_exact with nonzero remainder");
        Ok(q)
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(f, &b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Extended gcd: returns monic `g` and `(s, t)` with `s·self + t·other = g`.
    pub fn xgcd<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one(f);
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::one(f);
        while !r1.is_zero() {
            let (q, r) = r0.divmod(f, &r1).expect("r1 nonzero");
            let s = s0.sub(f, &q.mul(f, &s1));
            let t = t0.sub(f, &q.mul(f, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(lead) = r0.leading() {
            let li = f.inv(lead).expect("leading nonzero");
            r0 = r0.mul_scalar(f, li);
            s0 = s0.mul_scalar(f, li);
            t0 = t0.mul_scalar(f, li);
        }
        (r0, s0, t0)
    }

    pub fn monic<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) if l == f.one() => self.clone(),
            Some(l) => self.mul_scalar(f, f.inv(l).expect("leading nonzero")),
        }
    }

    pub fn eval<F: Field<Elem = E>>(&self, f: &F, x: E) -> E {
        // Horner
        let mut acc = f.zero();
        for &c in self.c.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn derivative<F: Field<Elem = E>>(&self, f: &F) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.c.len() - 1);
        for (i, &c) in self.c.iter().enumerate().skip(1) {
            let mut n = f.zero();
            // i·c by repeated addition is fine at these degrees, but use
            // the field's small-scalar product directly.
            let mut k = i;
            let mut addend = c;
            while k > 0 {
                if k & 1 == 1 {
                    n = f.add(n, addend);
                }
                addend = f.add(addend, addend);
                k >>= 1;
            }
            out.push(n);
        }
        Poly::new(f, out)
    }

    /// Composition `self(g(x))`.
    pub fn compose<F: Field<Elem = E>>(&self, f: &F, g: &Self) -> Self {
        let mut acc = Poly::zero();
        for &c in self.c.iter().rev() {
            acc = acc.mul(f, g).add(f, &Poly::constant(f, c));
        }
        acc
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate<F: Field<Elem = E>>(f: &F, points: &[(E, E)]) -> Self {
        let mut acc = Poly::zero();
        for (i, &(xi, yi)) in points.iter().enumerate() {
            let mut num = Poly::constant(f, yi);
            let mut den = f.one();
            for (j, &(xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                num = num.mul(f, &Poly::new(f, vec![f.neg(xj), f.one()]));
                den = f.mul(den, f.sub(xi, xj));
            }
            acc = acc.add(f, &num.mul_scalar(f, f.inv(den).expect("distinct nodes")));
        }
        acc
    }

    /// Resultant with another nonzero polynomial, via the Sylvester matrix.
    pub fn resultant<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> E {
        use super::matrix::Matrix;
        let m = self.degree().expect("resultant of zero polynomial");
        let n = other.degree().expect("resultant of zero polynomial");
        if m == 0 || n == 0 {
            let (base, e) = if m == 0 { (self.c[0], n) } else { (other.c[0], m) };
            let mut acc = f.one();
            for _ in 0..e {
                acc = f.mul(acc, base);
            }
            return acc;
        }
        let size = m + n;
        let mut s = Matrix::zeros(f, size, size);
        for row in 0..n {
            for (k, &c) in self.c.iter().enumerate() {
                s[(row, row + m - k)] = c;
            }
        }
        for row in 0..m {
            for (k, &c) in other.c.iter().enumerate() {
                s[(n + row, row + n - k)] = c;
            }
        }
        s.determinant(f)
    }

    /// Maps coefficients into another field.
    pub fn map<E2, F2, M>(&self, f2: &F2, m: M) -> Poly<E2>
    where
        E2: Copy + Eq + core::fmt::Debug,
        F2: Field<Elem = E2>,
        M: Fn(E) -> E2,
    {
        Poly::new(f2, self.c.iter().map(|&x| m(x)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FpCtx;

    fn poly(f: &FpCtx, c: &[i64]) -> Poly<u64> {
        Poly::new(f, c.iter().map(|&x| f.reduce_i64(x)).collect())
    }

    #[test]
    fn degree_sentinel() {
        let f = FpCtx::new(13).unwrap();
        assert_eq!(Poly::<u64>::zero().degree(), None);
        assert_eq!(poly(&f, &[5]).degree(), Some(0));
        assert_eq!(poly(&f, &[0, 0, 1]).degree(), Some(2));
        assert_eq!(poly(&f, &[0, 0, 0]).degree(), None);
    }

    #[test]
    fn mod_and_gcd_examples() {
        let f = FpCtx::new(13).unwrap();
        // x^6 - 1 mod x^2 - 1 = 0
        let x6m1 = poly(&f, &[-1, 0, 0, 0, 0, 0, 1]);
        let x2m1 = poly(&f, &[-1, 0, 1]);
        assert!(x6m1.rem(&f, &x2m1).unwrap().is_zero());
        // gcd(f, f') = 1 for squarefree f
        let fp = x6m1.derivative(&f);
        assert!(x6m1.gcd(&f, &fp).is_one(&f));
        // division by zero polynomial
        assert!(matches!(
            x6m1.divmod(&f, &Poly::zero()),
            Err(AlgebraError::ZeroPolyDivisor)
        ));
    }

    #[test]
    fn divmod_identity() {
        let f = FpCtx::new(97).unwrap();
        let u = poly(&f, &[3, 1, 4, 1, 5, 9, 2, 6]);
        let d = poly(&f, &[2, 7, 1, 8]);
        let (q, r) = u.divmod(&f, &d).unwrap();
        assert!(r.deg_i64() < d.deg_i64());
        assert_eq!(q.mul(&f, &d).add(&f, &r), u);
    }

    #[test]
    fn eval_cross_check_two_strategies() {
        // Horner against naive power sums on 100 inputs.
        let f = FpCtx::new(997).unwrap();
        let u = poly(&f, &[630, 503, 64, 363, 99, 113, 1]);
        for x in 0..100u64 {
            let mut naive = 0u64;
            let mut xp = 1u64;
            for &c in u.coeffs() {
                naive = f.add(naive, f.mul(c, xp));
                xp = f.mul(xp, x);
            }
            assert_eq!(u.eval(&f, x), naive);
        }
    }

    #[test]
    fn xgcd_bezout() {
        let f = FpCtx::new(31).unwrap();
        let a = poly(&f, &[1, 2, 0, 1]);
        let b = poly(&f, &[5, 1, 1]);
        let (g, s, t) = a.xgcd(&f, &b);
        let lhs = s.mul(&f, &a).add(&f, &t.mul(&f, &b));
        assert_eq!(lhs, g);
        assert!(g.is_monic(&f));
    }

    #[test]
    fn interpolation_roundtrip() {
        let f = FpCtx::new(101).unwrap();
        let u = poly(&f, &[7, 0, 3, 1]);
        let pts: Vec<(u64, u64)> = (0..4).map(|x| (x, u.eval(&f, x))).collect();
        assert_eq!(Poly::interpolate(&f, &pts), u);
    }
}
