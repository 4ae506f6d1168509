//! Factorization of squarefree polynomials over `F_p`, by distinct-degree
//! splitting followed by deterministic equal-degree splitting.
//!
//! Only small degrees (≤ 6 here) ever reach this code, so the emphasis is on
//! determinism rather than speed: the equal-degree stage tries a fixed
//! sequence of split candidates instead of random ones.

use super::fp::FpCtx;
use super::poly::Poly;


/// x^e mod m, by repeated squaring on polynomials.
pub fn pow_x_mod(f: &FpCtx, e: u64, m: &Poly<u64>) -> Poly<u64> {
    let x = Poly::x(f);
    pow_poly_mod(f, &x, e, m)
}

pub fn pow_poly_mod(f: &FpCtx, base: &Poly<u64>, mut e: u64, m: &Poly<u64>) -> Poly<u64> {
    let mut acc = Poly::one(f);
    let mut b = base.rem(f, m).expect("modulus nonzero");
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(f, &b).rem(f, m).unwrap();
        }
        b = b.mul(f, &b).rem(f, m).unwrap();
        e >>= 1;
    }
    acc
}

/// Monic irreducible factors of a squarefree monic polynomial, sorted by
/// (degree, coefficients) for deterministic output.
pub fn factor_squarefree(f: &FpCtx, poly: &Poly<u64>) -> Vec<Poly<u64>> {
    assert!(poly.is_monic(f), "input must be monic");
    let mut out = Vec::new();
    let mut rest = poly.clone();

    // distinct-degree: gcd with x^(p^d) - x picks up factors of degree d
    let mut d = 1usize;
    let mut xq = Poly::x(f); // x^(p^d) mod rest, maintained incrementally
    while rest.degree().map_or(false, |dr| dr >= 2 * d) {
        xq = pow_poly_mod(f, &xq, f.modulus(), &rest);
        let split = xq.sub(f, &Poly::x(f)).gcd(f, &rest);
        if !split.is_one(f) {
            equal_degree_split(f, &split, d, &mut out);
            rest = rest.div_exact(f, &split).unwrap();
            xq = xq.rem(f, &rest).unwrap();
        }
        d += 1;
    }
    if rest.degree().is_some_and(|dr| dr > 0) {
        out.push(rest);
    }
    out.sort_by(|a, b| (a.degree(), a.coeffs()).cmp(&(b.degree(), b.coeffs())));
    out
}

/// Splits a product of distinct irreducibles all of degree `d`.
fn equal_degree_split(f: &FpCtx, poly: &Poly<u64>, d: usize, out: &mut Vec<Poly<u64>>) {
    let deg = poly.degree().unwrap();
    if deg == d {
        out.push(poly.clone());
        return;
    }
    let exp = (f.modulus().pow(d as u32) - 1) / 2;
    // fixed candidate sequence: x + c, then x² + c
    let mut c = 0u64;
    let mut quadratic = false;
    loop {
        let base = if quadratic {
            Poly::new(f, vec![c % f.modulus(), 0, 1])
        } else {
            Poly::new(f, vec![c % f.modulus(), 1])
        };
        let g = pow_poly_mod(f, &base, exp, poly).sub(f, &Poly::one(f));
        let h = g.gcd(f, poly);
        if let Some(dh) = h.degree() {
            if dh > 0 && dh < deg {
                equal_degree_split(f, &h, d, out);
                equal_degree_split(f, &poly.div_exact(f, &h).unwrap(), d, out);
                return;
            }
        }
        c += 1;
        if c == f.modulus() {
            c = 0;
            assert!(!quadratic, "equal-degree split exhausted candidates");
            quadratic = true;
        }
    }
}

/// Roots in `F_p` of an arbitrary nonzero polynomial (not necessarily
/// squarefree); each root listed once.
pub fn roots_in_fp(f: &FpCtx, poly: &Poly<u64>) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    if poly.is_zero() {
        return out;
    }
    let monic = poly.monic(f);
    if monic.degree() == Some(0) {
        return out;
    }
    // gcd with x^p - x isolates the F_p-rational part
    let xq = pow_x_mod(f, f.modulus(), &monic);
    let lin = xq.sub(f, &Poly::x(f)).gcd(f, &monic);
    for factor in factor_squarefree(f, &lin) {
        if factor.degree() == Some(1) {
            out.push(f.neg(factor.coeff(f, 0)));
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_sixth_roots_of_unity() {
        let f = FpCtx::new(13).unwrap();
        let x6m1 = Poly::new(&f, vec![12, 0, 0, 0, 0, 0, 1]);
        let factors = factor_squarefree(&f, &x6m1);
        assert_eq!(factors.len(), 6);
        let roots = roots_in_fp(&f, &x6m1);
        assert_eq!(roots, vec![1, 3, 4, 9, 10, 12]);
    }

    #[test]
    fn factor_mixed_degrees() {
        let f = FpCtx::new(13).unwrap();
        // (x - 1)(x² - 2)(x³ - x - 2) hmm: just multiply and refactor
        let a = Poly::new(&f, vec![12, 1]);
        let b = Poly::new(&f, vec![11, 0, 1]); // x² - 2, irreducible (2 is NR mod 13)
        let c = Poly::new(&f, vec![4, 6, 0, 1]);
        let prod = a.mul(&f, &b).mul(&f, &c);
        let g = prod.gcd(&f, &prod.derivative(&f));
        if g.is_one(&f) {
            let factors = factor_squarefree(&f, &prod);
            let total: usize = factors.iter().map(|p| p.degree().unwrap()).sum();
            assert_eq!(total, 6);
            let re: Poly<u64> = factors
                .iter()
                .fold(Poly::one(&f), |acc, p| acc.mul(&f, p));
            assert_eq!(re, prod);
        }
    }
}
