//! Arithmetic in the prime field `F_p` for word-size odd primes `p ≥ 5`.
//!
//! Elements are plain `u64` residues in `[0, p)`; the modulus travels with a
//! [`FpCtx`] context value rather than with each element. All operations are
//! pure and the context is freely shareable across threads.

use super::AlgebraError;

/// Context for arithmetic modulo an odd prime `p` with `p ∉ {2, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FpCtx {
    p: u64,
}

impl FpCtx {
    /// Creates a context after checking that `p` is an odd prime ≥ 5.
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p < 5 || !is_prime_u64(p) {
            return Err(AlgebraError::BadModulus(p));
        }
        Ok(FpCtx { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce_u64(&self, a: u64) -> u64 {
        a % self.p
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_i128(&self, a: i128) -> u64 {
        a.rem_euclid(self.p as i128) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b; // p < 2^61, no overflow
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    pub fn div(&self, a: u64, b: u64) -> Option<u64> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// Legendre symbol: `1` for nonzero squares, `-1` for non-residues, `0` for zero.
    pub fn legendre(&self, a: u64) -> i32 {
        if a == 0 {
            return 0;
        }
        let e = self.pow(a, (self.p - 1) / 2);
        if e == 1 {
            1
        } else {
            -1
        }
    }

    /// The smallest positive quadratic non-residue mod `p`.
    pub fn smallest_nonresidue(&self) -> u64 {
        let mut s = 2u64;
        while self.legendre(s) != -1 {
            s += 1;
        }
        s
    }

    /// Deterministic square root with the canonical choice: the root whose
    /// representative in `[0, p)` is smaller. Tonelli–Shanks with the smallest
    /// non-residue as generator.
    pub fn sqrt(&self, a: u64) -> Result<u64, AlgebraError> {
        if a == 0 {
            return Ok(0);
        }
        if self.legendre(a) != 1 {
            return Err(AlgebraError::NoRoot(a));
        }
        let p = self.p;
        let r = if p % 4 == 3 {
            self.pow(a, (p + 1) / 4)
        } else {
            self.tonelli_shanks(a)
        };
        debug_assert_eq!(self.mul(r, r), a);
        Ok(r.min(self.neg(r)))
    }

    fn tonelli_shanks(&self, a: u64) -> u64 {
        let p = self.p;
        // p - 1 = q * 2^s with q odd
        let mut q = p - 1;
        let mut s = 0u32;
        while q & 1 == 0 {
            q >>= 1;
            s += 1;
        }
        let z = self.smallest_nonresidue();
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            // least i with t^(2^i) = 1
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        r
    }
}

/// Deterministic Miller–Rabin, valid for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_validation() {
        assert!(FpCtx::new(13).is_ok());
        assert!(FpCtx::new(997).is_ok());
        assert!(matches!(FpCtx::new(2), Err(AlgebraError::BadModulus(2))));
        assert!(matches!(FpCtx::new(3), Err(AlgebraError::BadModulus(3))));
        assert!(matches!(FpCtx::new(15), Err(AlgebraError::BadModulus(15))));
    }

    #[test]
    fn sqrt_examples_mod_13() {
        let f = FpCtx::new(13).unwrap();
        // canonical smaller root
        assert_eq!(f.sqrt(4).unwrap(), 2);
        assert_eq!(f.sqrt(0).unwrap(), 0);
        // exhaustive squares mod 13 are {0,1,3,4,9,10,12}
        let squares: Vec<u64> = (0..13).filter(|&a| f.legendre(a) >= 0).collect();
        assert_eq!(squares, vec![0, 1, 3, 4, 9, 10, 12]);
        assert!(matches!(f.sqrt(2), Err(AlgebraError::NoRoot(2))));
    }

    #[test]
    fn sqrt_roundtrip_various_primes() {
        for p in [5u64, 13, 17, 97, 997, 65537, 2147483659] {
            let f = FpCtx::new(p).unwrap();
            for a in 1..50u64 {
                let a = a % p;
                if f.legendre(a) == 1 {
                    let r = f.sqrt(a).unwrap();
                    assert_eq!(f.mul(r, r), a);
                    assert!(r <= f.neg(r));
                }
            }
        }
    }

    #[test]
    fn field_ops() {
        let f = FpCtx::new(997).unwrap();
        for a in [0u64, 1, 2, 630, 996] {
            for b in [1u64, 3, 113, 996] {
                assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
            }
        }
        assert_eq!(f.inv(0), None);
        assert_eq!(f.reduce_i64(-76), 921);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(997));
        assert!(is_prime_u64((1u64 << 61) - 1));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561));
        assert!(!is_prime_u64(997 * 991));
    }
}
