//! Arithmetic in prime fields `F_p` with word-sized representatives.

use crate::error::{Error, Result};

/// Default characteristic used when an input does not name one.
pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

/// A prime field `F_p` with `p < 2^31`.
///
/// Elements are plain `u32` values in `[0, p)`; products go through `u64`
/// so no intermediate result can overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) {
            return Err(Error::InvalidRing(format!(
                "characteristic {p} must be a prime below 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!(
                "characteristic {p} is not prime"
            )));
        }
        Ok(Fp { p: p as u32 })
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on signed 64-bit values
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        s0.rem_euclid(self.p as i64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Reduce an arbitrary signed integer into `[0, p)`.
    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric representative in `(-p/2, p/2]`, used when rendering.
    pub fn signed(self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Default for Fp {
    fn default() -> Self {
        Fp {
            p: DEFAULT_CHARACTERISTIC,
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_large() {
        assert!(Fp::new(32003).is_ok());
        assert!(Fp::new(2).is_ok());
        assert!(Fp::new(1).is_err());
        assert!(Fp::new(32001).is_err());
        assert!(Fp::new(1 << 31).is_err());
        assert!(Fp::new(2147483647).is_ok());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Fp::default();
        for a in [1u32, 2, 3, 17, 16001, 32002] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let big = Fp::new(2147483647).unwrap();
        let a = 2147483000;
        assert_eq!(big.mul(a, big.inv(a)), 1);
    }

    #[test]
    fn signed_representatives() {
        let f = Fp::new(7).unwrap();
        assert_eq!(f.signed(6), -1);
        assert_eq!(f.signed(3), 3);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.pow(3, 6), 1);
    }
}
