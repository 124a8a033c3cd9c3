//! Arithmetic in the prime field `Z/qZ`.

use std::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 32003;

/// A residue modulo the configured prime. The modulus lives in
/// [`PrimeField`]; a bare `Fp` is only meaningful next to its field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp(u32);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u32,
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let q = q as u64;
    let mut f = 2u64;
    while f * f <= q {
        if q.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

impl PrimeField {
    /// Primes up to 2^31 keep every product inside a `u64`.
    pub fn new(q: u32) -> Result<Self> {
        if q >= 1 << 31 || !is_prime(q) {
            return Err(Error::Precondition(format!(
                "coefficient modulus {q} is not a prime below 2^31"
            )));
        }
        Ok(PrimeField { q })
    }

    pub fn modulus(&self) -> u32 {
        self.q
    }

    pub fn from_i64(&self, v: i64) -> Fp {
        Fp(v.rem_euclid(self.q as i64) as u32)
    }

    pub fn from_u64(&self, v: u64) -> Fp {
        Fp((v % self.q as u64) as u32)
    }

    /// Reduces `num/den` modulo `q`.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Fp> {
        let d = self.from_i64(den);
        if d.is_zero() {
            return Err(Error::Precondition(format!(
                "denominator {den} vanishes modulo {}",
                self.q
            )));
        }
        Ok(self.mul(self.from_i64(num), self.inv(d)))
    }

    #[inline]
    pub fn add(&self, a: Fp, b: Fp) -> Fp {
        let s = a.0 as u64 + b.0 as u64;
        let q = self.q as u64;
        Fp(if s >= q { s - q } else { s } as u32)
    }

    #[inline]
    pub fn sub(&self, a: Fp, b: Fp) -> Fp {
        if a.0 >= b.0 {
            Fp(a.0 - b.0)
        } else {
            Fp(a.0 + (self.q - b.0))
        }
    }

    #[inline]
    pub fn neg(&self, a: Fp) -> Fp {
        if a.0 == 0 {
            a
        } else {
            Fp(self.q - a.0)
        }
    }

    #[inline]
    pub fn mul(&self, a: Fp, b: Fp) -> Fp {
        Fp(((a.0 as u64 * b.0 as u64) % self.q as u64) as u32)
    }

    pub fn pow(&self, mut a: Fp, mut e: u64) -> Fp {
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse by Fermat. Panics on zero.
    pub fn inv(&self, a: Fp) -> Fp {
        assert!(!a.is_zero(), "inverse of zero in F_{}", self.q);
        self.pow(a, self.q as u64 - 2)
    }

    /// Symmetric representative in `(-q/2, q/2]`, used for printing.
    pub fn signed(&self, a: Fp) -> i64 {
        let v = a.0 as i64;
        if v > self.q as i64 / 2 {
            v - self.q as i64
        } else {
            v
        }
    }
}
