use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest modulus accepted; keeps every product below `u64::MAX`.
pub const MAX_PRIME: u64 = 1 << 31;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) || p >= MAX_PRIME {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Residue class in `F_p`, stored canonically in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        Fp {
            value: reduce(value, p),
            p,
        }
    }

    pub fn zero(p: u64) -> Self {
        Fp { value: 0, p }
    }

    pub fn one(p: u64) -> Self {
        Fp { value: 1 % p, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn add(self, o: Fp) -> Fp {
        Fp {
            value: add(self.value, o.value, self.p),
            p: self.p,
        }
    }

    pub fn sub(self, o: Fp) -> Fp {
        Fp {
            value: sub(self.value, o.value, self.p),
            p: self.p,
        }
    }

    pub fn mul(self, o: Fp) -> Fp {
        Fp {
            value: mul(self.value, o.value, self.p),
            p: self.p,
        }
    }

    pub fn neg(self) -> Fp {
        Fp {
            value: sub(0, self.value, self.p),
            p: self.p,
        }
    }

    pub fn pow(self, e: u64) -> Fp {
        Fp {
            value: pow(self.value, e, self.p),
            p: self.p,
        }
    }

    pub fn inv(self) -> Option<Fp> {
        inv(self.value, self.p).map(|value| Fp { value, p: self.p })
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub(crate) fn reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

#[inline]
pub(crate) fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub(crate) fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse by the extended Euclidean algorithm.
pub(crate) fn inv(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(reduce(t0, p))
}

/// `0!, 1!, ..., (n-1)!` modulo `p`.
pub(crate) fn factorials(n: usize, p: u64) -> Vec<u64> {
    let mut f = Vec::with_capacity(n);
    let mut acc = 1 % p;
    for i in 0..n {
        if i > 0 {
            acc = mul(acc, i as u64 % p, p);
        }
        f.push(acc);
    }
    f
}

/// `C(t, i)` for `t` in `F_p` and `0 <= i < p`.
pub(crate) fn binomial(t: u64, i: usize, p: u64, inv_fact: &[u64]) -> u64 {
    let mut num = 1 % p;
    for k in 0..i as u64 {
        num = mul(num, sub(t, k % p, p), p);
    }
    mul(num, inv_fact[i], p)
}
