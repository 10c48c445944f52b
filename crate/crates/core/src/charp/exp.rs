//! Truncated exponential, logarithm and `t`-power maps on matrices over `F_p`.

use super::field::{self, Fp};
use super::matrix::FpMatrix;
use crate::error::{Error, Result};

fn inverse_factorials(p: u64) -> Vec<u64> {
    field::factorials(p as usize, p)
        .into_iter()
        .map(|f| field::inv(f, p).expect("i! is a unit for i < p"))
        .collect()
}

/// `sum_{i < p} X^i / i!`, defined when `X^p = 0`.
pub fn trunc_exp(x: &FpMatrix) -> Result<FpMatrix> {
    if !x.is_p_nilpotent() {
        return Err(Error::NotPNilpotent);
    }
    Ok(exp_series(x))
}

/// The series itself, without the precondition check.
pub(crate) fn exp_series(x: &FpMatrix) -> FpMatrix {
    let (n, p) = (x.n(), x.p());
    let inv_fact = inverse_factorials(p);
    let mut acc = FpMatrix::identity(n, p);
    let mut power = FpMatrix::identity(n, p);
    for f in inv_fact.iter().skip(1) {
        power = power.mul(x);
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power.scale(Fp::new(*f as i64, p)));
    }
    acc
}

/// `sum_{0 < k < p} (-1)^{k+1} (u - 1)^k / k`, defined when `(u - 1)^p = 0`.
pub fn trunc_log(u: &FpMatrix) -> Result<FpMatrix> {
    if !u.is_p_unipotent() {
        return Err(Error::NotPUnipotent);
    }
    let (n, p) = (u.n(), u.p());
    let nil = u.sub(&FpMatrix::identity(n, p));
    let mut acc = FpMatrix::zero(n, p);
    let mut power = FpMatrix::identity(n, p);
    for k in 1..p {
        power = power.mul(&nil);
        if power.is_zero() {
            break;
        }
        let inv_k = field::inv(k, p).expect("k < p");
        let c = if k % 2 == 1 { inv_k } else { field::sub(0, inv_k, p) };
        acc = acc.add(&power.scale(Fp::new(c as i64, p)));
    }
    Ok(acc)
}

/// `u^t = sum_{i < p} C(t, i) (u - 1)^i` for `u` with `u^p = 1` and `(u - 1)^p = 0`.
pub fn t_power(u: &FpMatrix, t: Fp) -> Result<FpMatrix> {
    if t.modulus() != u.p() {
        return Err(Error::FieldMismatch(t.modulus(), u.p()));
    }
    if !u.is_p_unipotent() {
        return Err(Error::NotPUnipotent);
    }
    let (n, p) = (u.n(), u.p());
    let inv_fact = inverse_factorials(p);
    let nil = u.sub(&FpMatrix::identity(n, p));
    let mut acc = FpMatrix::identity(n, p);
    let mut power = FpMatrix::identity(n, p);
    for i in 1..p as usize {
        power = power.mul(&nil);
        if power.is_zero() {
            break;
        }
        let c = field::binomial(t.value(), i, p, &inv_fact);
        acc = acc.add(&power.scale(Fp::new(c as i64, p)));
    }
    Ok(acc)
}

/// For nilpotent `X`, whether `X^p = 0`; always true when `p >= n`.
pub fn nilpotent_p_power_check(x: &FpMatrix) -> Result<bool> {
    if !x.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    Ok(x.is_p_nilpotent())
}

/// Single Jordan block `sum_i E_{i,i+1}`.
pub fn regular_nilpotent(n: usize, p: u64) -> FpMatrix {
    let mut m = FpMatrix::zero(n, p);
    for i in 0..n.saturating_sub(1) {
        m.set(i, i + 1, Fp::one(p));
    }
    m
}
