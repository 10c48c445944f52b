//! Characteristic polynomials and the nilpotent lift of `PGL(p)` elements.

use super::field::{self, Fp};
use super::matrix::FpMatrix;
use crate::error::{Error, Result};

/// Coefficients `c_0, ..., c_n` of `det(T - A) = sum_k c_k T^k` (so `c_n = 1`).
///
/// Reduces to upper Hessenberg form by similarity, then runs the usual
/// three-term recurrence on the leading principal blocks.
pub fn characteristic_polynomial(a: &FpMatrix) -> Vec<u64> {
    let (n, p) = (a.n(), a.p());
    let mut h: Vec<Vec<u64>> = a
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|v| v as u64).collect())
        .collect();

    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&r| h[r][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = field::inv(h[col + 1][col], p).expect("nonzero pivot");
        for r in col + 2..n {
            let f = field::mul(h[r][col], inv, p);
            if f == 0 {
                continue;
            }
            // Row op R_r -= f R_{col+1}, then column op C_{col+1} += f C_r.
            for j in 0..n {
                let v = field::mul(f, h[col + 1][j], p);
                h[r][j] = field::sub(h[r][j], v, p);
            }
            for row in h.iter_mut() {
                let v = field::mul(f, row[r], p);
                row[col + 1] = field::add(row[col + 1], v, p);
            }
        }
    }

    // polys[m] = characteristic polynomial of the leading m x m block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1 % p]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        let hmm = h[m - 1][m - 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = field::add(next[k + 1], c, p);
            next[k] = field::sub(next[k], field::mul(hmm, c, p), p);
        }
        let mut sub_prod = 1 % p;
        for i in (1..m).rev() {
            sub_prod = field::mul(sub_prod, h[i][i - 1], p);
            let coeff = field::mul(h[i - 1][m - 1], sub_prod, p);
            if coeff == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                next[k] = field::sub(next[k], field::mul(coeff, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n + 1 entries")
}

/// `Tr(wedge^i A) = (-1)^i c_{n-i}` for `i = 0..=n`.
pub fn exterior_traces(a: &FpMatrix) -> Vec<u64> {
    let (n, p) = (a.n(), a.p());
    let c = characteristic_polynomial(a);
    (0..=n)
        .map(|i| {
            let v = c[n - i];
            if i % 2 == 0 {
                v
            } else {
                field::sub(0, v, p)
            }
        })
        .collect()
}

/// `A - det(A)^{1/p} I` for `A` of size `p` with `Tr(wedge^i A) = 0`, `0 < i < p`.
///
/// On `F_p` the `p`-th root is the identity map.
pub fn pgl_nilpotent_lift(a: &FpMatrix) -> Result<FpMatrix> {
    let (n, p) = (a.n(), a.p());
    if n as u64 != p {
        return Err(Error::BadMatrix(format!("expected a {p} x {p} matrix, found {n} x {n}")));
    }
    let c = characteristic_polynomial(a);
    for power in 1..n {
        if c[power] != 0 {
            return Err(Error::CharacteristicCoefficient {
                power,
                value: c[power],
            });
        }
    }
    let det = a.determinant();
    // Frobenius is the identity on F_p: det^{1/p} = det.
    debug_assert_eq!(det.pow(p), det);
    Ok(a.sub(&FpMatrix::scalar(n, det)))
}

/// `det(t I - A)` evaluated directly, for cross-checks.
pub fn characteristic_value(a: &FpMatrix, t: Fp) -> Fp {
    FpMatrix::scalar(a.n(), t).sub(a).determinant()
}
