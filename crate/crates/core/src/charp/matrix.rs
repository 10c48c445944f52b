use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{self, check_prime, Fp};
use crate::error::{Error, Result};

/// Dense square matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u64,
    n: usize,
    data: Vec<u64>,
}

/// JSON form: `{"p": 5, "matrix": [[1, 0], [0, 1]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub p: u64,
    pub matrix: Vec<Vec<i64>>,
}

impl FpMatrix {
    pub fn zero(n: usize, p: u64) -> Self {
        FpMatrix {
            p,
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        Self::scalar(n, Fp::one(p))
    }

    pub fn scalar(n: usize, c: Fp) -> Self {
        let mut m = Self::zero(n, c.modulus());
        for i in 0..n {
            m.data[i * n + i] = c.value();
        }
        m
    }

    /// Matrix unit `E_{ij}` (0-based).
    pub fn unit(n: usize, i: usize, j: usize, p: u64) -> Self {
        let mut m = Self::zero(n, p);
        m.data[i * n + j] = 1 % p;
        m
    }

    pub fn from_rows(rows: &[Vec<i64>], p: u64) -> Result<Self> {
        check_prime(p)?;
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::BadMatrix(format!(
                "expected {n} columns, found a row of length {}",
                bad.len()
            )));
        }
        Ok(FpMatrix {
            p,
            n,
            data: rows.iter().flatten().map(|&v| field::reduce(v, p)).collect(),
        })
    }

    pub fn from_document(doc: &MatrixDocument) -> Result<Self> {
        Self::from_rows(&doc.matrix, doc.p)
    }

    pub fn to_document(&self) -> MatrixDocument {
        MatrixDocument {
            p: self.p,
            matrix: self.to_rows(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Fp {
        Fp::new(self.data[i * self.n + j] as i64, self.p)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fp) {
        debug_assert_eq!(v.modulus(), self.p);
        self.data[i * self.n + j] = v.value();
    }

    pub(crate) fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n, self.p)
    }

    pub fn same_shape(&self, o: &FpMatrix) -> Result<()> {
        if self.p != o.p {
            return Err(Error::FieldMismatch(self.p, o.p));
        }
        if self.n != o.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: o.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, o: &FpMatrix) -> FpMatrix {
        debug_assert!(self.same_shape(o).is_ok());
        let p = self.p;
        FpMatrix {
            p,
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(&a, &b)| field::add(a, b, p))
                .collect(),
        }
    }

    pub fn sub(&self, o: &FpMatrix) -> FpMatrix {
        debug_assert!(self.same_shape(o).is_ok());
        let p = self.p;
        FpMatrix {
            p,
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(&a, &b)| field::sub(a, b, p))
                .collect(),
        }
    }

    pub fn scale(&self, c: Fp) -> FpMatrix {
        let p = self.p;
        FpMatrix {
            p,
            n: self.n,
            data: self.data.iter().map(|&a| field::mul(a, c.value(), p)).collect(),
        }
    }

    pub fn mul(&self, o: &FpMatrix) -> FpMatrix {
        debug_assert!(self.same_shape(o).is_ok());
        let (n, p) = (self.n, self.p);
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = o.data[k * n + j];
                    if b != 0 {
                        out[i * n + j] = (out[i * n + j] + a * b) % p;
                    }
                }
            }
        }
        FpMatrix { p, n, data: out }
    }

    /// `[self, o] = self o - o self`.
    pub fn commutator(&self, o: &FpMatrix) -> FpMatrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n, self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `M^n = 0`.
    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.n as u64).is_zero()
    }

    /// `(M - 1)^n = 0`.
    pub fn is_unipotent(&self) -> bool {
        self.sub(&Self::identity(self.n, self.p)).is_nilpotent()
    }

    /// `M^p = 0`.
    pub fn is_p_nilpotent(&self) -> bool {
        self.pow(self.p).is_zero()
    }

    /// `(M - 1)^p = 0`.
    pub fn is_p_unipotent(&self) -> bool {
        self.sub(&Self::identity(self.n, self.p)).is_p_nilpotent()
    }

    pub fn trace(&self) -> Fp {
        let p = self.p;
        let t = (0..self.n).fold(0, |acc, i| field::add(acc, self.data[i * self.n + i], p));
        Fp::new(t as i64, p)
    }

    /// Row echelon by Gaussian elimination; returns `(rank, det)`.
    fn eliminate(&self) -> (usize, u64) {
        let (n, p) = (self.n, self.p);
        let mut a = self.data.clone();
        let mut det = 1 % p;
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| a[r * n + col] != 0) else {
                det = 0;
                continue;
            };
            if piv != rank {
                for j in 0..n {
                    a.swap(piv * n + j, rank * n + j);
                }
                det = field::sub(0, det, p);
            }
            let pv = a[rank * n + col];
            det = field::mul(det, pv, p);
            let pinv = field::inv(pv, p).expect("nonzero pivot");
            for r in rank + 1..n {
                let f = field::mul(a[r * n + col], pinv, p);
                if f == 0 {
                    continue;
                }
                for j in col..n {
                    let v = field::mul(f, a[rank * n + j], p);
                    a[r * n + j] = field::sub(a[r * n + j], v, p);
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    pub fn determinant(&self) -> Fp {
        if self.n == 0 {
            return Fp::one(self.p);
        }
        Fp::new(self.eliminate().1 as i64, self.p)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().0
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        let (n, p) = (self.n, self.p);
        let w = 2 * n;
        let mut a = vec![0u64; n * w];
        for i in 0..n {
            a[i * w..i * w + n].copy_from_slice(&self.data[i * n..(i + 1) * n]);
            a[i * w + n + i] = 1 % p;
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * w + col] != 0)?;
            if piv != col {
                for j in 0..w {
                    a.swap(piv * w + j, col * w + j);
                }
            }
            let pinv = field::inv(a[col * w + col], p)?;
            for j in 0..w {
                a[col * w + j] = field::mul(a[col * w + j], pinv, p);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * w + col];
                if f == 0 {
                    continue;
                }
                for j in 0..w {
                    let v = field::mul(f, a[col * w + j], p);
                    a[r * w + j] = field::sub(a[r * w + j], v, p);
                }
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend_from_slice(&a[i * w + n..(i + 1) * w]);
        }
        Some(FpMatrix { p, n, data })
    }

    /// `g self g^{-1}`.
    pub fn conjugate(&self, g: &FpMatrix, g_inv: &FpMatrix) -> FpMatrix {
        g.mul(self).mul(g_inv)
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix(p={}, {:?})", self.p, self.to_rows())
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_operations() {
        let a = FpMatrix::from_rows(&[vec![1, 2], vec![3, 4]], 5).unwrap();
        let b = FpMatrix::from_rows(&[vec![0, 1], vec![1, 0]], 5).unwrap();
        assert_eq!(a.mul(&b).to_rows(), vec![vec![2, 1], vec![4, 3]]);
        assert_eq!(a.add(&b).to_rows(), vec![vec![1, 3], vec![4, 4]]);
        assert_eq!(a.determinant().value(), 3); // 4 - 6 = -2
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(a.pow(0), FpMatrix::identity(2, 5));
        assert_eq!(a.pow(3), a.mul(&a).mul(&a));
    }

    #[test]
    fn nilpotence_and_unipotence() {
        let e12 = FpMatrix::unit(3, 0, 1, 7);
        let e23 = FpMatrix::unit(3, 1, 2, 7);
        let x = e12.add(&e23);
        assert!(x.is_nilpotent());
        assert!(x.is_p_nilpotent());
        assert!(!FpMatrix::identity(3, 7).is_nilpotent());
        assert!(FpMatrix::identity(3, 7).add(&x).is_unipotent());
        assert_eq!(x.commutator(&e12), FpMatrix::zero(3, 7).sub(&FpMatrix::unit(3, 0, 2, 7)));
    }

    #[test]
    fn singular_and_malformed() {
        let s = FpMatrix::from_rows(&[vec![1, 2], vec![2, 4]], 7).unwrap();
        assert_eq!(s.rank(), 1);
        assert!(s.determinant().is_zero());
        assert!(s.inverse().is_none());
        assert!(FpMatrix::from_rows(&[vec![1, 2], vec![3]], 7).is_err());
        assert!(FpMatrix::from_rows(&[vec![1]], 6).is_err());
        let one = FpMatrix::from_rows(&[vec![3]], 5).unwrap();
        assert_eq!(one.inverse().unwrap().to_rows(), vec![vec![2]]);
    }

    #[test]
    fn document_form() {
        let m = FpMatrix::from_rows(&[vec![-1, 7], vec![0, 2]], 5).unwrap();
        let doc = m.to_document();
        assert_eq!(doc.matrix, vec![vec![4, 2], vec![0, 2]]);
        assert_eq!(FpMatrix::from_document(&doc).unwrap(), m);
    }
}
