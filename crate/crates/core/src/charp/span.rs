//! Incremental row echelon bases of subspaces of `F_p^m`.

use super::field;
use super::matrix::FpMatrix;

#[derive(Debug, Clone)]
pub struct LinearSpan {
    p: u64,
    len: usize,
    /// Rows normalized so the pivot entry is 1, paired with their pivot column.
    rows: Vec<(usize, Vec<u64>)>,
}

impl LinearSpan {
    pub fn new(len: usize, p: u64) -> Self {
        LinearSpan {
            p,
            len,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u64]) {
        let p = self.p;
        for (piv, row) in &self.rows {
            let f = v[*piv];
            if f == 0 {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if *r != 0 {
                    *x = field::sub(*x, field::mul(f, *r, p), p);
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        debug_assert_eq!(v.len(), self.len);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(piv) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let p = self.p;
        let inv = field::inv(w[piv], p).expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = field::mul(*x, inv, p);
        }
        // Keep earlier rows reduced against the new pivot.
        for (_, row) in self.rows.iter_mut() {
            let f = row[piv];
            if f != 0 {
                for (x, r) in row.iter_mut().zip(&w) {
                    *x = field::sub(*x, field::mul(f, *r, p), p);
                }
            }
        }
        self.rows.push((piv, w));
        true
    }

    pub fn insert_matrix(&mut self, m: &FpMatrix) -> bool {
        self.insert(m.entries())
    }
}
