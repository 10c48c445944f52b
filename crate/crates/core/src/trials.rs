//! Seeded randomized trial driver.
//!
//! Every trial draws from its own ChaCha stream derived from `(seed, index)`,
//! so results are identical whether trials run on one thread or many.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alcove::PhiHom;
use crate::charp::{field::Fp, FpMatrix};
use crate::rational::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled, otherwise sequential.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Runs `f` on trials `0..count`, returning results in trial order.
pub fn run_trials<T, F>(exec: Execution, seed: u64, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, &mut ChaCha8Rng) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..count as u64)
            .into_par_iter()
            .map(|i| f(i, &mut trial_rng(seed, i)))
            .collect();
    }
    let _ = exec;
    (0..count as u64).map(|i| f(i, &mut trial_rng(seed, i))).collect()
}

/// First failing trial (lowest index), if any; `check` returns `Err(description)` on failure.
pub fn first_failure<F>(exec: Execution, seed: u64, count: usize, check: F) -> Option<(u64, String)>
where
    F: Fn(u64, &mut ChaCha8Rng) -> Result<(), String> + Sync + Send,
{
    run_trials(exec, seed, count, |i, rng| check(i, rng).err().map(|e| (i, e)))
        .into_iter()
        .flatten()
        .next()
}

/// Random generators for trial instances.
pub mod sample {
    use super::*;

    /// Values `a/b` with `1 <= b <= max_den` and `0 <= a < b`.
    pub fn random_phi<R: Rng>(rng: &mut R, rank: usize, max_den: i64) -> PhiHom {
        PhiHom::new(
            (0..rank)
                .map(|_| {
                    let b = rng.random_range(1..=max_den);
                    let a = rng.random_range(0..b);
                    Q::new(a, b)
                })
                .collect(),
        )
    }

    pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, p: u64) -> FpMatrix {
        let mut m = FpMatrix::zero(n, p);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, Fp::new(rng.random_range(0..p) as i64, p));
            }
        }
        m
    }

    pub fn random_strict_upper<R: Rng>(rng: &mut R, n: usize, p: u64) -> FpMatrix {
        let mut m = FpMatrix::zero(n, p);
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, Fp::new(rng.random_range(0..p) as i64, p));
            }
        }
        m
    }

    /// Random invertible matrix together with its inverse.
    pub fn random_invertible<R: Rng>(rng: &mut R, n: usize, p: u64) -> (FpMatrix, FpMatrix) {
        loop {
            let g = random_matrix(rng, n, p);
            if let Some(inv) = g.inverse() {
                return (g, inv);
            }
        }
    }

    /// `g N g^{-1}` with `N` strictly upper triangular: `p`-nilpotent when `n <= p`.
    pub fn random_nilpotent<R: Rng>(rng: &mut R, n: usize, p: u64) -> FpMatrix {
        let nil = random_strict_upper(rng, n, p);
        let (g, g_inv) = random_invertible(rng, n, p);
        nil.conjugate(&g, &g_inv)
    }

    pub fn random_unipotent<R: Rng>(rng: &mut R, n: usize, p: u64) -> FpMatrix {
        FpMatrix::identity(n, p).add(&random_nilpotent(rng, n, p))
    }

    /// A `p x p` matrix with characteristic polynomial `T^p - d`: a conjugate of
    /// a cyclic companion matrix or of a scalar plus a nilpotent.
    pub fn random_pgl_candidate<R: Rng>(rng: &mut R, p: u64) -> FpMatrix {
        let n = p as usize;
        let core = if rng.random_bool(0.5) {
            let mut t = vec![Fp::one(p); n];
            t[n - 1] = Fp::new(rng.random_range(0..p) as i64, p);
            let mut x = FpMatrix::zero(n, p);
            for i in 0..n - 1 {
                x.set(i, i + 1, t[i]);
            }
            x.set(n - 1, 0, t[n - 1]);
            x
        } else {
            let c = Fp::new(rng.random_range(0..p) as i64, p);
            FpMatrix::scalar(n, c).add(&random_strict_upper(rng, n, p))
        };
        let (g, g_inv) = random_invertible(rng, n, p);
        core.conjugate(&g, &g_inv)
    }
}
