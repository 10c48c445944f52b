//! The explicit matrices behind the counterexamples at `p = h`.

use serde::Serialize;

use super::field::{check_prime, Fp};
use super::matrix::FpMatrix;
use super::span::LinearSpan;
use crate::error::{Error, Result};

/// `X(e_1) = t_p e_p`, `X(e_{i+1}) = t_i e_i`: superdiagonal `t_1..t_{p-1}`,
/// lower-left entry `t_p`.
pub fn conrad_matrix(p: u64, t: &[Fp]) -> Result<FpMatrix> {
    check_prime(p)?;
    let n = p as usize;
    if t.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: t.len(),
        });
    }
    if let Some(bad) = t.iter().position(|v| v.modulus() != p) {
        return Err(Error::FieldMismatch(t[bad].modulus(), p));
    }
    let mut x = FpMatrix::zero(n, p);
    for i in 0..n - 1 {
        x.set(i, i + 1, t[i]);
    }
    x.set(n - 1, 0, t[n - 1]);
    Ok(x)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConradReport {
    pub p: u64,
    pub matrix: Vec<Vec<i64>>,
    pub product: u64,
    /// `X^p = (prod t_j) I`.
    pub power_is_scalar: bool,
    pub nilpotent: bool,
}

/// Builds the matrix with all `t_j != 0` and checks `X^p = (prod t_j) I`.
pub fn conrad_example(p: u64, t: &[Fp]) -> Result<ConradReport> {
    if let Some(i) = t.iter().position(|v| v.is_zero()) {
        return Err(Error::ZeroParameter(i));
    }
    let x = conrad_matrix(p, t)?;
    let product = t.iter().fold(Fp::one(p), |a, b| a.mul(*b));
    let power = x.pow(p);
    Ok(ConradReport {
        p,
        matrix: x.to_rows(),
        product: product.value(),
        power_is_scalar: power == FpMatrix::scalar(x.n(), product),
        nilpotent: x.is_nilpotent(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeisenbergReport {
    pub p: u64,
    pub shift_order_p: bool,
    pub bracket_is_shift: bool,
    pub span_dimension: usize,
    pub full_dimension: usize,
    pub irreducible: bool,
}

/// Multiplication by `u` on `F_p[u]/(u^p - 1)` in the basis `u^i`.
pub fn shift_operator(p: u64) -> FpMatrix {
    let n = p as usize;
    let mut s = FpMatrix::zero(n, p);
    for i in 0..n {
        s.set((i + 1) % n, i, Fp::one(p));
    }
    s
}

/// `u d/du = diag(0, 1, ..., p - 1)`.
pub fn grading_operator(p: u64) -> FpMatrix {
    let n = p as usize;
    let mut d = FpMatrix::zero(n, p);
    for i in 0..n {
        d.set(i, i, Fp::new(i as i64, p));
    }
    d
}

/// Dimension of the unital algebra generated by `gens`, by closing `{1}` under
/// left multiplication.
pub fn generated_algebra_dimension(gens: &[FpMatrix]) -> usize {
    let Some(first) = gens.first() else {
        return 0;
    };
    let (n, p) = (first.n(), first.p());
    let mut span = LinearSpan::new(n * n, p);
    let one = FpMatrix::identity(n, p);
    span.insert_matrix(&one);
    let mut frontier = vec![one];
    while let Some(m) = frontier.pop() {
        for g in gens {
            let prod = g.mul(&m);
            if span.insert_matrix(&prod) {
                frontier.push(prod);
            }
        }
    }
    span.dim()
}

pub fn heisenberg_module_check(p: u64) -> Result<HeisenbergReport> {
    check_prime(p)?;
    let s = shift_operator(p);
    let d = grading_operator(p);
    let span_dimension = generated_algebra_dimension(&[s.clone(), d.clone()]);
    let full_dimension = (p * p) as usize;
    Ok(HeisenbergReport {
        p,
        shift_order_p: s.pow(p).is_identity(),
        bracket_is_shift: d.commutator(&s) == s,
        span_dimension,
        full_dimension,
        irreducible: span_dimension == full_dimension,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightComponent {
    /// Weight in `Z/p^2`, always a multiple of `p`.
    pub weight: u64,
    pub dimension: usize,
    /// Off-diagonal matrix positions (0-based) spanning the component.
    pub entries: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightSpaceReport {
    pub p: u64,
    pub components: Vec<WeightComponent>,
    pub total_dimension: usize,
    /// The component of weight `p`: superdiagonal plus lower-left entry.
    pub alpha_entries: Vec<(usize, usize)>,
    pub conrad_in_alpha: bool,
    pub conrad_nilpotent: bool,
    pub conrad_power_is_scalar: bool,
    pub conrad_product: u64,
}

/// Grading of `sl_p` by `mu_{p^2}` acting through `diag(z^0, z^{-p}, ..., z^{-(p-1)p})`:
/// `E_{ij}` has weight `p (j - i) mod p^2`.
pub fn weight_space_demo(p: u64) -> Result<WeightSpaceReport> {
    check_prime(p)?;
    if p < 3 {
        return Err(Error::InvalidArgument("weight space demo needs p >= 3".into()));
    }
    let n = p as usize;
    let modulus = p * p;
    let weight_of = |i: usize, j: usize| -> u64 {
        let w = (p as i64) * (j as i64 - i as i64);
        w.rem_euclid(modulus as i64) as u64
    };
    let mut components = Vec::new();
    for k in 0..p {
        let weight = k * p;
        let entries: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && weight_of(i, j) == weight)
            .collect();
        // Weight zero also holds the trace-zero diagonal.
        let dimension = entries.len() + if k == 0 { n - 1 } else { 0 };
        components.push(WeightComponent {
            weight,
            dimension,
            entries,
        });
    }
    let total_dimension = components.iter().map(|c| c.dimension).sum();
    let alpha_entries = components[1].entries.clone();

    // Conrad parameters (1, ..., 1, 2).
    let mut t: Vec<Fp> = vec![Fp::one(p); n];
    t[n - 1] = Fp::new(2, p);
    let x = conrad_matrix(p, &t)?;
    let conrad_in_alpha = (0..n).all(|i| {
        (0..n).all(|j| x.get(i, j).is_zero() || alpha_entries.contains(&(i, j)))
    });
    let product = t.iter().fold(Fp::one(p), |a, b| a.mul(*b));
    Ok(WeightSpaceReport {
        p,
        components,
        total_dimension,
        alpha_entries,
        conrad_in_alpha,
        conrad_nilpotent: x.is_nilpotent(),
        conrad_power_is_scalar: x.pow(p) == FpMatrix::scalar(n, product),
        conrad_product: product.value(),
    })
}
