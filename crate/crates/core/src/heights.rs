//! Dynkin heights of irreducible representations, given by highest weight.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::rootsys::{RootSystem, RootVec, WeightVec};

/// Dominant weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HighestWeight(WeightVec);

impl HighestWeight {
    pub fn new(weight: WeightVec) -> Result<Self> {
        if !weight.is_dominant() {
            return Err(Error::NotDominant(weight.0));
        }
        Ok(HighestWeight(weight))
    }

    pub fn from_coords(coords: &[i64]) -> Result<Self> {
        Self::new(WeightVec(coords.to_vec()))
    }

    pub fn weight(&self) -> &WeightVec {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeightReport {
    pub height: i64,
    /// `<lambda, 2 rho^vee>`.
    pub via_pairing: i64,
    /// Sum of the simple-root coefficients of `lambda^+ - lambda^-`.
    pub via_difference: i64,
    pub lambda_minus: WeightVec,
    /// `lambda^+ - lambda^-` in simple-root coordinates.
    pub difference: RootVec,
}

pub fn dynkin_height(rs: &RootSystem, lambda: &HighestWeight) -> Result<HeightReport> {
    let w = lambda.weight();
    if w.coords().len() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            found: w.coords().len(),
        });
    }

    let via_pairing: i64 = rs
        .positive_roots()
        .iter()
        .map(|a| {
            rs.coroot_coords(a)
                .iter()
                .zip(w.coords())
                .map(|(c, l)| c * l)
                .sum::<i64>()
        })
        .sum();

    let (lambda_minus, difference) = antidominant(rs, w);
    let via_difference = difference.height();

    // The same difference through the inverse Cartan matrix.
    let delta = WeightVec(
        w.coords()
            .iter()
            .zip(lambda_minus.coords())
            .map(|(a, b)| a - b)
            .collect(),
    );
    let exact = rs.weight_to_root(&delta);
    debug_assert!(exact
        .iter()
        .zip(difference.coords())
        .all(|(q, d)| *q == Q::from_integer(*d)));

    assert_eq!(
        via_pairing, via_difference,
        "height computations disagree for {:?} on {}",
        w,
        rs.name()
    );
    Ok(HeightReport {
        height: via_pairing,
        via_pairing,
        via_difference,
        lambda_minus,
        difference,
    })
}

/// Greedy descent to the antidominant weight of the orbit: while some
/// `<mu, alpha_i^vee> > 0` apply `s_i`, lowest index first.
///
/// Returns `lambda^-` and `lambda - lambda^-` in root coordinates.
pub fn antidominant(rs: &RootSystem, w: &WeightVec) -> (WeightVec, RootVec) {
    let c = rs.cartan();
    let mut mu = w.coords().to_vec();
    let mut acc = RootVec::zero(rs.rank());
    while let Some(i) = mu.iter().position(|&m| m > 0) {
        let k = mu[i];
        for (j, m) in mu.iter_mut().enumerate() {
            *m -= k * c[j][i];
        }
        acc.0[i] += k;
    }
    (WeightVec(mu), acc)
}

/// `p > ht(lambda)`.
pub fn is_low_height(rs: &RootSystem, lambda: &HighestWeight, p: u64) -> Result<bool> {
    if !crate::charp::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok((p as i64) > dynkin_height(rs, lambda)?.height)
}

/// Smallest height of a nontrivial irreducible representation, with the
/// fundamental weight attaining it (0-based index).
///
/// Height is additive with positive values on each fundamental weight, so the
/// minimum sits on some `omega_i`.
pub fn min_nontrivial_height(rs: &RootSystem) -> (i64, usize) {
    (0..rs.rank())
        .map(|i| {
            let lambda = HighestWeight(WeightVec::fundamental(rs.rank(), i));
            let h = dynkin_height(rs, &lambda).expect("fundamental weights are dominant").height;
            (h, i)
        })
        .min()
        .expect("rank >= 1")
}

/// Height of `(x)_j wedge^{m_j} V_j` for `prod_j GL(V_j)`: `sum m_j (dim V_j - m_j)`.
pub fn composite_gl_height(dims: &[u64], ms: &[u64]) -> Result<u64> {
    if dims.len() != ms.len() {
        return Err(Error::Dimension {
            expected: dims.len(),
            found: ms.len(),
        });
    }
    let mut total = 0;
    for (i, (&d, &m)) in dims.iter().zip(ms).enumerate() {
        if d == 0 {
            return Err(Error::InvalidArgument(format!("dimension {i} is zero")));
        }
        if m > d {
            return Err(Error::InvalidArgument(format!(
                "exterior power {m} exceeds dimension {d} at position {i}"
            )));
        }
        total += m * (d - m);
    }
    Ok(total)
}

/// `sum m_j (dim V_j - m_j) < p`.
pub fn semisimplicity_bound_ok(dims: &[u64], ms: &[u64], p: u64) -> Result<bool> {
    Ok(composite_gl_height(dims, ms)? < p)
}

/// `ht(lambda) >= h - 1`.
pub fn height_vs_coxeter_check(rs: &RootSystem, lambda: &HighestWeight) -> Result<bool> {
    if lambda.is_trivial() {
        return Err(Error::InvalidArgument("weight must be nonzero".into()));
    }
    Ok(dynkin_height(rs, lambda)?.height >= rs.coxeter_number() - 1)
}
