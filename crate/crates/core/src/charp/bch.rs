//! Degree-truncated Baker-Campbell-Hausdorff law, reduced modulo `p`.
//!
//! The homogeneous components `H_d` of `log(exp X exp Y)` are computed in the
//! free associative algebra over `Q`, passed through the Dynkin projection and
//! written in the Lyndon basis of the free Lie algebra.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::field::{self, check_prime, Fp};
use super::free::{abs_denominator, lyndon_coordinates, word_to_string, Bracket, FreePoly, Word};
use super::matrix::FpMatrix;
use super::span::LinearSpan;
use crate::error::{Error, Result};

/// Highest degree the free-algebra computation is run to.
pub const BCH_DEGREE_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BchTerm {
    pub coefficient: BigRational,
    /// Lyndon word whose standard bracketing is `bracket`.
    pub word: Word,
    pub bracket: Bracket,
    /// `coefficient` reduced into `F_p`.
    pub residue: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BchTable {
    p: u64,
    max_deg: usize,
    /// `terms[d - 1]` holds `H_d`.
    terms: Vec<Vec<BchTerm>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BchTermDocument {
    pub degree: usize,
    pub word: String,
    pub bracket: String,
    pub coefficient: String,
    pub residue: u64,
}

/// `log(exp X exp Y)` in the free associative algebra, truncated at `max_deg`.
pub fn bch_series(max_deg: usize) -> FreePoly {
    let x = FreePoly::letter(max_deg, 0);
    let y = FreePoly::letter(max_deg, 1);
    x.exp().mul(&y.exp()).log()
}

pub fn bch_table(p: u64, max_deg: usize) -> Result<BchTable> {
    check_prime(p)?;
    if max_deg == 0 || max_deg as u64 >= p || max_deg > BCH_DEGREE_LIMIT {
        return Err(Error::BchDegree {
            degree: max_deg,
            p,
            limit: BCH_DEGREE_LIMIT,
        });
    }
    let z = bch_series(max_deg);
    let projected = z.dynkin_projection();
    assert_eq!(projected, z, "log(exp X exp Y) must be a Lie series");

    let mut terms = Vec::with_capacity(max_deg);
    for d in 1..=max_deg {
        let coords = lyndon_coordinates(&projected.homogeneous(d))
            .expect("homogeneous components of a Lie series are Lie");
        let mut row = Vec::with_capacity(coords.len());
        for (word, coefficient) in coords {
            let residue = reduce_mod_p(&coefficient, p)?;
            row.push(BchTerm {
                bracket: Bracket::lyndon(&word),
                word,
                coefficient,
                residue,
            });
        }
        terms.push(row);
    }
    Ok(BchTable { p, max_deg, terms })
}

fn reduce_mod_p(c: &BigRational, p: u64) -> Result<u64> {
    let den = abs_denominator(c);
    if let Some(q) = largest_prime_factor(&den) {
        if q >= p {
            return Err(Error::InvalidArgument(format!(
                "coefficient {c} has denominator prime {q} >= {p}"
            )));
        }
    }
    let pb = BigInt::from(p);
    let num = ((c.numer() % &pb) + &pb) % &pb;
    let den = ((c.denom() % &pb) + &pb) % &pb;
    let num = num.to_u64().expect("reduced residue");
    let den = den.to_u64().expect("reduced residue");
    let inv = field::inv(den, p).expect("denominator is a unit mod p");
    Ok(field::mul(num, inv, p))
}

pub(crate) fn largest_prime_factor(n: &BigInt) -> Option<u64> {
    let mut m = n.to_u64().expect("BCH denominators fit in u64");
    if m < 2 {
        return None;
    }
    let mut largest = 1;
    let mut d = 2;
    while d * d <= m {
        while m.is_multiple_of(d) {
            largest = d;
            m /= d;
        }
        d += 1;
    }
    if m > 1 {
        largest = largest.max(m);
    }
    Some(largest)
}

impl BchTable {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    /// Terms of `H_d` for `1 <= d <= max_deg`.
    pub fn degree(&self, d: usize) -> &[BchTerm] {
        &self.terms[d - 1]
    }

    /// Lyndon-basis coefficient of `word` in `H_{len(word)}`.
    pub fn coefficient(&self, word: &[u8]) -> BigRational {
        if word.is_empty() || word.len() > self.max_deg {
            return BigRational::zero();
        }
        self.degree(word.len())
            .iter()
            .find(|t| t.word == word)
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// `H_d` expanded back into the free associative algebra.
    pub fn expanded(&self, d: usize) -> FreePoly {
        self.degree(d).iter().fold(FreePoly::zero(self.max_deg), |acc, t| {
            acc.add(&t.bracket.expand(self.max_deg).scale(&t.coefficient))
        })
    }

    pub fn documents(&self) -> Vec<BchTermDocument> {
        self.terms
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter().map(move |t| BchTermDocument {
                    degree: i + 1,
                    word: word_to_string(&t.word),
                    bracket: t.bracket.to_string(),
                    coefficient: if t.coefficient.is_integer() {
                        t.coefficient.numer().to_string()
                    } else {
                        format!("{}/{}", t.coefficient.numer(), t.coefficient.denom())
                    },
                    residue: t.residue,
                })
            })
            .collect()
    }
}

/// Whether every product of `len` factors from `{X, Y}` vanishes.
pub fn products_vanish(x: &FpMatrix, y: &FpMatrix, len: usize) -> bool {
    let (n, p) = (x.n(), x.p());
    let mut layer: Vec<FpMatrix> = Vec::new();
    let mut span = LinearSpan::new(n * n, p);
    for m in [x, y] {
        if span.insert_matrix(m) {
            layer.push(m.clone());
        }
    }
    for _ in 1..len {
        if layer.is_empty() {
            return true;
        }
        let mut next_span = LinearSpan::new(n * n, p);
        let mut next = Vec::new();
        for m in &layer {
            for g in [x, y] {
                let prod = g.mul(m);
                if next_span.insert_matrix(&prod) {
                    next.push(prod);
                }
            }
        }
        layer = next;
    }
    layer.is_empty()
}

/// `sum_d H_d(X, Y)` over `F_p`, valid when all products of
/// `max_deg + 1` factors vanish (e.g. strictly upper triangular `n <= max_deg + 1`).
pub fn bch_apply(table: &BchTable, x: &FpMatrix, y: &FpMatrix) -> Result<FpMatrix> {
    x.same_shape(y)?;
    if x.p() != table.p {
        return Err(Error::FieldMismatch(x.p(), table.p));
    }
    if !products_vanish(x, y, table.max_deg + 1) {
        return Err(Error::BracketsDoNotVanish(table.max_deg + 1));
    }
    let mut cache: HashMap<Bracket, FpMatrix> = HashMap::new();
    let mut acc = FpMatrix::zero(x.n(), x.p());
    for row in &table.terms {
        for t in row {
            if t.residue == 0 {
                continue;
            }
            let v = evaluate(&t.bracket, x, y, &mut cache);
            acc = acc.add(&v.scale(Fp::new(t.residue as i64, x.p())));
        }
    }
    Ok(acc)
}

fn evaluate(
    b: &Bracket,
    x: &FpMatrix,
    y: &FpMatrix,
    cache: &mut HashMap<Bracket, FpMatrix>,
) -> FpMatrix {
    if let Some(v) = cache.get(b) {
        return v.clone();
    }
    let v = match b {
        Bracket::Letter(0) => x.clone(),
        Bracket::Letter(_) => y.clone(),
        Bracket::Commutator(l, r) => {
            let a = evaluate(l, x, y, cache);
            let c = evaluate(r, x, y, cache);
            a.commutator(&c)
        }
    };
    cache.insert(b.clone(), v.clone());
    v
}
