//! Truncated free associative algebra on two letters over `Q`, with Lie
//! brackets and the Lyndon basis of the free Lie algebra.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Letter `0` is `X`, letter `1` is `Y`.
pub type Word = Vec<u8>;

pub fn word_to_string(w: &[u8]) -> String {
    w.iter().map(|&c| if c == 0 { 'X' } else { 'Y' }).collect()
}

/// Noncommutative polynomial, all words of length `> max_deg` dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreePoly {
    max_deg: usize,
    terms: BTreeMap<Word, BigRational>,
}

impl FreePoly {
    pub fn zero(max_deg: usize) -> Self {
        FreePoly {
            max_deg,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(max_deg: usize) -> Self {
        Self::monomial(max_deg, Vec::new(), BigRational::one())
    }

    pub fn letter(max_deg: usize, l: u8) -> Self {
        Self::monomial(max_deg, vec![l], BigRational::one())
    }

    pub fn monomial(max_deg: usize, w: Word, c: BigRational) -> Self {
        let mut p = Self::zero(max_deg);
        p.add_term(w, c);
        p
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, w: &[u8]) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if w.len() > self.max_deg || c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, o: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> FreePoly {
        let mut out = FreePoly::zero(self.max_deg);
        if c.is_zero() {
            return out;
        }
        for (w, v) in &self.terms {
            out.terms.insert(w.clone(), v * c);
        }
        out
    }

    pub fn sub(&self, o: &FreePoly) -> FreePoly {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn mul(&self, o: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero(self.max_deg.min(o.max_deg));
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if a.len() + b.len() > out.max_deg {
                    continue;
                }
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    pub fn commutator(&self, o: &FreePoly) -> FreePoly {
        self.mul(o).sub(&o.mul(self))
    }

    /// Part of exact degree `d`.
    pub fn homogeneous(&self, d: usize) -> FreePoly {
        FreePoly {
            max_deg: self.max_deg,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&[])
    }

    /// `sum_{k <= max_deg} P^k / k!` for `P` without constant term.
    pub fn exp(&self) -> FreePoly {
        assert!(self.constant_term().is_zero(), "exp needs a vanishing constant term");
        let mut acc = FreePoly::one(self.max_deg);
        let mut power = FreePoly::one(self.max_deg);
        let mut fact = BigInt::one();
        for k in 1..=self.max_deg {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            fact *= BigInt::from(k);
            acc = acc.add(&power.scale(&BigRational::new(BigInt::one(), fact.clone())));
        }
        acc
    }

    /// `log(1 + Q) = sum (-1)^{k+1} Q^k / k` for `self = 1 + Q`.
    pub fn log(&self) -> FreePoly {
        assert!(self.constant_term().is_one(), "log needs constant term 1");
        let q = self.sub(&FreePoly::one(self.max_deg));
        let mut acc = FreePoly::zero(self.max_deg);
        let mut power = FreePoly::one(self.max_deg);
        for k in 1..=self.max_deg {
            power = power.mul(&q);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&power.scale(&BigRational::new(BigInt::from(sign), BigInt::from(k))));
        }
        acc
    }

    /// Dynkin projection `(1/d) sum_w c_w [..[[w_1, w_2], w_3].., w_d]` on
    /// each homogeneous degree `d`; the identity on Lie elements.
    pub fn dynkin_projection(&self) -> FreePoly {
        let mut out = FreePoly::zero(self.max_deg);
        for (w, c) in &self.terms {
            if w.is_empty() {
                continue;
            }
            let d = BigRational::from_integer(BigInt::from(w.len()));
            let factor = c / d;
            for (v, k) in left_normed_expansion(w) {
                out.add_term(v, &factor * BigRational::from_integer(BigInt::from(k)));
            }
        }
        out
    }
}

/// Integer expansion of the left-normed bracket of the letters of `w`.
pub fn left_normed_expansion(w: &[u8]) -> BTreeMap<Word, i64> {
    let mut cur: BTreeMap<Word, i64> = BTreeMap::new();
    cur.insert(vec![w[0]], 1);
    for &l in &w[1..] {
        let mut next: BTreeMap<Word, i64> = BTreeMap::new();
        for (v, k) in &cur {
            let mut right = v.clone();
            right.push(l);
            *next.entry(right).or_insert(0) += k;
            let mut left = vec![l];
            left.extend_from_slice(v);
            *next.entry(left).or_insert(0) -= k;
        }
        next.retain(|_, k| *k != 0);
        cur = next;
    }
    cur
}

/// Bracket monomial in `X` and `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bracket {
    Letter(u8),
    Commutator(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn x() -> Self {
        Bracket::Letter(0)
    }

    pub fn y() -> Self {
        Bracket::Letter(1)
    }

    pub fn bracket(a: Bracket, b: Bracket) -> Self {
        Bracket::Commutator(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            Bracket::Letter(_) => 1,
            Bracket::Commutator(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn expand(&self, max_deg: usize) -> FreePoly {
        match self {
            Bracket::Letter(l) => FreePoly::letter(max_deg, *l),
            Bracket::Commutator(a, b) => a.expand(max_deg).commutator(&b.expand(max_deg)),
        }
    }

    /// Standard bracketing of a Lyndon word.
    pub fn lyndon(w: &[u8]) -> Self {
        debug_assert!(is_lyndon(w));
        if w.len() == 1 {
            return Bracket::Letter(w[0]);
        }
        let split = (1..w.len())
            .min_by(|&a, &b| w[a..].cmp(&w[b..]))
            .expect("length >= 2");
        Bracket::bracket(Bracket::lyndon(&w[..split]), Bracket::lyndon(&w[split..]))
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Letter(0) => write!(f, "X"),
            Bracket::Letter(_) => write!(f, "Y"),
            Bracket::Commutator(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Lyndon words of length `d` in increasing lexicographic order.
pub fn lyndon_words(d: usize) -> Vec<Word> {
    (0u32..1 << d)
        .map(|bits| (0..d).map(|i| ((bits >> (d - 1 - i)) & 1) as u8).collect::<Word>())
        .filter(|w| is_lyndon(w))
        .collect()
}

/// Coordinates of a homogeneous Lie element in the Lyndon basis, or `None`
/// when the polynomial is not a Lie element.
///
/// The expansion of the standard bracketing of a Lyndon word `l` is `l` plus
/// strictly larger words, so peeling off the smallest surviving word works.
pub fn lyndon_coordinates(p: &FreePoly) -> Option<Vec<(Word, BigRational)>> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    while let Some((w, c)) = rest.terms.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
        if !is_lyndon(&w) {
            return None;
        }
        let basis = Bracket::lyndon(&w).expand(p.max_deg);
        debug_assert!(basis.coefficient(&w).is_one());
        rest = rest.sub(&basis.scale(&c));
        out.push((w, c));
    }
    Some(out)
}

pub(crate) fn abs_denominator(c: &BigRational) -> BigInt {
    c.denom().abs()
}
