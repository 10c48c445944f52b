//! Alcove reduction on `V = Hom(X, Q)` and the construction of a basis making
//! every root with `phi(alpha)` in `(0, 1/h) mod Z` positive.
//!
//! A point `y` of `V` is stored by its values `y(alpha_i)` on the simple
//! roots; `W` acts by `(w y)(alpha) = y(w^{-1} alpha)` and the lattice
//! `Hom(X, Z)` acts by integer translations of those values.
//!
//! Weyl group elements are written as words `[a_1, ..., a_L]` standing for the
//! product `s_{a_1} s_{a_2} ... s_{a_L}`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{frac, format_rational, is_half_open_unit, Q};
use crate::rootsys::{RootSystem, RootVec};

pub const REDUCTION_CAP: usize = 10_000;
/// Largest rank accepted by [`oracle_valid_bases`].
pub const ORACLE_RANK_LIMIT: usize = 3;

/// Homomorphism `X -> Q/Z`, given by its values on the simple roots reduced into `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhiHom {
    values: Vec<Q>,
}

impl PhiHom {
    pub fn new(values: Vec<Q>) -> Self {
        PhiHom {
            values: values.into_iter().map(frac).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        PhiHom {
            values: vec![Q::zero(); rank],
        }
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// `phi(alpha)` reduced into `[0, 1)`.
    pub fn eval(&self, alpha: &RootVec) -> Q {
        frac(dot(&self.values, alpha))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(format_rational).collect()
    }
}

/// A point `y` of `V`, stored as `y(alpha_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoweightPoint {
    values: Vec<Q>,
}

impl CoweightPoint {
    pub fn new(values: Vec<Q>) -> Self {
        CoweightPoint { values }
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    /// `alpha(y)` for a root-lattice vector `alpha`.
    pub fn eval(&self, alpha: &RootVec) -> Q {
        dot(&self.values, alpha)
    }

    /// The homomorphism `y mod Z`.
    pub fn to_phi(&self) -> PhiHom {
        PhiHom::new(self.values.clone())
    }

    fn reflect(&self, rs: &RootSystem, j: usize) -> Self {
        let c = rs.cartan();
        let yj = self.values[j];
        CoweightPoint {
            values: (0..rs.rank())
                .map(|i| self.values[i] - Q::from_integer(c[j][i]) * yj)
                .collect(),
        }
    }

    /// Reflection in the affine wall `theta = 1`: `y - (theta(y) - 1) theta^vee`.
    fn affine_reflect(&self, rs: &RootSystem) -> Self {
        let theta = rs.highest_root();
        let shift = self.eval(theta) - Q::one();
        let coroot = rs.coroot_functional(theta);
        CoweightPoint {
            values: self
                .values
                .iter()
                .zip(coroot)
                .map(|(y, c)| *y - shift * Q::from_integer(c))
                .collect(),
        }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(format_rational).collect()
    }
}

fn dot(values: &[Q], alpha: &RootVec) -> Q {
    values
        .iter()
        .zip(alpha.coords())
        .map(|(v, &c)| *v * Q::from_integer(c))
        .sum()
}

/// One generator of the extended affine Weyl group applied during reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlcoveStep {
    /// Add an element of `Hom(X, Z)`, given by its values on the simple roots.
    Translate { by: Vec<i64> },
    /// Simple reflection `s_i` (0-based).
    Reflect { index: usize },
    /// Reflection in the wall `theta = 1`; its linear part is `s_theta`.
    AffineReflect,
}

/// Weyl group element stored by the images of the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    images: Vec<RootVec>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            images: (0..rank).map(|i| RootVec::simple(rank, i)).collect(),
        }
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut w = WeylElement::identity(rs.rank());
        for &i in word {
            w = w.mul_simple(rs, i);
        }
        w
    }

    /// `w s_i`.
    pub fn mul_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let c = rs.cartan();
        let img_i = self.images[i].clone();
        WeylElement {
            images: self
                .images
                .iter()
                .enumerate()
                .map(|(j, img)| img.scaled_add(-c[i][j], &img_i))
                .collect(),
        }
    }

    pub fn apply(&self, alpha: &RootVec) -> RootVec {
        let rank = self.images.len();
        let mut out = RootVec::zero(rank);
        for (c, img) in alpha.coords().iter().zip(&self.images) {
            if *c != 0 {
                out = out.scaled_add(*c, img);
            }
        }
        out
    }

    /// Images `w(alpha_i)`: the basis `w(B_0)`.
    pub fn basis(&self) -> &[RootVec] {
        &self.images
    }

    /// A reduced word, found by peeling off right descents.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = w.images.iter().position(|r| !r.is_positive()) {
            w = w.mul_simple(rs, i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }
}

/// A basis `B = w(B_0)`: `alpha` is `B`-positive iff `w^{-1}(alpha)` is `B_0`-positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisChoice {
    pub weyl_word: Vec<usize>,
    pub basis: Vec<RootVec>,
}

impl BasisChoice {
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let w = WeylElement::from_word(rs, word);
        BasisChoice {
            weyl_word: w.reduced_word(rs),
            basis: w.basis().to_vec(),
        }
    }

    pub fn standard(rs: &RootSystem) -> Self {
        BasisChoice {
            weyl_word: Vec::new(),
            basis: WeylElement::identity(rs.rank()).basis().to_vec(),
        }
    }

    /// Tests positivity by pulling `alpha` back through the word.
    pub fn is_positive(&self, rs: &RootSystem, alpha: &RootVec) -> bool {
        let mut v = alpha.clone();
        for &i in &self.weyl_word {
            v = rs.reflect(i, &v);
        }
        v.is_positive()
    }

    fn basis_set(&self) -> BTreeSet<&RootVec> {
        self.basis.iter().collect()
    }

    /// Same set of simple roots (hence same positive system).
    pub fn same_chamber(&self, other: &BasisChoice) -> bool {
        self.basis_set() == other.basis_set()
    }
}

pub fn lift(phi: &PhiHom) -> CoweightPoint {
    CoweightPoint::new(phi.values().to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveReduction {
    pub point: CoweightPoint,
    pub transcript: Vec<AlcoveStep>,
}

impl AlcoveReduction {
    /// Word for the linear part `w_acc^{-1}`, where `w_acc` is the product of the
    /// linear parts of the transcript. With `y' = w_acc y + t`, `phi' = phi o w_acc^{-1}`.
    pub fn inverse_linear_word(&self, rs: &RootSystem) -> Vec<usize> {
        let s_theta = highest_reflection_word(rs);
        let mut word = Vec::new();
        for step in &self.transcript {
            match step {
                AlcoveStep::Translate { .. } => {}
                AlcoveStep::Reflect { index } => word.push(*index),
                AlcoveStep::AffineReflect => word.extend_from_slice(&s_theta),
            }
        }
        word
    }

    /// Replays the transcript on `y`.
    pub fn replay(&self, rs: &RootSystem, y: &CoweightPoint) -> CoweightPoint {
        let mut cur = y.clone();
        for step in &self.transcript {
            cur = apply_step(rs, &cur, step);
        }
        cur
    }
}

fn apply_step(rs: &RootSystem, y: &CoweightPoint, step: &AlcoveStep) -> CoweightPoint {
    match step {
        AlcoveStep::Translate { by } => CoweightPoint::new(
            y.values
                .iter()
                .zip(by)
                .map(|(v, t)| *v + Q::from_integer(*t))
                .collect(),
        ),
        AlcoveStep::Reflect { index } => y.reflect(rs, *index),
        AlcoveStep::AffineReflect => y.affine_reflect(rs),
    }
}

/// Word for `s_theta`: `u s_j u^{-1}` where `u(alpha_j) = theta`.
pub fn highest_reflection_word(rs: &RootSystem) -> Vec<usize> {
    let mut beta = rs.highest_root().clone();
    let mut path = Vec::new();
    while beta.height() > 1 {
        let i = (0..rs.rank())
            .find(|&i| rs.pairing(&beta, &rs.simple_root(i)) > 0)
            .expect("a non-simple positive root has a simple descent");
        beta = rs.reflect(i, &beta);
        path.push(i);
    }
    let j = beta.coords().iter().position(|&c| c == 1).expect("simple root");
    let mut word = path.clone();
    word.push(j);
    word.extend(path.iter().rev());
    word
}

/// Affine coordinates `(1 - theta(y), alpha_1(y), ..., alpha_r(y))`.
pub fn affine_coordinates(rs: &RootSystem, y: &CoweightPoint) -> Vec<Q> {
    let mut out = vec![Q::one() - y.eval(rs.highest_root())];
    out.extend(y.values().iter().copied());
    out
}

pub fn in_fundamental_alcove(rs: &RootSystem, y: &CoweightPoint) -> bool {
    y.values().iter().all(|v| *v >= Q::zero()) && y.eval(rs.highest_root()) <= Q::one()
}

/// Moves `y` into the fundamental alcove: each coordinate is first translated
/// toward zero into `(-1, 1)`, then simple and affine reflections are applied
/// until every wall inequality holds.
pub fn reduce_to_alcove(rs: &RootSystem, y: &CoweightPoint) -> Result<AlcoveReduction> {
    if y.values().len() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            found: y.values().len(),
        });
    }
    let mut transcript = Vec::new();
    let by: Vec<i64> = y.values().iter().map(|v| -v.trunc().to_integer()).collect();
    let mut cur = y.clone();
    if by.iter().any(|&t| t != 0) {
        let step = AlcoveStep::Translate { by };
        cur = apply_step(rs, &cur, &step);
        transcript.push(step);
    }
    for _ in 0..REDUCTION_CAP {
        let step = if let Some(j) = cur.values().iter().position(|v| *v < Q::zero()) {
            AlcoveStep::Reflect { index: j }
        } else if cur.eval(rs.highest_root()) > Q::one() {
            AlcoveStep::AffineReflect
        } else {
            debug_assert!(in_fundamental_alcove(rs, &cur));
            return Ok(AlcoveReduction {
                point: cur,
                transcript,
            });
        };
        cur = apply_step(rs, &cur, &step);
        transcript.push(step);
    }
    Err(Error::ReductionCap(REDUCTION_CAP))
}

/// Roots whose `phi`-value mod 1 lies strictly inside `(0, 1/h)`.
pub fn critical_roots(rs: &RootSystem, phi: &PhiHom) -> Vec<RootVec> {
    let window = Q::new(1, rs.coxeter_number());
    rs.roots()
        .iter()
        .filter(|a| {
            let v = phi.eval(a);
            v > Q::zero() && v < window
        })
        .cloned()
        .collect()
}

/// Roots sitting exactly on the boundary value `1/h`; these are never critical.
pub fn boundary_roots(rs: &RootSystem, phi: &PhiHom) -> Vec<RootVec> {
    let window = Q::new(1, rs.coxeter_number());
    rs.roots()
        .iter()
        .filter(|a| phi.eval(a) == window)
        .cloned()
        .collect()
}

/// Everything the basis construction produced, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YunTrace {
    pub basis: BasisChoice,
    pub reduction: AlcoveReduction,
    pub affine_coordinates: Vec<Q>,
    /// Index `i` in `0..=rank` with affine coordinate `>= 1/h`; 0 is the affine node.
    pub chosen_index: usize,
    /// Simple reflections applied to make `y' - v_i` dominant.
    pub dominance_word: Vec<usize>,
    pub boundary_roots: Vec<RootVec>,
}

pub fn yun_basis(rs: &RootSystem, phi: &PhiHom) -> Result<BasisChoice> {
    yun_trace(rs, phi).map(|t| t.basis)
}

pub fn yun_trace(rs: &RootSystem, phi: &PhiHom) -> Result<YunTrace> {
    if phi.rank() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            found: phi.rank(),
        });
    }
    let h = rs.coxeter_number();
    let threshold = Q::new(1, h);

    let y = lift(phi);
    let reduction = reduce_to_alcove(rs, &y)?;
    let reduced = &reduction.point;
    let aff = affine_coordinates(rs, reduced);

    let marks = rs.marks();
    let weighted: Q = aff[0]
        + aff[1..]
            .iter()
            .zip(marks)
            .map(|(a, n)| *a * Q::from_integer(*n))
            .sum::<Q>();
    assert_eq!(weighted, Q::one(), "affine coordinates must sum to 1 with the marks");

    let chosen_index = if aff[0] >= threshold {
        0
    } else {
        (1..aff.len())
            .find(|&i| aff[i] >= threshold)
            .expect("pigeonhole: some affine coordinate is at least 1/h")
    };

    let mut dominance_word = Vec::new();
    if chosen_index > 0 {
        let i = chosen_index - 1;
        // y' - v_i, where v_i is the alcove vertex opposite the wall alpha_i = 0.
        let mut z = reduced.clone();
        z.values[i] -= Q::new(1, marks[i]);
        for _ in 0..REDUCTION_CAP {
            match z.values().iter().position(|v| *v < Q::zero()) {
                Some(j) => {
                    z = z.reflect(rs, j);
                    dominance_word.push(j);
                }
                None => break,
            }
        }
        if z.values().iter().any(|v| *v < Q::zero()) {
            return Err(Error::ReductionCap(REDUCTION_CAP));
        }
    }

    let mut word = reduction.inverse_linear_word(rs);
    word.extend_from_slice(&dominance_word);
    let basis = BasisChoice::from_word(rs, &word);

    Ok(YunTrace {
        basis,
        reduction,
        affine_coordinates: aff,
        chosen_index,
        dominance_word,
        boundary_roots: boundary_roots(rs, phi),
    })
}

/// Whether every critical root is positive for `basis`.
pub fn basis_is_valid(rs: &RootSystem, phi: &PhiHom, basis: &BasisChoice) -> bool {
    critical_roots(rs, phi)
        .iter()
        .all(|a| basis.is_positive(rs, a))
}

/// All Weyl group elements with shortest words, by breadth-first search.
pub fn weyl_group(rs: &RootSystem) -> Result<Vec<(WeylElement, Vec<usize>)>> {
    if rs.rank() > ORACLE_RANK_LIMIT {
        return Err(Error::RankTooLarge {
            rank: rs.rank(),
            limit: ORACLE_RANK_LIMIT,
        });
    }
    let id = WeylElement::identity(rs.rank());
    let mut seen: HashMap<WeylElement, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut out = vec![(id.clone(), Vec::new())];
    let mut queue = VecDeque::from([(id, Vec::new())]);
    while let Some((w, word)) = queue.pop_front() {
        for i in 0..rs.rank() {
            let next = w.mul_simple(rs, i);
            if seen.insert(next.clone(), ()).is_none() {
                let mut nw: Vec<usize> = word.clone();
                nw.push(i);
                out.push((next.clone(), nw.clone()));
                queue.push_back((next, nw));
            }
        }
    }
    Ok(out)
}

/// Every chamber basis `w(B_0)` under which all critical roots are positive.
pub fn oracle_valid_bases(rs: &RootSystem, phi: &PhiHom) -> Result<Vec<BasisChoice>> {
    let critical = critical_roots(rs, phi);
    let group = weyl_group(rs)?;
    Ok(group
        .into_iter()
        .map(|(w, word)| BasisChoice {
            weyl_word: word,
            basis: w.basis().to_vec(),
        })
        .filter(|b| critical.iter().all(|a| b.is_positive(rs, a)))
        .collect())
}

/// Restriction of a cocharacter along `mu_{p^j}`: `phi(alpha_i) = <alpha_i, cochar> / p^j`.
///
/// `cochar` is given in the simple coroot basis, `cochar = sum_k c_k alpha_k^vee`.
pub fn mu_pj_restriction(rs: &RootSystem, cochar: &[i64], j: u32, p: u64) -> Result<PhiHom> {
    if !crate::charp::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if j < 1 {
        return Err(Error::InvalidArgument("j must be at least 1".into()));
    }
    if cochar.len() != rs.rank() {
        return Err(Error::Dimension {
            expected: rs.rank(),
            found: cochar.len(),
        });
    }
    let modulus = (p as i64)
        .checked_pow(j)
        .ok_or_else(|| Error::InvalidArgument("p^j overflows".into()))?;
    let c = rs.cartan();
    let values = (0..rs.rank())
        .map(|i| {
            let pairing: i64 = (0..rs.rank()).map(|k| cochar[k] * c[k][i]).sum();
            Q::new(pairing, modulus)
        })
        .collect();
    Ok(PhiHom::new(values))
}

/// Coroot coordinates of the cocharacter `t -> diag(t^0, t^{-p}, ..., t^{-(p-1)p})`
/// of `SL_p` (type `A_{p-1}`), up to the central factor `t^{-(p-1)p/2}`.
pub fn conrad_cocharacter(p: u64) -> Vec<i64> {
    // Exponents a_k = -(k-1)p; centred exponents b_k sum to zero, coroot coords are partial sums.
    let p = p as i64;
    let exps: Vec<i64> = (0..p).map(|k| -k * p).collect();
    let shift = exps.iter().sum::<i64>() / p;
    let centred: Vec<i64> = exps.iter().map(|a| a - shift).collect();
    let mut acc = 0;
    (0..(p - 1) as usize)
        .map(|k| {
            acc += centred[k];
            acc
        })
        .collect()
}

/// All values lie in `[0, 1)`.
pub fn phi_is_reduced(phi: &PhiHom) -> bool {
    phi.values().iter().all(is_half_open_unit)
}
