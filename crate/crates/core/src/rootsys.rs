//! Irreducible crystallographic root systems built from Cartan data.
//!
//! Simple roots follow Bourbaki numbering for every type:
//!
//! * `A_n`: chain `1 - 2 - ... - n`.
//! * `B_n`: chain with `alpha_n` short.
//! * `C_n`: chain with `alpha_n` long.
//! * `D_n` (`n >= 4`): chain `1 - ... - (n-2)` with `n-1` and `n` both attached to `n-2`.
//! * `E_n` (`n = 6, 7, 8`): chain `1 - 3 - 4 - 5 - ...` with `2` attached to `4`.
//! * `F_4`: `1 - 2 => 3 - 4`, `alpha_1, alpha_2` long.
//! * `G_2`: `alpha_1` short, `alpha_2` long.
//!
//! The Cartan matrix is stored with `cartan[i][j] = <alpha_j, alpha_i^vee>`.
//! Roots are enumerated by closing the simple roots under simple reflections;
//! nothing about the root sets is tabulated.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

/// Cap on the Coxeter element iteration (every irreducible `h` is at most 30).
pub const COXETER_ITERATION_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLabel {
    pub const ALL: [TypeLabel; 7] = [
        TypeLabel::A,
        TypeLabel::B,
        TypeLabel::C,
        TypeLabel::D,
        TypeLabel::E,
        TypeLabel::F,
        TypeLabel::G,
    ];

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            TypeLabel::A => rank >= 1,
            TypeLabel::B | TypeLabel::C => rank >= 2,
            TypeLabel::D => rank >= 4,
            TypeLabel::E => (6..=8).contains(&rank),
            TypeLabel::F => rank == 4,
            TypeLabel::G => rank == 2,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLabel::A),
            "B" => Ok(TypeLabel::B),
            "C" => Ok(TypeLabel::C),
            "D" => Ok(TypeLabel::D),
            "E" => Ok(TypeLabel::E),
            "F" => Ok(TypeLabel::F),
            "G" => Ok(TypeLabel::G),
            _ => Err(Error::InvalidArgument(format!("unknown type label {s:?}"))),
        }
    }
}

/// Every valid `(type, rank)` pair with `rank <= max_rank`.
pub fn all_types_up_to(max_rank: usize) -> Vec<(TypeLabel, usize)> {
    let mut out = Vec::new();
    for label in TypeLabel::ALL {
        for rank in 1..=max_rank {
            if label.is_valid_rank(rank) {
                out.push((label, rank));
            }
        }
    }
    out
}

/// Integer vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVec(v)
    }

    pub fn zero(rank: usize) -> Self {
        RootVec(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Sum of the simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Self {
        RootVec(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &RootVec) -> Self {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RootVec) -> Self {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled_add(&self, k: i64, other: &RootVec) -> Self {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Integer vector in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        WeightVec(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    type_label: TypeLabel,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Half squared lengths `(alpha_i, alpha_i) / 2`, normalized so short roots have 1.
    lengths: Vec<i64>,
    roots: Vec<RootVec>,
    positive: Vec<RootVec>,
    lookup: HashSet<RootVec>,
    highest_root: RootVec,
    marks: Vec<i64>,
    coxeter_number: i64,
}

impl RootSystem {
    /// Builds the irreducible system of the given type and rank.
    pub fn build(type_label: TypeLabel, rank: usize) -> Result<Self> {
        if !type_label.is_valid_rank(rank) {
            let reason = match type_label {
                TypeLabel::A => "A requires rank >= 1",
                TypeLabel::B | TypeLabel::C => "B and C require rank >= 2",
                TypeLabel::D => "D requires rank >= 4 (use A3 for D3)",
                TypeLabel::E => "E requires rank 6, 7 or 8",
                TypeLabel::F => "F exists only in rank 4",
                TypeLabel::G => "G exists only in rank 2",
            };
            return Err(Error::InvalidType {
                label: type_label.to_string(),
                rank,
                reason,
            });
        }
        let cartan = cartan_matrix(type_label, rank);
        let lengths = symmetrizer(&cartan);
        let roots = close_under_reflections(&cartan);

        let mut positive: Vec<RootVec> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        let mut negative: Vec<RootVec> = positive.iter().map(RootVec::neg).collect();
        negative.reverse();
        let mut all = positive.clone();
        all.extend(negative);

        let highest_root = positive.last().cloned().expect("nonempty root system");
        let marks = highest_root.0.clone();
        let coxeter_number = 1 + marks.iter().sum::<i64>();

        Ok(RootSystem {
            type_label,
            rank,
            cartan,
            lengths,
            lookup: all.iter().cloned().collect(),
            roots: all,
            positive,
            highest_root,
            marks,
            coxeter_number,
        })
    }

    pub fn type_label(&self) -> TypeLabel {
        self.type_label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.type_label, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// All roots: positive roots by increasing height, then negative roots from `-theta` upwards.
    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive
    }

    pub fn highest_root(&self) -> &RootVec {
        &self.highest_root
    }

    /// Coefficients `n_i` of the highest root.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn half_squared_lengths(&self) -> &[i64] {
        &self.lengths
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        RootVec::simple(self.rank, i)
    }

    pub fn is_root(&self, v: &RootVec) -> bool {
        self.lookup.contains(v)
    }

    pub(crate) fn check_root(&self, v: &RootVec) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::Dimension {
                expected: self.rank,
                found: v.rank(),
            });
        }
        if !self.is_root(v) {
            return Err(Error::NotARoot(v.0.clone()));
        }
        Ok(())
    }

    /// Symmetric bilinear form `(a, b)` on the root lattice, short roots of squared length 2.
    pub fn inner(&self, a: &RootVec, b: &RootVec) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a.0[i] * b.0[j] * self.lengths[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `<beta, alpha^vee>` for a root `alpha` and any lattice vector `beta`.
    pub fn pairing(&self, beta: &RootVec, alpha: &RootVec) -> i64 {
        let num = 2 * self.inner(beta, alpha);
        let den = self.inner(alpha, alpha);
        debug_assert_eq!(num % den, 0, "non-integral pairing against a root");
        num / den
    }

    /// `<alpha_i, alpha^vee>` for every simple root `alpha_i`.
    pub fn coroot_functional(&self, alpha: &RootVec) -> Vec<i64> {
        (0..self.rank)
            .map(|i| self.pairing(&self.simple_root(i), alpha))
            .collect()
    }

    /// Coordinates of `alpha^vee` in the simple coroot basis.
    pub fn coroot_coords(&self, alpha: &RootVec) -> Vec<i64> {
        let d_alpha = self.inner(alpha, alpha) / 2;
        alpha
            .0
            .iter()
            .zip(&self.lengths)
            .map(|(c, d)| {
                debug_assert_eq!((c * d) % d_alpha, 0);
                c * d / d_alpha
            })
            .collect()
    }

    /// Simple reflection `s_i` applied to a lattice vector.
    pub fn reflect(&self, i: usize, beta: &RootVec) -> RootVec {
        let k: i64 = (0..self.rank).map(|j| beta.0[j] * self.cartan[i][j]).sum();
        let mut out = beta.clone();
        out.0[i] -= k;
        out
    }

    /// Fundamental-weight coordinates `<beta, alpha_i^vee>` of a root-lattice vector.
    pub fn root_to_weight(&self, beta: &RootVec) -> WeightVec {
        WeightVec(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * beta.0[j]).sum())
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight, via the exact inverse of the Cartan matrix.
    pub fn weight_to_root(&self, w: &WeightVec) -> Vec<Q> {
        let inv = self.inverse_cartan();
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| inv[j][i] * Q::from_integer(w.0[i])).sum())
            .collect()
    }

    /// Exact inverse `M` with `C * M = identity`, so that root coordinates of a
    /// weight `w` are `sum_i M[j][i] w_i`.
    pub fn inverse_cartan(&self) -> Vec<Vec<Q>> {
        // Root coordinates b of a weight w satisfy sum_j cartan[i][j] b_j = w_i.
        let n = self.rank;
        let mut a: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut row: Vec<Q> = self.cartan[i].iter().map(|&c| Q::from_integer(c)).collect();
                row.extend((0..n).map(|k| if k == i { Q::one() } else { Q::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrix is invertible");
            a.swap(col, piv);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    let pivot_row = a[col].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
        a.into_iter().map(|row| row[n..].to_vec()).collect()
    }

    /// `det C`, exact.
    pub fn cartan_determinant(&self) -> i64 {
        let n = self.rank;
        let mut a: Vec<Vec<Q>> = self
            .cartan
            .iter()
            .map(|r| r.iter().map(|&c| Q::from_integer(c)).collect())
            .collect();
        let mut det = Q::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return 0;
            };
            if piv != col {
                a.swap(col, piv);
                det = -det;
            }
            det *= a[col][col];
            for r in col + 1..n {
                let f = a[r][col] / a[col][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
        det.to_integer()
    }

    /// Twice the Weyl vector, `2 rho = sum of positive roots`, in root coordinates.
    pub fn two_rho(&self) -> RootVec {
        self.positive
            .iter()
            .fold(RootVec::zero(self.rank), |acc, r| acc.add(r))
    }

    /// Sum of positive coroots in simple coroot coordinates (`2 rho^vee`).
    pub fn two_rho_vee(&self) -> Vec<i64> {
        let mut acc = vec![0; self.rank];
        for r in &self.positive {
            for (a, c) in acc.iter_mut().zip(self.coroot_coords(r)) {
                *a += c;
            }
        }
        acc
    }

    /// Coxeter number as `1 + sum n_i`.
    pub fn coxeter_via_marks(&self) -> i64 {
        1 + self.marks.iter().sum::<i64>()
    }

    /// Positive root whose coroot is the highest coroot (highest root of the dual system).
    pub fn highest_coroot_root(&self) -> RootVec {
        self.positive
            .iter()
            .max_by_key(|r| self.coroot_coords(r).iter().sum::<i64>())
            .cloned()
            .expect("rank >= 1")
    }

    /// Coxeter number as `<rho, beta^vee> + 1`, with `rho` the half-sum of positive roots
    /// and `beta^vee` the highest coroot.
    pub fn coxeter_via_rho(&self) -> i64 {
        let paired = self.pairing(&self.two_rho(), &self.highest_coroot_root());
        debug_assert_eq!(paired % 2, 0);
        paired / 2 + 1
    }

    /// Coxeter number as the order of `s_1 s_2 ... s_r` acting on the root lattice.
    pub fn coxeter_via_element(&self) -> i64 {
        let c = self.coxeter_element_matrix();
        let ident = identity(self.rank);
        let mut power = c.clone();
        for k in 1..=COXETER_ITERATION_CAP {
            if power == ident {
                return k as i64;
            }
            power = mat_mul(&power, &c);
        }
        panic!("Coxeter element order exceeded {COXETER_ITERATION_CAP}");
    }

    /// Matrix of `s_1 s_2 ... s_r` on simple-root coordinates (column `j` is the image of `alpha_j`).
    pub fn coxeter_element_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = self.simple_root(j);
            for i in (0..n).rev() {
                v = self.reflect(i, &v);
            }
            cols.push(v);
        }
        (0..n).map(|i| (0..n).map(|j| cols[j].0[i]).collect()).collect()
    }

    pub fn root_height(&self, alpha: &RootVec) -> Result<i64> {
        self.check_root(alpha)?;
        Ok(alpha.height())
    }

    pub fn max_mark(&self) -> i64 {
        self.marks.iter().copied().max().unwrap_or(0)
    }

    /// `p` is good when it exceeds every mark of the highest root.
    pub fn is_good_prime(&self, p: u64) -> bool {
        (p as i64) > self.max_mark()
    }

    /// `d_J(alpha)`: sum of the coordinates of `alpha` outside `J`, for every
    /// positive root not in the span of `J`. Indices are 0-based.
    pub fn parabolic_degrees(&self, j: &BTreeSet<usize>) -> Result<ParabolicDegrees> {
        if let Some(&bad) = j.iter().find(|&&i| i >= self.rank) {
            return Err(Error::IndexOutOfRange(bad));
        }
        let mut degrees = Vec::new();
        for r in &self.positive {
            let d: i64 = (0..self.rank).filter(|i| !j.contains(i)).map(|i| r.0[i]).sum();
            if d > 0 {
                degrees.push((r.clone(), d));
            }
        }
        let max_degree = degrees.iter().map(|(_, d)| *d).max().unwrap_or(0);
        Ok(ParabolicDegrees { degrees, max_degree })
    }

    /// `d_Gamma(alpha)`: the largest number of elements of `gamma` (with
    /// repetition) summing to `alpha`, for each `alpha` in `gamma`.
    pub fn closed_subset_degrees(&self, gamma: &[RootVec]) -> Result<Vec<(RootVec, i64)>> {
        let mut set: BTreeSet<RootVec> = BTreeSet::new();
        for g in gamma {
            self.check_root(g)?;
            if !g.is_positive() {
                return Err(Error::InvalidArgument(format!("{g} is not a positive root")));
            }
            set.insert(g.clone());
        }
        for a in &set {
            for b in &set {
                let s = a.add(b);
                if self.is_root(&s) && !set.contains(&s) {
                    return Err(Error::NotClosed(a.0.clone(), b.0.clone()));
                }
            }
        }
        if set.is_empty() {
            return Ok(Vec::new());
        }

        // Dynamic programme on the box [0, bound] where bound dominates every element.
        let bound: Vec<i64> = (0..self.rank)
            .map(|i| set.iter().map(|g| g.0[i]).max().unwrap_or(0))
            .collect();
        let strides: Vec<usize> = bound
            .iter()
            .scan(1usize, |acc, &b| {
                let s = *acc;
                *acc *= (b + 1) as usize;
                Some(s)
            })
            .collect();
        let size: usize = bound.iter().map(|&b| (b + 1) as usize).product();
        let index = |v: &[i64]| -> usize { v.iter().zip(&strides).map(|(&c, &s)| c as usize * s).sum() };

        let mut cells: Vec<Vec<i64>> = Vec::with_capacity(size);
        for mut idx in 0..size {
            let mut v = vec![0; self.rank];
            for (i, b) in bound.iter().enumerate() {
                let m = (*b + 1) as usize;
                v[i] = (idx % m) as i64;
                idx /= m;
            }
            cells.push(v);
        }
        // Increasing height guarantees predecessors are settled first.
        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by_key(|&k| cells[k].iter().sum::<i64>());

        let elems: Vec<&RootVec> = set.iter().collect();
        let mut best: Vec<i64> = vec![i64::MIN; size];
        best[0] = 0;
        for &k in order.iter().skip(1) {
            let v = &cells[k];
            let mut b = i64::MIN;
            for g in &elems {
                if g.0.iter().zip(v).all(|(gc, vc)| gc <= vc) {
                    let rest: Vec<i64> = v.iter().zip(&g.0).map(|(a, c)| a - c).collect();
                    let prev = best[index(&rest)];
                    if prev != i64::MIN {
                        b = b.max(prev + 1);
                    }
                }
            }
            best[k] = b;
        }
        Ok(set.into_iter().map(|g| {
            let d = best[index(&g.0)];
            (g, d)
        }).collect())
    }

    pub fn to_document(&self) -> RootSystemDocument {
        RootSystemDocument {
            type_label: self.type_label,
            rank: self.rank,
            cartan: self.cartan.clone(),
            roots: self.roots.iter().map(|r| r.0.clone()).collect(),
            positive_roots: self.positive.iter().map(|r| r.0.clone()).collect(),
            highest_root: self.highest_root.0.clone(),
            marks: self.marks.clone(),
            h: self.coxeter_number,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicDegrees {
    pub degrees: Vec<(RootVec, i64)>,
    pub max_degree: i64,
}

/// Stable JSON form of a [`RootSystem`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDocument {
    #[serde(rename = "type")]
    pub type_label: TypeLabel,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub marks: Vec<i64>,
    pub h: i64,
}

impl RootSystemDocument {
    /// Rebuilds the system and checks the document matches it.
    pub fn into_root_system(self) -> Result<RootSystem> {
        let rs = RootSystem::build(self.type_label, self.rank)?;
        if rs.to_document() != self {
            return Err(Error::InvalidArgument(
                "document does not match the rebuilt root system".into(),
            ));
        }
        Ok(rs)
    }
}

fn cartan_matrix(label: TypeLabel, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match label {
        TypeLabel::A | TypeLabel::B | TypeLabel::C | TypeLabel::F | TypeLabel::G => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        TypeLabel::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        TypeLabel::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match label {
        // <alpha_{n-1}, alpha_n^vee> = -2 when alpha_n is short.
        TypeLabel::B => c[n - 1][n - 2] = -2,
        TypeLabel::C => c[n - 2][n - 1] = -2,
        TypeLabel::F => c[2][1] = -2,
        TypeLabel::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Positive integers `d_i` with `d_i C[i][j] = d_j C[j][i]`, short roots normalized to 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].expect("visited");
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && d[j].is_none() {
                d[j] = Some(di * Q::new(cartan[i][j], cartan[j][i]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let min = d.iter().copied().fold(d[0], |a, b| if b < a { b } else { a });
    d.into_iter()
        .map(|x| {
            let r = x / min;
            debug_assert!(r.is_integer() && r.is_positive());
            r.to_integer()
        })
        .collect()
}

fn close_under_reflections(cartan: &[Vec<i64>]) -> Vec<RootVec> {
    let n = cartan.len();
    let reflect = |i: usize, beta: &RootVec| {
        let k: i64 = (0..n).map(|j| beta.0[j] * cartan[i][j]).sum();
        let mut out = beta.clone();
        out.0[i] -= k;
        out
    };
    let mut seen: HashSet<RootVec> = HashSet::new();
    let mut queue: VecDeque<RootVec> = VecDeque::new();
    for i in 0..n {
        let r = RootVec::simple(n, i);
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let s = reflect(i, &r);
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen.into_iter().collect()
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}
