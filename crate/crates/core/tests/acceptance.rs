//! Acceptance suite: one line per criterion, each checked against an oracle
//! written here independently of the library's own algorithms.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rootwork::alcove::{
    critical_roots, mu_pj_restriction, oracle_valid_bases, yun_basis, PhiHom,
};
use rootwork::charp::free::Bracket;
use rootwork::charp::{
    bch_apply, bch_table, heisenberg_module_check, nilpotent_p_power_check, pgl_nilpotent_lift,
    regular_nilpotent, t_power, trunc_exp, trunc_log, weight_space_demo, Fp, FpMatrix,
};
use rootwork::heights::{
    composite_gl_height, dynkin_height, min_nontrivial_height, semisimplicity_bound_ok,
    HighestWeight,
};
use rootwork::rootsys::all_types_up_to;
use rootwork::{RootSystem, RootVec, TypeLabel, WeightVec};

const SEED: u64 = 20_240_917;

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> String,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "Coxeter number agreement", budget: Some(Duration::from_secs(5)), run: coxeter },
        Criterion { id: 2, name: "root counts and maximal height", budget: Some(Duration::from_secs(10)), run: root_counts },
        Criterion { id: 3, name: "minimal nontrivial heights", budget: None, run: min_heights },
        Criterion { id: 4, name: "alcove basis against chamber oracle", budget: Some(Duration::from_secs(60)), run: alcove_oracle },
        Criterion { id: 5, name: "boundary sharpness at p = h", budget: None, run: boundary },
        Criterion { id: 6, name: "exponential calculus", budget: Some(Duration::from_secs(60)), run: exponentials },
        Criterion { id: 7, name: "BCH coefficients through degree 6", budget: None, run: bch_coefficients },
        Criterion { id: 8, name: "p-nilpotency of regular nilpotents", budget: None, run: regular_nilpotents },
        Criterion { id: 9, name: "PGL(p) nilpotent lift", budget: None, run: pgl_lift },
        Criterion { id: 10, name: "Heisenberg irreducibility", budget: Some(Duration::from_secs(5)), run: heisenberg },
        Criterion { id: 11, name: "composite GL heights", budget: None, run: gl_heights },
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run));
        let elapsed = start.elapsed();
        let within = c.budget.is_none_or(|b| elapsed <= b);
        let budget = c.budget.map(|b| format!(", budget {} s", b.as_secs())).unwrap_or_default();
        match outcome {
            Ok(detail) if within => {
                println!("PASS criterion {:>2} {}: {detail} ({} ms{budget})", c.id, c.name, elapsed.as_millis());
            }
            Ok(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2} {}: over budget, {detail} ({} ms{budget})", c.id, c.name, elapsed.as_millis());
            }
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                println!("FAIL criterion {:>2} {}: {msg}", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn rs(label: TypeLabel, rank: usize) -> RootSystem {
    RootSystem::build(label, rank).unwrap()
}

/// Classical Coxeter numbers.
fn coxeter_table(label: TypeLabel, n: usize) -> i64 {
    let n = n as i64;
    match label {
        TypeLabel::A => n + 1,
        TypeLabel::B | TypeLabel::C => 2 * n,
        TypeLabel::D => 2 * n - 2,
        TypeLabel::E => [12, 18, 30][n as usize - 6],
        TypeLabel::F => 12,
        TypeLabel::G => 6,
    }
}

/// Classical root counts.
fn root_count_table(label: TypeLabel, n: usize) -> usize {
    match label {
        TypeLabel::A => n * (n + 1),
        TypeLabel::B | TypeLabel::C => 2 * n * n,
        TypeLabel::D => 2 * n * (n - 1),
        TypeLabel::E => [72, 126, 240][n - 6],
        TypeLabel::F => 48,
        TypeLabel::G => 12,
    }
}

/// Bourbaki Cartan matrix with `c[i][j] = <alpha_j, alpha_i^vee>`, built from the diagram.
fn cartan_table(label: TypeLabel, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edge = |a: usize, b: usize| {
        c[a][b] = -1;
        c[b][a] = -1;
    };
    match label {
        TypeLabel::A | TypeLabel::B | TypeLabel::C => (1..n).for_each(|i| edge(i - 1, i)),
        TypeLabel::D => {
            (1..n - 1).for_each(|i| edge(i - 1, i));
            edge(n - 3, n - 1);
        }
        TypeLabel::E => {
            edge(0, 2);
            (3..n).for_each(|i| edge(i - 1, i));
            edge(1, 3);
        }
        TypeLabel::F | TypeLabel::G => (1..n).for_each(|i| edge(i - 1, i)),
    }
    match label {
        TypeLabel::B => c[n - 1][n - 2] = -2,
        TypeLabel::C => c[n - 2][n - 1] = -2,
        TypeLabel::F => c[2][1] = -2,
        TypeLabel::G => c[0][1] = -3,
        _ => {}
    }
    c
}

fn coxeter() -> String {
    let mut n = 0;
    for (label, rank) in all_types_up_to(8) {
        let r = rs(label, rank);
        assert_eq!(r.cartan(), cartan_table(label, rank).as_slice(), "{}: Cartan matrix", r.name());
        let expect = coxeter_table(label, rank);
        let routes = [r.coxeter_via_marks(), r.coxeter_via_rho(), r.coxeter_via_element()];
        assert!(routes.iter().all(|&h| h == expect), "{}: routes {routes:?}, expected {expect}", r.name());
        // |R| = rank * h.
        assert_eq!(r.roots().len() as i64, rank as i64 * expect, "{}: |R| != rank * h", r.name());
        n += 1;
    }
    for (label, rank, h) in [(TypeLabel::F, 4, 12), (TypeLabel::E, 6, 12), (TypeLabel::E, 7, 18), (TypeLabel::E, 8, 30)] {
        assert_eq!(rs(label, rank).coxeter_number(), h);
    }
    for d in 2..=9 {
        assert_eq!(rs(TypeLabel::A, d - 1).coxeter_number(), d as i64);
    }
    format!("{n} types agree on marks, rho and Coxeter element; F4/E6/E7/E8 = 12/12/18/30; h(A_(n-1)) = n")
}

fn root_counts() -> String {
    let mut n = 0;
    for (label, rank) in all_types_up_to(8) {
        let r = rs(label, rank);
        assert_eq!(r.roots().len(), root_count_table(label, rank), "{}: root count", r.name());
        assert_eq!(r.positive_roots().len() * 2, r.roots().len());
        let max = r.positive_roots().iter().map(|a| a.height()).max().unwrap();
        assert_eq!(max, coxeter_table(label, rank) - 1, "{}: max height", r.name());
        n += 1;
    }
    format!("{n} types: classical counts (E8 = 240), max height = h - 1")
}

fn solve_rational(mut a: Vec<Vec<Rational64>>, mut b: Vec<Rational64>) -> Option<Vec<Rational64>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col] / a[col][col];
                for k in col..n {
                    let v = a[col][k];
                    a[r][k] -= f * v;
                }
                let v = b[col];
                b[r] -= f * v;
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

/// Heights of the fundamental weights: coefficients of `2 rho^vee` in the coroot
/// basis, from `<alpha_k, 2 rho^vee> = 2`.
fn fundamental_heights(label: TypeLabel, n: usize) -> Vec<i64> {
    let c = cartan_table(label, n);
    let a = (0..n)
        .map(|k| (0..n).map(|j| Rational64::from_integer(c[j][k])).collect())
        .collect();
    let b = vec![Rational64::from_integer(2); n];
    let x = solve_rational(a, b).expect("Cartan matrices are invertible");
    x.iter()
        .map(|q| {
            assert!(q.is_integer());
            q.to_integer()
        })
        .collect()
}

fn min_heights() -> String {
    for (label, rank, expect) in [(TypeLabel::F, 4, 16), (TypeLabel::E, 6, 16), (TypeLabel::E, 7, 27), (TypeLabel::E, 8, 58)] {
        let oracle = *fundamental_heights(label, rank).iter().min().unwrap();
        assert_eq!(oracle, expect, "oracle disagrees with the stated value for {label}{rank}");
        assert_eq!(min_nontrivial_height(&rs(label, rank)).0, expect, "{label}{rank}");
    }
    for d in 2..=9 {
        assert_eq!(min_nontrivial_height(&rs(TypeLabel::A, d - 1)).0, d as i64 - 1);
    }
    let mut n = 0;
    for (label, rank) in all_types_up_to(8) {
        let oracle = fundamental_heights(label, rank);
        let r = rs(label, rank);
        for (i, &h) in oracle.iter().enumerate() {
            let lambda = HighestWeight::new(WeightVec::fundamental(rank, i)).unwrap();
            assert_eq!(dynkin_height(&r, &lambda).unwrap().height, h, "{}: omega_{i}", r.name());
        }
        let (min, _) = min_nontrivial_height(&r);
        assert_eq!(min, *oracle.iter().min().unwrap());
        assert!(min >= coxeter_table(label, rank) - 1, "{}: {min} < h - 1", r.name());
        n += 1;
    }
    format!("16/16/27/58 for F4/E6/E7/E8, n - 1 for A_(n-1), min >= h - 1 on {n} types")
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn frac(x: Rational64) -> Rational64 {
    x - x.floor()
}

fn phi_value(phi: &[Rational64], alpha: &RootVec) -> Rational64 {
    alpha
        .coords()
        .iter()
        .zip(phi)
        .map(|(&c, v)| *v * Rational64::from_integer(c))
        .sum()
}

fn oracle_critical(phi: &[Rational64], roots: &[RootVec], h: i64) -> BTreeSet<RootVec> {
    roots
        .iter()
        .filter(|a| {
            let f = frac(phi_value(phi, a));
            f > Rational64::zero() && f < q(1, h)
        })
        .cloned()
        .collect()
}

/// Coefficients of `beta` in the candidate basis, if the basis is linearly independent.
fn coefficients(basis: &[RootVec], beta: &RootVec) -> Option<Vec<Rational64>> {
    let r = beta.rank();
    let a = (0..r)
        .map(|row| basis.iter().map(|b| Rational64::from_integer(b.coords()[row])).collect())
        .collect();
    let b = beta.coords().iter().map(|&v| Rational64::from_integer(v)).collect();
    solve_rational(a, b)
}

/// Every `r`-subset of roots in which each root has integer coefficients all of one sign.
fn simple_systems(roots: &[RootVec], r: usize) -> Vec<BTreeSet<RootVec>> {
    fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            subsets(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut idx = Vec::new();
    subsets(roots.len(), r, 0, &mut Vec::new(), &mut idx);
    idx.into_iter()
        .filter_map(|s| {
            let basis: Vec<RootVec> = s.iter().map(|&i| roots[i].clone()).collect();
            let ok = roots.iter().all(|beta| match coefficients(&basis, beta) {
                None => false,
                Some(c) => {
                    c.iter().all(|x| x.is_integer())
                        && (c.iter().all(|x| !x.is_negative()) || c.iter().all(|x| !x.is_positive()))
                }
            });
            ok.then(|| basis.into_iter().collect())
        })
        .collect()
}

fn is_positive_for(basis: &BTreeSet<RootVec>, alpha: &RootVec) -> bool {
    let b: Vec<RootVec> = basis.iter().cloned().collect();
    coefficients(&b, alpha).unwrap().iter().all(|x| !x.is_negative())
}

fn alcove_oracle() -> String {
    let systems = [
        (TypeLabel::A, 1, 2),
        (TypeLabel::A, 2, 6),
        (TypeLabel::A, 3, 24),
        (TypeLabel::B, 2, 8),
        (TypeLabel::B, 3, 48),
        (TypeLabel::C, 3, 48),
        (TypeLabel::G, 2, 12),
    ];
    let trials = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (label, rank, order) in systems {
        let r = rs(label, rank);
        let h = coxeter_table(label, rank);
        let chambers = simple_systems(r.roots(), rank);
        assert_eq!(chambers.len(), order, "{}: simple systems", r.name());
        for trial in 0..trials {
            let values: Vec<Rational64> = (0..rank)
                .map(|_| {
                    let d = rng.random_range(1..=60);
                    q(rng.random_range(-2 * d..2 * d), d)
                })
                .collect();
            let case = || format!("{} trial {trial} phi = {values:?}", r.name());
            let phi = PhiHom::new(values.clone());
            let critical = oracle_critical(&values, r.roots(), h);
            let lib_critical: BTreeSet<RootVec> = critical_roots(&r, &phi).into_iter().collect();
            assert_eq!(lib_critical, critical, "{}: critical roots", case());

            let valid: BTreeSet<BTreeSet<RootVec>> = chambers
                .iter()
                .filter(|b| critical.iter().all(|a| is_positive_for(b, a)))
                .cloned()
                .collect();
            let basis: BTreeSet<RootVec> = yun_basis(&r, &phi).unwrap().basis.into_iter().collect();
            assert!(valid.contains(&basis), "{}: basis {basis:?} not valid", case());
            let lib_oracle: BTreeSet<BTreeSet<RootVec>> = oracle_valid_bases(&r, &phi)
                .unwrap()
                .into_iter()
                .map(|b| b.basis.into_iter().collect())
                .collect();
            assert_eq!(lib_oracle, valid, "{}: oracle chambers", case());
        }
    }
    format!("{trials} random phi on each of A1 A2 A3 B2 B3 C3 G2, zero failures")
}

type Mat = Vec<Vec<u64>>;

fn mat_identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Mat, b: &Mat, p: u64) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j] % p).sum::<u64>() % p).collect())
        .collect()
}

fn mat_add(a: &Mat, b: &Mat, c: u64, p: u64) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x + c * y) % p).collect())
        .collect()
}

fn mat_pow(a: &Mat, e: u64, p: u64) -> Mat {
    (0..e).fold(mat_identity(a.len()), |acc, _| mat_mul(&acc, a, p))
}

fn inv_mod(a: u64, p: u64) -> u64 {
    (1..p).find(|x| a * x % p == 1).expect("invertible")
}

/// `sum_{k < p} X^k / k!`.
fn oracle_exp(x: &Mat, p: u64) -> Mat {
    let mut acc = mat_identity(x.len());
    let mut power = mat_identity(x.len());
    let mut fact = 1;
    for k in 1..p {
        power = mat_mul(&power, x, p);
        fact = fact * k % p;
        acc = mat_add(&acc, &power, inv_mod(fact, p), p);
    }
    acc
}

fn to_fp(m: &Mat, p: u64) -> FpMatrix {
    let rows: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
    FpMatrix::from_rows(&rows, p).unwrap()
}

fn from_fp(m: &FpMatrix) -> Mat {
    m.to_rows().iter().map(|r| r.iter().map(|&v| v as u64).collect()).collect()
}

fn random_strict_upper(rng: &mut ChaCha8Rng, n: usize, p: u64) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if j > i { rng.random_range(0..p) } else { 0 }).collect())
        .collect()
}

/// Product of random elementary matrices together with its inverse.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize, p: u64) -> (Mat, Mat) {
    let mut g = mat_identity(n);
    let mut g_inv = mat_identity(n);
    if n < 2 {
        let c = rng.random_range(1..p);
        return (vec![vec![c]], vec![vec![inv_mod(c, p)]]);
    }
    for _ in 0..3 * n {
        let i = rng.random_range(0..n);
        let j = (i + rng.random_range(1..n)) % n;
        let c = rng.random_range(1..p);
        let mut e = mat_identity(n);
        e[i][j] = c;
        let mut e_inv = mat_identity(n);
        e_inv[i][j] = p - c;
        g = mat_mul(&g, &e, p);
        g_inv = mat_mul(&e_inv, &g_inv, p);
    }
    (g, g_inv)
}

fn exponentials() -> String {
    let trials = 500;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    for p in [3u64, 5, 7] {
        let table = bch_table(p, (p - 1) as usize).unwrap();
        for trial in 0..trials {
            let n = rng.random_range(1..=p as usize);
            let case = format!("p = {p}, n = {n}, trial {trial}");
            let (g, g_inv) = random_invertible(&mut rng, n, p);
            let conj = |m: &Mat| mat_mul(&mat_mul(&g, m, p), &g_inv, p);
            let x = conj(&random_strict_upper(&mut rng, n, p));
            let xf = to_fp(&x, p);

            let e = trunc_exp(&xf).unwrap();
            assert_eq!(from_fp(&e), oracle_exp(&x, p), "{case}: exp");
            assert_eq!(trunc_log(&e).unwrap(), xf, "{case}: log(exp X)");

            let u = oracle_exp(&conj(&random_strict_upper(&mut rng, n, p)), p);
            let uf = to_fp(&u, p);
            let log_u = trunc_log(&uf).unwrap();
            assert_eq!(oracle_exp(&from_fp(&log_u), p), u, "{case}: exp(log u)");

            let powers: Vec<FpMatrix> = (0..p).map(|t| t_power(&uf, Fp::new(t as i64, p)).unwrap()).collect();
            for t in 0..p {
                // For integer t the t-power is the ordinary matrix power.
                assert_eq!(from_fp(&powers[t as usize]), mat_pow(&u, t, p), "{case}: u^{t}");
                for s in 0..p {
                    let prod = powers[t as usize].mul(&powers[s as usize]);
                    assert_eq!(prod, powers[((t + s) % p) as usize], "{case}: u^{t} u^{s}");
                }
            }
            let negative = t_power(&uf, Fp::new(-1, p)).unwrap();
            assert!(negative.mul(&uf).is_identity(), "{case}: u^(-1)");

            let (h, h_inv) = random_invertible(&mut rng, n, p);
            let lhs = trunc_exp(&to_fp(&mat_mul(&mat_mul(&h, &x, p), &h_inv, p), p)).unwrap();
            assert_eq!(from_fp(&lhs), mat_mul(&mat_mul(&h, &from_fp(&e), p), &h_inv, p), "{case}: equivariance");

            let a = random_strict_upper(&mut rng, n, p);
            let b = random_strict_upper(&mut rng, n, p);
            let z = bch_apply(&table, &to_fp(&a, p), &to_fp(&b, p)).unwrap();
            assert_eq!(
                oracle_exp(&from_fp(&z), p),
                mat_mul(&oracle_exp(&a, p), &oracle_exp(&b, p), p),
                "{case}: exp(H(X, Y)) = exp X exp Y"
            );
        }
    }
    format!("{trials} instances for each p in 3, 5, 7 with n <= p, zero failures")
}

type QMat = Vec<Vec<BigRational>>;

fn qm_zero(n: usize) -> QMat {
    vec![vec![BigRational::zero(); n]; n]
}

fn qm_identity(n: usize) -> QMat {
    let mut m = qm_zero(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    m
}

fn qm_mul(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    let mut out = qm_zero(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

fn qm_lin(a: &QMat, b: &QMat, c: &BigRational) -> QMat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + c * y).collect())
        .collect()
}

fn qm_comm(a: &QMat, b: &QMat) -> QMat {
    qm_lin(&qm_mul(a, b), &qm_mul(b, a), &-BigRational::one())
}

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn qm_exp(x: &QMat, terms: usize) -> QMat {
    let mut acc = qm_identity(x.len());
    let mut power = qm_identity(x.len());
    let mut fact = 1i64;
    for k in 1..=terms as i64 {
        power = qm_mul(&power, x);
        fact *= k;
        acc = qm_lin(&acc, &power, &big(1, fact));
    }
    acc
}

fn qm_log(u: &QMat, terms: usize) -> QMat {
    let n = u.len();
    let m = qm_lin(u, &qm_identity(n), &-BigRational::one());
    let mut acc = qm_zero(n);
    let mut power = qm_identity(n);
    for k in 1..=terms as i64 {
        power = qm_mul(&power, &m);
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc = qm_lin(&acc, &power, &big(sign, k));
    }
    acc
}

fn eval_bracket(b: &Bracket, x: &QMat, y: &QMat) -> QMat {
    match b {
        Bracket::Letter(0) => x.clone(),
        Bracket::Letter(_) => y.clone(),
        Bracket::Commutator(l, r) => qm_comm(&eval_bracket(l, x, y), &eval_bracket(r, x, y)),
    }
}

fn bch_coefficients() -> String {
    let max_deg = 6;
    let n = max_deg + 1;
    let table = bch_table(7, max_deg).unwrap();
    let docs = table.documents();
    let find = |bracket: &str| docs.iter().find(|d| d.bracket == bracket).map(|d| d.coefficient.clone());
    assert_eq!(docs.iter().filter(|d| d.degree == 1).count(), 2);
    assert_eq!((find("X"), find("Y")), (Some("1".into()), Some("1".into())));
    assert_eq!(docs.iter().filter(|d| d.degree == 2).count(), 1);
    assert_eq!(find("[X,Y]"), Some("1/2".into()));
    assert_eq!(docs.iter().filter(|d| d.degree == 3).count(), 2);
    assert_eq!(find("[X,[X,Y]]"), Some("1/12".into()));
    // [[X,Y],Y] is the same Lie element as [Y,[Y,X]].
    assert_eq!(find("[[X,Y],Y]"), Some("1/12".into()));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let pairs = 4;
    for _ in 0..pairs {
        // Strictly upper triangular n x n: every product of n factors vanishes, so
        // the series below are exact and H_7 onward contributes nothing.
        let mut random = || -> QMat {
            (0..n)
                .map(|i| (0..n).map(|j| if j > i { big(rng.random_range(-3..=3), 1) } else { BigRational::zero() }).collect())
                .collect()
        };
        let x = random();
        let y = random();
        let oracle = qm_log(&qm_mul(&qm_exp(&x, max_deg), &qm_exp(&y, max_deg)), max_deg);
        let mut series = qm_zero(n);
        for d in 1..=max_deg {
            for t in table.degree(d) {
                series = qm_lin(&series, &eval_bracket(&t.bracket, &x, &y), &t.coefficient);
            }
        }
        assert_eq!(series, oracle, "sum of H_d differs from log(exp X exp Y)");

        // H_3 in the classical form 1/12 [X,[X,Y]] + 1/12 [Y,[Y,X]].
        let xy = qm_comm(&x, &y);
        let yx = qm_comm(&y, &x);
        let classical = qm_lin(&qm_comm(&x, &xy), &qm_comm(&y, &yx), &BigRational::one());
        let h3 = table
            .degree(3)
            .iter()
            .fold(qm_zero(n), |acc, t| qm_lin(&acc, &eval_bracket(&t.bracket, &x, &y), &t.coefficient));
        assert_eq!(h3, qm_lin(&qm_zero(n), &classical, &big(1, 12)));
    }
    let count: usize = (1..=max_deg).map(|d| table.degree(d).len()).sum();
    format!("{count} nonzero Lyndon terms through degree 6 match log(exp X exp Y) on {pairs} random 7x7 pairs; H_2 = 1/2 [X,Y], H_3 classical")
}

fn boundary() -> String {
    // diag(t^0, t^(-p), t^(-2p)) pairs with alpha_i = e_i - e_(i+1) to p; restricted to mu_(p^2), 1/p.
    let p = 3u64;
    let a2 = rs(TypeLabel::A, 2);
    let h = coxeter_table(TypeLabel::A, 2);
    let exps: Vec<i64> = (0..p as i64).map(|k| -k * p as i64).collect();
    let expected: Vec<Rational64> = (0..2).map(|i| q(exps[i] - exps[i + 1], (p * p) as i64)).collect();
    assert!(expected.iter().all(|v| *v == q(1, h)));
    // The same cocharacter in simple coroot coordinates, after removing the centre.
    let mean = q(exps.iter().sum::<i64>(), p as i64);
    let mut acc = Rational64::zero();
    let cochar: Vec<i64> = exps[..2]
        .iter()
        .map(|&a| {
            acc += Rational64::from_integer(a) - mean;
            acc.to_integer()
        })
        .collect();
    let phi = mu_pj_restriction(&a2, &cochar, 2, p).unwrap();
    assert_eq!(phi.values(), expected.as_slice());
    assert!(oracle_critical(&expected, a2.roots(), h).is_empty());
    assert!(critical_roots(&a2, &phi).is_empty());

    for p in [3u64, 5, 7] {
        let n = p as usize;
        let mut t = vec![1u64; n];
        t[n - 1] = 2;
        let mut x = vec![vec![0u64; n]; n];
        for i in 0..n - 1 {
            x[i][i + 1] = t[i];
        }
        x[n - 1][0] = t[n - 1];
        let product = t.iter().product::<u64>() % p;
        let power = mat_pow(&x, p, p);
        let scalar: Mat = (0..n).map(|i| (0..n).map(|j| if i == j { product } else { 0 }).collect()).collect();
        assert_eq!(power, scalar);
        let report = weight_space_demo(p).unwrap();
        assert_eq!(report.conrad_product, product);
        assert!(report.conrad_power_is_scalar && !report.conrad_nilpotent && report.conrad_in_alpha);
        let alpha: BTreeSet<(usize, usize)> = report.alpha_entries.iter().copied().collect();
        let support: BTreeSet<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| x[i][j] != 0).collect();
        assert_eq!(alpha, support);
    }
    "phi(alpha_i) = 1/3 = 1/h with no critical roots; X^p = (prod t_j) I, non-nilpotent, for p = 3, 5, 7".into()
}

fn regular_nilpotents() -> String {
    let mut checks = 0;
    for p in [3u64, 5, 7] {
        for n in 1..=9usize {
            let j: Mat = (0..n).map(|i| (0..n).map(|k| u64::from(k == i + 1)).collect()).collect();
            let x = regular_nilpotent(n, p);
            assert_eq!(from_fp(&x), j);
            let vanishes = mat_pow(&j, p, p).iter().all(|r| r.iter().all(|&v| v == 0));
            assert_eq!(vanishes, p as usize >= n);
            assert_eq!(nilpotent_p_power_check(&x).unwrap(), vanishes, "n = {n}, p = {p}");
            checks += 1;
        }
    }
    format!("X^p = 0 iff p >= n on {checks} pairs")
}

fn det_mod(mut a: Mat, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = (p - det) % p;
        }
        det = det * a[col][col] % p;
        let inv = inv_mod(a[col][col], p);
        for r in col + 1..n {
            let f = a[r][col] * inv % p;
            for k in col..n {
                a[r][k] = (a[r][k] + (p - f) * a[col][k]) % p;
            }
        }
    }
    det
}

/// Coefficients `c_0..c_(p-1)` of `det(T I - A)` for a `p x p` matrix, by interpolating
/// over all of `F_p` (where `T^p` and `T` agree as functions).
fn char_coefficients(a: &Mat, p: u64) -> Vec<u64> {
    let n = a.len();
    let values: Vec<u64> = (0..p)
        .map(|t| {
            let m: Mat = (0..n)
                .map(|i| (0..n).map(|j| ((if i == j { t } else { 0 }) + p - a[i][j]) % p).collect())
                .collect();
            det_mod(m, p)
        })
        .collect();
    // Lagrange interpolation of a function on F_p by a polynomial of degree < p.
    let mut coeffs = vec![0u64; p as usize];
    for (s, &v) in values.iter().enumerate() {
        let mut basis = vec![1u64];
        let mut denom = 1u64;
        for r in 0..p {
            if r == s as u64 {
                continue;
            }
            let mut next = vec![0u64; basis.len() + 1];
            for (k, &b) in basis.iter().enumerate() {
                next[k + 1] = (next[k + 1] + b) % p;
                next[k] = (next[k] + b * (p - r)) % p;
            }
            basis = next;
            denom = denom * ((s as u64 + p - r) % p) % p;
        }
        let scale = v * inv_mod(denom, p) % p;
        for (k, &b) in basis.iter().enumerate() {
            coeffs[k] = (coeffs[k] + scale * b) % p;
        }
    }
    coeffs[1] = (coeffs[1] + p - 1) % p;
    coeffs
}

fn pgl_lift() -> String {
    let trials = 100;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let mut sampled = 0;
    for p in [3u64, 5] {
        let n = p as usize;
        let mut found = 0;
        while found < trials {
            let a: Mat = (0..n).map(|_| (0..n).map(|_| rng.random_range(0..p)).collect()).collect();
            sampled += 1;
            let c = char_coefficients(&a, p);
            if c[0] == 0 || c[1..].iter().any(|&v| v != 0) {
                continue;
            }
            found += 1;
            let det = det_mod(a.clone(), p);
            assert_eq!(det, (p - c[0]) % p, "det = (-1)^p c_0");
            let expected: Mat = (0..n)
                .map(|i| (0..n).map(|j| (a[i][j] + if i == j { p - det } else { 0 }) % p).collect())
                .collect();
            assert!(mat_pow(&expected, p, p).iter().all(|r| r.iter().all(|&v| v == 0)));
            assert_eq!(from_fp(&pgl_nilpotent_lift(&to_fp(&a, p)).unwrap()), expected, "A = {a:?}");
        }
    }
    format!("{trials} rejection-sampled A per p in 3, 5 ({sampled} draws): (A - det A I)^p = 0")
}

fn span_rank(mats: &[Mat], p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = mats.iter().map(|m| m.concat()).collect();
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col] * inv % p;
                for k in 0..width {
                    rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn heisenberg() -> String {
    for p in [2u64, 3, 5, 7] {
        let n = p as usize;
        let s: Mat = (0..n).map(|i| (0..n).map(|j| u64::from(i == (j + 1) % n)).collect()).collect();
        let d: Mat = (0..n).map(|i| (0..n).map(|j| if i == j { i as u64 } else { 0 }).collect()).collect();
        let words: Vec<Mat> = (0..p)
            .flat_map(|a| (0..p).map(move |b| (a, b)))
            .map(|(a, b)| mat_mul(&mat_pow(&s, a, p), &mat_pow(&d, b, p), p))
            .collect();
        assert_eq!(span_rank(&words, p), n * n, "p = {p}: S^a D^b do not span");
        let report = heisenberg_module_check(p).unwrap();
        assert_eq!(report.span_dimension, n * n);
        assert!(report.irreducible && report.shift_order_p && report.bracket_is_shift);
    }
    "S^a D^b span all p^2 matrices for p = 2, 3, 5, 7".into()
}

/// Height of `wedge^m` of the standard representation of `GL_d`, maximised over its
/// weights `e_S` with `|S| = m`: `sum_{i<j} (lambda_i - lambda_j)`.
fn exterior_height(d: usize, m: usize) -> i64 {
    (0u32..1 << d)
        .filter(|s| s.count_ones() as usize == m)
        .map(|s| {
            let lambda: Vec<i64> = (0..d).map(|i| i64::from(s >> i & 1)).collect();
            (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).map(|(i, j)| lambda[i] - lambda[j]).sum::<i64>()
        })
        .max()
        .unwrap()
}

fn gl_heights() -> String {
    for d in 1..=10u64 {
        assert_eq!(composite_gl_height(&[d], &[1]).unwrap(), d - 1);
        assert_eq!(exterior_height(d as usize, 1), d as i64 - 1);
    }
    let cases: [(&[u64], &[u64], u64, bool); 10] = [
        (&[4, 3], &[2, 1], 7, true),
        (&[4, 3], &[2, 1], 5, false),
        (&[5], &[2], 7, true),
        (&[5], &[2], 5, false),
        (&[2, 2, 2], &[1, 1, 1], 5, true),
        (&[2, 2, 2], &[1, 1, 1], 3, false),
        (&[6], &[3], 11, true),
        (&[6], &[3], 7, false),
        (&[3, 3], &[0, 3], 2, true),
        (&[7, 2], &[1, 1], 7, false),
    ];
    for (dims, ms, p, expect) in cases {
        let brute: i64 = dims.iter().zip(ms).map(|(&d, &m)| exterior_height(d as usize, m as usize)).sum();
        let via_weights: i64 = dims
            .iter()
            .zip(ms)
            .filter(|(&d, &m)| m != 0 && m != d)
            .map(|(&d, &m)| {
                let lambda = HighestWeight::new(WeightVec::fundamental(d as usize - 1, m as usize - 1)).unwrap();
                dynkin_height(&rs(TypeLabel::A, d as usize - 1), &lambda).unwrap().height
            })
            .sum();
        let closed = composite_gl_height(dims, ms).unwrap() as i64;
        assert_eq!((closed, via_weights), (brute, brute), "{dims:?} / {ms:?}");
        assert_eq!((brute as u64) < p, expect, "hand-checked verdict for {dims:?} / {ms:?} at p = {p}");
        assert_eq!(semisimplicity_bound_ok(dims, ms, p).unwrap(), expect);
    }
    "GL(d) standard height d - 1 for d <= 10; ten tuples agree with weight enumeration and A-type heights".into()
}
