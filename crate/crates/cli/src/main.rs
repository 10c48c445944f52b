use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use rootwork::alcove::{
    boundary_roots, critical_roots, oracle_valid_bases, reduce_to_alcove, yun_trace,
    CoweightPoint, PhiHom,
};
use rootwork::charp::bch::BCH_DEGREE_LIMIT;
use rootwork::charp::{
    bch_apply, bch_table, characteristic_polynomial, conrad_example, heisenberg_module_check,
    is_prime, pgl_nilpotent_lift, t_power, trunc_exp, trunc_log, weight_space_demo, Fp, FpMatrix,
    MatrixDocument,
};
use rootwork::heights::{
    composite_gl_height, dynkin_height, height_vs_coxeter_check, min_nontrivial_height,
    HighestWeight,
};
use rootwork::rational::{format_rational, parse_rational_list};
use rootwork::selftest::{run_selftest, SelftestConfig};
use rootwork::trials::Execution;
use rootwork::{Error, RootSystem, RootVec, TypeLabel, WeightVec};

#[derive(Parser)]
#[command(name = "rootwork", version, about = "Root systems, alcoves, heights and F_p exponentials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SystemArgs {
    /// Cartan type, one of A-G.
    #[arg(long = "type")]
    type_label: TypeLabel,
    #[arg(long)]
    rank: usize,
}

impl SystemArgs {
    fn build(&self) -> Result<RootSystem, Failure> {
        Ok(RootSystem::build(self.type_label, self.rank)?)
    }
}

#[derive(Args)]
struct MatrixArg {
    /// JSON `{"p": P, "matrix": [[...]]}`, or `@path` to read it from a file.
    #[arg(long)]
    matrix: String,
}

#[derive(Subcommand)]
enum Command {
    /// Coxeter number by marks, by rho and by the Coxeter element.
    Coxeter(SystemArgs),
    /// Full root system document.
    Roots(SystemArgs),
    /// Whether p exceeds every mark of the highest root.
    Goodprime {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        p: u64,
    },
    /// Degrees of positive roots for a parabolic subset (0-based simple indices).
    Parabolic {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        subset: Vec<usize>,
    },
    /// Dynkin height of the irreducible representation with the given highest weight.
    Height {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Vec<i64>,
    },
    /// Whether p > height.
    Lowheight {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Vec<i64>,
        #[arg(long)]
        p: u64,
    },
    /// Smallest height of a nontrivial irreducible representation.
    Minheight(SystemArgs),
    /// Height of a tensor product of exterior powers for a product of GL's.
    Glheight {
        #[arg(long, value_delimiter = ',')]
        dims: Vec<u64>,
        #[arg(long, value_delimiter = ',')]
        ms: Vec<u64>,
        /// Also evaluate height < p.
        #[arg(long)]
        p: Option<u64>,
    },
    /// Basis making every critical root positive.
    Yun {
        #[command(flatten)]
        system: SystemArgs,
        /// Values on the simple roots, as `a/b` separated by commas.
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// Compare against chamber enumeration (rank <= 3).
        #[arg(long)]
        oracle: bool,
    },
    /// Roots with phi strictly inside (0, 1/h) mod 1.
    Critical {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
    },
    /// Move a coweight point into the fundamental alcove.
    Reduce {
        #[command(flatten)]
        system: SystemArgs,
        /// Values on the simple roots, not reduced mod 1.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Truncated exponential of a p-nilpotent matrix.
    Exp(MatrixArg),
    /// Truncated logarithm of a p-unipotent matrix.
    Log(MatrixArg),
    /// u^t for a p-unipotent matrix and t in F_p.
    Tpower {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// Truncated BCH product of two matrices.
    Bch {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Degree of truncation; defaults to p - 1.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The cyclic weighted shift with X^p scalar.
    Conrad {
        #[arg(long)]
        p: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        t: Vec<i64>,
    },
    /// A - det(A) I for A in GL(p) with vanishing middle characteristic coefficients.
    PglLift(MatrixArg),
    /// Whether the shift and grading operators generate all p x p matrices.
    Heisenberg {
        #[arg(long)]
        p: u64,
    },
    /// Weight spaces of sl_p under mu_{p^2}.
    Weightdemo {
        #[arg(long)]
        p: u64,
    },
    /// Run the full verification suite.
    Selftest {
        #[arg(long, default_value_t = SelftestConfig::default().seed)]
        seed: u64,
        /// Override every randomized trial count.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        sequential: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Coxeter(_) => "coxeter",
            Command::Roots(_) => "roots",
            Command::Goodprime { .. } => "goodprime",
            Command::Parabolic { .. } => "parabolic",
            Command::Height { .. } => "height",
            Command::Lowheight { .. } => "lowheight",
            Command::Minheight(_) => "minheight",
            Command::Glheight { .. } => "glheight",
            Command::Yun { .. } => "yun",
            Command::Critical { .. } => "critical",
            Command::Reduce { .. } => "reduce",
            Command::Exp(_) => "exp",
            Command::Log(_) => "log",
            Command::Tpower { .. } => "tpower",
            Command::Bch { .. } => "bch",
            Command::Conrad { .. } => "conrad",
            Command::PglLift(_) => "pgl-lift",
            Command::Heisenberg { .. } => "heisenberg",
            Command::Weightdemo { .. } => "weightdemo",
            Command::Selftest { .. } => "selftest",
        }
    }
}

enum Failure {
    Usage(String),
    Library(Error),
    /// A checked invariant failed; carries the payload for replay.
    Violation(String, Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

struct Outcome {
    result: Value,
    verified: Vec<&'static str>,
}

fn require(cond: bool, what: &'static str, payload: &Value) -> Result<&'static str, Failure> {
    if cond {
        Ok(what)
    } else {
        Err(Failure::Violation(what.to_string(), payload.clone()))
    }
}

fn check_prime(p: u64) -> Result<(), Failure> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p).into())
    }
}

fn parse_matrix(arg: &str) -> Result<FpMatrix, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    let doc: MatrixDocument = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("matrix JSON: {e}")))?;
    Ok(FpMatrix::from_document(&doc)?)
}

fn parse_phi(text: &str) -> Result<PhiHom, Failure> {
    Ok(PhiHom::new(parse_rational_list(text)?))
}

fn matrix_json(m: &FpMatrix) -> Value {
    json!(m.to_document())
}

fn roots_json(roots: &[RootVec]) -> Value {
    json!(roots.iter().map(|r| r.coords()).collect::<Vec<_>>())
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    let mut verified = Vec::new();
    let result = match command {
        Command::Coxeter(s) => {
            let rs = s.build()?;
            let (m, r, e) = (rs.coxeter_via_marks(), rs.coxeter_via_rho(), rs.coxeter_via_element());
            let out = json!({
                "system": rs.name(),
                "h": m,
                "via_marks": m,
                "via_rho": r,
                "via_element": e,
                "agreement": m == r && r == e,
            });
            verified.push(require(m == r && r == e, "marks, rho and Coxeter element agree", &out)?);
            out
        }
        Command::Roots(s) => {
            let rs = s.build()?;
            let max_height = rs.positive_roots().iter().map(|a| a.height()).max().unwrap_or(0);
            let mut out = json!(rs.to_document());
            out["count"] = json!(rs.roots().len());
            out["max_height"] = json!(max_height);
            verified.push(require(max_height == rs.coxeter_number() - 1, "max root height = h - 1", &out)?);
            out
        }
        Command::Goodprime { system, p } => {
            check_prime(*p)?;
            let rs = system.build()?;
            json!({ "system": rs.name(), "p": p, "max_mark": rs.max_mark(), "good": rs.is_good_prime(*p) })
        }
        Command::Parabolic { system, subset } => {
            let rs = system.build()?;
            let j: BTreeSet<usize> = subset.iter().copied().collect();
            json!(rs.parabolic_degrees(&j)?)
        }
        Command::Height { system, weight } => {
            let rs = system.build()?;
            let lambda = HighestWeight::new(WeightVec(weight.clone()))?;
            let report = dynkin_height(&rs, &lambda)?;
            let mut out = json!(report);
            verified.push(
                require(report.via_pairing == report.via_difference, "pairing with 2 rho^vee = height of lambda^+ - lambda^-", &out)?,
            );
            if !lambda.is_trivial() {
                let ok = height_vs_coxeter_check(&rs, &lambda)?;
                out["at_least_h_minus_1"] = json!(ok);
            }
            out
        }
        Command::Lowheight { system, weight, p } => {
            check_prime(*p)?;
            let rs = system.build()?;
            let lambda = HighestWeight::new(WeightVec(weight.clone()))?;
            let report = dynkin_height(&rs, &lambda)?;
            json!({ "p": p, "low_height": (*p as i64) > report.height, "report": report })
        }
        Command::Minheight(s) => {
            let rs = s.build()?;
            let (height, index) = min_nontrivial_height(&rs);
            let out = json!({
                "system": rs.name(),
                "height": height,
                "fundamental_weight": index,
                "h": rs.coxeter_number(),
            });
            verified.push(require(height >= rs.coxeter_number() - 1, "min height >= h - 1", &out)?);
            out
        }
        Command::Glheight { dims, ms, p } => {
            let height = composite_gl_height(dims, ms)?;
            let mut out = json!({ "dims": dims, "ms": ms, "height": height });
            if let Some(p) = p {
                check_prime(*p)?;
                out["p"] = json!(p);
                out["bound_ok"] = json!(height < *p);
            }
            out
        }
        Command::Yun { system, phi, oracle } => {
            let rs = system.build()?;
            let phi = parse_phi(phi)?;
            let trace = yun_trace(&rs, &phi)?;
            let critical = critical_roots(&rs, &phi);
            let mut out = json!({
                "system": rs.name(),
                "phi": phi.to_strings(),
                "weyl_word": trace.basis.weyl_word,
                "basis": roots_json(&trace.basis.basis),
                "critical_roots": roots_json(&critical),
                "boundary_roots": roots_json(&trace.boundary_roots),
                "reduced_point": trace.reduction.point.to_strings(),
                "transcript": trace.reduction.transcript,
                "affine_coordinates": trace.affine_coordinates.iter().map(format_rational).collect::<Vec<_>>(),
                "chosen_index": trace.chosen_index,
                "dominance_word": trace.dominance_word,
            });
            let positive = critical.iter().all(|a| trace.basis.is_positive(&rs, a));
            verified.push(require(positive, "critical roots are positive for the basis", &out)?);
            if *oracle {
                let bases = oracle_valid_bases(&rs, &phi)?;
                let member = bases.iter().any(|b| b.same_chamber(&trace.basis));
                out["oracle_bases"] = json!(bases);
                out["oracle_member"] = json!(member);
                verified.push(require(member, "basis is among the oracle chambers", &out)?);
            }
            out
        }
        Command::Critical { system, phi } => {
            let rs = system.build()?;
            let phi = parse_phi(phi)?;
            json!({
                "system": rs.name(),
                "phi": phi.to_strings(),
                "threshold": format_rational(&rootwork::Q::new(1, rs.coxeter_number())),
                "critical_roots": roots_json(&critical_roots(&rs, &phi)),
                "boundary_roots": roots_json(&boundary_roots(&rs, &phi)),
            })
        }
        Command::Reduce { system, point } => {
            let rs = system.build()?;
            let y = CoweightPoint::new(parse_rational_list(point)?);
            if y.values().len() != rs.rank() {
                return Err(Error::Dimension { expected: rs.rank(), found: y.values().len() }.into());
            }
            let red = reduce_to_alcove(&rs, &y)?;
            let out = json!({
                "system": rs.name(),
                "input": y.to_strings(),
                "point": red.point.to_strings(),
                "transcript": red.transcript,
                "linear_part_inverse_word": red.inverse_linear_word(&rs),
            });
            verified.push(require(red.replay(&rs, &y) == red.point, "transcript replays to the reduced point", &out)?);
            out
        }
        Command::Exp(m) => {
            let x = parse_matrix(&m.matrix)?;
            let u = trunc_exp(&x)?;
            let out = matrix_json(&u);
            verified.push(require(trunc_log(&u)? == x, "log(exp X) = X", &out)?);
            out
        }
        Command::Log(m) => {
            let u = parse_matrix(&m.matrix)?;
            let x = trunc_log(&u)?;
            let out = matrix_json(&x);
            verified.push(require(trunc_exp(&x)? == u, "exp(log u) = u", &out)?);
            out
        }
        Command::Tpower { matrix, t } => {
            let u = parse_matrix(&matrix.matrix)?;
            let t = Fp::new(*t, u.p());
            let v = t_power(&u, t)?;
            let out = matrix_json(&v);
            verified.push(require(v == trunc_exp(&trunc_log(&u)?.scale(t))?, "u^t = exp(t log u)", &out)?);
            out
        }
        Command::Bch { x, y, degree } => {
            let x = parse_matrix(x)?;
            let y = parse_matrix(y)?;
            if x.p() != y.p() {
                return Err(Error::FieldMismatch(x.p(), y.p()).into());
            }
            let d = degree.unwrap_or_else(|| (x.p() as usize).saturating_sub(1).min(BCH_DEGREE_LIMIT));
            let table = bch_table(x.p(), d)?;
            let z = bch_apply(&table, &x, &y)?;
            let out = json!({ "degree": d, "result": matrix_json(&z), "terms": table.documents() });
            let product = trunc_exp(&x)?.mul(&trunc_exp(&y)?);
            verified.push(require(trunc_exp(&z)? == product, "exp(H(X, Y)) = exp X exp Y", &out)?);
            out
        }
        Command::Conrad { p, t } => {
            check_prime(*p)?;
            let t: Vec<Fp> = t.iter().map(|&v| Fp::new(v, *p)).collect();
            let report = conrad_example(*p, &t)?;
            let out = json!(report);
            verified.push(require(report.power_is_scalar, "X^p = (prod t_j) I", &out)?);
            verified.push(require(!report.nilpotent, "X is not nilpotent", &out)?);
            out
        }
        Command::PglLift(m) => {
            let a = parse_matrix(&m.matrix)?;
            let lift = pgl_nilpotent_lift(&a)?;
            let out = json!({
                "characteristic_polynomial": characteristic_polynomial(&a),
                "determinant": a.determinant().value(),
                "lift": matrix_json(&lift),
            });
            verified.push(require(lift.pow(a.p()).is_zero(), "(A - det(A) I)^p = 0", &out)?);
            out
        }
        Command::Heisenberg { p } => {
            let report = heisenberg_module_check(*p)?;
            let out = json!(report);
            verified.push(require(report.irreducible, "S and D generate all p x p matrices", &out)?);
            out
        }
        Command::Weightdemo { p } => {
            let report = weight_space_demo(*p)?;
            let out = json!(report);
            verified.push(require(report.total_dimension as u64 == p * p - 1, "weight spaces span sl_p", &out)?);
            verified.push(require(report.conrad_in_alpha, "X lies in the weight-p space", &out)?);
            verified.push(require(report.conrad_power_is_scalar && !report.conrad_nilpotent, "X^p is a nonzero scalar", &out)?);
            out
        }
        Command::Selftest { seed, trials, sequential } => {
            let cfg = SelftestConfig {
                seed: *seed,
                trials: *trials,
                execution: if *sequential { Execution::Sequential } else { Execution::Parallel },
            };
            let report = run_selftest(&cfg);
            for c in &report.criteria {
                eprintln!(
                    "criterion {:>2} {:<40} {} ({} ms)",
                    c.id,
                    c.name,
                    if c.passed { "pass" } else { "FAIL" },
                    c.elapsed_ms
                );
            }
            let out = json!(report);
            verified.push(require(report.passed, "all criteria pass", &out)?);
            out
        }
    };
    Ok(Outcome { result, verified })
}

fn print(value: &Value) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn error_json(command: &str, kind: &str, message: &str) -> Value {
    json!({ "command": command, "error": { "kind": kind, "message": message } })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            print(&error_json("", "usage", &e.render().to_string()));
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    let name = cli.command.name();
    let start = Instant::now();
    match run(&cli.command) {
        Ok(outcome) => {
            print(&json!({
                "command": name,
                "result": outcome.result,
                "verified": outcome.verified,
                "elapsed_ms": start.elapsed().as_millis() as u64,
            }));
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            print(&error_json(name, "usage", &msg));
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Library(e)) => {
            print(&error_json(name, e.kind(), &e.to_string()));
            eprintln!("error: {e}");
            ExitCode::from(if e.is_contract_violation() { 2 } else { 1 })
        }
        Err(Failure::Violation(what, payload)) => {
            let mut out = error_json(name, "invariant_violation", &what);
            out["payload"] = payload;
            print(&out);
            eprintln!("invariant failed: {what}");
            ExitCode::from(2)
        }
    }
}
