//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 pair budget exhausted.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coeff::Ring;
use crate::division::{pseudo_divide, DivisionError, Regime};
use crate::groebner::{buchberger, eliminate, member, GroebnerConfig, GroebnerError};
use crate::order::TieBreak;
use crate::poly::{variable_names, PolyRing, Polynomial, TVar, VariableSet};
use crate::rees::{rees_equations, HMode, MultiplierMode, ReesError, ReesOptions, ReesProblem, ReesResult};
use crate::verify::{kernel_check, saturation_gap_report, Presentation, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "multirees",
    version,
    about = "Defining equations of multi-Rees algebras over Z and Z/NZ"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// H set used over Z/p^mZ.
    #[arg(long, global = true, value_enum, default_value_t = HModeArg::Generalized)]
    pub h_mode: HModeArg,
    /// Monomial order; Gröbner computations support only full-lex, division
    /// only t-lex.
    #[arg(long, global = true, value_enum)]
    pub order: Option<OrderArg>,
    /// Maximum number of critical pairs to reduce.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gröbner basis of the defining ideal of a multi-Rees algebra.
    Compute {
        #[arg(short, long)]
        input: PathBuf,
        /// Also print the Koszul relations and the auxiliary ideal.
        #[arg(long)]
        emit_intermediates: bool,
        /// Also print wall-clock timings (output is then not reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value_t = MultiplierArg::Auto)]
        multiplier: MultiplierArg,
        #[arg(long, value_enum, default_value_t = TieArg::LowerIndex)]
        tie_break: TieArg,
    },
    /// Strong Gröbner basis of an ideal.
    Groebner {
        #[arg(short, long)]
        input: PathBuf,
        /// Comma-separated leading variables to eliminate.
        #[arg(long, value_delimiter = ',')]
        eliminate: Vec<String>,
    },
    /// Pseudo-division of `f` by a list of divisors.
    Divide {
        #[arg(short = 'f', long = "poly")]
        f: String,
        /// Comma-separated divisors.
        #[arg(short = 'F', long = "divisors", value_delimiter = ',')]
        divisors: Vec<String>,
        #[arg(long, value_enum)]
        regime: RegimeArg,
        /// 0 for the integers.
        #[arg(long, default_value_t = 0)]
        modulus: u64,
        /// Comma-separated variables, most significant first.
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
    },
    /// Ideal membership via a strong Gröbner basis.
    Member {
        #[arg(short = 'f', long = "poly")]
        f: String,
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Checks that generators lie in the kernel of the presentation map.
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        gens: PathBuf,
    },
    /// Compares the kernel with the ideal of a presentation matrix.
    Gap {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        phi: PathBuf,
        #[arg(long)]
        probe: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum HModeArg {
    Paper,
    Generalized,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    FullLex,
    TLex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MultiplierArg {
    Auto,
    General,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TieArg {
    LowerIndex,
    HigherIndex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RegimeArg {
    Pid,
    Ppq,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Verification(String),
    Budget(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Verification(_) => EXIT_VERIFY,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Verification(m) | CliError::Budget(m) => m,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::BudgetExhausted { .. } => CliError::Budget(e.to_string()),
            other => input(other),
        }
    }
}

impl From<ReesError> for CliError {
    fn from(e: ReesError) -> Self {
        match e {
            ReesError::Groebner(g) => g.into(),
            ReesError::KernelCheck { .. } => CliError::Verification(e.to_string()),
            other => input(other),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Rees(r) => r.into(),
            VerifyError::Groebner(g) => g.into(),
            other => input(other),
        }
    }
}

impl From<DivisionError> for CliError {
    fn from(e: DivisionError) -> Self {
        input(e)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub modulus: u64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub ring: RingSpec,
    pub x_vars: Vec<String>,
    pub ideals: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub ring: Option<RingSpec>,
    pub vars: Option<Vec<String>>,
    pub gens: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiFile {
    pub rows: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load_problem(path: &Path) -> Result<ReesProblem, CliError> {
    let file: ProblemFile = read_json(path)?;
    let ring = Ring::from_modulus(file.ring.modulus).map_err(input)?;
    Ok(ReesProblem::parse(ring, &file.x_vars, &file.ideals)?)
}

/// Variable order for free-standing polynomials: Rees variables by
/// descending `(j, k)`, then the remaining names in order of appearance.
pub fn infer_vars<S: AsRef<str>>(polys: &[S]) -> Result<Vec<String>, CliError> {
    let mut ts: Vec<TVar> = Vec::new();
    let mut others: Vec<String> = Vec::new();
    for p in polys {
        for name in variable_names(p.as_ref()).map_err(input)? {
            match TVar::parse_name(&name) {
                Some(t) => {
                    if !ts.contains(&t) {
                        ts.push(t);
                    }
                }
                None => {
                    if !others.contains(&name) {
                        others.push(name);
                    }
                }
            }
        }
    }
    ts.sort_by_key(|t| std::cmp::Reverse((t.j, t.k)));
    Ok(ts.iter().map(|t| t.name()).chain(others).collect())
}

fn poly_ring(modulus: u64, vars: &[String]) -> Result<PolyRing, CliError> {
    let ring = Ring::from_modulus(modulus).map_err(input)?;
    let vars = VariableSet::from_names(vars).map_err(input)?;
    Ok(PolyRing::from_parts(ring, vars))
}

fn parse_all(ctx: &PolyRing, polys: &[String]) -> Result<Vec<Polynomial>, CliError> {
    polys
        .iter()
        .map(|s| ctx.parse(s).map_err(|e| CliError::Input(format!("`{s}`: {e}"))))
        .collect()
}

pub fn load_ideal(path: &Path) -> Result<(PolyRing, Vec<Polynomial>), CliError> {
    let file: IdealFile = read_json(path)?;
    let modulus = file.ring.map_or(0, |r| r.modulus);
    let vars = match file.vars {
        Some(v) => v,
        None => infer_vars(&file.gens)?,
    };
    let ctx = poly_ring(modulus, &vars)?;
    let gens = parse_all(&ctx, &file.gens)?;
    Ok((ctx, gens))
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn groebner_config(cli: &Cli) -> GroebnerConfig {
    GroebnerConfig {
        budget: cli.budget,
        ..Default::default()
    }
}

fn require_full_lex(cli: &Cli) -> Result<(), CliError> {
    match cli.order {
        Some(OrderArg::TLex) => Err(CliError::Input(
            "Gröbner computations use the full lex order; --order t-lex is only meaningful for divide".into(),
        )),
        _ => Ok(()),
    }
}

fn rees_json(r: &ReesResult, intermediates: bool, timings: bool) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("basis".into(), json!(strings(&r.basis)));
    out.insert(
        "pivots".into(),
        json!(r.pivots.iter().map(|p| p.map(|t| t.name())).collect::<Vec<_>>()),
    );
    out.insert("h_set".into(), json!(strings(&r.h_set)));
    out.insert("multiplier".into(), json!(r.multiplier.as_ref().map(|m| m.to_string())));
    let comps: Vec<Value> = r
        .components
        .iter()
        .map(|c| {
            let mut v = rees_json(&c.result, intermediates, timings);
            let obj = v.as_object_mut().expect("object");
            obj.insert("modulus".into(), json!(c.modulus.to_string()));
            obj.insert("idempotent".into(), json!(c.idempotent.to_string()));
            v
        })
        .collect();
    out.insert("components".into(), json!(comps));
    if intermediates {
        out.insert("koszul".into(), json!(strings(&r.koszul)));
        out.insert("F".into(), json!(strings(&r.f_set)));
    }
    if timings {
        let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
        let mut t = BTreeMap::new();
        t.insert("build_f", ms(r.timings.build_f));
        t.insert("groebner", ms(r.timings.groebner));
        t.insert("eliminate", ms(r.timings.eliminate));
        t.insert("total", ms(r.timings.total));
        out.insert("timings_ms".into(), json!(t));
    }
    Value::Object(out)
}

/// Text rendering: one `key:` header per field, list items indented.
fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Array(_) | Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(v, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}{}\n", scalar(item))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn emit(format: Format, v: &Value) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            render_text(v, 0, &mut s);
            s
        }
    }
}

#[derive(Serialize)]
struct StepJson {
    divisor: usize,
    scale: String,
    leading: String,
}

fn execute(cli: &Cli) -> Result<(Value, i32), CliError> {
    match &cli.command {
        Command::Compute {
            input: path,
            emit_intermediates,
            timings,
            multiplier,
            tie_break,
        } => {
            require_full_lex(cli)?;
            let tie = match tie_break {
                TieArg::LowerIndex => TieBreak::LowerIndex,
                TieArg::HigherIndex => TieBreak::HigherIndex,
            };
            let problem = load_problem(path)?.with_tie_break(tie);
            let options = ReesOptions {
                h_mode: match cli.h_mode {
                    HModeArg::Paper => HMode::Paper,
                    HModeArg::Generalized => HMode::Generalized,
                },
                multiplier: match multiplier {
                    MultiplierArg::Auto => MultiplierMode::Auto,
                    MultiplierArg::General => MultiplierMode::General,
                },
                groebner: groebner_config(cli),
            };
            let r = rees_equations(&problem, &options)?;
            Ok((rees_json(&r, *emit_intermediates, *timings), EXIT_OK))
        }
        Command::Groebner {
            input: path,
            eliminate: drop,
        } => {
            require_full_lex(cli)?;
            let (ctx, gens) = load_ideal(path)?;
            let mut gb = buchberger(&ctx, &gens, &groebner_config(cli))?;
            if !drop.is_empty() {
                let names: Vec<&str> = drop.iter().map(|s| s.as_str()).collect();
                gb = eliminate(&gb, &names)?;
            }
            Ok((
                json!({
                    "vars": gb.context().vars().names(),
                    "basis": strings(gb.basis()),
                    "certified": gb.is_certified(),
                    "stats": gb.stats(),
                }),
                EXIT_OK,
            ))
        }
        Command::Divide {
            f,
            divisors,
            regime,
            modulus,
            vars,
        } => {
            if matches!(cli.order, Some(OrderArg::FullLex)) {
                return Err(CliError::Input(
                    "division uses the T-only order; use --order t-lex or omit it".into(),
                ));
            }
            let mut all = vec![f.clone()];
            all.extend(divisors.iter().cloned());
            let vars = if vars.is_empty() {
                infer_vars(&all)?
            } else {
                vars.clone()
            };
            let ctx = poly_ring(*modulus, &vars)?;
            let polys = parse_all(&ctx, &all)?;
            let regime = match regime {
                RegimeArg::Pid => Regime::Pid,
                RegimeArg::Ppq => Regime::PrimePowerQuotient,
            };
            let r = pseudo_divide(&polys[0], &polys[1..], regime)?;
            let trace: Vec<StepJson> = r
                .trace
                .iter()
                .map(|s| StepJson {
                    divisor: s.divisor + 1,
                    scale: s.scale.to_string(),
                    leading: ctx.term(1.into(), s.leading.clone()).to_string(),
                })
                .collect();
            Ok((
                json!({
                    "multiplier": r.multiplier.to_string(),
                    "cofactors": strings(&r.cofactors),
                    "remainder": r.remainder.to_string(),
                    "trace": trace,
                }),
                EXIT_OK,
            ))
        }
        Command::Member { f, input: path } => {
            require_full_lex(cli)?;
            let (ctx, gens) = load_ideal(path)?;
            let f = ctx.parse(f).map_err(|e| CliError::Input(format!("`{f}`: {e}")))?;
            let gb = buchberger(&ctx, &gens, &groebner_config(cli))?;
            Ok((json!(member(&f, &gb)?.member), EXIT_OK))
        }
        Command::Verify { input: path, gens } => {
            let problem = load_problem(path)?;
            let file: IdealFile = read_json(gens)?;
            let s = problem.s_ring();
            let ctx = match &file.vars {
                Some(v) => PolyRing::new(
                    s.ring().clone(),
                    std::sync::Arc::new(VariableSet::from_names(v).map_err(input)?),
                ),
                None => s.clone(),
            };
            let polys = parse_all(&ctx, &file.gens)?;
            let report = kernel_check(&problem, &polys)?;
            let code = if report.passed { EXIT_OK } else { EXIT_VERIFY };
            Ok((serde_json::to_value(&report).expect("serializable"), code))
        }
        Command::Gap {
            input: path,
            phi,
            probe,
        } => {
            require_full_lex(cli)?;
            let problem = load_problem(path)?;
            let file: PhiFile = read_json(phi)?;
            let presentation = Presentation::parse(&problem, &file.rows, &file.matrix)?;
            let probes = parse_all(problem.s_ring(), probe)?;
            let options = ReesOptions {
                groebner: groebner_config(cli),
                ..Default::default()
            };
            let report = saturation_gap_report(&problem, &presentation, &probes, &options)?;
            Ok((serde_json::to_value(&report).expect("serializable"), EXIT_OK))
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((value, code)) => {
            let _ = out.write_all(emit(cli.format, &value).as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}
