//! Command-line front end. Every subcommand prints one JSON object carrying
//! `"schema": 1`, the claim it checks, and a computed/predicted pair where a
//! prediction exists.
//!
//! Integer flags accept a single value or an inclusive range `a..b`; ranges
//! sweep the cartesian product of all flags in parallel and report results
//! in parameter order.
//!
//! Exit codes: 0 success, 1 unknown subcommand, 2 invalid parameters,
//! 3 a computed value disagrees with its prediction, 4 dimension cap exceeded.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::binomial;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::exactla::Verdict;
use crate::filtration::{filtration_chain, filtration_report, reproduce_g24};
use crate::koszul::{
    derivative_formula_check, incidence_generators, jet_numerics, koszul_report, line_cohomology,
    pushforward_report, Chart,
};
use crate::plucker::{Context, SymPowerBasis};
use crate::reptheory::{
    aut_rank, cauchy_check, decompose, minor_hwv, predicted_sym_hom_22, predicted_sym_wedge_g24,
    Algebra, TargetModule, DEFAULT_DIMENSION_CAP,
};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNKNOWN_SUBCOMMAND: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;
pub const EXIT_CAP: i32 = 4;

/// Values of one integer flag; a single value or an inclusive range.
#[derive(Clone, Debug)]
pub struct Span(Vec<i64>);

fn parse_span(s: &str) -> std::result::Result<Span, String> {
    let int = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("'{x}': {e}"));
    match s.split_once("..") {
        None => Ok(Span(vec![int(s)?])),
        Some((a, b)) => {
            let (lo, hi) = (int(a)?, int(b.strip_prefix('=').unwrap_or(b))?);
            if lo > hi {
                return Err(format!("empty range {s}"));
            }
            Ok(Span((lo..=hi).collect()))
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "canfilt",
    version,
    about = "Canonical filtrations, highest-weight decompositions and incidence complexes"
)]
struct Cli {
    /// Largest module dimension any subcommand may build.
    #[arg(long, global = true, default_value_t = DEFAULT_DIMENSION_CAP)]
    cap: usize,
    #[arg(long, global = true, value_enum, default_value = "json")]
    output: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModuleKind {
    SymWedge,
    SymHom,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgebraKind {
    Sl,
    SlPair,
}

#[derive(Args, Debug)]
struct Grassmannian {
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    m: Span,
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    n: Span,
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    d: Span,
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    l: Span,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions of U_k(g)L^d for k = 0..=l.
    Filtration(Grassmannian),
    /// Compare U_l(g)L^d with L^{d-l} Sym^l(span of x(L)).
    Compare(Grassmannian),
    /// The worked example on G(2,4).
    ReproduceG24 {
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        d: Span,
    },
    /// Highest-weight decomposition of Sym^d(∧^m V) or Sym^d(W* ⊗ V/W).
    Decompose {
        #[arg(long, value_enum)]
        module: ModuleKind,
        #[arg(long, value_enum)]
        algebra: Option<AlgebraKind>,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        m: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        n: Span,
        #[arg(long, visible_alias = "k", value_parser = parse_span, allow_hyphen_values = true)]
        d: Span,
    },
    /// Three-way dimension check of Sym^k(W* ⊗ V/W).
    CauchyCheck {
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        m: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        n: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        k: Span,
    },
    /// The i×i corner minor as a highest-weight vector.
    MinorHwv {
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        m: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        n: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        i: Span,
    },
    /// Number of irreducible components of Sym^d(∧²K⁴).
    AutRank {
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        d: Span,
    },
    /// d² = 0, elimination on both charts and graded homology.
    KoszulCheck {
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        d: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        l: Span,
        /// Largest graded degree for homology; defaults to 2d.
        #[arg(long)]
        degree_bound: Option<u32>,
        /// Extra random generator orders to test by homology.
        #[arg(long, default_value_t = 0)]
        permutations: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Local generators of the incidence ideal on one chart.
    Incidence {
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        d: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        l: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true, default_value = "0")]
        chart: Span,
    },
    /// Ranks of the direct images of the incidence complex terms.
    Pushforward {
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        d: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        l: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        j: Span,
    },
    /// Jet bundle fiber dimensions and splitting type.
    Jets {
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        m: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        n: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        d: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        l: Span,
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true, default_value = "1")]
        rank_e: Span,
    },
    /// h⁰ and h¹ of O(k) on the projective line.
    Cohomology {
        #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
        k: Span,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Filtration(_) => "filtration",
            Command::Compare(_) => "compare",
            Command::ReproduceG24 { .. } => "reproduce-g24",
            Command::Decompose { .. } => "decompose",
            Command::CauchyCheck { .. } => "cauchy-check",
            Command::MinorHwv { .. } => "minor-hwv",
            Command::AutRank { .. } => "aut-rank",
            Command::KoszulCheck { .. } => "koszul-check",
            Command::Incidence { .. } => "incidence",
            Command::Pushforward { .. } => "pushforward",
            Command::Jets { .. } => "jets",
            Command::Cohomology { .. } => "cohomology",
        }
    }

    fn spans(&self) -> Vec<(&'static str, &Span)> {
        match self {
            Command::Filtration(g) | Command::Compare(g) => {
                vec![("m", &g.m), ("n", &g.n), ("d", &g.d), ("l", &g.l)]
            }
            Command::ReproduceG24 { d } | Command::AutRank { d } => vec![("d", d)],
            Command::Decompose { m, n, d, .. } => vec![("m", m), ("n", n), ("d", d)],
            Command::CauchyCheck { m, n, k } => vec![("m", m), ("n", n), ("k", k)],
            Command::MinorHwv { m, n, i } => vec![("m", m), ("n", n), ("i", i)],
            Command::KoszulCheck { d, l, .. } => vec![("d", d), ("l", l)],
            Command::Incidence { d, l, chart } => vec![("d", d), ("l", l), ("chart", chart)],
            Command::Pushforward { d, l, j } => vec![("d", d), ("l", l), ("j", j)],
            Command::Jets { m, n, d, l, rank_e } => {
                vec![("m", m), ("n", n), ("d", d), ("l", l), ("rank_e", rank_e)]
            }
            Command::Cohomology { k } => vec![("k", k)],
        }
    }
}

type Params = BTreeMap<&'static str, i64>;

fn tuples(spans: &[(&'static str, &Span)]) -> Vec<Params> {
    let mut out = vec![Params::new()];
    for (name, span) in spans {
        out = out
            .into_iter()
            .flat_map(|p| {
                span.0.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.insert(name, v);
                    q
                })
            })
            .collect();
    }
    out
}

/// A computation outcome: the report body and its exit code.
struct Outcome {
    body: Map<String, Value>,
    code: i32,
}

enum Failure {
    Invalid(String),
    Cap { dim: usize, cap: usize },
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { dim, cap } => Failure::Cap { dim, cap },
            Error::AuditFailure(_) | Error::MultiplicityViolation { .. } => {
                Failure::Disagreement(e.to_string())
            }
            other => Failure::Invalid(other.to_string()),
        }
    }
}

type Eval = std::result::Result<Outcome, Failure>;

fn count(p: &Params, name: &str) -> std::result::Result<usize, Failure> {
    let v = p[name];
    usize::try_from(v).map_err(|_| {
        Failure::Invalid(format!(
            "--{} must be non-negative, got {v}",
            name.replace('_', "-")
        ))
    })
}

fn to_map<T: Serialize>(x: &T) -> Map<String, Value> {
    match serde_json::to_value(x).expect("reports serialize") {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

fn with_claim(
    claim: &str,
    report: Map<String, Value>,
    computed: Value,
    predicted: Value,
    agrees: bool,
) -> Outcome {
    let mut body = report;
    body.insert("paper_claim".into(), json!(claim));
    body.insert("computed".into(), computed);
    body.insert("predicted".into(), predicted);
    body.insert("agrees".into(), json!(agrees));
    Outcome {
        body,
        code: if agrees { EXIT_OK } else { EXIT_DISAGREEMENT },
    }
}

fn check_cap(dim: usize, cap: usize) -> std::result::Result<(), Failure> {
    if dim > cap {
        return Err(Failure::Cap { dim, cap });
    }
    Ok(())
}

fn shape(p: &Params) -> std::result::Result<(usize, usize, usize, usize), Failure> {
    let (m, n, d, l) = (
        count(p, "m")?,
        count(p, "n")?,
        count(p, "d")?,
        count(p, "l")?,
    );
    if m == 0 || n == 0 || d == 0 {
        return Err(Failure::Invalid("need m, n, d >= 1".into()));
    }
    Ok((m, n, d, l))
}

fn eval(cmd: &Command, p: &Params, cap: usize) -> Eval {
    match cmd {
        Command::Filtration(_) => {
            let (m, n, d, l) = shape(p)?;
            let ctx = Context::new(m, n, d);
            check_cap(ctx.ambient_dim(), cap)?;
            let chain = filtration_chain(&SymPowerBasis::new(ctx), l)?;
            let computed: Vec<usize> = chain.iter().map(|s| s.dim()).collect();
            // known values: projective space up to order d, and first order everywhere
            let predicted: Vec<Option<usize>> = (0..=l)
                .map(|k| match k {
                    0 => Some(1),
                    _ if m == 1 && k <= d => Some(binomial(n + k, n)),
                    1 => Some(m * n + 1),
                    _ => None,
                })
                .collect();
            let agrees = computed
                .iter()
                .zip(&predicted)
                .all(|(c, p)| p.is_none_or(|p| p == *c));
            let mut report = Map::new();
            report.insert("context".into(), json!(ctx));
            report.insert("ambient_dim".into(), json!(ctx.ambient_dim()));
            Ok(with_claim(
                "canonical_filtration_dimensions",
                report,
                json!(computed),
                json!(predicted),
                agrees,
            ))
        }
        Command::Compare(_) => {
            let (m, n, d, l) = shape(p)?;
            check_cap(Context::new(m, n, d).ambient_dim(), cap)?;
            let r = filtration_report(m, n, d, l)?;
            let claim = if m == 1 {
                "projective_space_filtration_equality"
            } else if l == 1 {
                "first_order_filtration_equality"
            } else {
                "grassmannian_filtration_comparison"
            };
            let predicted_verdict = ((m == 1 || l == 1) && l < d).then_some(Verdict::Equal);
            let computed = json!({"verdict": r.verdict.verdict, "dim_filtration": r.dim_filtration, "dim_comparison": r.dim_comparison});
            let predicted = json!({"verdict": predicted_verdict, "dim_filtration": r.predicted_dim_filtration_m1, "dim_comparison": r.predicted_dim_comparison});
            let agrees = r.predictions_hold();
            Ok(with_claim(claim, to_map(&r), computed, predicted, agrees))
        }
        Command::ReproduceG24 { .. } => {
            let d = count(p, "d")?;
            check_cap(Context::new(2, 2, d).ambient_dim(), cap)?;
            let r = reproduce_g24(d)?;
            let computed = json!({"rank_filtration": r.rank_filtration_list, "rank_comparison": r.rank_comparison_list, "equal": r.verdict.verdict == Verdict::Equal});
            let predicted = json!({"rank_filtration": 15, "rank_comparison": 15, "equal": false});
            let agrees = r.structural_claims_hold();
            Ok(with_claim(
                "grassmannian_g24_example",
                to_map(&r),
                computed,
                predicted,
                agrees,
            ))
        }
        Command::Decompose {
            module, algebra, ..
        } => {
            let (m, n, d) = (count(p, "m")?, count(p, "n")?, count(p, "d")?);
            let target = match module {
                ModuleKind::SymWedge => TargetModule::SymWedge { m, n, d },
                ModuleKind::SymHom => TargetModule::SymHom { m, n, k: d },
            };
            let alg = match algebra {
                None => target.natural_algebra(),
                Some(AlgebraKind::Sl) => Algebra::Sl(m + n),
                Some(AlgebraKind::SlPair) => Algebra::SlPair(m, n),
            };
            if d == 0 {
                return Err(Failure::Invalid("need d >= 1".into()));
            }
            let r = decompose(target, alg, cap)?;
            let labels: Vec<_> = r.components.iter().map(|c| c.label.clone()).collect();
            let (claim, predicted) = match (module, m, n) {
                (ModuleKind::SymWedge, 2, 2) => (
                    "sym_wedge_g24_multiplicity_free",
                    Some(predicted_sym_wedge_g24(d)),
                ),
                (ModuleKind::SymHom, 2, 2) => (
                    "sym_hom_22_parity_decomposition",
                    Some(predicted_sym_hom_22(d)),
                ),
                _ => ("highest_weight_decomposition", None),
            };
            let agrees = predicted.as_ref().is_none_or(|p| *p == labels);
            Ok(with_claim(
                claim,
                to_map(&r),
                json!(labels),
                json!(predicted),
                agrees,
            ))
        }
        Command::CauchyCheck { .. } => {
            let (m, n, k) = (count(p, "m")?, count(p, "n")?, count(p, "k")?);
            let r = cauchy_check(m, n, k, cap)?;
            let computed = json!(r.decomposition_sum);
            let predicted =
                json!({"ambient_dim": r.ambient_dim, "schur_pairing_sum": r.schur_pairing_sum});
            let agrees = r.all_agree;
            Ok(with_claim(
                "cauchy_formula",
                to_map(&r),
                computed,
                predicted,
                agrees,
            ))
        }
        Command::MinorHwv { .. } => {
            let (m, n, i) = (count(p, "m")?, count(p, "n")?, count(p, "i")?);
            let r = minor_hwv(m, n, i)?;
            let agrees = r.verified;
            Ok(with_claim(
                "minor_highest_weight_vector",
                to_map(&r),
                json!(r.weight),
                json!(r.expected_weight),
                agrees,
            ))
        }
        Command::AutRank { .. } => {
            let d = count(p, "d")?;
            let dim = Context::new(2, 2, d).ambient_dim();
            check_cap(dim, cap)?;
            let computed = aut_rank(d)?;
            let predicted = d / 2 + 1;
            let mut report = Map::new();
            report.insert("d".into(), json!(d));
            report.insert("module_dim".into(), json!(dim));
            Ok(with_claim(
                "automorphism_rank",
                report,
                json!(computed),
                json!(predicted),
                computed == predicted,
            ))
        }
        Command::KoszulCheck {
            degree_bound,
            permutations,
            seed,
            ..
        } => {
            let (d, l) = (count(p, "d")?, count(p, "l")?);
            let bound = degree_bound.unwrap_or(2 * d as u32);
            let mut rng = StdRng::seed_from_u64(*seed);
            let orders: Vec<Vec<usize>> = (0..*permutations)
                .map(|_| {
                    let mut o: Vec<usize> = (0..=l).collect();
                    o.shuffle(&mut rng);
                    o
                })
                .collect();
            let r = koszul_report(d, l, &orders, bound)?;
            let agrees = r.all_hold();
            Ok(with_claim(
                "incidence_regular_sequence",
                to_map(&r),
                json!(agrees),
                json!(true),
                agrees,
            ))
        }
        Command::Incidence { .. } => {
            let (d, l) = (count(p, "d")?, count(p, "l")?);
            let chart = Chart::from_index(count(p, "chart")? as u32)?;
            let g = incidence_generators(d, l, chart)?;
            let formula: Vec<bool> = (0..=l).map(|k| derivative_formula_check(d, k)).collect();
            let agrees = formula.iter().all(|&b| b);
            let mut report = to_map(&g);
            report.insert("derivative_formula_holds".into(), json!(formula));
            Ok(with_claim(
                "incidence_generators",
                report,
                json!(agrees),
                json!(true),
                agrees,
            ))
        }
        Command::Pushforward { .. } => {
            let (d, l, j) = (count(p, "d")?, count(p, "l")?, count(p, "j")?);
            let r = pushforward_report(d, l, j)?;
            let computed = json!({"r0": r.r0_computed, "r1": r.r1_computed});
            let predicted = json!({"r0": r.r0_predicted, "r1": r.r1_predicted});
            Ok(with_claim(
                "pushforward_direct_images",
                to_map(&r),
                computed,
                predicted,
                r.agree,
            ))
        }
        Command::Jets { .. } => {
            let (m, n, d, l, rank_e) = (
                count(p, "m")?,
                count(p, "n")?,
                count(p, "d")?,
                count(p, "l")?,
                count(p, "rank_e")?,
            );
            let r = jet_numerics(m, n, d, l, rank_e)?;
            let predicted = rank_e * binomial(m * n + l, l);
            let agrees = r.telescoping_holds && r.fiber_dim == predicted;
            Ok(with_claim(
                "jet_bundle_splitting",
                to_map(&r),
                json!(r.fiber_dim),
                json!(predicted),
                agrees,
            ))
        }
        Command::Cohomology { .. } => {
            let k = p["k"];
            let mut body = to_map(&line_cohomology(k));
            body.insert("paper_claim".into(), json!("line_bundle_cohomology"));
            Ok(Outcome {
                body,
                code: EXIT_OK,
            })
        }
    }
}

fn finish(name: &str, params: &Params, result: Eval) -> (Map<String, Value>, i32, Option<String>) {
    let (mut body, code, diag) = match result {
        Ok(o) => (o.body, o.code, None),
        Err(f) => {
            let (msg, code, extra) = match f {
                Failure::Invalid(m) => (m, EXIT_INVALID, None),
                Failure::Disagreement(m) => (m, EXIT_DISAGREEMENT, None),
                Failure::Cap { dim, cap } => (
                    format!("dimension {dim} exceeds the cap {cap}"),
                    EXIT_CAP,
                    Some(json!({"dimension": dim, "cap": cap})),
                ),
            };
            let mut body = Map::new();
            body.insert("error".into(), json!(msg));
            if let Some(e) = extra {
                body.insert("cap_exceeded".into(), e);
            }
            (body, code, Some(msg))
        }
    };
    body.insert("schema".into(), json!(SCHEMA_VERSION));
    body.insert("subcommand".into(), json!(name));
    body.insert("params".into(), json!(params));
    body.insert("exit_code".into(), json!(code));
    (body, code, diag)
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                ErrorKind::InvalidSubcommand
                | ErrorKind::MissingSubcommand
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_UNKNOWN_SUBCOMMAND,
                _ => EXIT_INVALID,
            };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                RunOutput {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                RunOutput {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let name = cli.command.name();
    let runs = tuples(&cli.command.spans());
    let results: Vec<(Map<String, Value>, i32, Option<String>)> = runs
        .par_iter()
        .map(|p| finish(name, p, eval(&cli.command, p, cli.cap)))
        .collect();
    let code = results.iter().map(|r| r.1).max().unwrap_or(EXIT_OK);
    let stderr: String = results
        .iter()
        .filter_map(|r| r.2.as_ref())
        .map(|m| format!("canfilt {name}: {m}\n"))
        .collect();
    let value = if results.len() == 1 {
        Value::Object(results.into_iter().next().unwrap().0)
    } else {
        json!({
            "schema": SCHEMA_VERSION,
            "subcommand": name,
            "exit_code": code,
            "sweep": results.into_iter().map(|r| Value::Object(r.0)).collect::<Vec<_>>(),
        })
    };
    let stdout = match cli.output {
        OutputFormat::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
        OutputFormat::Text => {
            let mut s = String::new();
            flatten("", &value, &mut s);
            s
        }
    };
    RunOutput {
        code,
        stdout,
        stderr,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        other => out.push_str(&format!("{prefix} = {other}\n")),
    }
}
