//! Command-line interface: exact tables, numeric oracles and the
//! internal verification suite behind one binary.
//!
//! Exit codes: 0 on success, 1 when a verification fails (a violated
//! identity, a pipeline mismatch, a failed cross-check), 2 on usage or
//! configuration errors.  Output goes to stdout as JSON unless a
//! command documents another format.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use hiz_wkb_core::field::{frac, rat, rat_pow, Rat};
use hiz_wkb_core::jack::{jack_table, verify_sum_rule, verify_sum_rule_symbolic};
use hiz_wkb_core::oracle::{calogero_residual, perm_sum_power, phi_series_beta4};
use hiz_wkb_core::polyring::{MPoly, Vars};
use hiz_wkb_core::taugraph::{graph_by_name, identity_catalogue, TauGraph};
use hiz_wkb_core::upoly::{linear_factors, UPoly};
use hiz_wkb_core::wkb::{
    beta_of_alpha, duality_map, largek_leading, verify_residual_equations, CheckStatus,
    CoeffTable, Engine, GaugePolicy, Pipeline, WkbError,
};

use crate::beta2::hciz_beta2_exact;
use crate::cache;
use crate::mc::{mc_haar_integral, Group};
use crate::SpectrumPair;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "hiz-wkb",
    version,
    about = "Exact tau-expansion tables for beta-deformed HIZ integrals, with numeric oracles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the Jack polynomial tables through a weight.
    JackTable(JackTableArgs),
    /// Solve and print a tau-graph coefficient table.
    CoeffTable(CoeffTableArgs),
    /// Numeric oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Run the internal verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
pub struct JackTableArgs {
    /// Largest weight to tabulate.
    #[arg(long)]
    pub order: u32,
    /// Jack parameter, as an integer or a fraction like 1/2.
    #[arg(long, value_parser = parse_rat)]
    pub alpha: Rat,
    /// Cross-check the tables (sum rule, factored specializations).
    #[arg(long)]
    pub check: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum PipelineArg {
    Jack,
    Residual,
    Both,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("parameter").required(true).multiple(false))]
pub struct CoeffTableArgs {
    /// Spectrum dimension.
    #[arg(long)]
    pub k: usize,
    /// Series parameter, as an integer or a fraction.  Exactly one of
    /// --alpha and --beta must be given; the other is derived.
    #[arg(long, value_parser = parse_rat, group = "parameter")]
    pub alpha: Option<Rat>,
    /// Ensemble parameter, as an integer or a fraction.
    #[arg(long, value_parser = parse_rat, group = "parameter")]
    pub beta: Option<Rat>,
    /// Truncation order.
    #[arg(long, default_value_t = 4)]
    pub order: u32,
    #[arg(long, value_enum, default_value_t = PipelineArg::Both)]
    pub pipeline: PipelineArg,
    /// Gauge policy identifier.
    #[arg(long, default_value = "paper-default")]
    pub gauge: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
}

#[derive(Subcommand)]
pub enum OracleCommand {
    /// Monte-Carlo Haar average of exp(tr(g X g^-1 Lambda)).
    Mc(McArgs),
    /// Exact beta = 2 value by permutation sum and determinant.
    Beta2(Beta2Args),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    #[value(name = "o", alias = "orthogonal")]
    Orthogonal,
    #[value(name = "u", alias = "unitary")]
    Unitary,
    #[value(name = "sp", alias = "symplectic")]
    Symplectic,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::Orthogonal => Group::Orthogonal,
            GroupArg::Unitary => Group::Unitary,
            GroupArg::Symplectic => Group::Symplectic,
        }
    }
}

#[derive(Args)]
pub struct McArgs {
    #[arg(long, value_enum)]
    pub group: GroupArg,
    /// Spectrum dimension; must match the lengths of --x and --lambda.
    #[arg(long)]
    pub k: usize,
    #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
    pub x: Vec<f64>,
    #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
    pub lambda: Vec<f64>,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args)]
pub struct Beta2Args {
    #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
    pub x: Vec<f64>,
    #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
    pub lambda: Vec<f64>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Restrict to the named checks (repeatable).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Spectrum dimensions to verify at.
    #[arg(long, value_delimiter = ',', default_values_t = vec![4usize, 5, 6])]
    pub k: Vec<usize>,
    /// Corrupt one coefficient first; the suite must then fail.
    #[arg(long)]
    pub inject_fault: bool,
}

/// Parses "n" or "n/d" with 64-bit parts into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let n: i64 = num.trim().parse().map_err(|_| format!("malformed rational '{}'", s))?;
    let d: i64 = den.trim().parse().map_err(|_| format!("malformed rational '{}'", s))?;
    if d == 0 {
        return Err(format!("zero denominator in '{}'", s));
    }
    Ok(frac(n, d))
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn verify(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_VERIFY, message: message.into() }
    }
}

impl From<WkbError> for Failure {
    fn from(e: WkbError) -> Failure {
        let code = match e {
            WkbError::Inconsistent { .. } => EXIT_VERIFY,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::JackTable(args) => cmd_jack_table(&args),
        Command::CoeffTable(args) => cmd_coeff_table(&args),
        Command::Oracle(OracleCommand::Mc(args)) => cmd_mc(&args),
        Command::Oracle(OracleCommand::Beta2(args)) => cmd_beta2(&args),
        Command::Verify(args) => cmd_verify(&args),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn rs(r: &Rat) -> String {
    r.to_string()
}

fn partition_json(p: &[u32]) -> Value {
    Value::Array(p.iter().map(|&n| json!(n)).collect())
}

/// The box contents of a partition determine the candidate roots of its
/// principal specialization: box (row i, column j) contributes
/// k + alpha (j - 1) - (i - 1).
fn specialization_roots(p: &[u32], alpha: &Rat) -> Vec<Rat> {
    let mut out = Vec::new();
    for (i, &row) in p.iter().enumerate() {
        for j in 0..row as usize {
            out.push(rat(i as i64) - alpha.clone() * rat(j as i64));
        }
    }
    out
}

fn dimension_factors_json(dim: &UPoly<Rat>, p: &[u32], alpha: &Rat) -> Value {
    let candidates = specialization_roots(p, alpha);
    let (leading, factors, remainder) = linear_factors(dim, &candidates);
    let mut roots = Vec::new();
    for f in &factors {
        for _ in 0..f.multiplicity {
            roots.push(json!(rs(&f.root)));
        }
    }
    let rem: Vec<Value> = (0..=remainder.degree().unwrap_or(0))
        .map(|n| json!(rs(&remainder.coeff(n))))
        .collect();
    json!({ "leading": rs(&leading), "roots": roots, "remainder_coeffs": rem })
}

fn cmd_jack_table(args: &JackTableArgs) -> Result<(), Failure> {
    if args.order == 0 || args.order > 6 {
        return Err(Failure::usage("--order must be between 1 and 6"));
    }
    let cache_key = format!("jack-table-o{}-a{}.json", args.order, rs(&args.alpha));
    if !args.check {
        if let Some(hit) = cache::load(&cache_key) {
            println!("{}", hit.trim_end());
            return Ok(());
        }
    }

    let mut rows = Vec::new();
    for w in 1..=args.order {
        let table = jack_table(w, &args.alpha)
            .map_err(|e| Failure::usage(e.to_string()))?;
        for (i, p) in table.parts.iter().enumerate() {
            let coeffs: Vec<Value> = table
                .power_sum_coeffs(p)
                .expect("partition from its own table")
                .iter()
                .map(|(q, c)| json!({ "partition": partition_json(q), "coeff": rs(c) }))
                .collect();
            rows.push(json!({
                "weight": w,
                "partition": partition_json(p),
                "power_sum_coeffs": coeffs,
                "character": rs(&table.character[i]),
                "dimension_factors": dimension_factors_json(&table.dimension[i], p, &args.alpha),
            }));
        }
    }
    let doc = json!({ "order": args.order, "alpha": rs(&args.alpha), "rows": rows });
    let text = serde_json::to_string_pretty(&doc).expect("static document");

    if args.check {
        check_jack_tables(args.order, &args.alpha)?;
    }
    cache::store(&cache_key, &text);
    println!("{}", text);
    Ok(())
}

fn check_jack_tables(order: u32, alpha: &Rat) -> Result<(), Failure> {
    for q in 1..=order {
        for k in [5i64, 8] {
            let ok = verify_sum_rule(q, alpha, &rat(k))
                .map_err(|e| Failure::usage(e.to_string()))?;
            if !ok {
                return Err(Failure::verify(format!("sum rule fails at weight {}, k={}", q, k)));
            }
        }
        let ok = verify_sum_rule_symbolic(q).map_err(|e| Failure::usage(e.to_string()))?;
        if !ok {
            return Err(Failure::verify(format!("symbolic sum rule fails at weight {}", q)));
        }
        let table = jack_table(q, alpha).map_err(|e| Failure::usage(e.to_string()))?;
        for (i, p) in table.parts.iter().enumerate() {
            let candidates = specialization_roots(p, alpha);
            let (_, _, remainder) = linear_factors(&table.dimension[i], &candidates);
            if remainder.degree() != Some(0) {
                return Err(Failure::verify(format!(
                    "specialization of {:?} does not factor over its box contents",
                    p
                )));
            }
        }
    }
    Ok(())
}

#[derive(Debug)]
struct ResolvedParams {
    alpha: Rat,
    beta: Rat,
}

fn resolve_params(alpha: &Option<Rat>, beta: &Option<Rat>) -> Result<ResolvedParams, Failure> {
    match (alpha, beta) {
        (Some(a), None) => {
            if a.is_zero() {
                return Err(Failure::usage("alpha = 0 is outside the series domain"));
            }
            Ok(ResolvedParams { alpha: a.clone(), beta: beta_of_alpha(a) })
        }
        (None, Some(b)) => {
            let a = duality_map(b)?;
            Ok(ResolvedParams { alpha: a, beta: b.clone() })
        }
        _ => Err(Failure::usage("give exactly one of --alpha and --beta")),
    }
}

fn table_rows(table: &CoeffTable) -> Vec<(u32, String, TauGraph, Rat)> {
    let mut rows: Vec<(u32, String, TauGraph, Rat)> = table
        .entries
        .iter()
        .map(|(name, c)| {
            let g = graph_by_name(name).expect("table names are catalogued");
            (g.order(), name.clone(), g, c.clone())
        })
        .collect();
    rows.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    rows
}

fn edge_list_json(g: &TauGraph) -> Value {
    Value::Array(
        g.edges
            .iter()
            .map(|e| json!([e.a, e.b, e.mult]))
            .collect(),
    )
}

fn coeff_table_json(table: &CoeffTable, pipeline_label: &str) -> Value {
    let rows: Vec<Value> = table_rows(table)
        .into_iter()
        .map(|(order, name, g, c)| {
            let leading = largek_leading(&g, table.k, &table.alpha)
                .map(|l| json!(rs(&l)))
                .unwrap_or(Value::Null);
            json!({
                "graph_name": name,
                "edge_list": edge_list_json(&g),
                "order": order,
                "coefficient": rs(&c),
                "leading_largek": leading,
            })
        })
        .collect();
    json!({
        "k": table.k,
        "alpha": rs(&table.alpha),
        "beta": rs(&table.beta),
        "order": table.order,
        "gauge": table.gauge.identifier(),
        "pipeline": pipeline_label,
        "rows": rows,
    })
}

fn coeff_table_csv(table: &CoeffTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["graph_name", "edge_list", "coefficient", "leading_largek"])
        .expect("in-memory write");
    for (_, name, g, c) in table_rows(table) {
        let leading = largek_leading(&g, table.k, &table.alpha)
            .map(|l| rs(&l))
            .unwrap_or_default();
        w.write_record([
            name.as_str(),
            &edge_list_json(&g).to_string(),
            &rs(&c),
            &leading,
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf8 names")
}

fn cmd_coeff_table(args: &CoeffTableArgs) -> Result<(), Failure> {
    if args.gauge != GaugePolicy::PaperDefault.identifier() {
        return Err(Failure::usage(format!("unknown gauge policy '{}'", args.gauge)));
    }
    let params = resolve_params(&args.alpha, &args.beta)?;
    let mut engine = Engine::new();
    let gauge = GaugePolicy::PaperDefault;

    let (table, label) = match args.pipeline {
        PipelineArg::Jack => (
            engine.tau_coefficients(args.k, &params.alpha, args.order, gauge)?,
            Pipeline::JackDuality.to_string(),
        ),
        PipelineArg::Residual => (
            engine.residual_coefficients(args.k, &params.beta, args.order, gauge)?,
            Pipeline::Residual.to_string(),
        ),
        PipelineArg::Both => {
            let jack = engine.tau_coefficients(args.k, &params.alpha, args.order, gauge)?;
            let residual =
                engine.residual_coefficients(args.k, &params.beta, args.order, gauge)?;
            if jack.entries != residual.entries {
                return Err(Failure::verify(format!(
                    "pipelines disagree at k={}, alpha={}",
                    args.k,
                    rs(&params.alpha)
                )));
            }
            (jack, "both".to_string())
        }
    };

    match args.format {
        FormatArg::Json => {
            let doc = coeff_table_json(&table, &label);
            println!("{}", serde_json::to_string_pretty(&doc).expect("static document"));
        }
        FormatArg::Csv => print!("{}", coeff_table_csv(&table)),
    }
    Ok(())
}

fn cmd_mc(args: &McArgs) -> Result<(), Failure> {
    if args.x.len() != args.k || args.lambda.len() != args.k {
        return Err(Failure::usage(format!(
            "--k {} does not match {} x values and {} lambda values",
            args.k,
            args.x.len(),
            args.lambda.len()
        )));
    }
    let s = SpectrumPair::new(args.x.clone(), args.lambda.clone())
        .map_err(|e| Failure::usage(e.to_string()))?;
    let est = mc_haar_integral(&s, args.group.into(), args.samples, args.seed);
    let doc = json!({
        "mean": est.mean,
        "stderr": est.stderr,
        "samples": est.samples,
        "seed": est.seed,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("static document"));
    Ok(())
}

fn cmd_beta2(args: &Beta2Args) -> Result<(), Failure> {
    let s = SpectrumPair::new(args.x.clone(), args.lambda.clone())
        .map_err(|e| Failure::usage(e.to_string()))?;
    let value = hciz_beta2_exact(&s).map_err(|e| Failure::usage(e.to_string()))?;
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({ "value": value })).expect("static document")
    );
    Ok(())
}

const CHECK_NAMES: [&str; 6] =
    ["identities", "residual-equations", "sum-rule", "calogero", "phi-series", "perm-sum"];

struct VerifyReport {
    failed: Vec<String>,
}

impl VerifyReport {
    fn record(&mut self, name: &str, detail: &str, ok: bool) {
        if ok {
            println!("check {:<20} {:<24} ok", name, detail);
        } else {
            println!("check {:<20} {:<24} FAIL", name, detail);
            self.failed.push(format!("{} ({})", name, detail));
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    for name in &args.only {
        if !CHECK_NAMES.contains(&name.as_str()) {
            return Err(Failure::usage(format!(
                "unknown check '{}'; available: {}",
                name,
                CHECK_NAMES.join(", ")
            )));
        }
    }
    let wants = |name: &str| args.only.is_empty() || args.only.iter().any(|n| n == name);
    let mut engine = Engine::new();
    let mut report = VerifyReport { failed: Vec::new() };

    if wants("identities") {
        for &k in &args.k {
            let mut all = true;
            for (name, support) in identity_catalogue() {
                let vars = Vars::new(k);
                let mut acc = MPoly::zero(vars.nvars());
                for (coeff, graph) in &support {
                    let g = graph_by_name(graph).expect("catalogued name");
                    acc = acc + g.orbit_sum(k).scale(&coeff.eval(k as i64));
                }
                if !acc.is_zero() {
                    report.record("identities", &format!("{} k={}", name, k), false);
                    all = false;
                }
            }
            if all {
                report.record("identities", &format!("k={}", k), true);
            }
        }
    }

    if wants("residual-equations") {
        for &k in &args.k {
            let order = 4.min(k as u32 - 1);
            let mut table =
                engine.tau_coefficients(k, &rat(-1), order, GaugePolicy::PaperDefault)?;
            if args.inject_fault {
                let entry = table.entries.get_mut("\u{39b}").expect("order >= 2 table");
                *entry += rat(1);
            }
            let mut ok = true;
            for check in verify_residual_equations(&table) {
                if let CheckStatus::Violated(_) = check.status {
                    report.record(
                        "residual-equations",
                        &format!("{} k={}", check.label, k),
                        false,
                    );
                    ok = false;
                }
            }
            if ok {
                report.record("residual-equations", &format!("k={}", k), true);
            }
        }
    }

    if wants("sum-rule") {
        for q in 1..=4 {
            let mut ok = verify_sum_rule_symbolic(q).unwrap_or(false);
            for alpha in [rat(2), frac(1, 2), rat(3)] {
                for &k in &args.k {
                    ok &= verify_sum_rule(q, &alpha, &rat(k as i64)).unwrap_or(false);
                }
            }
            report.record("sum-rule", &format!("weight {}", q), ok);
        }
    }

    if wants("calogero") {
        let table = engine.tau_coefficients(3, &rat(-1), 3, GaugePolicy::PaperDefault)?;
        let residual = calogero_residual(3, &rat(4), &table, 8);
        report.record("calogero", "k=3 beta=4 terminates", residual.is_zero());

        let trivial = CoeffTable {
            k: 2,
            alpha: rat(1),
            beta: rat(2),
            order: 0,
            pipeline: Pipeline::JackDuality,
            gauge: GaugePolicy::PaperDefault,
            entries: Default::default(),
        };
        let residual = calogero_residual(2, &rat(2), &trivial, 6);
        report.record("calogero", "k=2 beta=2 trivial", residual.is_zero());
    }

    if wants("phi-series") {
        for &k in &args.k {
            let kr = rat(k as i64);
            let terms = phi_series_beta4(&mut engine, k, 3)?;
            let mut ok = true;
            let km1 = kr.clone() - rat(1);
            let km2 = kr.clone() - rat(2);
            for t in &terms {
                let want = if t.lambda == vec![2] && t.mu == vec![2] {
                    -rat(1) / (rat(2) * rat_pow(&km1, 2))
                } else if t.lambda == vec![3] && t.mu == vec![3] {
                    kr.clone() / (rat(3) * rat_pow(&km1, 2) * rat_pow(&km2, 2))
                } else {
                    continue;
                };
                ok &= t.coeff == want;
            }
            ok &= terms.iter().any(|t| t.lambda == vec![2]);
            report.record("phi-series", &format!("k={}", k), ok);
        }
    }

    if wants("perm-sum") {
        let vars = Vars::new(3);
        let s2s2 = vars.centered_power_sum(2, true) * vars.centered_power_sum(2, false);
        let s3s3 = vars.centered_power_sum(3, true) * vars.centered_power_sum(3, false);
        let cases: [(u32, hiz_wkb_core::polyring::MPolyQ); 6] = [
            (1, MPoly::zero(vars.nvars())),
            (2, MPoly::zero(vars.nvars())),
            (3, MPoly::constant(vars.nvars(), rat(81))),
            (4, MPoly::zero(vars.nvars())),
            (5, s2s2.scale(&frac(3645, 4))),
            (6, s3s3.scale(&rat(81 * 81))),
        ];
        let mut ok = true;
        for (p, want) in cases {
            ok &= perm_sum_power(p).map(|got| got == want).unwrap_or(false);
        }
        report.record("perm-sum", "k=3 p=1..6", ok);
    }

    if report.failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::verify(format!("failing checks: {}", report.failed.join(", "))))
    }
}
