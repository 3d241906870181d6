//! `subsysforge`: compute subsystem code parameters, apply propagation
//! rules, check the catalog, list families, search and close tuple sets.
//!
//! Exit codes: 0 success, 1 I/O or usage, 2 parse error, 3 enumeration cap
//! exceeded, 4 rule precondition failed, 5 verification failed.

mod config;
mod json;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use subsysforge::catalog::families::{family_tuples, Family, FamilySpec};
use subsysforge::catalog::search::{bounded_search, SearchOptions};
use subsysforge::catalog::{self, catalog_verify, CatalogEntry};
use subsysforge::format::{CodeFile, FileLayout};
use subsysforge::params::Step;
use subsysforge::propagation::{self as prop, PasteVariant, TradeDirection};
use subsysforge::subsystem_core::DistanceStatus;
use subsysforge::{DistanceMode, EnumConfig, Error, FieldSpec, ParamTuple, SubsystemCode};

#[derive(Parser)]
#[command(name = "subsysforge", version, about = "Subsystem code parameters and propagation rules")]
struct Cli {
    /// Maximum number of vectors one enumeration may visit.
    #[arg(long, global = true)]
    cap: Option<u128>,
    /// Worker threads for enumeration and search.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// key=value file with `cap` and `workers`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parameters of the subsystem code of a gauge code file.
    Params {
        /// A file path or `catalog:<name>`.
        input: String,
        #[arg(long)]
        no_distance: bool,
    },
    /// Apply a propagation rule to code files or tuple literals.
    Apply(ApplyArgs),
    /// Recompute the catalog codes and compare with the claimed values.
    VerifyCatalog {
        #[arg(long)]
        entry: Option<String>,
    },
    /// Print an embedded catalog file, or list them.
    Catalog { name: Option<String> },
    /// Tuples of a code family.
    Families(FamilyArgs),
    /// Look for gauge codes with given parameters.
    Search(SearchArgs),
    /// Close a tuple set under the parameter rules.
    Closure {
        #[arg(long = "seed", required = true)]
        seeds: Vec<String>,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleName {
    Extend,
    Puncture,
    Shorten,
    Reduce,
    Trade,
    Sum,
    Uuv,
    Descend,
    Ascend,
    Shrink,
    FqShrinkR,
    Stabilize,
    Paste,
    ReduceLength,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    KToR,
    RToK,
}

#[derive(Args)]
struct ApplyArgs {
    rule: RuleName,
    /// Code files (`catalog:<name>` for embedded ones) or tuple literals.
    #[arg(required = true)]
    inputs: Vec<String>,
    /// Qudit to puncture, counted from 1.
    #[arg(long)]
    coordinate: Option<usize>,
    #[arg(long)]
    dir: Option<Dir>,
    /// Paste variant: binary-full or general-k2.
    #[arg(long)]
    variant: Option<String>,
    /// Gauge dimension for trade and paste on tuples.
    #[arg(long = "r")]
    r: Option<i64>,
    /// Extension degree for ascend, length reduction for reduce-length.
    #[arg(long)]
    m: Option<u32>,
    /// Target field order for descend.
    #[arg(long)]
    subfield: Option<u32>,
    /// Where to write the constructed code.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FamilyArgs {
    family: String,
    #[arg(long)]
    q: u32,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    delta: Option<u32>,
    #[arg(long)]
    nu: Option<u32>,
    #[arg(long)]
    alpha: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    power: Option<u32>,
    /// A value or an inclusive range `a..b`.
    #[arg(long = "r", default_value = "0")]
    r: String,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    target: String,
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    max_found: usize,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. }
            | Error::ZeroGaugeCode
            | Error::UnsupportedField(_)
            | Error::ReducibleModulus(..)
            | Error::ElementOutOfRange { .. } => 2,
            Error::CapExceeded { .. } | Error::DistanceUnknown(_) => 3,
            Error::Verification(_) => 5,
            _ => 4,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 1, msg: msg.into() }
}

fn parse_failure(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

type Out = Result<(), Failure>;

struct Ctx {
    cfg: EnumConfig,
    json: bool,
}

impl Ctx {
    fn emit(&self, text: &str, value: Value) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
        } else {
            println!("{text}");
        }
    }
}

fn read_input(input: &str) -> Result<CodeFile, Failure> {
    let text = match input.strip_prefix("catalog:") {
        Some(name) => {
            let file = match name.parse::<CatalogEntry>() {
                Ok(e) => e.gauge_file(),
                Err(_) => name.to_string(),
            };
            catalog::data_file(&file).ok_or_else(|| usage(format!("no catalog file {name:?}")))?.to_string()
        }
        None => fs::read_to_string(input).map_err(|e| usage(format!("{input}: {e}")))?,
    };
    CodeFile::parse(&text).map_err(|e| parse_failure(format!("{input}: {e}")))
}

fn load_code(input: &str, mode: DistanceMode) -> Result<(SubsystemCode, FileLayout), Failure> {
    let file = read_input(input)?;
    let layout = file.layout;
    let code = SubsystemCode::from_gauge_code(file.to_code()?, mode)?;
    if let DistanceStatus::CapExceeded { .. } = code.status() {
        return Err(cap_failure(&code));
    }
    Ok((code, layout))
}

fn cap_failure(code: &SubsystemCode) -> Failure {
    match code.status() {
        DistanceStatus::CapExceeded { log_p, cap } => Failure {
            code: 3,
            msg: format!(
                "{}: enumeration cap exceeded: {}^{log_p} vectors required, cap is {cap}",
                code.params(),
                code.field().p()
            ),
        },
        _ => usage("distance unknown"),
    }
}

fn is_tuple(s: &str) -> bool {
    let s = s.trim_start();
    s.starts_with("[[") || s.starts_with("((")
}

fn parse_tuple(s: &str) -> Result<ParamTuple, Failure> {
    s.parse::<ParamTuple>().map_err(|e| parse_failure(format!("{s:?}: {e}")))
}

fn provenance_text(steps: &[Step]) -> String {
    if steps.is_empty() {
        return "seed".to_string();
    }
    steps
        .iter()
        .map(|s| if s.from.is_empty() { s.rule.to_string() } else { format!("{}({})", s.rule, s.from.join(", ")) })
        .collect::<Vec<_>>()
        .join(" -> ")
}

fn cmd_params(ctx: &Ctx, input: &str, no_distance: bool) -> Out {
    let mode = if no_distance { DistanceMode::Skip } else { DistanceMode::Compute(ctx.cfg) };
    let file = read_input(input)?;
    let code = SubsystemCode::from_gauge_code(file.to_code()?, mode)?;
    let p = code.params();
    let text = format!(
        "{}\nn={} k={} r={} d={} pure_to={} linear={}",
        p.describe(),
        p.n,
        p.k,
        p.r,
        p.d,
        p.pure_to(),
        p.linear
    );
    let capped = matches!(code.status(), DistanceStatus::CapExceeded { .. });
    let mut value = json::tuple(p);
    value["distance"] = json!(match code.status() {
        DistanceStatus::Computed => "computed",
        DistanceStatus::Skipped => "skipped",
        DistanceStatus::CapExceeded { .. } => "cap-exceeded",
    });
    ctx.emit(&text, value);
    if capped {
        return Err(cap_failure(&code));
    }
    Ok(())
}

fn emit_tuples(ctx: &Ctx, tuples: &[ParamTuple]) {
    let text = tuples
        .iter()
        .map(|t| format!("{}  <- {}", t.describe(), provenance_text(&t.provenance)))
        .collect::<Vec<_>>()
        .join("\n");
    ctx.emit(&text, Value::Array(tuples.iter().map(json::tuple).collect()));
}

fn parameter_rule(args: &ApplyArgs, inputs: &[ParamTuple]) -> Result<Vec<ParamTuple>, Failure> {
    let one = || -> Result<&ParamTuple, Failure> {
        match inputs {
            [t] => Ok(t),
            _ => Err(usage("this rule takes exactly one input")),
        }
    };
    Ok(match args.rule {
        RuleName::Extend => vec![prop::extend_param(one()?)?],
        RuleName::Shorten | RuleName::Puncture => vec![prop::shorten_param(one()?)?],
        RuleName::Reduce => vec![prop::reduce_dimension_param(one()?)?],
        RuleName::Shrink => vec![prop::shrink_k_param(one()?)?],
        RuleName::FqShrinkR => vec![prop::fq_shrink_r_param(one()?)?],
        RuleName::Stabilize => vec![prop::stabilize_param(one()?)?],
        RuleName::Trade => {
            let t = one()?;
            match (args.dir, args.r) {
                (Some(Dir::RToK), _) => vec![prop::fq_shrink_r_param(t)?],
                (_, Some(r)) => vec![prop::generic_trade_param(t, r)?],
                (_, None) => prop::generic_trades(t),
            }
        }
        RuleName::Paste => {
            let [a, b] = inputs else {
                return Err(usage("paste takes two inputs"));
            };
            let variant: PasteVariant = args.variant.as_deref().unwrap_or("general-k2").parse().map_err(usage)?;
            vec![prop::paste_param(a, b, variant, args.r.unwrap_or(0))?]
        }
        RuleName::Ascend => {
            let m = args.m.ok_or_else(|| usage("ascend needs --m"))?;
            vec![prop::field_ascent_param(one()?, m)?]
        }
        RuleName::Sum | RuleName::Uuv | RuleName::Descend | RuleName::ReduceLength => {
            return Err(usage("this rule needs code files"));
        }
    })
}

fn write_code(ctx: &Ctx, code: &SubsystemCode, layout: FileLayout, out: Option<&PathBuf>) -> Result<String, Failure> {
    let mut file = CodeFile::from_code(code.gauge());
    if layout == FileLayout::Pauli {
        file = file.into_pauli()?;
    }
    let text = file.emit();
    if let Some(path) = out {
        fs::write(path, &text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        if !ctx.json {
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(text)
}

fn cmd_apply(ctx: &Ctx, args: &ApplyArgs) -> Out {
    let parameter_only = matches!(
        args.rule,
        RuleName::Shorten | RuleName::Shrink | RuleName::FqShrinkR | RuleName::Stabilize | RuleName::Paste | RuleName::Ascend
    );
    if args.inputs.iter().all(|s| is_tuple(s)) || parameter_only {
        let mut tuples = Vec::new();
        for s in &args.inputs {
            if is_tuple(s) {
                tuples.push(parse_tuple(s)?);
            } else {
                tuples.push(load_code(s, DistanceMode::Compute(ctx.cfg))?.0.params().clone());
            }
        }
        let out = parameter_rule(args, &tuples)?;
        emit_tuples(ctx, &out);
        return Ok(());
    }
    let mode = DistanceMode::Compute(ctx.cfg);
    let mut codes = Vec::new();
    for s in &args.inputs {
        if is_tuple(s) {
            return Err(usage(format!("{s:?}: this rule needs code files")));
        }
        codes.push(load_code(s, mode)?);
    }
    let cfg = &ctx.cfg;
    let one = || match codes.as_slice() {
        [c] => Ok(&c.0),
        _ => Err(usage("this rule takes exactly one code")),
    };
    let two = || match codes.as_slice() {
        [a, b] => Ok((&a.0, &b.0)),
        _ => Err(usage("this rule takes two codes")),
    };
    let derived = match args.rule {
        RuleName::Extend => prop::extend_by_one(one()?, cfg)?,
        RuleName::Puncture => {
            let c = args.coordinate.unwrap_or(1);
            if c == 0 {
                return Err(usage("--coordinate counts from 1"));
            }
            prop::puncture_one(one()?, c - 1, cfg)?
        }
        RuleName::Reduce => prop::reduce_dimension(one()?, cfg)?,
        RuleName::Trade => {
            let dir = match args.dir.ok_or_else(|| usage("trade needs --dir k-to-r or r-to-k"))? {
                Dir::KToR => TradeDirection::KToR,
                Dir::RToK => TradeDirection::RToK,
            };
            prop::trade_gauge(one()?, dir, cfg)?
        }
        RuleName::Sum => {
            let (a, b) = two()?;
            prop::combine_direct_sum(a, b, cfg)?
        }
        RuleName::Uuv => {
            let (a, b) = two()?;
            prop::combine_uuv(a, b, cfg)?
        }
        RuleName::Descend => {
            let q = args.subfield.ok_or_else(|| usage("descend needs --subfield"))?;
            let sub = FieldSpec::new(q)?;
            prop::field_descent(one()?, &sub, cfg)?
        }
        RuleName::ReduceLength => {
            let m = args.m.ok_or_else(|| usage("reduce-length needs --m"))?;
            let out = prop::reduce_length_param(one()?, m as usize, cfg)?;
            let text = out
                .iter()
                .map(|t| format!("{t}  <- {}", provenance_text(&t.provenance)))
                .collect::<Vec<_>>()
                .join("\n");
            ctx.emit(&text, Value::Array(out.iter().map(json::bound_tuple).collect()));
            return Ok(());
        }
        _ => unreachable!("parameter-only rules are handled above"),
    };
    let layout = codes[0].1;
    let file = write_code(ctx, &derived.code, layout, args.out.as_ref())?;
    let a = &derived.application;
    let mut text = a.report();
    for n in &a.notes {
        text.push_str(&format!("\nnote: {n}"));
    }
    if args.out.is_none() {
        text.push('\n');
        text.push_str(file.trim_end());
    }
    let mut value = json::application(a);
    value["code"] = json!(file);
    ctx.emit(&text, value);
    if matches!(derived.code.status(), DistanceStatus::CapExceeded { .. }) {
        return Err(cap_failure(&derived.code));
    }
    Ok(())
}

fn cmd_verify_catalog(ctx: &Ctx, entry: Option<&str>) -> Out {
    let entries = match entry {
        Some(e) => vec![e.parse::<CatalogEntry>().map_err(usage)?],
        None => CatalogEntry::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for e in entries {
        reports.push(catalog_verify(e, &ctx.cfg)?);
    }
    let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    ctx.emit(&text, Value::Array(reports.iter().map(json::catalog).collect()));
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.entry.name()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure { code: 5, msg: format!("catalog claims not reproduced: {}", failed.join(", ")) })
    }
}

fn cmd_catalog(ctx: &Ctx, name: Option<&str>) -> Out {
    match name {
        None => {
            let names: Vec<&str> = catalog::DATA_FILES.iter().map(|(n, _)| *n).collect();
            ctx.emit(&names.join("\n"), json!(names));
        }
        Some(n) => {
            let text = catalog::data_file(n).ok_or_else(|| usage(format!("no catalog file {n:?}")))?;
            ctx.emit(text.trim_end(), json!({ "name": n, "text": text }));
        }
    }
    Ok(())
}

fn parse_range(s: &str) -> Result<Vec<i64>, Failure> {
    let bad = || usage(format!("bad --r value {s:?}; expected N or A..B"));
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((num(a)?..=num(b)?).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

fn cmd_families(ctx: &Ctx, a: &FamilyArgs) -> Out {
    let family: Family = a.family.parse().map_err(usage)?;
    let spec = FamilySpec {
        n: a.n,
        m: a.m,
        d: a.d,
        delta: a.delta,
        nu: a.nu,
        alpha: a.alpha,
        s: a.s,
        power: a.power,
        ..FamilySpec::new(family, a.q)
    };
    let out = family_tuples(&spec, parse_range(&a.r)?)?;
    emit_tuples(ctx, &out);
    Ok(())
}

fn cmd_search(ctx: &Ctx, a: &SearchArgs) -> Out {
    let target = parse_tuple(&a.target)?;
    let opts = SearchOptions { budget: a.budget, seed: a.seed, max_found: a.max_found };
    let report = bounded_search(target.q, target.n, &target, &opts, &ctx.cfg)?;
    let mut value = json::search(&report);
    value["codes"] = report
        .found
        .iter()
        .map(|c| CodeFile::from_code(c.gauge()).emit())
        .collect();
    ctx.emit(&report.to_string(), value);
    Ok(())
}

fn cmd_closure(ctx: &Ctx, seeds: &[String], depth: usize) -> Out {
    let seeds = seeds.iter().map(|s| parse_tuple(s)).collect::<Result<Vec<_>, _>>()?;
    emit_tuples(ctx, &prop::rule_closure(&seeds, depth));
    Ok(())
}

fn run(cli: Cli) -> Out {
    let file = match &cli.config {
        Some(p) => config::FileConfig::load(p).map_err(usage)?,
        None => config::FileConfig::default(),
    };
    let cfg = config::resolve(cli.cap, cli.workers, std::env::var(config::CAP_ENV).ok(), &file).map_err(usage)?;
    let ctx = Ctx { cfg, json: cli.json };
    match &cli.cmd {
        Cmd::Params { input, no_distance } => cmd_params(&ctx, input, *no_distance),
        Cmd::Apply(args) => cmd_apply(&ctx, args),
        Cmd::VerifyCatalog { entry } => cmd_verify_catalog(&ctx, entry.as_deref()),
        Cmd::Catalog { name } => cmd_catalog(&ctx, name.as_deref()),
        Cmd::Families(a) => cmd_families(&ctx, a),
        Cmd::Search(a) => cmd_search(&ctx, a),
        Cmd::Closure { seeds, depth } => cmd_closure(&ctx, seeds, *depth),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
