//! Command-line front end: deterministic table and JSON emitters over the
//! library, plus the batch verification suites.
//!
//! Exit codes: 0 success, 1 assertion failure in `verify`, 2 usage error,
//! 3 resource-guard violation.

pub mod verify;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::euler::{build_ledger, chi_int};
use crate::graded::GradedDim;
use crate::manifolds::{builtin, builtin_models, ManifoldModel};
use crate::partitions::Partition;
use crate::ranges::{auxiliary_ranges, f_nor, f_or, simplified_range, AuxQuery, RangeResult};
use crate::spectral::{build_e1, les_w_bounds, E1Page, TwistMode};
use crate::sympower::{stabilization_operator, sym_betti, transfer_operator};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "symstrat",
    version,
    about = "Stratified symmetric powers: collapse posets, stratum homology, spectral pages, Euler ledgers and stability ranges"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate stability range formulas.
    Ranges(RangesArgs),
    /// Print the collapse poset of a partition, graded by depth.
    Collapses(CollapsesArgs),
    /// Homology and compactly supported cohomology of one stratum.
    Strata(StrataArgs),
    /// Symmetric-power Betti tables and operator matrices.
    Sym(SymArgs),
    /// E1 pages of the discriminant spectral sequence, with complement bounds.
    E1(E1Args),
    /// Compactly supported Euler-characteristic ledger.
    Chi(ChiArgs),
    /// Run the invariant verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args)]
struct RangesArgs {
    /// Which labeled range to evaluate.
    #[arg(long, value_enum, default_value_t = QueryKind::Full)]
    query: QueryKind,
    /// Built-in model name or path to a model JSON file.
    #[arg(long)]
    manifold: Option<String>,
    /// Partition as comma-separated parts, e.g. "2,1".
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    j: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    i: Option<u32>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    c: Option<u32>,
    /// Case selector for the per-column thresholds (1, 2 or 3).
    #[arg(long)]
    case: Option<u8>,
    /// CSV file of parameter rows; see the README for the column set.
    #[arg(long)]
    batch: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QueryKind {
    /// Full range for the model's orientation class.
    Full,
    Simplified,
    StratumStab,
    StratumColumn,
    SymPower,
    IntegralSurface,
    BoundedSym,
}

#[derive(Args)]
struct CollapsesArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct StrataArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    d: u32,
    /// Override the guard on the number of parts (default 8).
    #[arg(long, default_value_t = 8)]
    max_n: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct SymArgs {
    /// Betti profile as comma-separated dimensions, e.g. "1,0,1".
    #[arg(long)]
    betti: Option<String>,
    /// Take the profile from a built-in model instead.
    #[arg(long)]
    manifold: Option<String>,
    /// Emit the Betti table for k = 0..=k_max.
    #[arg(long)]
    k_max: Option<u32>,
    /// Emit an operator matrix at weight k instead of a table.
    #[arg(long, value_enum)]
    operator: Option<OperatorKind>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OperatorKind {
    Stabilization,
    Transfer,
}

#[derive(Args)]
struct E1Args {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    j: usize,
    #[arg(long)]
    d: u32,
    /// Also extract the complement bounds through the long exact sequence.
    #[arg(long, default_value_t = false)]
    complement: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct ChiArgs {
    #[arg(long)]
    lambda: String,
    #[arg(long, default_value_t = 0)]
    j: usize,
    /// Compactly supported Euler characteristic of the base model.
    #[arg(long)]
    chi: i64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// "all" or one module name.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 7)]
    max_n: u32,
    #[arg(long, default_value_t = 8)]
    max_k: u32,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(Error::ResourceBound { .. }) => 3,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Ranges(args) => cmd_ranges(args),
        Command::Collapses(args) => cmd_collapses(args),
        Command::Strata(args) => cmd_strata(args),
        Command::Sym(args) => cmd_sym(args),
        Command::E1(args) => cmd_e1(args),
        Command::Chi(args) => cmd_chi(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn resolve_manifold(selector: &str) -> Result<ManifoldModel> {
    if let Some(m) = builtin(selector) {
        return Ok(m);
    }
    if std::path::Path::new(selector).exists() {
        let text = std::fs::read_to_string(selector)
            .map_err(|e| Error::Invalid(format!("cannot read '{selector}': {e}")))?;
        return crate::manifolds::from_json(&text);
    }
    let names: Vec<String> = builtin_models().iter().map(|m| m.name.clone()).collect();
    Err(Error::Invalid(format!(
        "unknown manifold '{selector}'; built-ins: {}",
        names.join(", ")
    )))
}

fn require<T: Copy>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| Error::Invalid(format!("missing required flag --{flag}")))
}

// -------------------------------------------------------------------- ranges

fn range_query_from_args(args: &RangesArgs) -> Result<RangeResult> {
    match args.query {
        QueryKind::Full => {
            let m = resolve_manifold(require(args.manifold.as_deref(), "manifold")?)?;
            let lambda = Partition::parse(require(args.lambda.as_deref(), "lambda")?)?;
            let j = require(args.j, "j")?;
            if m.orientable {
                f_or(&m, &lambda, j)
            } else {
                f_nor(&m, &lambda, j)
            }
        }
        QueryKind::Simplified => {
            let m = resolve_manifold(require(args.manifold.as_deref(), "manifold")?)?;
            simplified_range(&m, require(args.j, "j")?)
        }
        QueryKind::StratumStab => auxiliary_ranges(&AuxQuery::StratumStab {
            i: require(args.i, "i")?,
            d: require(args.d, "d")?,
            a: args.a,
        }),
        QueryKind::StratumColumn => auxiliary_ranges(&AuxQuery::StratumColumn {
            p: require(args.p, "p")?,
            j: require(args.j, "j")?,
            r: require(args.r, "r")?,
            n: require(args.n, "n")?,
            case: require(args.case, "case")?,
            a: args.a,
        }),
        QueryKind::SymPower => auxiliary_ranges(&AuxQuery::SymPower {
            n: require(args.n, "n")?,
            k: require(args.k, "k")?,
            j: require(args.j, "j")?,
            a: args.a,
        }),
        QueryKind::IntegralSurface => auxiliary_ranges(&AuxQuery::IntegralSurface {
            k: require(args.k, "k")?,
            r: require(args.r, "r")?,
            j: require(args.j, "j")?,
        }),
        QueryKind::BoundedSym => auxiliary_ranges(&AuxQuery::BoundedSym {
            k: require(args.k, "k")?,
            c: require(args.c, "c")?,
            d: require(args.d, "d")?,
        }),
    }
}

fn cmd_ranges(args: RangesArgs) -> Result<i32> {
    if let Some(path) = &args.batch {
        return cmd_ranges_batch(path, args.format);
    }
    let result = range_query_from_args(&args)?;
    match args.format {
        Format::Json => print_json(&result)?,
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["bound", "case", "warnings"]).unwrap();
            w.write_record([
                result.bound.to_string(),
                case_label(&result),
                result.warnings.join("; "),
            ])
            .unwrap();
            flush_csv(w);
        }
        Format::Pretty => {
            println!("bound: {}", result.bound);
            println!("case:  {}", case_label(&result));
            for (k, v) in &result.inputs {
                println!("  {k} = {v}");
            }
            for w in &result.warnings {
                println!("warning: {w}");
            }
        }
    }
    Ok(0)
}

fn case_label(result: &RangeResult) -> String {
    serde_json::to_value(result.case)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default()
}

/// Batch rows: header `query,manifold,lambda,j,d,i,a,p,r,n,k,c,case`,
/// empty cells for unused parameters.
fn cmd_ranges_batch(path: &str, format: Format) -> Result<i32> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| Error::Invalid(format!("cannot read batch file '{path}': {e}")))?;
    let headers = reader
        .headers()
        .map_err(|e| Error::Invalid(format!("bad batch header: {e}")))?
        .clone();
    let mut results = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| Error::Invalid(format!("bad batch row: {e}")))?;
        let get = |name: &str| -> Option<String> {
            headers
                .iter()
                .position(|h| h == name)
                .and_then(|i| row.get(i))
                .filter(|v| !v.is_empty())
                .map(String::from)
        };
        let parse_u32 = |name: &str| -> Result<Option<u32>> {
            get(name)
                .map(|v| {
                    v.parse::<u32>()
                        .map_err(|_| Error::Invalid(format!("bad value for {name}: '{v}'")))
                })
                .transpose()
        };
        let args = RangesArgs {
            query: match get("query").as_deref().unwrap_or("full") {
                "full" => QueryKind::Full,
                "simplified" => QueryKind::Simplified,
                "stratum-stab" => QueryKind::StratumStab,
                "stratum-column" => QueryKind::StratumColumn,
                "sym-power" => QueryKind::SymPower,
                "integral-surface" => QueryKind::IntegralSurface,
                "bounded-sym" => QueryKind::BoundedSym,
                other => return Err(Error::Invalid(format!("unknown query '{other}'"))),
            },
            manifold: get("manifold"),
            lambda: get("lambda"),
            j: parse_u32("j")?,
            d: parse_u32("d")?,
            i: parse_u32("i")?,
            a: parse_u32("a")?,
            p: parse_u32("p")?,
            r: parse_u32("r")?,
            n: parse_u32("n")?,
            k: parse_u32("k")?,
            c: parse_u32("c")?,
            case: parse_u32("case")?.map(|v| v as u8),
            batch: None,
            format,
        };
        results.push(range_query_from_args(&args)?);
    }
    match format {
        Format::Json => print_json(&results)?,
        Format::Csv | Format::Pretty => {
            let mut w = csv_writer();
            w.write_record(["bound", "case", "warnings"]).unwrap();
            for r in &results {
                w.write_record([r.bound.to_string(), case_label(r), r.warnings.join("; ")])
                    .unwrap();
            }
            flush_csv(w);
        }
    }
    Ok(0)
}

// ----------------------------------------------------------------- collapses

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct CollapsesOutput {
    pub lambda: String,
    pub depths: Vec<DepthLevel>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct DepthLevel {
    pub depth: usize,
    pub partitions: Vec<String>,
}

pub fn collapses_output(lambda: &Partition) -> CollapsesOutput {
    CollapsesOutput {
        lambda: lambda.to_string(),
        depths: lambda
            .collapses_by_depth()
            .into_iter()
            .enumerate()
            .map(|(depth, level)| DepthLevel {
                depth,
                partitions: level.iter().map(|p| p.to_string()).collect(),
            })
            .collect(),
    }
}

fn cmd_collapses(args: CollapsesArgs) -> Result<i32> {
    let lambda = Partition::parse(&args.lambda)?;
    let out = collapses_output(&lambda);
    match args.format {
        Format::Json => print_json(&out)?,
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["depth", "partition"]).unwrap();
            for level in &out.depths {
                for p in &level.partitions {
                    w.write_record([level.depth.to_string(), p.clone()]).unwrap();
                }
            }
            flush_csv(w);
        }
        Format::Pretty => {
            println!("collapses of {}", out.lambda);
            for level in &out.depths {
                println!("  depth {}: {}", level.depth, level.partitions.join("  "));
            }
        }
    }
    Ok(0)
}

// -------------------------------------------------------------------- strata

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct StratumOutput {
    pub partition: String,
    pub d: u32,
    pub twist: String,
    pub homology: GradedDim,
    pub compact_support: GradedDim,
}

pub fn stratum_output(lambda_prime: &Partition, d: u32) -> Result<StratumOutput> {
    let homology = crate::confighomology::stratum_homology(lambda_prime, d)?;
    let compact_support = crate::confighomology::stratum_compact_support(lambda_prime, d)?;
    Ok(StratumOutput {
        partition: lambda_prime.to_string(),
        d,
        twist: if d % 2 == 0 { "trivial" } else { "eta" }.into(),
        homology,
        compact_support,
    })
}

fn cmd_strata(args: StrataArgs) -> Result<i32> {
    let lambda = Partition::parse(&args.lambda)?;
    if lambda.r() as u32 > args.max_n {
        return Err(Error::ResourceBound {
            what: "stratum parts",
            requested: lambda.r() as u64,
            limit: args.max_n as u64,
        });
    }
    let out = stratum_output(&lambda, args.d)?;
    match args.format {
        Format::Json => print_json(&out)?,
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["degree", "homology", "compact_support"]).unwrap();
            let top = out
                .homology
                .max_degree()
                .unwrap_or(0)
                .max(out.compact_support.max_degree().unwrap_or(0));
            for deg in 0..=top {
                w.write_record([
                    deg.to_string(),
                    out.homology.dim(deg).to_string(),
                    out.compact_support.dim(deg).to_string(),
                ])
                .unwrap();
            }
            flush_csv(w);
        }
        Format::Pretty => {
            println!("stratum {} in dimension {} ({} twist)", out.partition, out.d, out.twist);
            println!("  homology:        {}", out.homology);
            println!("  compact support: {}", out.compact_support);
        }
    }
    Ok(0)
}

// ----------------------------------------------------------------------- sym

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct SymTableOutput {
    pub profile: GradedDim,
    pub k_max: u32,
    /// Rows indexed by degree, columns by k.
    pub table: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct OperatorOutput {
    pub profile: GradedDim,
    pub operator: String,
    pub k: u32,
    pub rows: usize,
    pub cols: usize,
    /// Exact rational entries "p/q", row-major.
    pub matrix: Vec<Vec<String>>,
}

pub fn sym_table_output(profile: &GradedDim, k_max: u32) -> Result<SymTableOutput> {
    let columns: Vec<GradedDim> = (0..=k_max)
        .map(|k| sym_betti(profile, k))
        .collect::<Result<_>>()?;
    let top = columns
        .iter()
        .filter_map(|g| g.max_degree())
        .max()
        .unwrap_or(0);
    let table = (0..=top)
        .map(|deg| columns.iter().map(|g| g.dim(deg)).collect())
        .collect();
    Ok(SymTableOutput {
        profile: profile.clone(),
        k_max,
        table,
    })
}

fn cmd_sym(args: SymArgs) -> Result<i32> {
    let profile = match (&args.betti, &args.manifold) {
        (Some(betti), None) => GradedDim::parse(betti)?,
        (None, Some(selector)) => resolve_manifold(selector)?.betti,
        _ => {
            return Err(Error::Invalid(
                "provide exactly one of --betti or --manifold".into(),
            ))
        }
    };
    if let Some(kind) = args.operator {
        let k = require(args.k, "k")?;
        let matrix = match kind {
            OperatorKind::Stabilization => stabilization_operator(&profile, k)?,
            OperatorKind::Transfer => transfer_operator(&profile, k)?,
        };
        let out = OperatorOutput {
            profile,
            operator: match kind {
                OperatorKind::Stabilization => "stabilization".into(),
                OperatorKind::Transfer => "transfer".into(),
            },
            k,
            rows: matrix.rows(),
            cols: matrix.cols(),
            matrix: matrix.to_rational_strings(),
        };
        match args.format {
            Format::Json => print_json(&out)?,
            Format::Csv => {
                let mut w = csv_writer();
                for row in &out.matrix {
                    w.write_record(row).unwrap();
                }
                flush_csv(w);
            }
            Format::Pretty => {
                println!("{} at weight {} ({}x{})", out.operator, out.k, out.rows, out.cols);
                for row in &out.matrix {
                    println!("  [{}]", row.join(", "));
                }
            }
        }
        return Ok(0);
    }
    let k_max = require(args.k_max, "k-max")?;
    let out = sym_table_output(&profile, k_max)?;
    match args.format {
        Format::Json => print_json(&out)?,
        Format::Csv | Format::Pretty => {
            let mut w = csv_writer();
            let mut header = vec!["degree".to_string()];
            header.extend((0..=k_max).map(|k| format!("k={k}")));
            w.write_record(&header).unwrap();
            for (deg, row) in out.table.iter().enumerate() {
                let mut record = vec![deg.to_string()];
                record.extend(row.iter().map(|v| v.to_string()));
                w.write_record(&record).unwrap();
            }
            flush_csv(w);
        }
    }
    Ok(0)
}

// ------------------------------------------------------------------------ e1

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct PageOutput {
    pub lambda: String,
    pub j: usize,
    pub d: u32,
    pub twist: String,
    pub degenerate: bool,
    pub sparse: bool,
    pub entries: Vec<PageEntry>,
    pub columns: Vec<PageColumn>,
    pub total_degree_range: Option<(i64, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement: Option<ComplementOutput>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct PageEntry {
    pub p: i64,
    pub q: i64,
    pub dim: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct PageColumn {
    pub p: i64,
    pub strata: Vec<ColumnStratumOutput>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ColumnStratumOutput {
    pub partition: String,
    pub compact_support: GradedDim,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ComplementOutput {
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<GradedDim>,
    pub betti_upper_bounds: GradedDim,
    pub compact_upper_bounds: GradedDim,
    pub warnings: Vec<String>,
}

pub fn page_output(page: &E1Page, complement: Option<ComplementOutput>) -> PageOutput {
    PageOutput {
        lambda: page.lambda.to_string(),
        j: page.j,
        d: page.d,
        twist: match page.twist {
            TwistMode::Even => "even".into(),
            TwistMode::OddTwisted => "odd-twisted".into(),
        },
        degenerate: page.degenerate,
        sparse: page.is_sparse(),
        entries: page
            .entries
            .iter()
            .filter(|&(_, &dim)| dim > 0)
            .map(|(&(p, q), &dim)| PageEntry { p, q, dim })
            .collect(),
        columns: page
            .columns
            .iter()
            .map(|(&p, strata)| PageColumn {
                p,
                strata: strata
                    .iter()
                    .map(|s| ColumnStratumOutput {
                        partition: s.partition.to_string(),
                        compact_support: s.compact_support.clone(),
                    })
                    .collect(),
            })
            .collect(),
        total_degree_range: page.total_degree_range(),
        complement,
    }
}

fn cmd_e1(args: E1Args) -> Result<i32> {
    let lambda = Partition::parse(&args.lambda)?;
    let page = build_e1(&lambda, args.j, args.d)?;
    let complement = if args.complement {
        let w = les_w_bounds(&lambda, args.j, args.d)?;
        Some(ComplementOutput {
            exact: w.exact_betti.is_some(),
            betti: w.exact_betti,
            betti_upper_bounds: w.betti_upper_bounds,
            compact_upper_bounds: w.compact_upper_bounds,
            warnings: w.warnings,
        })
    } else {
        None
    };
    let out = page_output(&page, complement);
    match args.format {
        Format::Json => print_json(&out)?,
        Format::Csv => {
            // Rows q descending, columns p ascending.
            let mut w = csv_writer();
            let ps: Vec<i64> = page.columns.keys().copied().collect();
            let qs: Vec<i64> = page.entries.keys().map(|&(_, q)| q).collect();
            let (qmin, qmax) = qs
                .iter()
                .fold(None, |acc: Option<(i64, i64)>, &q| {
                    Some(acc.map_or((q, q), |(lo, hi)| (lo.min(q), hi.max(q))))
                })
                .unwrap_or((0, 0));
            let mut header = vec!["q\\p".to_string()];
            header.extend(ps.iter().map(|p| p.to_string()));
            w.write_record(&header).unwrap();
            for q in (qmin..=qmax).rev() {
                let mut record = vec![q.to_string()];
                record.extend(ps.iter().map(|&p| page.entry(p, q).to_string()));
                w.write_record(&record).unwrap();
            }
            flush_csv(w);
        }
        Format::Pretty => {
            println!(
                "E1 page for lambda={} j={} d={} ({}, {})",
                out.lambda,
                out.j,
                out.d,
                out.twist,
                if out.sparse { "sparse" } else { "not sparse" }
            );
            for e in &out.entries {
                println!("  ({}, {}) = {}", e.p, e.q, e.dim);
            }
            for col in &out.columns {
                let names: Vec<String> =
                    col.strata.iter().map(|s| s.partition.clone()).collect();
                println!("  column {}: {}", col.p, names.join("  "));
            }
            if let Some(c) = &out.complement {
                match &c.betti {
                    Some(b) => println!("  complement Betti (exact): {b}"),
                    None => println!("  complement Betti bounds: {}", c.betti_upper_bounds),
                }
            }
        }
    }
    Ok(0)
}

// ----------------------------------------------------------------------- chi

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ChiOutput {
    pub lambda: String,
    pub j: usize,
    pub chi: i64,
    pub strata: Vec<ChiRow>,
    pub chi_d: String,
    pub chi_sym: String,
    pub chi_w: String,
    pub degenerate: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ChiRow {
    pub partition: String,
    pub chi_c: String,
}

pub fn chi_output(lambda: &Partition, j: usize, chi: i64) -> Result<ChiOutput> {
    let ledger = build_ledger(lambda, j, &chi_int(chi))?;
    Ok(ChiOutput {
        lambda: lambda.to_string(),
        j,
        chi,
        strata: ledger
            .per_stratum
            .iter()
            .map(|(p, v)| ChiRow {
                partition: p.to_string(),
                chi_c: v.to_string(),
            })
            .collect(),
        chi_d: ledger.chi_d.to_string(),
        chi_sym: ledger.chi_sym.to_string(),
        chi_w: ledger.chi_w.to_string(),
        degenerate: ledger.degenerate,
    })
}

fn cmd_chi(args: ChiArgs) -> Result<i32> {
    let lambda = Partition::parse(&args.lambda)?;
    let out = chi_output(&lambda, args.j, args.chi)?;
    match args.format {
        Format::Json => print_json(&out)?,
        Format::Csv | Format::Pretty => {
            let mut w = csv_writer();
            w.write_record(["partition", "chi_c"]).unwrap();
            for row in &out.strata {
                w.write_record([row.partition.clone(), row.chi_c.clone()]).unwrap();
            }
            w.write_record(["total:discriminant", &out.chi_d]).unwrap();
            w.write_record(["total:symmetric-power", &out.chi_sym]).unwrap();
            w.write_record(["total:complement", &out.chi_w]).unwrap();
            flush_csv(w);
        }
    }
    Ok(0)
}

// -------------------------------------------------------------------- verify

#[derive(Serialize)]
struct VerifyLine {
    id: String,
    status: String,
    detail: String,
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let cfg = verify::VerifyConfig {
        max_n: args.max_n,
        max_k: args.max_k,
    };
    let report = verify::run_suite(&args.suite, &cfg)?;
    let lines: Vec<VerifyLine> = report
        .lines
        .iter()
        .map(|l| {
            let (status, detail) = match &l.outcome {
                verify::CheckOutcome::Pass { detail } => ("PASS", detail.clone()),
                verify::CheckOutcome::Fail { detail } => ("FAIL", detail.clone()),
                verify::CheckOutcome::Skipped { detail } => ("SKIP", detail.clone()),
            };
            VerifyLine {
                id: l.id.clone(),
                status: status.into(),
                detail,
            }
        })
        .collect();
    match args.format {
        Format::Json => print_json(&lines)?,
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["id", "status", "detail"]).unwrap();
            for l in &lines {
                w.write_record([l.id.clone(), l.status.clone(), l.detail.clone()]).unwrap();
            }
            flush_csv(w);
        }
        Format::Pretty => {
            for l in &lines {
                println!("[{}] {} — {}", l.status, l.id, l.detail);
            }
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}

// ------------------------------------------------------------------ plumbing

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Invalid(format!("serialization: {e}")))?;
    println!("{text}");
    Ok(())
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn flush_csv(w: csv::Writer<Vec<u8>>) {
    let bytes = w.into_inner().expect("csv buffer");
    std::io::stdout().write_all(&bytes).expect("stdout");
}

/// Deterministic JSON text of any emit payload; used by the round-trip
/// checks and available to library callers.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialization cannot fail for emit payloads")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn collapses_roundtrip_is_identity() {
        let out = collapses_output(&p("1,1,2"));
        let text = to_canonical_json(&out);
        let parsed: CollapsesOutput = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, out);
        assert_eq!(to_canonical_json(&parsed), text);
    }

    #[test]
    fn stratum_roundtrip_is_identity() {
        let out = stratum_output(&p("2,1"), 2).unwrap();
        let text = to_canonical_json(&out);
        let parsed: StratumOutput = serde_json::from_str(&text).unwrap();
        assert_eq!(to_canonical_json(&parsed), text);
    }

    #[test]
    fn page_roundtrip_is_identity() {
        let page = build_e1(&p("2"), 1, 2).unwrap();
        let out = page_output(&page, None);
        let text = to_canonical_json(&out);
        let parsed: PageOutput = serde_json::from_str(&text).unwrap();
        assert_eq!(to_canonical_json(&parsed), text);
    }

    #[test]
    fn chi_roundtrip_is_identity() {
        let out = chi_output(&p("2"), 1, 1).unwrap();
        let text = to_canonical_json(&out);
        let parsed: ChiOutput = serde_json::from_str(&text).unwrap();
        assert_eq!(to_canonical_json(&parsed), text);
    }

    #[test]
    fn sym_table_roundtrip_is_identity() {
        let out = sym_table_output(&GradedDim::parse("1,0,1").unwrap(), 4).unwrap();
        let text = to_canonical_json(&out);
        let parsed: SymTableOutput = serde_json::from_str(&text).unwrap();
        assert_eq!(to_canonical_json(&parsed), text);
    }
}
