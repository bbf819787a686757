//! `acdlab`: character tables, average-degree statistics and theorem audits.
//!
//! Exit codes: 0 success, 1 usage or engine error, 2 an audit found a
//! counterexample.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use acdlab_core::audit::{has_counterexample, parse_theorems, run_audit, Verdict};
use acdlab_core::chartab::TableJson;
use acdlab_core::constructions::{build_with_cap, default_catalog, parse_catalog, parse_group_spec};
use acdlab_core::fieldvals::irr_subset;
use acdlab_core::group::{FiniteGroup, Perm, SubgroupHandle, DEFAULT_ORDER_CAP};
use acdlab_core::stats::{acd, selected_rows, AcdQuery};
use acdlab_core::{character_table, FieldSpec};
use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

const ORDER_CAP_VAR: &str = "ACDLAB_ORDER_CAP";

#[derive(Debug, Parser)]
#[command(name = "acdlab", version, about = "Exact character tables and average character degrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the character table of a group.
    Table {
        /// Group spec, e.g. `S(4)`, `F(7,3)`, `C(2)*S(3)`.
        spec: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Average degree over the characters with values in a field.
    Stats {
        spec: String,
        /// Q, R, C, Qp(p) or Q(zeta_m).
        #[arg(long)]
        field: String,
        /// Keep only degrees not divisible by this prime.
        #[arg(long)]
        p: Option<u64>,
        /// Normal subgroup N to pass to G/N: `derived`, `center`,
        /// `minimal:<i>` or `ncl:<cycles>`.
        #[arg(long)]
        quotient: Option<String>,
    },
    /// Audit a theorem (or `all`) over a catalog, printing JSON lines.
    Audit {
        theorem: String,
        /// One group spec per line; `#` starts a comment.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Degrees,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// Output cut short by a closed pipe (e.g. `| head`) is not an error.
fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn order_cap() -> Result<usize> {
    match std::env::var(ORDER_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{ORDER_CAP_VAR} must be a positive integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn load_group(spec: &str) -> Result<(String, FiniteGroup)> {
    let parsed = parse_group_spec(spec)?;
    let group = build_with_cap(&parsed, order_cap()?)?;
    Ok((parsed.to_string(), group))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Table { spec, format } => cmd_table(&spec, format),
        Command::Stats {
            spec,
            field,
            p,
            quotient,
        } => cmd_stats(&spec, &field, p, quotient.as_deref()),
        Command::Audit {
            theorem,
            catalog,
            jobs,
            out,
        } => cmd_audit(&theorem, catalog, jobs, out),
    }
}

fn cmd_table(spec: &str, format: TableFormat) -> Result<u8> {
    let (text, g) = load_group(spec)?;
    let t = character_table(&g)?;
    let out = match format {
        TableFormat::Json => TableJson::new(&text, &g, &t).to_pretty_string(),
        TableFormat::Degrees => serde_json::to_string(t.degrees())?,
    };
    writeln!(io::stdout().lock(), "{out}")?;
    Ok(0)
}

/// Resolves a `--quotient` argument to a normal subgroup.
fn quotient_subgroup(g: &FiniteGroup, text: &str) -> Result<SubgroupHandle> {
    let text = text.trim();
    if text == "derived" {
        return Ok(g.derived_subgroup());
    }
    if text == "center" {
        return Ok(g.center());
    }
    if let Some(i) = text.strip_prefix("minimal:") {
        let i: usize = i.trim().parse().context("minimal:<i> needs a nonnegative index")?;
        let mut all = g.minimal_normal_subgroups()?;
        if i >= all.len() {
            bail!("group has {} minimal normal subgroups, index {i} is out of range", all.len());
        }
        return Ok(all.swap_remove(i));
    }
    if let Some(cycles) = text.strip_prefix("ncl:") {
        let perm = Perm::parse_cycles(g.degree(), cycles.trim())?;
        let x = g
            .index_of(&perm)
            .ok_or_else(|| anyhow!("{perm} is not an element of the group"))?;
        return Ok(g.normal_closure(&[x]));
    }
    bail!("unknown quotient `{text}`; expected derived, center, minimal:<i> or ncl:<cycles>")
}

fn cmd_stats(spec: &str, field: &str, p: Option<u64>, quotient: Option<&str>) -> Result<u8> {
    let field: FieldSpec = field.parse()?;
    let (text, g) = load_group(spec)?;
    let t = character_table(&g)?;
    let mut q = AcdQuery::new(field);
    q.p_filter = p;
    if let Some(qt) = quotient {
        q.quotient_by = Some(quotient_subgroup(&g, qt)?);
    }
    let rows = selected_rows(&g, &t, &q)?;
    let value = acd(&g, &t, &q)?;
    let degrees: Vec<u64> = rows.iter().map(|&c| t.degree(c)).collect();
    let in_field = irr_subset(&t, &field, None)?.len();

    let mut out = io::stdout().lock();
    writeln!(out, "group: {text}")?;
    writeln!(out, "order: {}", g.order())?;
    writeln!(out, "classes: {}", t.classes().num_classes())?;
    writeln!(out, "degrees: {:?}", t.degrees())?;
    writeln!(out, "field: {field}")?;
    match p {
        Some(p) => writeln!(out, "p: {p}")?,
        None => writeln!(out, "p: none")?,
    }
    if let Some(n) = &q.quotient_by {
        writeln!(out, "quotient by: normal subgroup of order {}", n.order())?;
    }
    writeln!(out, "characters with values in field: {in_field}")?;
    writeln!(out, "selected characters: {}", rows.len())?;
    writeln!(out, "selected degrees: {degrees:?}")?;
    writeln!(out, "acd: {value}")?;
    if let Some(p) = p {
        writeln!(out, "p-nilpotent: {}", g.is_p_nilpotent(p)?)?;
    }
    writeln!(out, "solvable: {}", g.is_solvable())?;
    Ok(0)
}

fn cmd_audit(theorem: &str, catalog: Option<PathBuf>, jobs: Option<usize>, out: Option<PathBuf>) -> Result<u8> {
    let theorems = parse_theorems(theorem)?;
    let specs = match &catalog {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_catalog(&text)?
        }
        None => default_catalog(),
    };
    let jobs = match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let rows = run_audit(&theorems, &specs, order_cap()?, jobs)?;

    let mut report = String::new();
    for r in &rows {
        report.push_str(&r.to_json_line());
        report.push('\n');
    }
    match &out {
        Some(path) => fs::write(path, &report).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(report.as_bytes())?,
    }

    let count = |v: Verdict| rows.iter().filter(|r| r.verdict == v).count();
    eprintln!(
        "{} rows over {} groups: {} consistent, {} sharp-boundary, {} COUNTEREXAMPLE",
        rows.len(),
        specs.len(),
        count(Verdict::Consistent),
        count(Verdict::SharpBoundary),
        count(Verdict::Counterexample),
    );
    Ok(if has_counterexample(&rows) { 2 } else { 0 })
}
