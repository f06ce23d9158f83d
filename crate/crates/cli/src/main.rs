//! `inframono`: construct, verify and apply the inframonogenic polynomial basis.
//!
//! Exit codes: 0 on success, 1 when a hard verification fails, 2 on usage,
//! parse or I/O errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use inframonogenic::basis::{enumerate_basis, enumerate_provisional, infr_dimension, shared, BasisId, Family};
use inframonogenic::check::{run_checks_on, Mutated};
use inframonogenic::fourier::{project, residual_norm2};
use inframonogenic::harmonics::Parity;
use inframonogenic::poly::json::{from_json, to_value};
use inframonogenic::poly::render::render;
use inframonogenic::report::verify_paper_formulas;
use inframonogenic::scalar::rational_to_string;
use inframonogenic::tables::{compare_row, golden_tables, table_line};
use inframonogenic::Error;

#[derive(Parser)]
#[command(name = "inframono", version, about = "Orthogonal bases of inframonogenic polynomials on the unit ball")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print basis elements of one degree.
    Basis {
        #[arg(long)]
        degree: Option<u32>,
        #[command(flatten)]
        filter: Filter,
        #[command(flatten)]
        out: Output,
    },
    /// Dimension of the inframonogenic polynomials of each degree, by exact nullity.
    Dim {
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        out: Output,
    },
    /// Gram matrix of the selected basis elements.
    Gram {
        #[arg(long)]
        degree: Option<u32>,
        #[command(flatten)]
        filter: Filter,
        #[command(flatten)]
        out: Output,
    },
    /// Run the hard invariants; exits with 1 if any fails.
    Check {
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Negate one coefficient of this element before checking.
        #[arg(long, hide = true)]
        mutate: Option<BasisId>,
        #[command(flatten)]
        out: Output,
    },
    /// Expand a polynomial (JSON file) in the basis.
    Project {
        #[arg(long)]
        input: PathBuf,
        /// Defaults to the degree of the input.
        #[arg(long)]
        max_degree: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// The published table rows next to the constructed elements.
    Tables {
        #[arg(long)]
        degree: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Compare the published formulas and tables with exact computation.
    /// With --out, writes report.json and report.txt into that directory.
    Report {
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Filter {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long, allow_hyphen_values = true)]
    parity: Option<Parity>,
    #[arg(long)]
    order: Option<u32>,
    /// A single element, "n:family:parity:m".
    #[arg(long)]
    id: Option<BasisId>,
}

#[derive(Args)]
struct Range {
    #[arg(long, conflicts_with = "max_degree")]
    degree: Option<u32>,
    #[arg(long)]
    max_degree: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Basis { degree, filter, out } => cmd_basis(degree, &filter, &out),
        Command::Dim { range, out } => cmd_dim(&range, &out),
        Command::Gram { degree, filter, out } => cmd_gram(degree, &filter, &out),
        Command::Check { max_degree, mutate, out } => cmd_check(max_degree, mutate, &out),
        Command::Project { input, max_degree, out } => cmd_project(&input, max_degree, &out),
        Command::Tables { degree, out } => cmd_tables(degree, &out),
        Command::Report { max_degree, out } => cmd_report(max_degree, &out),
    }
}

fn emit(out: &Output, text: &str) -> Outcome {
    match &out.out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable value") + "\n"
}

fn select(degree: Option<u32>, filter: &Filter) -> Result<Vec<BasisId>, Failure> {
    if let Some(id) = filter.id {
        if degree.is_some_and(|n| n != id.n) {
            return Err(usage(format!("--id {id} does not have degree {}", degree.unwrap_or_default())));
        }
        return Ok(vec![id]);
    }
    let n = degree.ok_or_else(|| usage("--degree or --id is required"))?;
    let pool = if filter.family == Some(Family::Zu) { enumerate_provisional(n) } else { enumerate_basis(n) };
    Ok(pool
        .into_iter()
        .filter(|id| filter.family.is_none_or(|f| f == id.family))
        .filter(|id| filter.parity.is_none_or(|p| p == id.parity))
        .filter(|id| filter.order.is_none_or(|m| m == id.m))
        .collect())
}

fn cmd_basis(degree: Option<u32>, filter: &Filter, out: &Output) -> Outcome {
    let ids = select(degree, filter)?;
    let basis = shared();
    let text = match out.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut map = Map::new();
            for id in &ids {
                map.insert(id.to_string(), to_value(&*basis.element(*id)?));
            }
            pretty(&Value::Object(map))
        }
        Format::Text => {
            let mut s = String::new();
            for id in &ids {
                s += &format!("{id}  {}\n", render(&*basis.element(*id)?));
            }
            s
        }
    };
    emit(out, &text)
}

fn cmd_dim(range: &Range, out: &Output) -> Outcome {
    let degrees: Vec<u32> = match (range.degree, range.max_degree) {
        (Some(n), _) => vec![n],
        (None, Some(m)) => (0..=m).collect(),
        (None, None) => return Err(usage("--degree or --max-degree is required")),
    };
    let dims: Vec<(u32, usize)> = degrees.iter().map(|&n| (n, infr_dimension(n))).collect();
    let text = match out.format.unwrap_or(Format::Text) {
        Format::Json => {
            let map: Map<String, Value> = dims.iter().map(|(n, d)| (n.to_string(), json!(d))).collect();
            pretty(&Value::Object(map))
        }
        Format::Text => dims.iter().map(|(n, d)| format!("dim Infr_{n} = {d}\n")).collect(),
    };
    emit(out, &text)
}

fn cmd_gram(degree: Option<u32>, filter: &Filter, out: &Output) -> Outcome {
    let ids = select(degree, filter)?;
    let g = shared().gram(&ids)?;
    let text = match out.format.unwrap_or(Format::Json) {
        Format::Json => pretty(&g),
        Format::Text => {
            let mut s = String::new();
            for (i, id) in g.ids.iter().enumerate() {
                s += &format!("{id}  {}\n", g.entry(i, i));
            }
            for (i, j) in g.off_diagonal_nonzero() {
                s += &format!("<{}, {}> = {}\n", g.ids[i], g.ids[j], g.entry(i, j));
            }
            s += &format!("diagonal: {}\n", g.is_diagonal());
            s
        }
    };
    emit(out, &text)
}

fn cmd_check(max_degree: u32, mutate: Option<BasisId>, out: &Output) -> Outcome {
    let report = match mutate {
        Some(target) => run_checks_on(&Mutated { inner: shared(), target }, max_degree)?,
        None => run_checks_on(shared(), max_degree)?,
    };
    let text = match out.format.unwrap_or(Format::Text) {
        Format::Json => pretty(&report),
        Format::Text => report.to_string(),
    };
    emit(out, &text)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure { code: 1, message: String::new() })
    }
}

fn cmd_project(input: &Path, max_degree: Option<u32>, out: &Output) -> Outcome {
    let text = fs::read_to_string(input).map_err(|e| usage(format!("cannot read {}: {e}", input.display())))?;
    let f = from_json(&text).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    if !f.is_reduced() {
        return Err(usage("the input must have a zero e_3 component"));
    }
    let n = max_degree.unwrap_or_else(|| f.degree().unwrap_or(0));
    let e = project(&f, n)?;
    let residual = residual_norm2(&f, &e)?;
    match out.format.unwrap_or(Format::Json) {
        Format::Json => {
            emit(out, &pretty(&e))?;
            if out.out.is_some() {
                println!("residual: {residual}");
            } else {
                eprintln!("residual: {residual}");
            }
        }
        Format::Text => {
            let mut s = String::new();
            for (id, c) in e.coefficients() {
                s += &format!("{id}  {}\n", rational_to_string(c));
            }
            s += &format!("residual: {residual}\n");
            emit(out, &s)?;
        }
    }
    Ok(())
}

fn cmd_tables(degree: Option<u32>, out: &Output) -> Outcome {
    let basis = shared();
    let rows: Vec<_> = golden_tables().iter().filter(|e| degree.is_none_or(|n| e.id.n == n)).collect();
    if rows.is_empty() {
        return Err(usage("the published tables cover degrees 2 to 4"));
    }
    let mut json_rows = Vec::new();
    let mut s = String::new();
    let mut table = 0;
    for entry in rows {
        let c = compare_row(entry)?;
        let id = entry.id;
        let shown = match id.family {
            Family::Zu => basis.element(BasisId { family: Family::Z, ..id })?,
            _ => basis.element(id)?,
        };
        let status = if c.exact() { "match" } else { "mismatch" };
        let scale = c.scale.as_ref().map(rational_to_string);
        if entry.table != table {
            table = entry.table;
            s += &format!("% Table {table}\n");
        }
        s += &table_line(id, &shown);
        s.push('\n');
        if !c.stray.is_zero() {
            s += &format!(
                "% printed row adds the constant {}; without it the row equals the constructed element times {}\n",
                render(&c.stray),
                scale.clone().unwrap_or_else(|| "nothing".into())
            );
        }
        json_rows.push(json!({
            "table": entry.table,
            "id": id,
            "printed": to_value(&entry.poly),
            "constructed": to_value(&shown),
            "stray": to_value(&c.stray),
            "scale": scale,
            "status": status,
        }));
    }
    let text = match out.format.unwrap_or(Format::Text) {
        Format::Json => pretty(&json_rows),
        Format::Text => s,
    };
    emit(out, &text)
}

fn cmd_report(max_degree: u32, out: &Output) -> Outcome {
    if max_degree < 2 {
        return Err(usage("report needs --max-degree of at least 2"));
    }
    let report = verify_paper_formulas(max_degree)?;
    match &out.out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
            write_file(&dir.join("report.json"), &pretty(&report))?;
            write_file(&dir.join("report.txt"), &report.to_text())?;
            print!("{}", report.to_text().lines().last().map(|l| format!("{l}\n")).unwrap_or_default());
            Ok(())
        }
        None => {
            let text = match out.format.unwrap_or(Format::Text) {
                Format::Json => pretty(&report),
                Format::Text => report.to_text(),
            };
            print!("{text}");
            Ok(())
        }
    }
}
