//! Command-line front end. [`run`] takes the argument list and two sinks so
//! that tests can drive it in-process; `main` only forwards to it.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::analysis::{
    alpha_chain, alpha_chain_length, alpha_table_entry, empirical_alpha_density, empirical_drift,
    empirical_iterate_class_ratio, series_report, verify_theorems_with_budget,
};
use crate::arith::{classify, pre_terminal, reverse_to_starter, syracuse_step, terminal, OddInt};
use crate::error::Error;
use crate::scan;
use crate::tables::{self, locate, predecessor_row, row_iterate, TableId};
use crate::trajectory::{
    trajectory_direct, trajectory_lookup, StatsAccumulator, TrajectoryRecord, DEFAULT_MAX_STEPS,
};
use crate::tree::{build_layers, export_tree, ExportFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

pub const MAX_STEPS_ENV: &str = "COLLATZ_MAX_STEPS";

#[derive(Debug, Parser)]
#[command(
    name = "collatz",
    version,
    about = "Odd-integer structure of the 3x+1 problem"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Lookup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    A,
    B,
}

impl From<Table> for TableId {
    fn from(t: Table) -> Self {
        match t {
            Table::A => TableId::A,
            Table::B => TableId::B,
        }
    }
}

#[derive(Debug, Args)]
pub struct Budget {
    /// Odd-step budget per trajectory [env: COLLATZ_MAX_STEPS, default 1000000]
    #[arg(long)]
    pub max_steps: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kind, terminal/end flags, Syracuse iterate and alpha of an odd integer
    Classify {
        value: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Odd iterates from VALUE down to 1
    Trajectory {
        value: String,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        budget: Budget,
    },
    /// Trajectories of every odd integer in [FROM, TO]: JSON lines or a CSV summary
    Stats {
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// First COUNT odd integers whose iterate is VALUE
    Predecessors {
        value: String,
        #[arg(long, default_value_t = 4)]
        count: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Smallest-step chain from VALUE up to a starter
    Reverse { value: String },
    /// Terminal integer T_K = (4^(K+1) - 1)/3
    Terminal { k: u64 },
    /// Pre-terminal integer P_K (iterate 5), K >= 1
    PreTerminal { k: u64 },
    /// Table, column and row of an odd integer in the predecessor tables
    Locate {
        value: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Layered tree rooted at 1
    Tree {
        #[arg(long, default_value_t = 3)]
        depth: u64,
        #[arg(long, default_value_t = 4)]
        breadth: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Integers by alpha-chain length: ROWS rows of columns h = 1..=COLS
    AlphaTable {
        #[arg(long, default_value_t = 36)]
        rows: u64,
        #[arg(long, default_value_t = 10)]
        cols: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Consecutive alpha = 1 chain starting at VALUE (VALUE = 3 mod 4)
    Chain {
        value: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Drift series partial sums and the empirical per-step factor
    Drift {
        #[arg(long, default_value_t = 60)]
        terms: u64,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact counts of alpha = 1..=MAX_ALPHA over odd x <= BOUND
    Density {
        #[arg(long, default_value_t = 1 << 20)]
        bound: u64,
        #[arg(long, default_value_t = 10)]
        max_alpha: u32,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Share of iterates that are 6m+1 vs 6m+5 over odd x <= BOUND
    ClassRatio {
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Scan odd x <= BOUND for multiple-of-3 iterates and repeated values
    Verify {
        #[arg(long, default_value_t = 100_000)]
        bound: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        budget: Budget,
    },
    /// CSV window of a predecessor table
    TableExport {
        #[arg(long, value_enum, ignore_case = true)]
        table: Table,
        #[arg(long, default_value_t = 36)]
        rows: u64,
        #[arg(long, default_value_t = 5)]
        cols: u64,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::MaxStepsExceeded { .. } => EXIT_BUDGET,
                Error::UnknownFormat(_) => EXIT_USAGE,
                _ => EXIT_DOMAIN,
            }
        }
    }
}

fn allow(format: Format, allowed: &[Format]) -> Outcome {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "format {:?} is not available for this command",
            format
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default()
        )))
    }
}

fn max_steps(budget: &Budget) -> std::result::Result<u64, Failure> {
    if let Some(n) = budget.max_steps {
        return Ok(n);
    }
    match std::env::var(MAX_STEPS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{MAX_STEPS_ENV}={v:?} is not a non-negative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_STEPS),
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Outcome {
    let line = serde_json::to_string(value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{line}")?;
    Ok(())
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    let mut s = String::new();
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            s.push_str(sep);
        }
        write!(s, "{v}").unwrap();
    }
    s
}

fn trajectory(x: &OddInt, method: Method, steps: u64) -> crate::Result<TrajectoryRecord> {
    match method {
        Method::Direct => trajectory_direct(x, steps),
        Method::Lookup => trajectory_lookup(x, steps),
    }
}

#[derive(Serialize)]
struct ClassifyOutput<'a> {
    value: &'a OddInt,
    kind: crate::Kind,
    is_terminal: bool,
    is_end: bool,
    iterate: OddInt,
    alpha: u64,
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Classify { value, format } => {
            allow(format, &[Format::Text, Format::Json])?;
            let x: OddInt = value.parse()?;
            let c = classify(&x);
            let step = syracuse_step(&x);
            if format == Format::Json {
                json_line(
                    out,
                    &ClassifyOutput {
                        value: &x,
                        kind: c.kind,
                        is_terminal: c.is_terminal,
                        is_end: c.is_end,
                        iterate: step.iterate,
                        alpha: step.alpha,
                    },
                )?;
            } else {
                writeln!(
                    out,
                    "{x}: {} terminal={} end={} iterate={} alpha={}",
                    c.kind, c.is_terminal, c.is_end, step.iterate, step.alpha
                )?;
            }
        }
        Command::Trajectory {
            value,
            method,
            format,
            budget,
        } => {
            allow(format, &[Format::Text, Format::Json])?;
            let x: OddInt = value.parse()?;
            let record = trajectory(&x, method, max_steps(&budget)?)?;
            if format == Format::Json {
                json_line(out, &record)?;
            } else {
                writeln!(out, "{} -> {}", record.start, join(&record.iterates, ", "))?;
            }
        }
        Command::Stats {
            from,
            to,
            method,
            format,
            workers,
            budget,
        } => {
            allow(format, &[Format::Csv, Format::Json])?;
            if from > to {
                return Err(Failure::Usage(format!("--from {from} exceeds --to {to}")));
            }
            let steps = max_steps(&budget)?;
            if format == Format::Json {
                for (a, b) in scan::odd_chunks(from, to) {
                    for x in (a..=b).step_by(2) {
                        let record = trajectory(&OddInt::new_unchecked(x.into()), method, steps)?;
                        json_line(out, &record)?;
                    }
                }
            } else {
                let acc = scan::map_fold(
                    from,
                    to,
                    workers,
                    |a, b| {
                        let mut acc = StatsAccumulator::default();
                        for x in (a..=b).step_by(2) {
                            acc.push(&trajectory(
                                &OddInt::new_unchecked(x.into()),
                                method,
                                steps,
                            )?);
                        }
                        Ok(acc)
                    },
                    StatsAccumulator::default(),
                    StatsAccumulator::merge,
                )?;
                acc.finish()?.write_csv(&mut *out)?;
            }
        }
        Command::Predecessors {
            value,
            count,
            format,
        } => {
            allow(format, &[Format::Text, Format::Json])?;
            let y: OddInt = value.parse()?;
            let row = predecessor_row(&y, count)?;
            if format == Format::Json {
                json_line(out, &row)?;
            } else {
                writeln!(out, "{}", join(&row.entries, " "))?;
            }
        }
        Command::Reverse { value } => {
            let y: OddInt = value.parse()?;
            let chain = reverse_to_starter(&y)?;
            writeln!(out, "{y} <- {}", join(&chain, " <- "))?;
        }
        Command::Terminal { k } => writeln!(out, "{}", terminal(k))?,
        Command::PreTerminal { k } => writeln!(out, "{}", pre_terminal(k)?)?,
        Command::Locate { value, format } => {
            allow(format, &[Format::Text, Format::Json])?;
            let x: OddInt = value.parse()?;
            let c = locate(&x);
            let iterate = row_iterate(c.table, &c.row);
            if format == Format::Json {
                #[derive(Serialize)]
                struct LocateOutput<'a> {
                    value: &'a OddInt,
                    #[serde(flatten)]
                    coordinate: &'a tables::TableCoordinate,
                    alpha: u64,
                    iterate: OddInt,
                }
                json_line(
                    out,
                    &LocateOutput {
                        value: &x,
                        coordinate: &c,
                        alpha: c.alpha(),
                        iterate,
                    },
                )?;
            } else {
                writeln!(
                    out,
                    "{x}: table={} column={} row={} alpha={} iterate={iterate}",
                    c.table,
                    c.column,
                    c.row,
                    c.alpha()
                )?;
            }
        }
        Command::Tree {
            depth,
            breadth,
            format,
        } => {
            let export = match format {
                Format::Dot => ExportFormat::Dot,
                Format::Json => ExportFormat::Json,
                Format::Text => ExportFormat::Text,
                Format::Csv => return allow(format, &[]),
            };
            let layers = build_layers(depth, breadth)?;
            out.write_all(&export_tree(&layers, export)?)?;
        }
        Command::AlphaTable { rows, cols, format } => {
            allow(format, &[Format::Text, Format::Csv])?;
            if cols == 0 {
                return Err(Error::param("cols", "must be at least 1").into());
            }
            let sep = if format == Format::Csv { "," } else { "\t" };
            let header: Vec<String> = (1..=cols).map(|h| format!("h={h}")).collect();
            writeln!(out, "n{sep}{}", header.join(sep))?;
            for n in 1..=rows {
                let cells = (1..=cols)
                    .map(|h| alpha_table_entry(h, &BigUint::from(n)))
                    .collect::<crate::Result<Vec<_>>>()?;
                writeln!(out, "{n}{sep}{}", join(&cells, sep))?;
            }
        }
        Command::Chain { value, format } => {
            allow(format, &[Format::Text, Format::Json])?;
            let x: OddInt = value.parse()?;
            let chain = alpha_chain(&x)?;
            debug_assert_eq!(alpha_chain_length(&x)?, chain.length_h);
            if format == Format::Json {
                json_line(out, &chain)?;
            } else {
                writeln!(
                    out,
                    "{x}: h={} chain={} exit={}",
                    chain.length_h,
                    join(&chain.chain, " -> "),
                    chain.exit_iterate
                )?;
            }
        }
        Command::Drift {
            terms,
            bound,
            workers,
            format,
        } => {
            allow(format, &[Format::Text, Format::Json])?;
            let series = series_report(terms)?;
            let empirical = empirical_drift(bound, workers)?;
            if format == Format::Json {
                #[derive(Serialize)]
                struct DriftOutput {
                    series: crate::analysis::SeriesReport,
                    empirical: crate::analysis::DriftReport,
                }
                json_line(out, &DriftOutput { series, empirical })?;
            } else {
                writeln!(
                    out,
                    "increase series: terms={} value={} limit={}",
                    series.n_terms, series.increase, series.increase_limit
                )?;
                writeln!(
                    out,
                    "decrease series: terms={} value={} odd_alpha={} even_alpha={} limit={}",
                    series.n_terms,
                    series.decrease,
                    series.decrease_odd_alpha,
                    series.decrease_even_alpha,
                    series.decrease_limit
                )?;
                writeln!(
                    out,
                    "empirical step factor: bound={} samples={} geometric_mean={:.6} mean_alpha={:.6} target={} tolerance={}",
                    empirical.scan_bound,
                    empirical.samples,
                    empirical.empirical_value,
                    empirical.mean_alpha,
                    empirical.target,
                    empirical.tolerance
                )?;
            }
        }
        Command::Density {
            bound,
            max_alpha,
            workers,
            format,
        } => {
            allow(format, &[Format::Text, Format::Csv, Format::Json])?;
            let d = empirical_alpha_density(bound, max_alpha, workers)?;
            match format {
                Format::Json => json_line(out, &d)?,
                _ => {
                    let sep = if format == Format::Csv { "," } else { "\t" };
                    writeln!(out, "alpha{sep}count{sep}predicted{sep}ratio")?;
                    for b in &d.bins {
                        writeln!(
                            out,
                            "{}{sep}{}{sep}{}{sep}{}",
                            b.alpha, b.count, b.predicted, b.ratio
                        )?;
                    }
                }
            }
        }
        Command::ClassRatio {
            bound,
            workers,
            format,
        } => {
            allow(format, &[Format::Text, Format::Json])?;
            let r = empirical_iterate_class_ratio(bound, workers)?;
            if format == Format::Json {
                json_line(out, &r)?;
            } else {
                writeln!(
                    out,
                    "bound={} scanned={} 6m+1={} ({:.6}) 6m+5={} ({:.6})",
                    r.bound, r.scanned, r.count_6m1, r.ratio_6m1, r.count_6m5, r.ratio_6m5
                )?;
            }
        }
        Command::Verify {
            bound,
            workers,
            format,
            budget,
        } => {
            allow(format, &[Format::Text, Format::Json])?;
            let report = verify_theorems_with_budget(bound, workers, max_steps(&budget)?)?;
            if format == Format::Json {
                json_line(out, &report)?;
            } else {
                writeln!(
                    out,
                    "bound={} trajectories={} iterates={} multiple_of_3_iterates={} repeated_values={}",
                    report.bound,
                    report.trajectories,
                    report.iterates_checked,
                    report.starter_iterate_violations,
                    report.duplicate_violations
                )?;
                for w in report
                    .starter_iterate_witnesses
                    .iter()
                    .chain(&report.duplicate_witnesses)
                {
                    writeln!(out, "  witness: start={} value={}", w.start, w.value)?;
                }
            }
        }
        Command::TableExport { table, rows, cols } => {
            tables::write_window_csv(table.into(), rows, cols, &mut *out)?;
        }
    }
    Ok(())
}
