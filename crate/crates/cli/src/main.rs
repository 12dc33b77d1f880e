//! `rankforge`: evaluate q-series expressions, dump rank tables and run the
//! identity catalog.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rankforge_core::catalog::{self, Status, VerificationReport, VerifyOptions};
use rankforge_core::expr::{eval_str, EvalContext};
use rankforge_core::rank::{
    d_k0, eta0_moment, eta_moment, p_omega_series, write_csv, CsvRow, OddRankTable, PartitionTable,
    RankTable,
};
use rankforge_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "rankforge",
    version,
    about = "Exact q-series, rank tables and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the identity catalog (or the entries matching --filter).
    Verify(VerifyArgs),
    /// Print the coefficients of an expression as `exp: coeff` lines.
    Series {
        expr: String,
        #[arg(long, default_value_t = 20)]
        order: i64,
    },
    /// Dump a table as CSV.
    Table(TableArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Select entries whose id or label starts with this prefix.
    #[arg(long)]
    filter: Option<String>,
    /// Truncation order for every entry (default: each entry's own order).
    #[arg(long)]
    order: Option<i64>,
    #[arg(long = "nmax", default_value_t = 600)]
    n_max: i64,
    #[arg(long = "cap-enum", default_value_t = 40)]
    cap_enum: i64,
    #[arg(long = "cap-marked", default_value_t = 25)]
    cap_marked: i64,
    /// Worker threads; 0 picks one per core.
    #[arg(long, env = "RANKFORGE_THREADS", default_value_t = 0)]
    threads: usize,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Record wall-clock time per entry (makes reports non-reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    P,
    Rank,
    OddRank,
    Pomega,
    Moments,
    Marked,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(value_enum)]
    kind: TableKind,
    #[arg(long = "nmax", default_value_t = 50)]
    n_max: i64,
    /// Moment order for `moments`, number of marks for `marked`.
    #[arg(long, default_value_t = 2)]
    k: u32,
    #[arg(long = "cap-enum", default_value_t = 40)]
    cap_enum: u32,
    #[arg(long = "cap-marked", default_value_t = 25)]
    cap_marked: u32,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: format!("i/o error: {e}"),
        }
    }
}

fn config_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(&args),
        Command::Series { expr, order } => cmd_series(&expr, order),
        Command::Table(args) => cmd_table(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => {
            Box::new(BufWriter::new(File::create(p).map_err(|e| {
                config_error(format!("cannot create {}: {e}", p.display()))
            })?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn config_header(args: &VerifyArgs) -> Vec<String> {
    vec![
        format!("filter: {}", args.filter.as_deref().unwrap_or("(all)")),
        format!(
            "order: {}",
            args.order
                .map_or("per-entry".to_string(), |t| t.to_string())
        ),
        format!("nMax: {}", args.n_max),
        format!("capEnum: {}", args.cap_enum),
        format!("capMarked: {}", args.cap_marked),
        format!("threads: {}", args.threads),
        format!(
            "output: {}",
            args.output
                .as_ref()
                .map_or("(stdout)".to_string(), |p| p.display().to_string())
        ),
        format!("format: {:?}", args.format).to_lowercase(),
    ]
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    for (name, v) in [
        ("--nmax", args.n_max),
        ("--cap-enum", args.cap_enum),
        ("--cap-marked", args.cap_marked),
    ] {
        if v <= 0 {
            return Err(config_error(format!("{name} must be positive, got {v}")));
        }
    }
    if let Some(t) = args.order {
        if t <= 0 {
            return Err(config_error(format!("--order must be positive, got {t}")));
        }
    }
    let header = config_header(args);
    for line in &header {
        eprintln!("# {line}");
    }
    let opts = VerifyOptions {
        order: args.order,
        n_max: args.n_max as usize,
        enum_cap: args.cap_enum as u32,
        threads: args.threads,
        timing: args.timing,
    };
    let reports = catalog::verify_all(args.filter.as_deref(), &opts)?;
    let mut out = open_output(&args.output)?;
    match args.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &reports)
                .map_err(|e| config_error(format!("json: {e}")))?;
            writeln!(out)?;
        }
        Format::Csv => write_report_csv(&reports, &mut out)?,
        Format::Text => write_report_text(&header, &reports, &mut out)?,
    }
    out.flush()?;
    let failed = reports
        .iter()
        .filter(|r| r.status == Status::Failed)
        .count();
    eprintln!(
        "{} entries: {} verified, {} reported, {failed} failed",
        reports.len(),
        reports
            .iter()
            .filter(|r| r.status == Status::Verified)
            .count(),
        reports
            .iter()
            .filter(|r| r.status == Status::Reported)
            .count(),
    );
    Ok(if failed == 0 { 0 } else { 1 })
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Verified => "verified",
        Status::Failed => "failed",
        Status::Reported => "reported",
    }
}

fn write_report_csv(reports: &[VerificationReport], out: &mut dyn Write) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| config_error(format!("csv: {e}"));
    w.write_record(["id", "status", "lo", "hi", "exp", "lhs", "rhs", "wallMs"])
        .map_err(io)?;
    for r in reports {
        let (exp, lhs, rhs) = match &r.first_discrepancy {
            Some(d) => (d.exp.to_string(), d.lhs.clone(), d.rhs.clone()),
            None => Default::default(),
        };
        w.write_record([
            r.id.clone(),
            status_str(r.status).to_string(),
            r.window[0].to_string(),
            r.window[1].to_string(),
            exp,
            lhs,
            rhs,
            r.wall_ms.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

fn write_report_text(
    header: &[String],
    reports: &[VerificationReport],
    out: &mut dyn Write,
) -> io::Result<()> {
    for line in header {
        writeln!(out, "# {line}")?;
    }
    for r in reports {
        write!(
            out,
            "{:<9} {} [{}, {})",
            status_str(r.status),
            r.id,
            r.window[0],
            r.window[1]
        )?;
        if let Some(d) = &r.first_discrepancy {
            write!(
                out,
                " first difference at q^{}: {} vs {}",
                d.exp, d.lhs, d.rhs
            )?;
        }
        if r.wall_ms > 0 {
            write!(out, " {}ms", r.wall_ms)?;
        }
        writeln!(out)?;
        for n in &r.notes {
            writeln!(out, "          {n}")?;
        }
    }
    Ok(())
}

fn cmd_series(src: &str, order: i64) -> Result<u8, Failure> {
    if order <= 0 {
        return Err(config_error(format!(
            "--order must be positive, got {order}"
        )));
    }
    let ctx = EvalContext::default();
    let s = eval_str(src, &ctx, order)?;
    let mut out = BufWriter::new(io::stdout().lock());
    for n in s.min_exp()..order {
        writeln!(out, "{n}: {}", s.coeff(n)?)?;
    }
    out.flush()?;
    Ok(0)
}

fn cmd_table(args: &TableArgs) -> Result<u8, Failure> {
    if args.n_max < 0 {
        return Err(config_error(format!(
            "--nmax must be nonnegative, got {}",
            args.n_max
        )));
    }
    let n_max = args.n_max as usize;
    let mut rows = Vec::new();
    match args.kind {
        TableKind::P => {
            let p = PartitionTable::build(n_max)?;
            for n in 0..=args.n_max {
                rows.push(CsvRow::new("p", None, n, p.get(n)?));
            }
        }
        TableKind::Rank => {
            let t = RankTable::build(n_max)?;
            for n in 0..=n_max {
                for (m, v) in t.counts().row(n) {
                    rows.push(CsvRow::new("rank", Some(m), n as i64, v));
                }
            }
        }
        TableKind::OddRank => {
            let t = OddRankTable::build(n_max, args.cap_enum)?;
            for n in 0..=n_max {
                for (m, v) in t.counts().row(n) {
                    rows.push(CsvRow::new("odd-rank", Some(m), n as i64, v));
                }
            }
        }
        TableKind::Pomega => {
            let s = p_omega_series(args.n_max + 1);
            for n in 0..=args.n_max {
                rows.push(CsvRow::new("pomega", None, n, s.coeff(n)?));
            }
        }
        TableKind::Moments => {
            let rank = RankTable::build(n_max)?;
            let odd = OddRankTable::build(n_max, args.cap_enum)?;
            let k = Some(args.k as i64);
            for n in 0..=args.n_max {
                rows.push(CsvRow::new("eta", k, n, eta_moment(&rank, args.k, n)?));
                if n >= 1 {
                    rows.push(CsvRow::new("eta0", k, n, eta0_moment(&odd, args.k, n)?));
                }
            }
        }
        TableKind::Marked => {
            if args.k == 0 {
                return Err(config_error("--k must be at least 1 for marked".into()));
            }
            for n in 1..=args.n_max {
                let v = d_k0(args.k as usize, n as u32, args.cap_marked)?;
                rows.push(CsvRow::new("marked", Some(args.k as i64), n, v));
            }
        }
    }
    let out = open_output(&args.output)?;
    write_csv(&rows, out).map_err(|e| config_error(format!("csv: {e}")))?;
    Ok(0)
}
