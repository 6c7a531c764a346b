use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use twisted_cubic::group::GroupKind;
use twisted_cubic::orbit::{ObjectKind, PairKind};
use twisted_cubic::report::{self, Format, ReportDocument};
use twisted_cubic::verify::{self, has_full_group, Pipeline, SUPPORTED_Q};
use twisted_cubic::Error;

const EXIT_DIFF: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Orbits and tactical decompositions of the twisted cubic in PG(3,q).
#[derive(Parser)]
#[command(name = "twc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the orbits of points, planes or lines.
    Orbits {
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum)]
        objects: Objects,
        #[arg(long, value_enum, default_value = "critical")]
        group: Group,
        #[command(flatten)]
        out: Output,
    },
    /// Print the (t, b) entries of an orbit incidence table.
    Incidence {
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "critical")]
        group: Group,
        #[command(flatten)]
        out: Output,
    },
    /// Census of critical-form subgroups in the full group.
    Subgroups {
        #[arg(long)]
        q: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Run every check against the reference values.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        q: Option<usize>,
        /// q = 2, 3, 4, plus 5, 7, 8, 9 with --extended.
        #[arg(long)]
        all: bool,
        /// Allow the closed-form checks for q >= 5.
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: OutFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Objects {
    Points,
    Planes,
    Lines,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Critical,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pair {
    PlanePoint,
    LinePoint,
    LinePlane,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Csv,
    Json,
}

impl From<Objects> for ObjectKind {
    fn from(o: Objects) -> Self {
        match o {
            Objects::Points => ObjectKind::Points,
            Objects::Planes => ObjectKind::Planes,
            Objects::Lines => ObjectKind::Lines,
        }
    }
}

impl From<Group> for GroupKind {
    fn from(g: Group) -> Self {
        match g {
            Group::Critical => GroupKind::Critical,
            Group::Full => GroupKind::Full,
        }
    }
}

impl From<Pair> for PairKind {
    fn from(p: Pair) -> Self {
        match p {
            Pair::PlanePoint => PairKind::PlanePoint,
            Pair::LinePoint => PairKind::LinePoint,
            Pair::LinePlane => PairKind::LinePlane,
        }
    }
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Csv => Format::Csv,
            OutFormat::Json => Format::Json,
        }
    }
}

enum Failure {
    Usage(String),
    Diff(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Constancy { .. } | Error::Labeling(_) | Error::Taxonomy { .. } => Failure::Diff(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn supported(q: usize) -> Result<(), Failure> {
    if SUPPORTED_Q.contains(&q) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("q = {q} is not supported; use one of {SUPPORTED_Q:?}")))
    }
}

fn needs_full(q: usize, group: GroupKind) -> Result<(), Failure> {
    if group == GroupKind::Full && !has_full_group(q) {
        return Err(Failure::Usage(format!("the full group is only available for q = 2, 3, 4 (got q = {q})")));
    }
    Ok(())
}

fn emit(doc: &ReportDocument, out: &Output) -> Result<(), Failure> {
    let text = doc.render(out.format.into())?;
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Orbits { q, objects, group, out } => {
            supported(q)?;
            needs_full(q, group.into())?;
            let p = Pipeline::new(q)?;
            emit(&report::orbits_document(&p, objects.into(), group.into())?, &out)?;
            Ok(true)
        }
        Command::Incidence { q, pair, group, out } => {
            supported(q)?;
            needs_full(q, group.into())?;
            let p = Pipeline::new(q)?;
            emit(&report::incidence_document(&p, pair.into(), group.into())?, &out)?;
            Ok(true)
        }
        Command::Subgroups { q, out } => {
            supported(q)?;
            needs_full(q, GroupKind::Full)?;
            let doc = report::subgroups_document(&Pipeline::new(q)?)?;
            emit(&doc, &out)?;
            Ok(doc.passed())
        }
        Command::Verify { q, all, extended, out } => {
            let qs: Vec<usize> = match q {
                Some(q) => {
                    supported(q)?;
                    if !has_full_group(q) && !extended {
                        return Err(Failure::Usage(format!("checks for q = {q} need --extended")));
                    }
                    vec![q]
                }
                None if extended => SUPPORTED_Q.to_vec(),
                None => SUPPORTED_Q.iter().copied().filter(|&q| has_full_group(q)).collect(),
            };
            debug_assert!(all || q.is_some());
            let reports = qs.into_iter().map(verify::verify).collect::<Result<Vec<_>, _>>()?;
            let doc = report::verify_document(&reports);
            emit(&doc, &out)?;
            Ok(doc.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_DIFF),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Diff(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(EXIT_DIFF)
        }
    }
}
