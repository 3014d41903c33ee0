//! `octoplane`: certificates for composition algebras, Albert algebras,
//! their projective planes and the exceptional Lie algebras they carry.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 for
//! usage errors.

mod checks;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use octoplane::albert::JordanTarget;
use octoplane::compalg::{Family, Law};
use octoplane::planes::PlaneKind;

use report::{Config, Report};

#[derive(Parser, Debug)]
#[command(name = "octoplane", version, about = "Certify octonionic algebras, planes and Lie algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of sampled elements, vectors or point pairs.
    #[arg(long, global = true, default_value_t = 500)]
    samples: usize,
    /// Relative kernel thresholds for the Lie certificates.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [1e-6, 1e-8, 1e-10])]
    tolerances: Vec<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eight-dimensional composition algebras.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Albert algebras.
    #[command(subcommand)]
    Albert(AlbertCmd),
    /// Incidence planes in Veronese coordinates.
    #[command(subcommand)]
    Planes(PlanesCmd),
    /// Lie algebra certificates.
    #[command(subcommand)]
    Lie(LieCmd),
    /// Run every check suite.
    Report,
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Decide algebraic laws and compare with the expected table.
    Verify {
        #[arg(long, value_parser = parse_family)]
        kind: Family,
        /// One law; all laws when omitted.
        #[arg(long, value_parser = parse_law)]
        law: Option<Law>,
        /// Use the complexified algebra.
        #[arg(long)]
        complex: bool,
    },
    /// Print the canonical structure-constant file.
    Table {
        #[arg(long, value_parser = parse_family)]
        kind: Family,
        #[arg(long)]
        complex: bool,
    },
    /// Read a structure-constant file and verify the composition law.
    Ingest { path: PathBuf },
}

#[derive(Subcommand, Debug)]
enum AlbertCmd {
    /// Run the identity suite.
    Check {
        #[arg(long, value_parser = parse_jordan)]
        jordan: JordanTarget,
    },
    /// Norm, trace, quadratic trace, sharp and rank of one element.
    Element { text: String },
}

#[derive(Subcommand, Debug)]
enum PlanesCmd {
    /// Scan the two-point axiom and exhibit a quadrangle.
    Axioms {
        #[arg(long, value_parser = parse_plane)]
        plane: PlaneKind,
    },
    /// Push chart samples through the isomorphism to the Hurwitz plane.
    Iso {
        #[arg(long, value_parser = parse_plane)]
        plane: PlaneKind,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum LieKind {
    Der,
    F4,
    E6,
}

#[derive(Subcommand, Debug)]
enum LieCmd {
    /// Dimension, closure and Killing-signature certificate.
    Cert {
        #[arg(long, value_enum)]
        target: LieKind,
        /// Albert algebra for `f4` and `e6`.
        #[arg(long, value_parser = parse_jordan)]
        jordan: Option<JordanTarget>,
        /// Eight-dimensional algebra for `der`.
        #[arg(long, value_parser = parse_family)]
        algebra: Option<Family>,
    },
    /// Exact lower bounds and containment certificates.
    Inclusions {
        #[arg(long, value_parser = parse_jordan)]
        jordan: JordanTarget,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_law(s: &str) -> Result<Law, String> {
    s.parse()
}

fn parse_jordan(s: &str) -> Result<JordanTarget, String> {
    s.parse().map_err(|e: octoplane::albert::AlbertError| e.to_string())
}

fn parse_plane(s: &str) -> Result<PlaneKind, String> {
    s.parse().map_err(|e: octoplane::planes::PlaneError| e.to_string())
}

/// A request that cannot be run as given.
#[derive(Debug)]
pub struct Usage(pub String);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Usage> {
    let g = &cli.global;
    if g.tolerances.is_empty() || g.tolerances.iter().any(|t| !(*t > 0.0)) {
        return Err(Usage("tolerances must be positive".into()));
    }
    let start = Instant::now();
    let (command, selectors, checks) = match &cli.command {
        Command::Algebra(AlgebraCmd::Verify { kind, law, complex }) => (
            "algebra verify",
            vec![kind.short().to_string()],
            checks::algebra_verify(*kind, *law, *complex, g.samples, g.seed),
        ),
        Command::Algebra(AlgebraCmd::Table { kind, complex }) => {
            return emit_raw(g, &checks::algebra_table(*kind, *complex));
        }
        Command::Algebra(AlgebraCmd::Ingest { path }) => {
            ("algebra ingest", vec![path.display().to_string()], checks::algebra_ingest(path)?)
        }
        Command::Albert(AlbertCmd::Check { jordan }) => {
            ("albert check", vec![jordan.to_string()], checks::albert_check(*jordan, g.samples, g.seed))
        }
        Command::Albert(AlbertCmd::Element { text }) => {
            ("albert element", vec![text.clone()], checks::albert_element(text)?)
        }
        Command::Planes(PlanesCmd::Axioms { plane }) => {
            ("planes axioms", vec![plane.selector()], checks::planes_axioms(*plane, g.samples, g.seed))
        }
        Command::Planes(PlanesCmd::Iso { plane }) => {
            ("planes iso", vec![plane.selector()], checks::planes_iso(*plane, g.samples, g.seed)?)
        }
        Command::Lie(LieCmd::Cert { target, jordan, algebra }) => {
            let t = checks::lie_target(*target, *jordan, *algebra)?;
            ("lie cert", vec![t.selector()], checks::lie_cert(t, &g.tolerances))
        }
        Command::Lie(LieCmd::Inclusions { jordan }) => {
            ("lie inclusions", vec![jordan.to_string()], checks::lie_inclusions(*jordan, &g.tolerances)?)
        }
        Command::Report => ("report", Vec::new(), checks::everything(g.samples, g.seed, &g.tolerances)),
    };
    let config = Config {
        command: command.to_string(),
        selectors,
        samples: g.samples,
        seed: g.seed,
        tolerances: g.tolerances.clone(),
    };
    let report = Report::new(config, checks, start.elapsed().as_secs_f64());
    let text = match g.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Text => report.to_text(),
    };
    emit_raw(g, &text)?;
    Ok(ExitCode::from(if report.pass { 0 } else { 1 }))
}

fn emit_raw(g: &Global, text: &str) -> Result<ExitCode, Usage> {
    match &g.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Usage(format!("cannot write {}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
