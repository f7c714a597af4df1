use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cosys::catalog;
use cosys::cosystole::{self, Certificate, WeightVector};
use cosys::graphs::{census_msr_cographic, generate_cubic_connected};
use cosys::BinaryMatroid;

use cosys_cli::error::CliError;
use cosys_cli::json::InvariantReport;
use cosys_cli::report::{self, VerificationReport};

#[derive(Parser)]
#[command(name = "cosys", version, about = "Exact weighted cosystole invariants of binary matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries or export one as a matroid file.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Compute sys* or sys3*, or a weighted value with --weights.
    Invariant(InvariantArgs),
    /// Print the cocircuits, one per line.
    Cocircuits(Source),
    /// Print a minor as a matroid file.
    Minor(Source),
    /// Search for an isomorphism between two matroids.
    Iso(IsoArgs),
    /// Print the cubic census on the given number of vertices.
    Census(CensusArgs),
    /// Check a certificate file against a matroid.
    Check(CheckArgs),
    /// Run verification suites and print the report.
    Verify {
        #[arg(value_parser = ["values", "monotonicity", "census", "lemmaG7", "constructions", "inequalities", "lp", "weights", "rank4", "all"])]
        suite: String,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Export { name: String },
}

#[derive(Args)]
struct Source {
    /// Catalog entry name.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    name: Option<String>,
    /// Matroid file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Elements to delete, applied before contractions.
    #[arg(long, num_args = 1..)]
    delete: Vec<String>,
    /// Elements to contract.
    #[arg(long, num_args = 1..)]
    contract: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sys,
    Sys3,
}

#[derive(Args)]
struct InvariantArgs {
    kind: Kind,
    #[command(flatten)]
    source: Source,
    /// Weight file: `<label> <p/q>` per line.
    #[arg(long)]
    weights: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct IsoArgs {
    /// Catalog name or matroid file.
    #[arg(long)]
    a: String,
    /// Catalog name or matroid file.
    #[arg(long)]
    b: String,
    /// Elements of `a` to delete first.
    #[arg(long, num_args = 1..)]
    delete: Vec<String>,
    /// Elements of `a` to contract first.
    #[arg(long, num_args = 1..)]
    contract: Vec<String>,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    vertices: usize,
    /// All connected cubic graphs instead of the 3-edge-connected non-planar ones.
    #[arg(long)]
    all_cubic: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    certificate: PathBuf,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn with_minors(mut m: BinaryMatroid, delete: &[String], contract: &[String]) -> Result<BinaryMatroid, CliError> {
    for e in delete {
        m = m.delete_label(e)?;
    }
    for e in contract {
        m = m.contract_label(e)?;
    }
    Ok(m)
}

/// The matroid and a display name carrying the minor operations.
fn load(src: &Source) -> Result<(String, BinaryMatroid), CliError> {
    let (mut name, m) = match (&src.name, &src.file) {
        (Some(n), _) => (n.clone(), catalog::get(n)?.matroid),
        (None, Some(p)) => (p.display().to_string(), BinaryMatroid::parse(&read(p)?)?),
        (None, None) => return Err(CliError::input("need --name or --file")),
    };
    for e in &src.delete {
        name.push_str(&format!("\\{e}"));
    }
    for e in &src.contract {
        name.push_str(&format!("/{e}"));
    }
    Ok((name, with_minors(m, &src.delete, &src.contract)?))
}

/// A catalog name, or else a matroid file.
fn load_named_or_file(s: &str) -> Result<BinaryMatroid, CliError> {
    if catalog::NAMES.contains(&s) {
        return Ok(catalog::get(s)?.matroid);
    }
    let p = Path::new(s);
    if p.is_file() {
        return Ok(BinaryMatroid::parse(&read(p)?)?);
    }
    Err(CliError::input(format!("{s:?} is neither a catalog name nor a file")))
}

fn invariant(args: &InvariantArgs) -> Result<String, CliError> {
    let (name, m) = load(&args.source)?;
    let start = Instant::now();
    if let Some(path) = &args.weights {
        let mu = WeightVector::parse(&m, &read(path)?)?;
        let (word, value) = match args.kind {
            Kind::Sys => ("sys", cosystole::sys_weighted(&m, &mu)?),
            Kind::Sys3 => ("sys3", cosystole::sys3_weighted(&m, &mu)?),
        };
        let ms = start.elapsed().as_millis() as u64;
        return Ok(if args.json {
            InvariantReport::weighted(&name, word, &m, &mu, value.to_string(), ms).to_json() + "\n"
        } else {
            format!("{value}\n")
        });
    }
    let cert = match args.kind {
        Kind::Sys => Certificate::from_sys(&m, &cosystole::sys_star(&m)?),
        Kind::Sys3 => Certificate::from_sys3(&m, &cosystole::sys3_star(&m)?),
    };
    let ms = start.elapsed().as_millis() as u64;
    Ok(if args.json {
        InvariantReport::from_certificate(&name, &m, &cert, ms).to_json() + "\n"
    } else {
        cert.to_text(&m)
    })
}

fn catalog_cmd(action: &CatalogAction) -> Result<String, CliError> {
    match action {
        CatalogAction::List => {
            let mut out = String::new();
            for e in catalog::all() {
                let sys3 = e.expected_sys3.map_or("-".to_string(), |v| v.to_string());
                let cogirth = e.expected_cogirth.map_or("-".to_string(), |g| g.to_string());
                out.push_str(&format!(
                    "{} rank={} elements={} sys3_star={sys3} cogirth={cogirth}\n",
                    e.name,
                    e.matroid.rank(),
                    e.matroid.len()
                ));
            }
            Ok(out)
        }
        CatalogAction::Export { name } => Ok(catalog::get(name)?.matroid.to_text()),
    }
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let out = match cli.command {
        Command::Catalog { action } => catalog_cmd(&action)?,
        Command::Invariant(args) => invariant(&args)?,
        Command::Cocircuits(src) => {
            let (_, m) = load(&src)?;
            m.cocircuits().iter().map(|&c| m.format_set(c) + "\n").collect()
        }
        Command::Minor(src) => load(&src)?.1.to_text(),
        Command::Iso(args) => {
            let a = with_minors(load_named_or_file(&args.a)?, &args.delete, &args.contract)?;
            let b = load_named_or_file(&args.b)?;
            match a.isomorphism(&b) {
                Some(phi) => phi
                    .iter()
                    .enumerate()
                    .map(|(e, &f)| format!("{} -> {}\n", a.labels()[e], b.labels()[f]))
                    .collect(),
                None => return Ok(("not isomorphic\n".into(), false)),
            }
        }
        Command::Census(args) => {
            let graphs = if args.all_cubic {
                generate_cubic_connected(args.vertices)?
            } else {
                census_msr_cographic(args.vertices)?
            };
            graphs.iter().map(|g| g.to_text()).collect::<Vec<_>>().join("\n")
        }
        Command::Check(args) => {
            let (_, m) = load(&args.source)?;
            let cert = Certificate::parse(&m, &read(&args.certificate)?)?;
            let ok = cert.verify(&m)?;
            return Ok((format!("certificate {}\n", if ok { "valid" } else { "invalid" }), ok));
        }
        Command::Verify { suite } => {
            let mut r = VerificationReport::default();
            report::run(&suite, &mut r);
            return Ok((r.to_string(), r.overall()));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
