use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hilbert_core::dot::{to_dot, DotKind};
use hilbert_core::enumeration::{enumerate_algebras_with_bound, AlgebraCatalog, DEFAULT_BOUND};
use hilbert_core::{parse_suites, verify, AlgebraFile, Error, HilbertAlgebra};

mod analyze;

/// Finite Hilbert algebras: validation, analysis, exhaustive verification.
#[derive(Parser)]
#[command(name = "hilbert", version)]
struct Cli {
    /// Worker threads for parallel work (0 = one per core).
    #[arg(long, global = true, env = "HILBERT_JOBS", default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a table against the Hilbert algebra axioms.
    Validate { path: PathBuf },
    /// Print derived structures of one algebra.
    Analyze(AnalyzeArgs),
    /// Run verification suites on a file or on enumerated catalogs.
    Verify(VerifyArgs),
    /// Write a lattice as a Graphviz digraph.
    Export {
        path: PathBuf,
        /// hasse, ce or filters
        #[arg(long)]
        dot: DotKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List all algebras of a size up to isomorphism.
    Enumerate {
        n: usize,
        /// Include every size from 1 to n.
        #[arg(long)]
        up_to: bool,
        /// Write one JSON file per algebra and a summary here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
}

#[derive(Args)]
pub struct AnalyzeArgs {
    path: PathBuf,
    /// Closure endomorphisms with kernels and fixpoint sets.
    #[arg(long)]
    ce: bool,
    /// Filters, monomiality and the filter lattice.
    #[arg(long)]
    filters: bool,
    /// All multipliers.
    #[arg(long)]
    multipliers: bool,
    /// The adjoint semilattice and its subtraction.
    #[arg(long)]
    adjoint: bool,
    /// The minimal Brouwerian extension.
    #[arg(long)]
    extension: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Algebra file to verify.
    #[arg(conflicts_with = "enumerate", required_unless_present = "enumerate")]
    path: Option<PathBuf>,
    /// Verify every algebra of this size.
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// With --enumerate, verify every size from 1 to N.
    #[arg(long, requires = "enumerate")]
    up_to: bool,
    /// Suites to run, comma separated, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: usize,
    #[arg(long)]
    json: bool,
    /// Include per-check wall times (output is then not reproducible).
    #[arg(long)]
    timing: bool,
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Malformed(_) | Error::BoundExceeded { .. } | Error::Precondition(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn load(path: &Path) -> Result<AlgebraFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    AlgebraFile::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_valid(path: &Path) -> Result<(AlgebraFile, HilbertAlgebra), Failure> {
    let file = load(path)?;
    match file.to_algebra() {
        Ok(alg) => Ok((file, alg)),
        Err(Error::Axioms(v)) => Err(Failure {
            code: 2,
            message: format!("{}: not a Hilbert algebra ({} axiom violation(s)); run `hilbert validate`", path.display(), v.len()),
        }),
        Err(e) => Err(Failure::input(format!("{}: {e}", path.display()))),
    }
}

fn validate(path: &Path, out: &mut impl Write) -> Result<u8, Failure> {
    let file = load(path)?;
    match file.to_algebra() {
        Ok(alg) => {
            writeln!(out, "valid: {} element(s), unit {}", alg.len(), file.label(alg.one()))?;
            Ok(0)
        }
        Err(Error::Axioms(violations)) => {
            for v in &violations {
                writeln!(out, "{}", v.display_with(file.labeller()))?;
            }
            writeln!(out, "invalid: {} axiom violation(s)", violations.len())?;
            Ok(1)
        }
        Err(e) => Err(Failure::input(format!("{}: {e}", path.display()))),
    }
}

fn catalogs(n: usize, up_to: bool, bound: usize) -> Result<Vec<AlgebraCatalog>, Failure> {
    let sizes = if up_to { 1..=n } else { n..=n };
    let mut out = Vec::new();
    for k in sizes {
        out.push(enumerate_algebras_with_bound(k, bound)?);
    }
    Ok(out)
}

fn run_verify(args: &VerifyArgs, out: &mut impl Write) -> Result<u8, Failure> {
    let suites = parse_suites(&args.suite).map_err(Failure::input)?;
    let algebras = match (&args.path, args.enumerate) {
        (Some(path), _) => {
            let (_, alg) = load_valid(path)?;
            vec![(path.display().to_string(), alg)]
        }
        (None, Some(n)) => {
            let mut all = Vec::new();
            for cat in catalogs(n, args.up_to, args.bound)? {
                if !args.json {
                    writeln!(
                        out,
                        "catalog n={}: {} algebra(s) from {} labelled table(s)",
                        cat.size(),
                        cat.len(),
                        cat.labelled_count()
                    )?;
                }
                all.extend(cat.named());
            }
            all
        }
        (None, None) => return Err(Failure::input("give a file or --enumerate N")),
    };
    let report = verify(&algebras, &suites);
    if args.json {
        let text = serde_json::to_string_pretty(&report.to_json(args.timing)).expect("serializable");
        writeln!(out, "{text}")?;
    } else {
        write!(out, "{}", report.render_text(args.timing))?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn export(path: &Path, kind: DotKind, dest: Option<&Path>, out: &mut impl Write) -> Result<u8, Failure> {
    let (file, alg) = load_valid(path)?;
    let dot = to_dot(&alg, kind, &file.labeller())?;
    match dest {
        Some(p) => fs::write(p, dot).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
        None => write!(out, "{dot}")?,
    }
    Ok(0)
}

fn enumerate(n: usize, up_to: bool, dest: Option<&Path>, bound: usize, out: &mut impl Write) -> Result<u8, Failure> {
    let cats = catalogs(n, up_to, bound)?;
    let mut listing = String::new();
    let mut summary = String::from("n  algebras  labelled  implication  semilattice\n");
    for cat in &cats {
        let counts = cat.class_counts();
        summary.push_str(&format!(
            "{:<2} {:>8}  {:>8}  {:>11}  {:>11}\n",
            cat.size(),
            cat.len(),
            cat.labelled_count(),
            counts["implication algebras"],
            counts["implicative semilattices"]
        ));
        for (i, (alg, s)) in cat.algebras().iter().zip(cat.stats()).enumerate() {
            let mut classes = Vec::new();
            if s.implication_algebra {
                classes.push("implication");
            }
            if s.implicative_semilattice {
                classes.push("semilattice");
            }
            listing.push_str(&format!(
                "{}  filters={} M={} CE={} aut={} {}\n",
                cat.subject(i),
                s.filters,
                s.multipliers,
                s.closure_endomorphisms,
                s.automorphisms,
                classes.join(",")
            ));
            if let Some(dir) = dest {
                let path = dir.join(format!("n{}-{}.json", cat.size(), i));
                fs::write(&path, AlgebraFile::from_algebra(alg, None).to_json())
                    .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            }
        }
    }
    if let Some(dir) = dest {
        fs::write(dir.join("summary.txt"), &summary).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
    }
    write!(out, "{listing}\n{summary}")?;
    Ok(0)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate { path } => validate(&path, out),
        Command::Analyze(args) => {
            let (file, alg) = load_valid(&args.path)?;
            analyze::run(&args, &file, &alg, out)?;
            Ok(0)
        }
        Command::Verify(args) => run_verify(&args, out),
        Command::Export { path, dot, out: dest } => export(&path, dot, dest.as_deref(), out),
        Command::Enumerate { n, up_to, out: dest, bound } => {
            if let Some(dir) = &dest {
                fs::create_dir_all(dir).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
            }
            enumerate(n, up_to, dest.as_deref(), bound, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build();
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start {} worker(s): {e}", cli.jobs);
            return ExitCode::from(2);
        }
    };
    // Output is buffered so the work can run on the pool's threads.
    let mut buf = Vec::new();
    let result = pool.install(|| run(cli, &mut buf));
    let flushed = io::stdout().lock().write_all(&buf);
    match result {
        Ok(code) if flushed.is_ok() => ExitCode::from(code),
        Ok(_) => ExitCode::from(2),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
