//! Subcommand implementations. Each returns the text to print and an exit
//! status: 0 success or affirmative verdict, 1 usage, I/O or parse failure,
//! 2 negative verdict, 3 unknown.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use lts_core::catalog;
use lts_core::classify::{self, Verdict, DEFAULT_BUDGET};
use lts_core::embed::{lts_radical, standard_embedding};
use lts_core::{Error, TripleSystem};

use crate::format::{parse_lie, parse_lts, write_lie, write_lts, LieFile};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_NEGATIVE: u8 = 2;
pub const EXIT_UNKNOWN: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "lts", version, about = "Exact computations with Lie triple systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the defining identities of an LTS file.
    Check { path: PathBuf },
    /// Write the standard embedding as a LIE file.
    Embed {
        path: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Print the derived series dimensions and solvability.
    Series { path: PathBuf },
    /// Print a basis of the radical.
    Radical { path: PathBuf },
    /// Print the invariant fingerprint.
    Fingerprint { path: PathBuf },
    /// Match against the catalog.
    Classify {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Decide whether two systems are isomorphic.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// List catalog labels or dump one entry.
    Catalog(CatalogArgs),
    /// Verify the Jacobi identity and the grading of a LIE file.
    LieCheck { path: PathBuf },
    /// Recover the LTS on the odd part of a graded LIE file.
    LieToLts {
        path: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long, conflicts_with = "dump")]
    pub list: bool,
    #[arg(long, value_name = "LABEL")]
    pub dump: Option<String>,
    #[arg(short, requires = "dump")]
    pub o: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self::with_code(stdout, EXIT_OK)
    }

    fn with_code(stdout: String, code: u8) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn failure(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Self {
            stdout: String::new(),
            stderr,
            code: EXIT_FAILURE,
        }
    }
}

type Step<T> = Result<T, Outcome>;

fn read(path: &Path) -> Step<String> {
    fs::read_to_string(path).map_err(|e| Outcome::failure(format!("{}: {e}", path.display())))
}

fn load_lts(path: &Path) -> Step<TripleSystem> {
    parse_lts(&read(path)?).map_err(|e| Outcome::failure(format!("{}: {e}", path.display())))
}

fn load_lie(path: &Path) -> Step<LieFile> {
    parse_lie(&read(path)?).map_err(|e| Outcome::failure(format!("{}: {e}", path.display())))
}

fn core(e: Error) -> Outcome {
    Outcome::failure(e.to_string())
}

/// Writes `text` to `out` if given, otherwise returns it for stdout.
fn emit(text: String, out: Option<&Path>) -> Outcome {
    match out {
        None => Outcome::ok(text),
        Some(p) => match fs::write(p, text) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => Outcome::failure(format!("{}: {e}", p.display())),
        },
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let step = match &cli.command {
        Command::Check { path } => check(path),
        Command::Embed { path, o } => embed(path, o.as_deref()),
        Command::Series { path } => series(path),
        Command::Radical { path } => radical(path),
        Command::Fingerprint { path } => fingerprint(path),
        Command::Classify { path, budget } => classify_cmd(path, *budget),
        Command::Iso { a, b, budget } => iso(a, b, *budget),
        Command::Catalog(args) => catalog_cmd(args),
        Command::LieCheck { path } => lie_check(path),
        Command::LieToLts { path, o } => lie_to_lts(path, o.as_deref()),
    };
    step.unwrap_or_else(|e| e)
}

fn check(path: &Path) -> Step<Outcome> {
    let t = load_lts(path)?;
    Ok(match t.check_axioms() {
        Ok(()) => Outcome::ok("valid\n".into()),
        Err(v) => Outcome::with_code(format!("{v}\n"), EXIT_NEGATIVE),
    })
}

fn embed(path: &Path, out: Option<&Path>) -> Step<Outcome> {
    let e = standard_embedding(&load_lts(path)?).map_err(core)?;
    Ok(emit(write_lie(&e.algebra, Some(&e.grading)), out))
}

fn series(path: &Path) -> Step<Outcome> {
    let s = load_lts(path)?.full_derived_series();
    let dims: Vec<String> = s.dims().iter().map(ToString::to_string).collect();
    Ok(Outcome::ok(format!(
        "dims: {}\nsolvable: {}\n",
        dims.join(" "),
        if s.solvable { "yes" } else { "no" }
    )))
}

fn radical(path: &Path) -> Step<Outcome> {
    let r = lts_radical(&load_lts(path)?).map_err(core)?;
    let mut text = format!("dim: {}\n", r.dim());
    for v in r.basis_vectors() {
        let row: Vec<String> = v.iter().map(ToString::to_string).collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    Ok(Outcome::ok(text))
}

fn fingerprint(path: &Path) -> Step<Outcome> {
    let f = classify::fingerprint(&load_lts(path)?).map_err(core)?;
    Ok(Outcome::ok(f.to_string()))
}

fn classify_cmd(path: &Path, budget: u64) -> Step<Outcome> {
    let t = load_lts(path)?;
    let labels = classify::classify_with_budget(&t, budget).map_err(core)?;
    if labels.is_empty() {
        let f = classify::fingerprint(&t).map_err(core)?;
        return Ok(Outcome {
            stdout: "no match\n".into(),
            stderr: f.to_string(),
            code: EXIT_NEGATIVE,
        });
    }
    Ok(Outcome::ok(labels.iter().map(|l| format!("{l}\n")).collect()))
}

fn iso(a: &Path, b: &Path, budget: u64) -> Step<Outcome> {
    let (ta, tb) = (load_lts(a)?, load_lts(b)?);
    let r = classify::isomorphic(&ta, &tb, budget).map_err(core)?;
    Ok(match r.verdict {
        Verdict::Isomorphic => {
            let w = r.witness.expect("isomorphic verdicts carry a witness");
            Outcome::ok(format!("isomorphic\n{w}"))
        }
        Verdict::NonIsomorphic => Outcome::with_code(
            format!(
                "non-isomorphic separator={}\n",
                r.separator.expect("non-isomorphic verdicts name a field")
            ),
            EXIT_NEGATIVE,
        ),
        Verdict::Unknown => Outcome::with_code("unknown\n".into(), EXIT_UNKNOWN),
    })
}

fn catalog_cmd(args: &CatalogArgs) -> Step<Outcome> {
    if args.list {
        return Ok(Outcome::ok(
            catalog::labels().iter().map(|l| format!("{l}\n")).collect(),
        ));
    }
    let Some(label) = args.dump.as_deref() else {
        return Err(Outcome::failure("catalog: pass --list or --dump LABEL"));
    };
    let entry =
        catalog::entry(label).ok_or_else(|| Outcome::failure(format!("unknown label '{label}'")))?;
    Ok(emit(write_lts(&entry.system), args.o.as_deref()))
}

fn lie_check(path: &Path) -> Step<Outcome> {
    let f = load_lie(path)?;
    if let Err(v) = f.algebra.check_jacobi() {
        return Ok(Outcome::with_code(format!("{v}\n"), EXIT_NEGATIVE));
    }
    if let Some(gr) = &f.grading {
        if let Err(v) = f.algebra.check_grading(gr) {
            return Ok(Outcome::with_code(format!("invalid grading: {v}\n"), EXIT_NEGATIVE));
        }
    }
    Ok(Outcome::ok("valid\n".into()))
}

fn lie_to_lts(path: &Path, out: Option<&Path>) -> Step<Outcome> {
    let f = load_lie(path)?;
    let gr = f
        .grading
        .ok_or_else(|| Outcome::failure(format!("{}: missing GRADE line", path.display())))?;
    match f.algebra.lie_to_lts(&gr) {
        Ok(t) => Ok(emit(write_lts(&t), out)),
        Err(e) => Ok(Outcome::with_code(format!("{e}\n"), EXIT_NEGATIVE)),
    }
}
