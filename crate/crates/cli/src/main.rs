//! `ckinv`: invariants of Cuntz-Krieger algebras from the command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal
//! verification failure.

mod input;
mod selftest;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ckinv::ck::{
    compare, gen_amplified, gen_cuntz, gen_random_irreducible, invariants, six_term, validate, CkReport, Comparison,
    ZeroOneMatrix, MAP_NAMES, NODE_NAMES,
};
use ckinv::realize::{realize_k0, RealizationTarget};
use ckinv::{CkError, RealizeError};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use crate::input::{read_matrix, render_matrix};

// stdout writes that tolerate a closed pipe (e.g. `ckinv ... | head`)
macro_rules! outln {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = write!(std::io::stdout(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "ckinv", version, about = "Invariants of Cuntz-Krieger algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a matrix is a square, irreducible, non-permutation 0-1 matrix
    Validate { path: PathBuf },
    /// Print K-groups, extension groups and homotopy groups of Aut
    Invariants {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide isomorphism and stable isomorphism of two algebras
    Compare {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build and verify the five-term exact sequence
    Exactseq { path: PathBuf },
    /// Construct a matrix whose K0 is Z^rank plus the given cyclic factors
    Realize {
        #[arg(long, default_value_t = 0)]
        rank: usize,
        #[arg(long, value_delimiter = ',')]
        torsion: Vec<BigInt>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a matrix
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run the built-in fixtures and fixed-seed property checks
    Selftest,
}

#[derive(Subcommand)]
enum GenKind {
    /// All-ones n x n matrix
    Cuntz { n: usize },
    /// Block matrix of size n*k amplifying the all-ones n x n matrix
    Amplified { n: usize, k: usize },
    /// Random irreducible non-permutation matrix
    Random { n: usize, density: f64, seed: u64 },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Verification(_) => 3,
        }
    }
}

type Outcome = Result<(), Failure>;

fn load(path: &Path) -> Result<ZeroOneMatrix, Failure> {
    let raw = read_matrix(path).map_err(Failure::Input)?;
    validate(&raw).map_err(|e| Failure::Input(format!("{}: invalid matrix: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn report_text(r: &CkReport) -> String {
    let mut s = format!("n: {}\n", r.n);
    for (name, g) in r.groups() {
        s.push_str(&format!("{name}: {g}\n"));
    }
    let order = if r.iota_one_order == BigInt::from(0) {
        "infinite".to_string()
    } else {
        r.iota_one_order.to_string()
    };
    s.push_str(&format!("iota_one_order: {order}\n"));
    s
}

fn comparison_text(c: &Comparison) -> String {
    let mut s = format!(
        "isomorphic: {}\nstably_isomorphic: {}\n",
        c.isomorphic, c.stably_isomorphic
    );
    let name_w = c.invariants.iter().map(|p| p.invariant.len()).max().unwrap_or(0);
    let left_w = c.invariants.iter().map(|p| p.left.to_string().len()).max().unwrap_or(0);
    for p in &c.invariants {
        let mark = if p.equal { "==" } else { "!=" };
        let left = p.left.to_string();
        s.push_str(&format!("{:name_w$}  {left:left_w$}  {mark}  {}\n", p.invariant, p.right));
    }
    s
}

fn cmd_validate(path: &Path) -> Outcome {
    let raw = read_matrix(path).map_err(Failure::Input)?;
    match validate(&raw) {
        Ok(_) => {
            outln!("valid");
            Ok(())
        }
        Err(e) => {
            outln!("rejected: {e}");
            Err(Failure::Input(String::new()))
        }
    }
}

fn cmd_invariants(path: &Path, as_json: bool) -> Outcome {
    let r = invariants(&load(path)?);
    if as_json {
        outln!("{}", json(&r));
    } else {
        out!("{}", report_text(&r));
    }
    Ok(())
}

fn cmd_compare(left: &Path, right: &Path, as_json: bool) -> Outcome {
    let c = compare(&load(left)?, &load(right)?);
    if as_json {
        outln!("{}", json(&c));
    } else {
        out!("{}", comparison_text(&c));
    }
    Ok(())
}

fn cmd_exactseq(path: &Path) -> Outcome {
    let a = load(path)?;
    let seq = six_term(&a).map_err(|e| Failure::Verification(e.to_string()))?;
    for (i, (name, group)) in NODE_NAMES.iter().zip(seq.canonical_groups()).enumerate() {
        let verdict = if seq.exact_at[i] { "exact" } else { "NOT EXACT" };
        outln!("[{}] {name} = {group}: {verdict}", i + 1);
        if let Some(map) = seq.maps.get(i) {
            let m = map.matrix();
            outln!("    {} ({}x{}):", MAP_NAMES[i], m.rows(), m.cols());
            for line in m.to_string().lines().filter(|l| !l.trim().is_empty()) {
                outln!("      {line}");
            }
        }
    }
    outln!("j_A injective: {}", seq.j_injective);
    outln!("q_A surjective: {}", seq.q_surjective);
    seq.verify().map_err(|e| Failure::Verification(e.to_string()))?;
    outln!("sequence verified");
    Ok(())
}

fn cmd_realize(rank: usize, torsion: Vec<BigInt>, out: Option<&Path>) -> Outcome {
    let target = RealizationTarget::new(rank, torsion).map_err(|e| Failure::Input(e.to_string()))?;
    let a = realize_k0(&target).map_err(|e| match e {
        RealizeError::BadFactor(_) => Failure::Input(e.to_string()),
        _ => Failure::Verification(e.to_string()),
    })?;
    let r = invariants(&a);
    emit(&render_matrix(&a, Some(&format!("realizes {}", target.group()))), out)?;
    let summary = format!(
        "size: {0}x{0}\ncoker(I-A): {1}\nker(I-A) rank: {2}\n",
        a.size(),
        r.ext_w1,
        r.k1.free_rank()
    );
    // keep stdout a clean matrix file when no output path is given
    match out {
        Some(_) => out!("{summary}"),
        None => eprint!("{summary}"),
    }
    Ok(())
}

fn cmd_gen(kind: &GenKind, out: Option<&Path>) -> Outcome {
    let (a, label) = match *kind {
        GenKind::Cuntz { n } => (gen_cuntz(n), format!("cuntz {n}")),
        GenKind::Amplified { n, k } => (gen_amplified(n, k), format!("amplified {n} {k}")),
        GenKind::Random { n, density, seed } => (
            gen_random_irreducible(n, density, seed),
            format!("random {n} {density} {seed}"),
        ),
    };
    let a = a.map_err(|e: CkError| Failure::Input(e.to_string()))?;
    emit(&render_matrix(&a, Some(&label)), out)
}

fn cmd_selftest() -> Outcome {
    let checks = selftest::run();
    let mut failures = 0;
    for c in &checks {
        match &c.outcome {
            Ok(()) => outln!("ok    {}", c.name),
            Err(e) => {
                failures += 1;
                outln!("FAIL  {}: {e}", c.name);
            }
        }
    }
    if failures == 0 {
        outln!("all fixtures pass");
        Ok(())
    } else {
        Err(Failure::Verification(format!("{failures} of {} checks failed", checks.len())))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match &cli.command {
        Command::Validate { path } => cmd_validate(path),
        Command::Invariants { path, json } => cmd_invariants(path, *json),
        Command::Compare { left, right, json } => cmd_compare(left, right, *json),
        Command::Exactseq { path } => cmd_exactseq(path),
        Command::Realize { rank, torsion, out } => cmd_realize(*rank, torsion.clone(), out.as_deref()),
        Command::Gen { kind, out } => cmd_gen(kind, out.as_deref()),
        Command::Selftest => cmd_selftest(),
    };
    let _ = std::io::stdout().flush();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Input(m) | Failure::Verification(m)) = &f;
            if !m.is_empty() {
                eprintln!("error: {m}");
            }
            ExitCode::from(f.code())
        }
    }
}
