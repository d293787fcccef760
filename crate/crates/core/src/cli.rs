//! Command-line front end. Usage and input-format errors exit with 2; any
//! other failure exits with 1.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::checks::{run_suite, Suite};
use crate::error::{Error, Result};
use crate::fock::{ModeOccupation, StateVector};
use crate::hubbard::{self, HamiltonianParams};
use crate::invariants::{Attractive, Family, InvariantId, InvariantValue};
use crate::maxent::{cyclic_max_state, example_state, two_fermion_max, CyclicSpec, ExampleKind};
use crate::omega::{degree16_probe, evaluate_recipe, proportionality_with, reference_value, NamedRecipe};
use crate::statefile::{parse_state_file, write_state_file};

#[derive(Debug, Parser)]
#[command(
    name = "fermislocc",
    version,
    about = "SLOCC invariants of fermionic mode entanglement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the invariants that apply to a state file.
    Invariants {
        #[arg(long)]
        state: PathBuf,
        #[arg(long, value_enum, default_value_t = InvariantSet::Auto)]
        set: InvariantSet,
        /// Use the amplitudes as written instead of normalizing.
        #[arg(long)]
        raw: bool,
    },
    /// Ground-state measures of the three-site chain over a field range, as CSV.
    Sweep {
        #[arg(long = "J", default_value_t = 1.0)]
        j: f64,
        #[arg(long = "K", default_value_t = 2.99507)]
        k: f64,
        #[arg(long, default_value_t = 5e-3)]
        f: f64,
        /// Hopping amplitude: p_down = p = -p_up.
        #[arg(long, default_value_t = 5e-6, allow_hyphen_values = true)]
        p: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        b_min: f64,
        #[arg(long, default_value_t = hubbard::DEFAULT_B_MAX, allow_hyphen_values = true)]
        b_max: f64,
        #[arg(long, default_value_t = hubbard::DEFAULT_POINTS)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property suites; exits 1 if any property fails.
    Check {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a maximally entangled state in the state-file format.
    Maxent {
        /// two_fermion, cyclic, or one of I2_only, I1_only, IAB_only,
        /// IAC_only, IBC_only, IABC1_only, IABC2_only.
        #[arg(long)]
        kind: String,
        /// Spin p/2 of the cyclic construction.
        #[arg(long, default_value_t = 1)]
        p: u32,
        /// Number of concatenated blocks in the cyclic construction.
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check the transvection recipes against the direct formulas.
    Omega {
        #[arg(long)]
        degree16_probe: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InvariantSet {
    Auto,
    Full3,
    Repulsive,
    Attractive,
    #[value(name = "localizedA")]
    LocalizedA,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Slocc,
    Omega,
    Maxent,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Slocc => Suite::Slocc,
            SuiteArg::Omega => Suite::Omega,
            SuiteArg::Maxent => Suite::Maxent,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Runs the CLI with process stdout and stderr.
pub fn run(argv: Vec<String>) -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI against the given streams and returns the exit code.
pub fn run_with(argv: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        _ => 1,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Invariants { state, set, raw } => {
            let text = fs::read_to_string(&state)
                .map_err(|e| Error::parse(0, format!("cannot read {}: {e}", state.display())))?;
            let psi = parse_state_file(&text, !raw)?;
            for (id, v) in evaluate_set(&psi, set)? {
                writeln!(
                    out,
                    "{} {} {} {} {}",
                    id.name(),
                    fmt_float(v.value.re),
                    fmt_float(v.value.im),
                    v.degree,
                    fmt_float(v.monotone())
                )?;
            }
            Ok(0)
        }
        Command::Sweep {
            j,
            k,
            f,
            p,
            b_min,
            b_max,
            points,
            out: path,
        } => {
            if points == 0 || b_min.is_nan() || b_max.is_nan() || b_min > b_max {
                return Err(Error::domain("need points >= 1 and b-min <= b-max"));
            }
            let base = HamiltonianParams::with_hopping(j, k, f, p);
            let rows = hubbard::sweep(&base, &hubbard::linspace(b_min, b_max, points))?;
            let mut buf = Vec::new();
            hubbard::write_csv(&rows, &mut buf)?;
            emit(&buf, path, out)?;
            Ok(0)
        }
        Command::Check { suite, samples, seed } => {
            if samples == 0 {
                return Err(Error::domain("samples must be positive"));
            }
            let outcomes = run_suite(suite.into(), samples, seed);
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            writeln!(out, "{} passed, {failed} failed", outcomes.len() - failed)?;
            Ok(if failed == 0 { 0 } else { 1 })
        }
        Command::Maxent { kind, p, r, out: path } => {
            let state = match kind.as_str() {
                "two_fermion" => two_fermion_max(),
                "cyclic" => cyclic_max_state(CyclicSpec::new(p, r)?)?,
                other => example_state(other.parse::<ExampleKind>()?),
            };
            emit(write_state_file(&state).as_bytes(), path, out)?;
            Ok(0)
        }
        Command::Omega {
            degree16_probe: probe,
            seed,
        } => {
            writeln!(out, "invariant monomials degree constant_re constant_im")?;
            for r in NamedRecipe::ALL {
                let poly = evaluate_recipe(&r.recipe())?;
                let c = proportionality_with(
                    |s| crate::omega::evaluate_at(&poly, s),
                    |s| reference_value(r, s),
                    20,
                    seed,
                )?;
                let degree = poly
                    .homogeneous_degree()
                    .map_or_else(|| "mixed".to_string(), |d| d.to_string());
                writeln!(
                    out,
                    "{} {} {degree} {} {}",
                    r.name(),
                    poly.n_terms(),
                    fmt_float(round12(c.re)),
                    fmt_float(round12(c.im))
                )?;
            }
            if probe {
                let report = degree16_probe(6, 60, seed);
                writeln!(
                    out,
                    "degree-16 probe: {} recipes, {} nonzero, max residual {:.3e}, {} outside the generator span",
                    report.recipes_tried,
                    report.nonzero,
                    report.max_residual,
                    report.outside_span.len()
                )?;
                for recipe in &report.outside_span {
                    writeln!(out, "  outside: {recipe}")?;
                }
            }
            Ok(0)
        }
    }
}

fn emit(bytes: &[u8], path: Option<PathBuf>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes)?,
        None => out.write_all(bytes)?,
    }
    Ok(())
}

/// The constants are fitted to ~1e-8; printing sampling noise past 1e-12 only
/// obscures them.
fn round12(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}

/// Shortest round-trip form with at least one fractional digit; `-0` reads `0.0`.
fn fmt_float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:?}")
}

fn pair_support(psi: &StateVector, modes: std::ops::Range<usize>) -> bool {
    psi.support().all(|l| {
        l.occupations()[modes.clone()]
            .iter()
            .all(|o| matches!(o, ModeOccupation::Empty | ModeOccupation::Double))
    })
}

fn candidates(psi: &StateVector, set: InvariantSet) -> Result<Vec<InvariantId>> {
    let s = psi.sector();
    let shape = (s.n_modes(), s.n_particles());
    Ok(match set {
        InvariantSet::Full3 => Family::Full3.members(),
        InvariantSet::Repulsive => Family::Repulsive.members(),
        InvariantSet::Attractive if shape == (2, 2) => {
            vec![InvariantId::Attractive(Attractive::PairMonomial)]
        }
        InvariantSet::Attractive => Family::Attractive4.members(),
        InvariantSet::LocalizedA => Family::LocalizedA.members(),
        InvariantSet::Auto => match shape {
            (2, 2) => {
                let mut ids = vec![InvariantId::I0];
                if pair_support(psi, 0..2) {
                    ids.push(InvariantId::Attractive(Attractive::PairMonomial));
                }
                ids
            }
            (3, 2) => Family::Repulsive.members(),
            (4, 4) => Family::Attractive4.members(),
            (3, 3) => {
                let mut ids = Family::Full3.members();
                if psi.support().all(|l| l.mode(0).is_single()) {
                    ids.extend(Family::LocalizedA.members());
                }
                ids
            }
            (n, m) => {
                return Err(Error::domain(format!(
                    "no invariant family for {m} fermions in {n} modes"
                )))
            }
        },
    })
}

/// Evaluates every candidate whose preconditions hold; fails if none do.
fn evaluate_set(psi: &StateVector, set: InvariantSet) -> Result<Vec<(InvariantId, InvariantValue)>> {
    let mut values = Vec::new();
    let mut first_error = None;
    for id in candidates(psi, set)? {
        match id.evaluate(psi) {
            Ok(v) => values.push((id, v)),
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    match (values.is_empty(), first_error) {
        (true, Some(e)) => Err(e),
        _ => Ok(values),
    }
}
