//! Command-line front end: basis and class data, the HeLP solver, batch
//! scans, and the numerical checks for prime power orders and eigenvalue
//! profiles.

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use zchelp_core::arith::prime_power;
use zchelp_core::helpengine::{
    node_cap_from_env, solve, zc_scan, HelpProblem, HelpReport, PowerData, PowerMode, SearchStatus,
};
use zchelp_core::paperchecks::{
    case_analysis, check_a_given_b, check_b_values, check_periodicity, check_proof_identities,
    EpsSymbols, IdentityCheck,
};

pub use render::{render_report, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_OUT_OF_SCOPE: i32 = 2;
/// A nontrivial survivor, or a numerical check that failed.
pub const EXIT_NONTRIVIAL: i32 = 3;
/// The search stopped at the node cap or the constraints were unbounded.
pub const EXIT_INCOMPLETE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "zchelp", version, about = "Torsion units of Z SL(2, q) via HeLP constraints")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The distinguished residues and basis labels for modulus n.
    Basis {
        #[arg(long)]
        n: u64,
    },
    /// Expand zeta_n^e or alpha_i in the real basis.
    Expand {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "alpha", required_unless_present = "alpha")]
        zeta: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<i64>,
    },
    /// Conjugacy classes of SL(2, q).
    Classes {
        #[arg(long)]
        q: u64,
    },
    /// Enumerate all partial augmentations passing the constraints.
    Solve(SolveArgs),
    /// Solve the default problem for every order dividing q - 1 or q + 1.
    ZcScan {
        #[arg(long)]
        q: u64,
    },
    /// Scan several q and aggregate a pass/fail matrix.
    VerifyAll {
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        q: Vec<u64>,
    },
    /// Identities for B and the engine run for units of order 2^r.
    Prop41 {
        #[arg(long)]
        r: u32,
        /// Defaults to the smallest q with 2^r dividing q - 1 or q + 1.
        #[arg(long)]
        q: Option<u64>,
    },
    /// Run the divisibility argument over all eigenvalue profiles at (n, d).
    Cases {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Trace identities, closed values of B and (anti)periodicity at r.
    Identities {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Inductive,
    Custom,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n: u64,
    /// Use characters chi_1 .. chi_M.
    #[arg(long, conflicts_with = "chars")]
    pub max_char: Option<u64>,
    /// Explicit comma-separated character degrees.
    #[arg(long, value_delimiter = ',')]
    pub chars: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = Mode::Inductive)]
    pub mode: Mode,
    /// JSON power data for custom mode: {"by_divisor": {"d": {"x": eps}}}.
    #[arg(long)]
    pub power_data: Option<PathBuf>,
    #[arg(long)]
    pub no_normalize: bool,
    /// Also impose that the image in PSL(2, q) is conjugate to that of g_0.
    #[arg(long)]
    pub projection: bool,
    /// Only use the multiplicity rows at these ell (comma-separated).
    #[arg(long, value_delimiter = ',')]
    pub ells: Option<Vec<u64>>,
    #[arg(long)]
    pub node_cap: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] zchelp_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use zchelp_core::Error as E;
        match self {
            CliError::Core(E::ModularOrder { .. } | E::OrderNotRepresented { .. }) => {
                EXIT_OUT_OF_SCOPE
            }
            _ => EXIT_USAGE,
        }
    }
}

/// Exit code of a solver report: nontrivial survivors dominate, then
/// incompleteness.
pub fn report_exit_code(report: &HelpReport) -> i32 {
    if report.nontrivial().next().is_some() {
        EXIT_NONTRIVIAL
    } else if !report.complete {
        EXIT_INCOMPLETE
    } else {
        EXIT_OK
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report to stdout or `--output`. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with(args, &mut out, &mut err)
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(err, "error: i/o: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn build_problem(a: &SolveArgs) -> Result<HelpProblem, CliError> {
    let mut p = HelpProblem::new(a.q, a.n)?;
    if let Some(m) = a.max_char {
        if m == 0 {
            return Err(CliError::Usage("--max-char must be positive".into()));
        }
        p = p.with_characters((1..=m).collect());
    }
    if let Some(c) = &a.chars {
        p = p.with_characters(c.clone());
    }
    match (a.mode, &a.power_data) {
        (Mode::Inductive, None) => {}
        (Mode::Inductive, Some(_)) => {
            return Err(CliError::Usage("--power-data needs --mode custom".into()))
        }
        (Mode::Custom, None) => {
            return Err(CliError::Usage("--mode custom needs --power-data".into()))
        }
        (Mode::Custom, Some(path)) => {
            let data: PowerData = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            p = p.with_mode(PowerMode::Custom(data));
        }
    }
    p = p
        .with_normalize(!a.no_normalize)
        .with_projection(a.projection)
        .with_ells(a.ells.clone())
        .with_node_cap(a.node_cap.unwrap_or_else(node_cap_from_env));
    p.validate()?;
    Ok(p)
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub q: u64,
    pub n: u64,
    pub status: SearchStatus,
    pub complete: bool,
    pub all_trivial: bool,
    pub survivors: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub rows: Vec<VerifyRow>,
    pub pass: bool,
    #[serde(skip)]
    pub exit_code: i32,
}

/// Runs [`zc_scan`] for each `q` and collects one row per order.
pub fn verify_all(qs: &[u64]) -> Result<VerifySummary, CliError> {
    if qs.is_empty() {
        return Err(CliError::Usage("no q given".into()));
    }
    let mut rows = Vec::new();
    let mut exit_code = EXIT_OK;
    for &q in qs {
        for r in zc_scan(q)? {
            exit_code = fold_code(exit_code, report_exit_code(&r));
            rows.push(VerifyRow {
                q,
                n: r.n,
                status: r.provenance.status,
                complete: r.complete,
                all_trivial: r.all_trivial,
                survivors: r.survivors.len(),
            });
        }
    }
    Ok(VerifySummary { pass: exit_code == EXIT_OK, rows, exit_code })
}

/// Smallest odd prime power `q` with `n | q - 1` or `n | q + 1`.
fn smallest_q_for(n: u64) -> u64 {
    (3..)
        .step_by(2)
        .find(|&q| prime_power(q).is_some() && ((q - 1) % n == 0 || (q + 1) % n == 0))
        .unwrap()
}

#[derive(Debug, Serialize)]
pub struct Prop41Summary {
    pub r: u32,
    pub q: u64,
    pub identities: Vec<IdentityCheck>,
    pub normalized: HelpReport,
    pub unnormalized: HelpReport,
    /// `A` is 0 or `±2^{r-1}` wherever `B` is, on every survivor.
    pub a_given_b: Vec<IdentityCheck>,
}

#[derive(Debug, Serialize)]
pub struct IdentitySummary {
    pub r: u32,
    pub seed: u64,
    pub checks: Vec<IdentityCheck>,
}

fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let f = cli.format;
    Ok(match &cli.command {
        Command::Basis { n } => {
            let b = zchelp_core::cyclotomic::RealBasis::new(*n)?;
            (render::basis(&b, f)?, EXIT_OK)
        }
        Command::Expand { n, zeta, alpha } => {
            let b = zchelp_core::cyclotomic::RealBasis::new(*n)?;
            let body = match (zeta, alpha) {
                (Some(e), _) => render::zeta_expansion(*n, *e, &b.expand_zeta(*e)?, f)?,
                (None, Some(i)) => render::real_expansion(*n, *i, &b.alpha_coeffs(*i), f)?,
                (None, None) => unreachable!("clap requires one of --zeta, --alpha"),
            };
            (body, EXIT_OK)
        }
        Command::Classes { q } => {
            let t = zchelp_core::sl2data::class_table(*q)?;
            (render::classes(&t, f)?, EXIT_OK)
        }
        Command::Solve(a) => {
            let report = solve(&build_problem(a)?)?;
            (render_report(&report, f)?, report_exit_code(&report))
        }
        Command::ZcScan { q } => {
            let s = verify_all(&[*q])?;
            (render::verify(&s, f)?, s.exit_code)
        }
        Command::VerifyAll { q } => {
            let s = verify_all(q)?;
            (render::verify(&s, f)?, s.exit_code)
        }
        Command::Prop41 { r, q } => {
            if !(3..=9).contains(r) {
                return Err(CliError::Usage("--r must lie in 3..=9".into()));
            }
            let n = 1u64 << r;
            let q = q.unwrap_or_else(|| smallest_q_for(n));
            let mut identities = check_b_values(*r);
            identities.extend(check_proof_identities(*r));
            let normalized = solve(&HelpProblem::new(q, n)?)?;
            let unnormalized = solve(&HelpProblem::new(q, n)?.with_normalize(false))?;
            let a_given_b = normalized
                .survivors
                .iter()
                .chain(&unnormalized.survivors)
                .map(|s| Ok(check_a_given_b(&EpsSymbols::new(*r, s.eps.values().to_vec())?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let code = [report_exit_code(&normalized), report_exit_code(&unnormalized)]
                .into_iter()
                .chain(
                    identities
                        .iter()
                        .chain(&a_given_b)
                        .map(|c| if c.failures.is_empty() { EXIT_OK } else { EXIT_NONTRIVIAL }),
                )
                .fold(EXIT_OK, fold_code);
            let s = Prop41Summary { r: *r, q, identities, normalized, unnormalized, a_given_b };
            (render::prop41(&s, f)?, code)
        }
        Command::Cases { n, d, cap } => {
            let v = case_analysis(*n, *d, *cap)?;
            let code = if v.contradiction && v.bound_holds { EXIT_OK } else { EXIT_NONTRIVIAL };
            (render::cases(&v, f)?, code)
        }
        Command::Identities { r, samples, seed } => {
            if !(3..=12).contains(r) {
                return Err(CliError::Usage("--r must lie in 3..=12".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let half = 1usize << (r - 1);
            let eps: Vec<EpsSymbols> = (0..*samples)
                .map(|_| {
                    let mut v = vec![0; half + 1];
                    for x in v.iter_mut().take(half).skip(1) {
                        *x = rng.gen_range(-3..=3);
                    }
                    EpsSymbols::new(*r, v)
                })
                .collect::<Result<_, _>>()?;
            let degrees: Vec<u64> = (0..=r - 2).map(|h| 1 << h).collect();
            let mut checks = check_b_values(*r);
            checks.extend(check_proof_identities(*r));
            if !eps.is_empty() {
                checks.extend(check_periodicity(*r, &eps, &degrees));
            }
            let code = if checks.iter().all(|c| c.failures.is_empty()) {
                EXIT_OK
            } else {
                EXIT_NONTRIVIAL
            };
            let s = IdentitySummary { r: *r, seed: *seed, checks };
            (render::identities(&s, f)?, code)
        }
    })
}

/// Combines exit codes: a nontrivial result beats incompleteness, which
/// beats success.
fn fold_code(acc: i32, c: i32) -> i32 {
    let rank = |x: i32| match x {
        EXIT_NONTRIVIAL => 2,
        EXIT_INCOMPLETE => 1,
        _ => 0,
    };
    if rank(c) > rank(acc) {
        c
    } else {
        acc
    }
}
