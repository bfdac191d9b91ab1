//! Command-line front end: argument parsing, dispatch and output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse or precondition
//! error.

pub mod emit;

use std::fs;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use waring_core::hilbert::{hilbert_series, window_identity_check, CIData};
use waring_core::monomial::{
    catalecticant_ranks, coprime_rank_bounds, extremal_rank_bruteforce, extremal_rank_ternary,
    generic_rank_naive, normalize, waring_rank, CanonicalMonomial,
};
use waring_core::waring::json::{verify_document, DecompositionJson, DocumentCheck};
use waring_core::waring::{expand_power_sum, expand_power_sum_parallel};
use waring_core::{decompose, Decomposition, Monomial};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "waring",
    version,
    about = "Exact Waring ranks and decompositions of monomials"
)]
pub struct Cli {
    /// Worker threads for exact expansion (output is identical for any value).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Waring rank of a monomial such as `x1*x2^2*x3^2`.
    Rank { expr: String },
    /// Print an explicit sum-of-powers decomposition.
    Decompose {
        expr: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Expand the decomposition exactly and fail unless it equals the input.
        #[arg(long)]
        verify: bool,
    },
    /// Re-verify a decomposition JSON document (`-` reads standard input).
    Verify { file: String },
    /// Hilbert function of a pure-power complete intersection.
    Hilbert(HilbertArgs),
    /// Rank bounds for a sum of pairwise coprime monomials.
    Bounds {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Largest rank among monomials of a given degree.
    Extremal {
        #[arg(long)]
        nvars: u32,
        #[arg(long)]
        degree: u32,
        /// Enumerate all exponent partitions instead of using the closed form.
        #[arg(long)]
        brute_force: bool,
    },
    /// Generic rank versus maximal monomial rank in three variables.
    Table {
        #[arg(long)]
        dmax: u32,
    },
    /// Catalecticant ranks of a monomial for every split degree.
    Catalecticant { expr: String },
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    /// Generator degrees, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<u32>,
    #[arg(long)]
    nvars: usize,
    /// Print HF(0..=T).
    #[arg(long, conflicts_with = "check_lemma")]
    upto: Option<usize>,
    /// Treat `--gens` as a_2..a_n and check the socle-window identity for
    /// (y_1, y_2^{a_2}, ..., y_n^{a_n}).
    #[arg(long)]
    check_lemma: bool,
}

/// Failure that maps to a non-zero exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verify(String),
}

impl From<waring_core::Error> for Failure {
    fn from(e: waring_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn parse_monomial(expr: &str) -> Result<Monomial, Failure> {
    Ok(expr.parse::<Monomial>()?)
}

fn verify_expansion(dec: &Decomposition, parallel: bool) -> bool {
    let p = if parallel {
        expand_power_sum_parallel(dec)
    } else {
        expand_power_sum(dec)
    };
    p.is_unit_monomial(dec.monomial.exponents())
}

fn exponents_csv(c: &CanonicalMonomial) -> String {
    c.exponents()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn run_hilbert(args: &HilbertArgs) -> Outcome {
    if args.check_lemma {
        if args.gens.len() + 1 != args.nvars {
            return Err(Failure::Usage(format!(
                "--check-lemma takes a_2..a_n: expected {} degrees for --nvars {}",
                args.nvars.saturating_sub(1),
                args.nvars
            )));
        }
        let report = window_identity_check(&args.gens)?;
        let line = format!(
            "lhs={} rhs={} holds={}\n",
            report.lhs, report.rhs, report.holds
        );
        return if report.holds {
            Ok(line)
        } else {
            Err(Failure::Verify(line))
        };
    }
    let ci = CIData::new(args.nvars, args.gens.clone())?;
    let top = match (args.upto, ci.socle_degree()) {
        (Some(t), _) => t,
        (None, Some(tau)) => tau as usize,
        (None, None) => {
            return Err(Failure::Usage(
                "quotient is not Artinian; pass --upto".into(),
            ))
        }
    };
    let series = hilbert_series(&ci, top);
    let values: Vec<String> = (0..=top).map(|i| series.coeff(i).to_string()).collect();
    Ok(values.join(" ") + "\n")
}

fn run_table(dmax: u32) -> Outcome {
    if dmax < 3 {
        return Err(Failure::Usage("--dmax must be at least 3".into()));
    }
    let mut out = String::new();
    for d in 3..=dmax {
        let generic = generic_rank_naive(3, d)?;
        let (max, _) = extremal_rank_ternary(d)?;
        out.push_str(&format!("{d} {generic} {max}\n"));
    }
    Ok(out)
}

fn read_input(file: &str) -> Result<String, Failure> {
    let res = if file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(file)
    };
    res.map_err(|e| Failure::Usage(format!("cannot read {file}: {e}")))
}

fn dispatch(cli: &Cli) -> Outcome {
    let parallel = cli.jobs.is_some_and(|j| j > 1);
    match &cli.command {
        Command::Rank { expr } => {
            let c = normalize(&parse_monomial(expr)?)?;
            Ok(format!("{}\n", waring_rank(&c)))
        }
        Command::Decompose {
            expr,
            format,
            verify,
        } => {
            let dec = decompose(&parse_monomial(expr)?)?;
            let text = match format {
                Format::Plain => emit::plain(&dec),
                Format::Json => emit::json(&dec, expr),
                Format::Latex => emit::latex(&dec),
            };
            if *verify && !verify_expansion(&dec, parallel) {
                return Err(Failure::Verify(format!(
                    "decomposition of {expr} failed verification"
                )));
            }
            Ok(text)
        }
        Command::Verify { file } => {
            let text = read_input(file)?;
            let doc: DecompositionJson = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("invalid decomposition JSON: {e}")))?;
            match verify_document(&doc)? {
                DocumentCheck::Verified => Ok(format!(
                    "verified: {} = sum of {} powers\n",
                    doc.input,
                    doc.terms.len()
                )),
                DocumentCheck::Failed(why) => {
                    Err(Failure::Verify(format!("verification failed: {why}")))
                }
            }
        }
        Command::Hilbert(args) => run_hilbert(args),
        Command::Bounds { exprs } => {
            let ms = exprs
                .iter()
                .map(|e| parse_monomial(e))
                .collect::<Result<Vec<_>, _>>()?;
            let (lower, upper) = coprime_rank_bounds(&ms)?;
            Ok(format!("lower={lower} upper={upper}\n"))
        }
        Command::Extremal {
            nvars,
            degree,
            brute_force,
        } => {
            let (value, c) = if *brute_force {
                extremal_rank_bruteforce(*nvars, *degree)?
            } else if *nvars == 3 {
                extremal_rank_ternary(*degree)?
            } else {
                return Err(Failure::Usage(
                    "closed form exists only for --nvars 3; use --brute-force".into(),
                ));
            };
            Ok(format!("value={value} exponents={}\n", exponents_csv(&c)))
        }
        Command::Table { dmax } => run_table(*dmax),
        Command::Catalecticant { expr } => {
            let c = normalize(&parse_monomial(expr)?)?;
            let ranks = catalecticant_ranks(&c);
            let max = ranks.iter().max().cloned().unwrap_or_default();
            let row: Vec<String> = ranks.iter().map(ToString::to_string).collect();
            Ok(format!(
                "{}\nmax={max} waring_rank={}\n",
                row.join(" "),
                waring_rank(&c)
            ))
        }
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            let _ = writeln!(err, "--jobs must be positive");
            return EXIT_USAGE;
        }
        // Ignored if the global pool already exists (e.g. repeated calls in tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match dispatch(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Verify(msg)) => {
            let _ = writeln!(err, "{}", msg.trim_end());
            EXIT_VERIFY_FAILED
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
