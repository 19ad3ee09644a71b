use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qylag::cli::{self, Identity, VerificationReport, VerifyOptions};
use qylag::mpoly::Format;
use qylag::Alpha;

/// Exact (q,y)-Laguerre polynomials, moments and identity checks.
#[derive(Parser)]
#[command(name = "qylag", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// plain, latex or json
    #[arg(long, default_value = "plain")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print L_n^(alpha)(x; y, q).
    Poly {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        alpha: i64,
        /// Print the signless polynomial with nonnegative coefficients.
        #[arg(long)]
        signless: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Print the signless coefficient of x^(n-k) in L_n^(alpha).
    Coeff {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        alpha: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Print the moments mu_0 .. mu_N.
    Moments {
        #[arg(long = "N")]
        n_max: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        alpha: i64,
        /// Keep beta as a variable instead of [alpha+1]_q.
        #[arg(long)]
        symbolic_beta: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Print the linearization coefficient L(L_n1 L_n2 L_n3).
    Linearize {
        n1: u32,
        n2: u32,
        n3: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        alpha: i64,
        /// Recompute through the moments and exit 1 on disagreement.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Check a named identity over a range of parameters.
    Verify {
        /// One of the identity names, or `all`.
        identity: String,
        /// Replace the default size ceilings.
        #[arg(long)]
        n_max: Option<u32>,
        /// Seed for random sample points.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Append the elapsed time to each report.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        out: Output,
    },
}

const USAGE: u8 = 2;

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn alpha(value: i64) -> Result<Alpha, ExitCode> {
    Alpha::new(value).map_err(usage_error)
}

fn print(text: &str) {
    let mut stdout = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = writeln!(stdout, "{text}");
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Poly {
            n,
            alpha: a,
            signless,
            out,
        } => {
            print(&cli::cmd_poly(n, alpha(a)?, signless, out.format));
        }
        Command::Coeff {
            n,
            k,
            alpha: a,
            out,
        } => {
            if k > n {
                return Err(usage_error(format!("k = {k} exceeds n = {n}")));
            }
            print(&cli::cmd_coeff(n, k, alpha(a)?, out.format));
        }
        Command::Moments {
            n_max,
            alpha: a,
            symbolic_beta,
            out,
        } => {
            let text = cli::cmd_moments(n_max, alpha(a)?, symbolic_beta, out.format)
                .map_err(usage_error)?;
            print(&text);
        }
        Command::Linearize {
            n1,
            n2,
            n3,
            alpha: a,
            check,
            out,
        } => {
            let lin = cli::cmd_linearize([n1, n2, n3], alpha(a)?, check, out.format)
                .map_err(usage_error)?;
            print(&lin.rendered);
            if lin.checked == Some(false) {
                eprintln!("error: closed form and moment route disagree");
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Verify {
            identity,
            n_max,
            seed,
            timing,
            out,
        } => {
            let identities = if identity == "all" {
                Identity::ALL.to_vec()
            } else {
                match identity.parse::<Identity>() {
                    Ok(id) => vec![id],
                    Err(e) => {
                        let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
                        return Err(usage_error(format!(
                            "{e}; known: {}, all",
                            names.join(", ")
                        )));
                    }
                }
            };
            let opts = VerifyOptions { n_max, seed };
            let mut all_pass = true;
            for id in identities {
                let reports = cli::verify(id, &opts);
                all_pass &= report(id, &reports, timing, out.format);
            }
            if !all_pass {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report(id: Identity, reports: &[VerificationReport], timing: bool, format: Format) -> bool {
    let passed = reports.iter().filter(|r| r.passed()).count();
    for r in reports {
        match format {
            Format::Json => print(&r.to_json(timing).to_string()),
            _ => print(&r.to_line(timing)),
        }
    }
    if format != Format::Json {
        print(&format!("{id}: {passed}/{} passed", reports.len()));
    }
    passed == reports.len()
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
