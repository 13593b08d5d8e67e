use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use supm::certify::TheoremId;
use supm::report::{self, CheckOptions, CommandError, Report, EXIT_INPUT_ERROR};

/// Exact certification of uniqueness and strong uniqueness polynomials over Q(i).
#[derive(Parser, Debug)]
#[command(name = "supm", version)]
struct Cli {
    /// Emit the supm-cert/v1 JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze a polynomial and run every applicable certifier.
    Check {
        /// Polynomial, e.g. "z^6 + 4z^5 + 25/6 z^4".
        poly: String,
        #[command(flatten)]
        chain: ChainArgs,
        /// Name of the indeterminate.
        #[arg(long = "var", default_value_t = 'z')]
        var: char,
    },
    /// Build a member of a named family and certify it.
    Family {
        /// Family id (see list-families).
        id: String,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        c: Option<String>,
        /// Extra parameter as name=value; may be repeated.
        #[arg(long = "param", value_parser = parse_key_value)]
        params: Vec<(String, String)>,
        #[command(flatten)]
        chain: ChainArgs,
    },
    /// Verify one of the auxiliary lemmas for the psi polynomial.
    Lemma {
        /// l3_1, l3_2 or l3_3.
        id: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "A", alias = "a")]
        a: Option<String>,
    },
    /// Unique-range-set thresholds for an SUPM zero set.
    Urs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Truncation level: a positive integer or "inf".
        #[arg(long, default_value = "inf")]
        l: String,
        /// Lower bound on pole deficiencies, in [0, 1].
        #[arg(long)]
        theta: Option<String>,
        #[arg(long)]
        entire: bool,
    },
    /// List the built-in polynomial families.
    ListFamilies,
}

#[derive(Args, Debug)]
struct ChainArgs {
    /// Comma-separated subset of a, b, c, d, thm2_1, thm2_2, cor2_1, thm2_3.
    #[arg(long, value_delimiter = ',')]
    theorems: Option<Vec<TheoremId>>,
    /// Let the pair-sum criterion use any pair of critical points.
    #[arg(long)]
    any_pair: bool,
}

impl ChainArgs {
    fn options(self, var: char) -> CheckOptions {
        CheckOptions {
            theorems: self.theorems,
            any_pair: self.any_pair,
            variable: Some(var),
        }
    }
}

fn parse_key_value(s: &str) -> Result<(String, String), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got '{s}'"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn run(command: Command) -> Result<Report, (CommandError, Option<String>)> {
    match command {
        Command::Check { poly, chain, var } => {
            report::cmd_check(&poly, &chain.options(var)).map_err(|e| (e, Some(poly)))
        }
        Command::Family {
            id,
            n,
            m,
            r,
            a,
            b,
            c,
            mut params,
            chain,
        } => {
            let named = [("n", n), ("m", m), ("r", r), ("a", a), ("b", b), ("c", c)];
            for (name, value) in named {
                if let Some(v) = value {
                    params.push((name.to_string(), v));
                }
            }
            report::cmd_family(&id, &params, &chain.options('z')).map_err(|e| (e, None))
        }
        Command::Lemma { id, n, a } => {
            report::cmd_lemma(&id, n, a.as_deref()).map_err(|e| (e, a))
        }
        Command::Urs {
            n,
            k,
            l,
            theta,
            entire,
        } => report::cmd_urs(n, k, &l, theta.as_deref(), entire).map_err(|e| (e, theta)),
        Command::ListFamilies => Ok(report::run_list_families()),
    }
}

fn caret_line(input: &str, position: usize) -> String {
    let offset: String = input.chars().take(position).map(|_| ' ').collect();
    format!("  {input}\n  {offset}^")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli.command) {
        Ok(report) => {
            let text = if cli.json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(report.exit_code as u8)
        }
        Err((err, input)) => {
            eprintln!("error: {err}");
            if let (CommandError::Parse(p), Some(input)) = (&err, input) {
                if let Some(pos) = p.position() {
                    eprintln!("{}", caret_line(&input, pos));
                }
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
