//! Command-line interface.
//!
//! Exit codes: `0` on success, `2` on input errors (missing or malformed
//! files, bad flags), `3` when a requested consistency check fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use symprod::hodge::HodgeNumbers;
use symprod::macdonald::{chi_y_series, sym_hodge_numbers, sym_hodge_series, SeriesForm};
use symprod::oracle::DEFAULT_DIM_BOUND;
use symprod::pairing::{series_int_coeffs, GradedPairing, PairingError};
use symprod::ring::TruncSeries;
use symprod::verify::{run_suite, Suite, VerifyConfig};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

/// Writes to stdout; on a closed pipe, exits with the conventional
/// SIGPIPE status instead of panicking.
fn out(text: impl AsRef<str>) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_ref().as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(141);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(i32::from(EXIT_INPUT));
    }
}

fn outln(text: impl AsRef<str>) {
    out(text);
    out("\n");
}

#[derive(Parser)]
#[command(
    name = "symprod",
    version,
    about = "Generating series for symmetric products of graded data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the three-variable series of symmetric products up to t^N.
    #[command(name = "sym-series")]
    SymSeries {
        /// JSON table of refined Hodge numbers.
        #[arg(long)]
        input: PathBuf,
        /// Truncation order.
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the refined Hodge numbers of the n-th symmetric product.
    #[command(name = "sym-hodge")]
    SymHodge {
        /// JSON table of refined Hodge numbers.
        #[arg(long)]
        input: PathBuf,
        /// Which symmetric product to expand.
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand the genus series of symmetric products up to t^N.
    #[command(name = "chi-y")]
    ChiY {
        /// JSON table of refined Hodge numbers.
        #[arg(long)]
        input: PathBuf,
        /// Truncation order.
        #[arg(long)]
        max_n: usize,
        /// Also expand the exponential form and compare coefficients.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand the signature series of a graded pairing up to t^N.
    Signature {
        /// JSON description of the graded pairing.
        #[arg(long)]
        pairing: PathBuf,
        /// Truncation order.
        #[arg(long)]
        max_n: usize,
        /// Recompute each coefficient from the induced pairing on invariant
        /// tensors and compare.
        #[arg(long)]
        brute: bool,
        /// Largest tensor-power dimension the brute-force route may build.
        #[arg(long, default_value_t = DEFAULT_DIM_BOUND)]
        dim_bound: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite and report one line per identity.
    Verify {
        /// signs | kunneth | dimensions | signature | all
        /// (prop22 and theorem2 are accepted as aliases).
        #[arg(long, default_value = "all")]
        suite: String,
        /// Seed for the randomized input families.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest symmetric power exercised.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Largest tensor-power dimension the oracles may build.
        #[arg(long, default_value_t = DEFAULT_DIM_BOUND)]
        dim_bound: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::SymSeries {
            input,
            max_n,
            format,
        } => cmd_sym_series(&input, max_n, format),
        Command::SymHodge { input, n, format } => cmd_sym_hodge(&input, n, format),
        Command::ChiY {
            input,
            max_n,
            check,
            format,
        } => cmd_chi_y(&input, max_n, check, format),
        Command::Signature {
            pairing,
            max_n,
            brute,
            dim_bound,
            format,
        } => cmd_signature(&pairing, max_n, brute, dim_bound, format),
        Command::Verify {
            suite,
            seed,
            max_n,
            dim_bound,
            format,
        } => cmd_verify(&suite, seed, max_n, dim_bound, format),
    };
    match code {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn read_hodge(path: &Path) -> Result<HodgeNumbers, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    HodgeNumbers::from_json_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_pairing(path: &Path) -> Result<GradedPairing, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    GradedPairing::from_json_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn series_strings(series: &TruncSeries) -> Vec<String> {
    series.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Re-serializes `base_json` and attaches the rendered series coefficients.
fn json_with_series(base_json: &str, series: &TruncSeries) -> Result<String, String> {
    let mut doc: serde_json::Value =
        serde_json::from_str(base_json).map_err(|e| e.to_string())?;
    doc["series"] = serde_json::json!(series_strings(series));
    serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())
}

fn cmd_sym_series(input: &Path, max_n: usize, format: Format) -> Result<u8, String> {
    let h = read_hodge(input)?;
    let series = sym_hodge_series(&h, max_n);
    match format {
        Format::Text => out(series.render_table()),
        Format::Json => outln(json_with_series(&h.to_json_string(), &series)?),
    }
    Ok(EXIT_OK)
}

fn cmd_sym_hodge(input: &Path, n: usize, format: Format) -> Result<u8, String> {
    let h = read_hodge(input)?;
    let table = sym_hodge_numbers(&h, n).map_err(|e| e.to_string())?;
    match format {
        Format::Text => out(table.render_table()),
        Format::Json => outln(table.to_json_string()),
    }
    Ok(EXIT_OK)
}

fn cmd_chi_y(input: &Path, max_n: usize, check: bool, format: Format) -> Result<u8, String> {
    let h = read_hodge(input)?;
    let series = chi_y_series(&h, max_n, SeriesForm::Product);
    match format {
        Format::Text => out(series.render_table()),
        Format::Json => outln(json_with_series(&h.to_json_string(), &series)?),
    }
    if check {
        let exponential = chi_y_series(&h, max_n, SeriesForm::Exponential);
        if series != exponential {
            eprintln!(
                "check failed: product form {series} differs from exponential form {exponential}"
            );
            return Ok(EXIT_VIOLATION);
        }
        eprintln!("check passed: both expansions agree up to t^{max_n}");
    }
    Ok(EXIT_OK)
}

fn cmd_signature(
    pairing: &Path,
    max_n: usize,
    brute: bool,
    dim_bound: usize,
    format: Format,
) -> Result<u8, String> {
    let phi = read_pairing(pairing)?;
    let series = match phi.hz_series(max_n) {
        Ok(series) => series,
        Err(e @ PairingError::ParityViolation { .. }) => {
            // Valid input data can never trip this; it indicates an internal
            // inconsistency, not a malformed file.
            eprintln!("error: {e}");
            return Ok(EXIT_VIOLATION);
        }
        Err(e) => return Err(e.to_string()),
    };
    let closed = series_int_coeffs(&series);

    let mut brute_cells: Vec<String> = Vec::new();
    let mut disagreement = false;
    if brute {
        for (n, &c) in closed.iter().enumerate() {
            match phi.brute_signature(n, dim_bound) {
                Ok(b) => {
                    if b != c {
                        disagreement = true;
                    }
                    brute_cells.push(b.to_string());
                }
                Err(PairingError::BoundExceeded { .. }) => {
                    brute_cells.push("skipped".to_string());
                }
                Err(e) => return Err(format!("n = {n}: {e}")),
            }
        }
    }

    match format {
        Format::Text => {
            for (n, &c) in closed.iter().enumerate() {
                if brute {
                    outln(format!("{n}: {c} brute={}", brute_cells[n]));
                } else {
                    outln(format!("{n}: {c}"));
                }
            }
        }
        Format::Json => {
            let mut doc: serde_json::Value =
                serde_json::from_str(&phi.to_json_string()).map_err(|e| e.to_string())?;
            doc["series"] = serde_json::json!(closed
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>());
            if brute {
                doc["brute"] = serde_json::json!(brute_cells);
            }
            outln(serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
        }
    }

    if disagreement {
        eprintln!("brute-force signatures disagree with the closed form");
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    suite: &str,
    seed: u64,
    max_n: usize,
    dim_bound: usize,
    format: Format,
) -> Result<u8, String> {
    let suite = Suite::parse(suite).ok_or_else(|| {
        format!(
            "unknown suite {suite:?}; expected signs, kunneth, dimensions, signature, or all"
        )
    })?;
    let config = VerifyConfig {
        max_n,
        seed,
        dim_bound,
    };
    let reports = run_suite(suite, config);
    let all_passed = reports.iter().all(|r| r.passed());
    match format {
        Format::Text => {
            for report in &reports {
                outln(report.render_line());
            }
        }
        Format::Json => {
            let checks: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    let mut entry = serde_json::json!({
                        "name": r.name,
                        "cases": r.cases,
                        "result": if r.passed() { "pass" } else { "fail" },
                    });
                    if let Some(ce) = &r.failure {
                        entry["counterexample"] = serde_json::json!(ce);
                    }
                    entry
                })
                .collect();
            let doc = serde_json::json!({ "checks": checks });
            outln(serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?);
        }
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_VIOLATION })
}
