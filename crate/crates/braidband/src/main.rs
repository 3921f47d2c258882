//! Command-line surface: one-off computations, catalog generation, and
//! the verification suites.
//!
//! Exit codes: 0 all good, 1 verification failure, 2 usage or parse
//! error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use braidband::exactmath::{ContFrac, ExtRational, Parity, Slope};
use braidband::family::{enumerate_catalog, CatalogEntry, KnotSpec};
use braidband::spaces::lens_from_two_bridge;
use braidband::verify::{self, VerifyReport, DEFAULT_SEED};
use braidband::{band_slope, BraidWord};

#[derive(Parser)]
#[command(
    name = "braidband",
    version,
    about = "Exact banding calculus for closed 3-string braids"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Negative continued fractions: evaluate or expand.
    Cf {
        #[command(subcommand)]
        cmd: CfCmd,
    },
    /// Band a braid closure along a slope to a two-bridge link.
    Band {
        /// Braid word, e.g. "s2^5 s1^7"
        #[arg(long)]
        beta: String,
        /// Slope as <q>/<p>; 1/0 is the slope (0,1)
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
    },
    /// Full catalog row for a single knot spec.
    Knot {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
        /// Compute the target with the mirrored slope (p,-q),
        /// matching the printed closed-form constants.
        #[arg(long)]
        paper_sign: bool,
    },
    /// Stream a deterministic catalog, one JSON object per line.
    Enumerate {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        /// Maximum (odd) continued-fraction length
        #[arg(long = "cf-len")]
        cf_len: usize,
        /// Maximum |digit|
        #[arg(long = "cf-digit")]
        cf_digit: i64,
        #[arg(long)]
        paper_sign: bool,
    },
    /// Run property suites; exit 1 on any failure.
    Verify {
        /// Suite name or "all"
        suite: String,
        /// Override the suite's main size bound
        #[arg(long)]
        bound: Option<i64>,
        /// Seed for the pseudo-random generators
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum CfCmd {
    /// Evaluate a digit sequence, e.g. `cf eval -- 0 2 2`.
    Eval {
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true, num_args = 0..)]
        digits: Vec<i64>,
    },
    /// Expand a value <q>/<p> into digits.
    Expand {
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value_t = ParityArg::Any)]
        parity: ParityArg,
        #[arg(allow_hyphen_values = true)]
        value: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ParityArg {
    Any,
    Odd,
    Even,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Any => Parity::Any,
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
        }
    }
}

fn parse_value(text: &str) -> Result<ExtRational, String> {
    let (q, p) = text
        .split_once('/')
        .ok_or_else(|| format!("expected <q>/<p>, got `{text}`"))?;
    let q: i64 = q.trim().parse().map_err(|_| format!("invalid numerator `{q}`"))?;
    let p: i64 = p.trim().parse().map_err(|_| format!("invalid denominator `{p}`"))?;
    if p == 0 && q == 0 {
        return Err("0/0 is not a value".to_string());
    }
    Ok(ExtRational::new(q, p))
}

fn print_report(report: &VerifyReport) {
    println!(
        "suite {}: {} cases, {} failures",
        report.suite,
        report.cases,
        report.failures.len()
    );
    for f in &report.failures {
        println!(
            "  FAIL {} expected {} got {}",
            f.input, f.expected, f.actual
        );
    }
}

const SUITES: &[&str] = &[
    "thm11-oracle",
    "bezout",
    "km-lemma",
    "thm14",
    "concat",
    "cf-roundtrip",
    "word-problem",
    "catalog-determinism",
    "degenerate-family",
    "berge",
];

fn run_suite(name: &str, seed: u64, bound: Option<i64>) -> Option<VerifyReport> {
    let b = |default: i64| bound.unwrap_or(default);
    Some(match name {
        "thm11-oracle" => verify::thm11_oracle(seed, b(12) as usize, 500, 20),
        "bezout" => verify::bezout_invariance(seed, 12, 500, b(20)),
        "km-lemma" => verify::km_lemma(seed, 2000, 10, b(9)),
        "thm14" => verify::thm14_anchors(b(100)),
        "concat" => verify::concat_identity(seed, b(1000) as usize),
        "cf-roundtrip" => verify::cf_roundtrip(b(50)),
        "word-problem" => verify::word_problem(seed, b(10_000) as usize, 500),
        "catalog-determinism" => verify::catalog_determinism(),
        "degenerate-family" => verify::degenerate_family(b(20)),
        "berge" => verify::berge_cross_check(b(12)),
        _ => return None,
    })
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Cmd::Cf { cmd } => match cmd {
            CfCmd::Eval { json, digits } => {
                let f = ContFrac::new(digits.clone());
                let v = f.eval();
                if json {
                    println!("{}", json!({ "digits": digits, "value": v.to_string() }));
                } else {
                    println!("{v}");
                }
            }
            CfCmd::Expand { json, parity, value } => {
                let v = parse_value(&value)?;
                let f = ContFrac::expand(v, parity.into());
                if json {
                    println!(
                        "{}",
                        json!({ "digits": f.digits(), "value": v.to_string() })
                    );
                } else {
                    let text: Vec<String> = f.digits().iter().map(|d| d.to_string()).collect();
                    println!("{}", text.join(" "));
                }
            }
        },
        Cmd::Band { beta, slope } => {
            let word = BraidWord::parse(&beta).map_err(|e| e.to_string())?;
            let s: Slope = slope.parse().map_err(|e: braidband::Error| e.to_string())?;
            let res = band_slope(&word, &s).map_err(|e| e.to_string())?;
            let cover = lens_from_two_bridge(&res.link);
            println!(
                "{}",
                json!({
                    "cover": cover.to_string(),
                    "link": res.link.to_string(),
                    "raw": [res.raw_pair.0, res.raw_pair.1],
                })
            );
        }
        Cmd::Knot {
            r,
            s,
            slope,
            paper_sign,
        } => {
            let sl: Slope = slope.parse().map_err(|e: braidband::Error| e.to_string())?;
            let entry = CatalogEntry::build(&KnotSpec::new(r, s, sl), paper_sign)
                .map_err(|e| e.to_string())?;
            println!("{}", entry.to_json());
        }
        Cmd::Enumerate {
            r,
            s,
            cf_len,
            cf_digit,
            paper_sign,
        } => {
            if cf_len < 1 || cf_digit < 1 {
                return Err("bounds must be >= 1".to_string());
            }
            let entries =
                enumerate_catalog(r, s, cf_len, cf_digit, paper_sign).map_err(|e| e.to_string())?;
            for e in entries {
                println!("{}", e.to_json());
            }
        }
        Cmd::Verify { suite, bound, seed } => {
            let seed = seed.unwrap_or(DEFAULT_SEED);
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return Err(format!(
                    "unknown suite `{suite}`; expected one of: all, {}",
                    SUITES.join(", ")
                ));
            };
            let mut all_passed = true;
            for name in names {
                let report = run_suite(name, seed, bound).expect("suite name validated");
                print_report(&report);
                all_passed &= report.passed();
            }
            return Ok(if all_passed { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
