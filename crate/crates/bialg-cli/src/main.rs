//! `bialg`: run, trace, and check the bundled languages.
//!
//! Exit codes: 0 on success, 1 when a property suite finds a failure, 2 on
//! bad input (unreadable file, syntax error, unbound variable, bad flags).
//! `BIALG_SEED` overrides `--seed` for the generator-driven suites.

mod checks;
mod render;
mod termsrc;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bialg::equiv::gen::Lang;
use bialg::equiv::{truncate, SampleConfig};
use bialg::gsos;
use bialg::lang::ccs::{sem_ccs, CcsRules};
use bialg::lang::razor::RazorRules;
use bialg::lang::stream::sem_stream;

#[derive(Parser)]
#[command(
    name = "bialg",
    about = "Interpreters derived from one rule set per language, plus the property suites that show the two derivations agree",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// The value-passing process language (.ccs files).
    Ccs {
        #[command(subcommand)]
        cmd: CcsCmd,
    },
    /// Literals and addition with stop-or-step semantics; `amb(a, b)` branches.
    Razor {
        #[command(subcommand)]
        cmd: TraceOnly,
    },
    /// Literals and addition with stream semantics.
    Stream {
        #[command(subcommand)]
        cmd: TraceOnly,
    },
    /// Property suites over generated terms.
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
}

#[derive(Subcommand)]
enum CcsCmd {
    /// Parse a process and print the values it sends, depth-first.
    Run {
        /// Path to a .ccs file, or `-` for standard input.
        input: String,
        /// Stop after this many printed values.
        #[arg(long, default_value_t = 16)]
        max_outputs: usize,
        /// Bound the traversal depth (default: unbounded).
        #[arg(long)]
        depth: Option<usize>,
        /// Print only the first occurrence of each value.
        #[arg(long)]
        nub: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        fmt: Format,
    },
    /// Parse a process and print its truncated behavior tree.
    Trace(TraceArgs),
}

#[derive(Subcommand)]
enum TraceOnly {
    /// Parse a term and print its truncated behavior tree.
    Trace(TraceArgs),
}

#[derive(Args)]
struct TraceArgs {
    /// Path to a source file, or `-` for standard input.
    input: String,
    /// Number of behavior layers to force.
    #[arg(long, default_value_t = 5)]
    depth: usize,
    /// Receive continuations are tabulated at values 0..samples.
    #[arg(long, default_value_t = 4)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    fmt: Format,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// The fold route and the unfold route produce identical truncations.
    Coincidence(CheckArgs),
    /// The semantics of a term is the algebra applied to its parts' semantics.
    Compositionality(CheckArgs),
    /// Language-specific independent oracles.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum)]
    lang: LangArg,
    /// Number of generated terms.
    #[arg(long, default_value_t = 200)]
    terms: usize,
    /// Truncation depth for comparisons.
    #[arg(long, default_value_t = 5)]
    depth: usize,
    /// Receive continuations are tabulated at values 0..samples.
    #[arg(long, default_value_t = 4)]
    samples: usize,
    /// Generator seed (overridden by BIALG_SEED).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    lang: LangArg,
    /// For the razor: check every term up to this size exhaustively.
    #[arg(long, default_value_t = 6)]
    exhaustive_size: usize,
    /// For the stream language: number of generated terms.
    #[arg(long, default_value_t = 200)]
    terms: usize,
    /// For the stream language: labels checked per term.
    #[arg(long, default_value_t = 10)]
    depth: usize,
    /// Generator seed (overridden by BIALG_SEED).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LangArg {
    Stream,
    Razor,
    #[value(name = "razor+amb")]
    RazorAmb,
    Ccs,
}

impl From<LangArg> for Lang {
    fn from(l: LangArg) -> Lang {
        match l {
            LangArg::Stream => Lang::Stream,
            LangArg::Razor => Lang::Razor,
            LangArg::RazorAmb => Lang::RazorAmb,
            LangArg::Ccs => Lang::Ccs,
        }
    }
}

/// Anything that should abort with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(input: &str) -> Result<String, InputError> {
    if input == "-" {
        let mut src = String::new();
        std::io::stdin()
            .read_to_string(&mut src)
            .map_err(|e| InputError(format!("reading standard input: {e}")))?;
        Ok(src)
    } else {
        std::fs::read_to_string(input).map_err(|e| InputError(format!("reading {input}: {e}")))
    }
}

fn seed_override(seed: u64) -> Result<u64, InputError> {
    match std::env::var("BIALG_SEED") {
        Ok(value) => value
            .parse::<u64>()
            .map_err(|_| InputError(format!("BIALG_SEED must be a 64-bit integer, got `{value}`"))),
        Err(_) => Ok(seed),
    }
}

fn samples_list(samples: usize) -> Result<Vec<u64>, InputError> {
    if samples == 0 {
        return Err(InputError("--samples must be at least 1".into()));
    }
    Ok((0..samples as u64).collect())
}

fn at_least_one(value: usize, flag: &str) -> Result<usize, InputError> {
    if value == 0 {
        Err(InputError(format!("{flag} must be at least 1")))
    } else {
        Ok(value)
    }
}

fn dispatch(cli: Cli) -> Result<bool, InputError> {
    match cli.cmd {
        Cmd::Ccs { cmd } => match cmd {
            CcsCmd::Run {
                input,
                max_outputs,
                depth,
                nub,
                fmt,
            } => {
                if max_outputs == 0 {
                    return Err(InputError("--max-outputs must be at least 1".into()));
                }
                let src = read_input(&input)?;
                let term = ccs_syntax::elaborate(&ccs_syntax::parse(&src)?)?;
                let behavior = sem_ccs(&term);
                let values = render::collect_outputs(
                    &behavior,
                    max_outputs,
                    depth.unwrap_or(usize::MAX),
                    nub,
                );
                match fmt {
                    Format::Text => {
                        for v in values {
                            println!("{v}");
                        }
                    }
                    Format::Json => println!("{}", serde_json::Value::from(values)),
                }
                Ok(true)
            }
            CcsCmd::Trace(args) => {
                at_least_one(args.depth, "--depth")?;
                let src = read_input(&args.input)?;
                let term = ccs_syntax::elaborate(&ccs_syntax::parse(&src)?)?;
                let cfg = SampleConfig::new(args.depth, samples_list(args.samples)?, 0);
                let tree = truncate(&gsos::sem(&CcsRules, &term), &cfg);
                match args.fmt {
                    Format::Text => print!("{}", render::acts_text(&tree)),
                    Format::Json => println!("{}", render::acts_json(&tree)),
                }
                Ok(true)
            }
        },
        Cmd::Razor {
            cmd: TraceOnly::Trace(args),
        } => {
            at_least_one(args.depth, "--depth")?;
            let src = read_input(&args.input)?;
            let term = termsrc::parse_razor(&src)?;
            let cfg = SampleConfig::new(args.depth, samples_list(args.samples)?, 0);
            let tree = truncate(&gsos::sem(&RazorRules, &term), &cfg);
            match args.fmt {
                Format::Text => print!("{}", render::stop_and_go_text(&tree)),
                Format::Json => println!("{}", render::stop_and_go_json(&tree)),
            }
            Ok(true)
        }
        Cmd::Stream {
            cmd: TraceOnly::Trace(args),
        } => {
            at_least_one(args.depth, "--depth")?;
            let src = read_input(&args.input)?;
            let term = termsrc::parse_stream(&src)?;
            let cfg = SampleConfig::new(args.depth, samples_list(args.samples)?, 0);
            let tree = truncate(&sem_stream(&term), &cfg);
            match args.fmt {
                Format::Text => println!("{}", render::stream_text(&tree)),
                Format::Json => println!("{}", render::stream_json(&tree)),
            }
            Ok(true)
        }
        Cmd::Check { cmd } => match cmd {
            CheckCmd::Coincidence(args) => {
                at_least_one(args.terms, "--terms")?;
                at_least_one(args.depth, "--depth")?;
                let seed = seed_override(args.seed)?;
                let samples = samples_list(args.samples)?;
                Ok(checks::coincidence(
                    args.lang.into(),
                    args.terms,
                    args.depth,
                    &samples,
                    seed,
                ))
            }
            CheckCmd::Compositionality(args) => {
                at_least_one(args.terms, "--terms")?;
                at_least_one(args.depth, "--depth")?;
                let seed = seed_override(args.seed)?;
                let samples = samples_list(args.samples)?;
                Ok(checks::compositionality(
                    args.lang.into(),
                    args.terms,
                    args.depth,
                    &samples,
                    seed,
                ))
            }
            CheckCmd::Oracle(args) => {
                at_least_one(args.exhaustive_size, "--exhaustive-size")?;
                at_least_one(args.terms, "--terms")?;
                at_least_one(args.depth, "--depth")?;
                let seed = seed_override(args.seed)?;
                match args.lang.into() {
                    Lang::Razor => Ok(checks::razor_oracle_suite(false, args.exhaustive_size)),
                    Lang::RazorAmb => Ok(checks::razor_oracle_suite(true, args.exhaustive_size)),
                    Lang::Stream => Ok(checks::stream_oracle_suite(args.terms, args.depth, seed)),
                    Lang::Ccs => Err(InputError(
                        "no independent oracle is defined for ccs; use `check coincidence --lang ccs`"
                            .into(),
                    )),
                }
            }
        },
    }
}
