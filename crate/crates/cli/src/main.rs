use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use polyshift::oracle::{is_prime, DEFAULT_PRIME};
use polyshift_cli::campaign::{parse_budget, parse_conjectures, CampaignConfig};
use polyshift_cli::commands::{cmd_betti, cmd_check, cmd_hs, cmd_soc, Outcome, Property, Route};
use polyshift_cli::error::exit;
use polyshift_cli::{parse_ideal, run_campaign, CliError, IdealSource};

/// Homological shift ideals, socles and conjecture fuzzing for monomial ideals.
#[derive(Parser, Debug)]
#[command(name = "polyshift", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Ideal file in the generator-list grammar or a family document; `-` reads stdin.
    #[arg(long, short = 'i', default_value = "-")]
    input: String,
    /// Variable order such as `x2>x1>x3`.
    #[arg(long)]
    order: Option<String>,
    /// Print the JSON report.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homological shift ideals.
    Hs {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "all")]
        route: Route,
        /// A single homological degree.
        #[arg(short = 'j', conflicts_with = "all")]
        j: Option<usize>,
        /// Every degree from 0 to n (the default).
        #[arg(long)]
        all: bool,
        /// Include wall-clock timings per route.
        #[arg(long)]
        timings: bool,
    },
    /// Socle ideal and maximal projective dimension.
    Soc {
        #[command(flatten)]
        input: Input,
    },
    /// Decide a property.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        property: Property,
    },
    /// Multigraded Betti numbers from the oracle.
    Betti {
        #[command(flatten)]
        input: Input,
    },
    /// Seeded conjecture campaign over random polymatroidal ideals.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Generator limits, e.g. `n=5,d=4,gens=120`.
        #[arg(long, default_value = "")]
        budget: String,
        /// Any of `bbh,chl,transversal`.
        #[arg(long, default_value = "bbh,chl,transversal")]
        conjectures: String,
        /// Also run the oracle route on every instance.
        #[arg(long)]
        oracle: bool,
        /// JSON-lines log; flagged instances also go to `<out>.flags.jsonl`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
}

fn read_source(input: &Input) -> Result<IdealSource, CliError> {
    let text = if input.input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&input.input)?
    };
    let src = parse_ideal(&text)?;
    Ok(match &input.order {
        Some(o) => src.with_order(o)?,
        None => src,
    })
}

fn oracle_prime() -> Result<u32, CliError> {
    match std::env::var("POLYSHIFT_PRIME") {
        Ok(v) => match v.trim().parse::<u32>() {
            Ok(p) if is_prime(p) => Ok(p),
            _ => Err(CliError::Usage(format!(
                "POLYSHIFT_PRIME={v} is not a prime below 2^32"
            ))),
        },
        Err(_) => Ok(DEFAULT_PRIME),
    }
}

fn emit(outcome: &Outcome, json: bool) -> Result<i32, CliError> {
    let mut out = io::stdout().lock();
    if json {
        serde_json::to_writer_pretty(&mut out, &outcome.json).map_err(io::Error::from)?;
        out.write_all(b"\n")?;
    } else {
        out.write_all(outcome.text.as_bytes())?;
    }
    Ok(outcome.code)
}

fn flags_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".flags.jsonl");
    PathBuf::from(name)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Hs {
            input,
            route,
            j,
            all: _,
            timings,
        } => {
            let src = read_source(&input)?;
            emit(&cmd_hs(&src, j, route, oracle_prime()?, timings)?, input.json)
        }
        Command::Soc { input } => emit(&cmd_soc(&read_source(&input)?)?, input.json),
        Command::Check { input, property } => emit(&cmd_check(&read_source(&input)?, property)?, input.json),
        Command::Betti { input } => emit(&cmd_betti(&read_source(&input)?, oracle_prime()?)?, input.json),
        Command::Fuzz {
            seed,
            count,
            budget,
            conjectures,
            oracle,
            out,
            json,
        } => {
            let mut config = CampaignConfig::new(seed, count);
            config.budget = parse_budget(&budget).map_err(CliError::Usage)?;
            config.conjectures = parse_conjectures(&conjectures).map_err(CliError::Usage)?;
            config.oracle_every = oracle;
            let report = run_campaign(&config)?;
            match &out {
                Some(path) => {
                    report.write_jsonl(io::BufWriter::new(fs::File::create(path)?))?;
                    let flagged: Vec<_> = report.flagged().collect();
                    if !flagged.is_empty() {
                        let mut f = io::BufWriter::new(fs::File::create(flags_path(path))?);
                        for r in flagged {
                            serde_json::to_writer(&mut f, r).map_err(io::Error::from)?;
                            f.write_all(b"\n")?;
                        }
                    }
                }
                None => report.write_jsonl(io::stdout().lock())?,
            }
            let s = &report.summary;
            for r in report.flagged() {
                for f in &r.flags {
                    eprintln!(
                        "warning: instance {} ({}): {f}",
                        r.index,
                        r.spec.as_deref().unwrap_or("?")
                    );
                }
                for d in &r.disagreements {
                    eprintln!(
                        "error: instance {} ({}): {d}",
                        r.index,
                        r.spec.as_deref().unwrap_or("?")
                    );
                }
            }
            if json {
                serde_json::to_writer_pretty(io::stderr().lock(), s).map_err(io::Error::from)?;
                eprintln!();
            } else {
                eprintln!(
                    "{} instances ({} skipped): bbh flags {}/{}, chl flags {}/{}, transversal unequal {}/{}, disagreements {}",
                    s.instances,
                    s.skipped,
                    s.bbh_flags,
                    s.bbh_checked,
                    s.chl_flags,
                    s.chl_checked,
                    s.transversal_unequal,
                    s.transversal_checked,
                    s.disagreements
                );
            }
            Ok(if s.disagreements > 0 {
                exit::DISAGREEMENT
            } else {
                exit::OK
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::USAGE as u8
            } else {
                exit::OK as u8
            });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
