//! Command-line front end; see [`csalg::pipeline`] for the commands.
//!
//! Exit status: 0 ok, 2 usage or input error, 3 hypotheses not met,
//! 4 property false (witness in the report), 5 refutation, 6 inconclusive.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use csalg::pipeline::{run_pipeline, Options, USAGE_EXIT};
use csalg::report::Format;

#[derive(Parser)]
#[command(name = "csalg", version, about = "Exact structure-constant algebra toolkit")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: FormatArg,
    /// Dimension cap; overrides CSALG_MAX_DIM.
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Write an algebra document for a named family.
    Gen {
        /// matrix, triangular, zero, group, direct, tensor or adjoin-unit.
        family: String,
        /// Input documents for direct, tensor and adjoin-unit.
        inputs: Vec<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Cayley table file for `group`.
        #[arg(long)]
        cayley: Option<String>,
        /// Built-in group family for `group`: cyclic, dihedral or symmetric.
        #[arg(long)]
        group: Option<String>,
        /// Name recorded in the document.
        #[arg(long)]
        name: Option<String>,
        /// Output path; the document goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Commutator subspace, commutator-simplicity, radical and traces.
    Analyze {
        input: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Dimensions of the four derivation-type map spaces.
    Derivations { input: String },
    /// Hypothesis space versus derivation space.
    #[command(name = "verify-thm31")]
    VerifyThm31 { input: String },
    /// Jordan-homomorphism criterion for a map.
    #[command(name = "verify-thm41")]
    VerifyThm41 {
        input: String,
        #[arg(long)]
        map: String,
    },
    /// Sampling tests for local derivations and local inner automorphisms.
    LocalTest {
        input: String,
        #[arg(long)]
        map: String,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Trace functionals and the nondegenerate-trace search.
    Trace {
        input: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
    },
}

fn set(o: &mut Options, key: &str, value: Option<impl ToString>) {
    if let Some(v) = value {
        o.insert(key.to_string(), v.to_string());
    }
}

fn options(command: Command) -> (&'static str, Options, Option<String>) {
    let mut o = Options::new();
    let mut output = None;
    let name = match command {
        Command::Gen {
            family,
            inputs,
            n,
            cayley,
            group,
            name,
            output: out,
        } => {
            match (family.as_str(), inputs.as_slice()) {
                ("direct" | "tensor", [l, r]) => {
                    set(&mut o, "left", Some(l));
                    set(&mut o, "right", Some(r));
                }
                (_, [input]) => set(&mut o, "input", Some(input)),
                _ => {}
            }
            set(&mut o, "family", Some(family));
            set(&mut o, "n", n);
            set(&mut o, "cayley", cayley);
            set(&mut o, "group", group);
            set(&mut o, "name", name);
            output = out;
            "gen"
        }
        Command::Analyze { input, seed, trials } => {
            set(&mut o, "input", Some(input));
            set(&mut o, "seed", seed);
            set(&mut o, "trials", trials);
            "analyze"
        }
        Command::Trace { input, seed, trials } => {
            set(&mut o, "input", Some(input));
            set(&mut o, "seed", seed);
            set(&mut o, "trials", trials);
            "trace"
        }
        Command::Derivations { input } => {
            set(&mut o, "input", Some(input));
            "derivations"
        }
        Command::VerifyThm31 { input } => {
            set(&mut o, "input", Some(input));
            "verify-thm31"
        }
        Command::VerifyThm41 { input, map } => {
            set(&mut o, "input", Some(input));
            set(&mut o, "map", Some(map));
            "verify-thm41"
        }
        Command::LocalTest {
            input,
            map,
            kind,
            seed,
            samples,
            trials,
        } => {
            set(&mut o, "input", Some(input));
            set(&mut o, "map", Some(map));
            set(&mut o, "kind", Some(kind));
            set(&mut o, "seed", Some(seed));
            set(&mut o, "samples", Some(samples));
            set(&mut o, "trials", trials);
            "local-test"
        }
    };
    (name, o, output)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    let (command, mut opts, output) = options(cli.command);
    set(&mut opts, "max-dim", cli.max_dim);
    let report = match run_pipeline(command, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("csalg: {e}");
            return ExitCode::from(USAGE_EXIT as u8);
        }
    };
    match (&report.artifact, output) {
        (Some(doc), Some(path)) => {
            if let Err(e) = std::fs::write(&path, doc) {
                eprintln!("csalg: {path}: {e}");
                return ExitCode::from(USAGE_EXIT as u8);
            }
            print!("{}", report.emit(format));
        }
        (Some(doc), None) => print!("{doc}"),
        (None, _) => print!("{}", report.emit(format)),
    }
    ExitCode::from(report.status.exit_code() as u8)
}
