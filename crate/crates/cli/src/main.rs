//! `chiruns`: measure repetitiveness (`chi`, `r`, `r_bar`, `r_c`, `sre`) on
//! arbitrary inputs, generate the clustered and run-minimal families, run
//! the closed-form verification sweeps, and probe the sentinel-insertion
//! experiments.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{
    literal_or_file, run_conjecture, run_gen, run_measure, run_sweep, run_verify, AlphabetChoice,
    GenKind, GenParams, SweepParams, VerifyParams, VerifyScope,
};
use report::Format;

#[derive(Parser)]
#[command(name = "chiruns", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Measure chi, r, r_bar, r_c and sre of a word.
    Measure(MeasureArgs),
    /// Generate a family member and print it with a provenance line.
    Gen(GenArgs),
    /// Run the closed-form verification suites; non-zero exit on any failure.
    Verify(VerifyArgs),
    /// Seeded randomized sweep over the clustered family, one row per word.
    Sweep(SweepArgs),
    /// Sentinel-insertion scan of the run-minimal pattern, with an achiever
    /// census for small orders.
    Conjecture(ConjectureArgs),
}

#[derive(Args)]
struct MeasureArgs {
    /// The word itself; alternatively use --input.
    literal: Option<String>,

    /// Read the word from a file (raw bytes).
    #[arg(long)]
    input: Option<PathBuf>,

    /// Symbol order: inferred from the input, or a declared alphabet.
    #[arg(long, value_enum, default_value_t = AlphabetArg::Auto)]
    alphabet: AlphabetArg,

    /// Cross-check against the brute-force oracles (input length capped).
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetArg {
    /// Sorted distinct bytes of the input.
    Auto,
    /// {0, 1}.
    Binary,
    /// {0, ..., 9}.
    Digits,
    /// All bytes in byte order (the sentinel byte '$' stays reserved).
    Bytes,
}

impl From<AlphabetArg> for AlphabetChoice {
    fn from(a: AlphabetArg) -> AlphabetChoice {
        match a {
            AlphabetArg::Auto => AlphabetChoice::Auto,
            AlphabetArg::Binary => AlphabetChoice::Binary,
            AlphabetArg::Digits => AlphabetChoice::Digits,
            AlphabetArg::Bytes => AlphabetChoice::Bytes,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    /// Which family to generate.
    #[arg(value_enum)]
    kind: GenKindArg,

    /// Alphabet size (clustered, debruijn).
    #[arg(long)]
    sigma: Option<usize>,

    /// Order (runmin, debruijn).
    #[arg(long)]
    k: Option<u32>,

    /// Clustered run exponents, largest symbol first, e.g. 2,4,3.
    #[arg(long, value_delimiter = ',')]
    exponents: Option<Vec<usize>>,

    /// Binary characteristic polynomial for LFSR-based de Bruijn
    /// generation; caret notation (x^4+x+1) or hex bitmask (0x13).
    #[arg(long)]
    poly: Option<String>,

    /// Allow orders beyond the default budget (k > 15).
    #[arg(long)]
    big: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKindArg {
    Clustered,
    Runmin,
    Debruijn,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(value_enum, default_value_t = ScopeArg::All)]
    scope: ScopeArg,

    /// Largest alphabet size for clustered and sigma-bounds sweeps.
    #[arg(long, default_value_t = 12)]
    max_sigma: usize,

    /// Largest order for runmin and sigma-bounds sweeps.
    #[arg(long, default_value_t = 15)]
    max_k: u32,

    /// Random exponent vectors per alphabet size (clustered).
    #[arg(long, default_value_t = 50)]
    count: usize,

    /// Seed for the randomized sweeps; fully determines them.
    #[arg(long, default_value_t = 0xC0FFEE)]
    seed: u64,

    /// Include the large orders (adds runmin k = 22 when max-k allows).
    #[arg(long)]
    big: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Clustered,
    Runmin,
    SigmaBounds,
    All,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 12)]
    max_sigma: usize,

    /// Words per alphabet size.
    #[arg(long, default_value_t = 50)]
    count: usize,

    #[arg(long, default_value_t = 0xC0FFEE)]
    seed: u64,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Pattern order; the achiever census needs k <= 5, the scan k <= 15.
    #[arg(long)]
    k: u32,

    /// Allow orders beyond the default budget.
    #[arg(long)]
    big: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: Format = cli.format.into();
    match run(cli.command, format) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, format: Format) -> anyhow::Result<bool> {
    match command {
        Command::Measure(args) => {
            let bytes = literal_or_file(args.literal.as_deref(), args.input.as_deref())?;
            let report = run_measure(&bytes, &args.alphabet.into(), args.oracle)?;
            print!("{}", report.render(format));
            Ok(report.pass)
        }
        Command::Gen(args) => {
            let params = GenParams {
                kind: match args.kind {
                    GenKindArg::Clustered => GenKind::Clustered,
                    GenKindArg::Runmin => GenKind::Runmin,
                    GenKindArg::Debruijn => GenKind::Debruijn,
                },
                sigma: args.sigma,
                k: args.k,
                exponents: args.exponents,
                poly: args.poly,
                big: args.big,
            };
            let (word, provenance) = run_gen(&params)?;
            println!("{word}");
            println!("{provenance}");
            Ok(true)
        }
        Command::Verify(args) => {
            let params = VerifyParams {
                scope: match args.scope {
                    ScopeArg::Clustered => VerifyScope::Clustered,
                    ScopeArg::Runmin => VerifyScope::Runmin,
                    ScopeArg::SigmaBounds => VerifyScope::SigmaBounds,
                    ScopeArg::All => VerifyScope::All,
                },
                max_sigma: args.max_sigma,
                max_k: args.max_k,
                count: args.count,
                seed: args.seed,
                big: args.big,
            };
            let report = run_verify(&params)?;
            print!("{}", report.render(format));
            Ok(report.pass)
        }
        Command::Sweep(args) => {
            let params = SweepParams {
                max_sigma: args.max_sigma,
                count: args.count,
                seed: args.seed,
            };
            let report = run_sweep(&params)?;
            print!("{}", report.render(format));
            Ok(report.pass)
        }
        Command::Conjecture(args) => {
            let report = run_conjecture(args.k, args.big)?;
            print!("{}", report.render(format));
            Ok(report.pass)
        }
    }
}
