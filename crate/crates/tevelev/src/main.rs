use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use tevelev::{
    evaluate_all, exit, parse_profiles, parse_sizes, render, threads_from_env, verify_grid,
    EngineChoice, Evaluator, Format, GridBounds, Record,
};
use tevelev_core::{genus0::DEFAULT_BOX, run_trials, TevelevProblem};

#[derive(Parser)]
#[command(
    name = "tevelev",
    version,
    about = "Generalized Tevelev degrees of the projective line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single problem.
    Compute(ComputeArgs),
    /// Evaluate one profile list over a range of genera and ell.
    Table(TableArgs),
    /// Cross-check all engines over a grid of problems.
    Verify(VerifyArgs),
    /// Run the genus-0 linear-algebra oracle on random configurations.
    Oracle0(OracleArgs),
}

// Newtypes keep clap from reading a `Vec` field as a repeated flag.
#[derive(Clone)]
struct ProfilesArg(Vec<Vec<u32>>);

#[derive(Clone)]
struct SizesArg(Vec<u32>);

fn profiles_arg(s: &str) -> Result<ProfilesArg, String> {
    parse_profiles(s)
        .map(ProfilesArg)
        .map_err(|e| e.to_string())
}

fn sizes_arg(s: &str) -> Result<SizesArg, String> {
    parse_sizes(s).map(SizesArg).map_err(|e| e.to_string())
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    g: u32,
    #[arg(long, allow_negative_numbers = true)]
    ell: i64,
    /// Profiles such as "2,1;3"; empty for none.
    #[arg(long, value_parser = profiles_arg, default_value = "")]
    profiles: ProfilesArg,
    #[arg(long, value_enum, default_value_t)]
    engine: EngineChoice,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Include per-engine wall times in microseconds.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    g_max: u32,
    #[arg(long, allow_negative_numbers = true)]
    ell_min: i64,
    #[arg(long, allow_negative_numbers = true)]
    ell_max: i64,
    #[arg(long, value_parser = profiles_arg, default_value = "")]
    profiles: ProfilesArg,
    #[arg(long, value_enum, default_value_t)]
    engine: EngineChoice,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    g_max: u32,
    #[arg(long, allow_negative_numbers = true)]
    ell_min: i64,
    #[arg(long, allow_negative_numbers = true)]
    ell_max: i64,
    #[arg(long)]
    k_max: u32,
    #[arg(long)]
    size_max: u32,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    d: u32,
    /// Comma-separated sizes such as "3,2".
    #[arg(long, value_parser = sizes_arg, default_value = "")]
    sizes: SizesArg,
    #[arg(long, default_value_t = 50)]
    trials: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Half-width of the integer box coordinates are drawn from.
    #[arg(long = "box", default_value_t = DEFAULT_BOX)]
    half_width: i64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn problem(g: u32, ell: i64, profiles: Vec<Vec<u32>>) -> TevelevProblem {
    // the parser already rejects empty and non-positive entries
    TevelevProblem::new(g, ell, profiles).expect("parsed profiles are well formed")
}

fn agreement_status(records: &[Record]) -> u8 {
    if records.iter().all(|r| r.agree) {
        exit::OK
    } else {
        exit::DISAGREEMENT
    }
}

fn run_compute(args: ComputeArgs) -> u8 {
    let p = problem(args.g, args.ell, args.profiles.0);
    let record = Evaluator::new(args.timings).evaluate(&p, args.engine);
    let records = [record];
    print!("{}", render(&records, args.format));
    agreement_status(&records)
}

fn run_table(args: TableArgs) -> u8 {
    let problems: Vec<_> = (0..=args.g_max)
        .flat_map(|g| (args.ell_min..=args.ell_max).map(move |ell| (g, ell)))
        .map(|(g, ell)| problem(g, ell, args.profiles.0.clone()))
        .collect();
    let records = evaluate_all(&problems, args.engine, false, threads_from_env());
    print!("{}", render(&records, args.format));
    agreement_status(&records)
}

fn run_verify(args: VerifyArgs) -> u8 {
    let bounds = GridBounds {
        g_max: args.g_max,
        ell_min: args.ell_min,
        ell_max: args.ell_max,
        k_max: args.k_max,
        size_max: args.size_max,
    };
    let report = verify_grid(&bounds, threads_from_env());
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        _ => {
            println!(
                "checked={} invalid_checked={} mismatches={} wall_ms={}",
                report.checked,
                report.invalid_checked,
                report.mismatches.len(),
                report.wall_ms
            );
            if !report.ok() {
                print!("{}", render(&report.mismatches, args.format));
            }
        }
    }
    if report.ok() {
        exit::OK
    } else {
        exit::DISAGREEMENT
    }
}

fn run_oracle(args: OracleArgs) -> u8 {
    let summary = match run_trials(
        args.d,
        &args.sizes.0,
        args.trials,
        args.seed,
        args.half_width,
    ) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return exit::USAGE;
        }
    };
    let fields = [
        ("d", args.d.to_string()),
        (
            "sizes",
            tevelev::format_profiles(std::slice::from_ref(&args.sizes.0)),
        ),
        ("seed", args.seed.to_string()),
        ("trials", summary.trials.to_string()),
        ("full", summary.full.to_string()),
        ("kernel_one", summary.kernel_one.to_string()),
        ("coprime", summary.coprime.to_string()),
        ("exact_degree", summary.exact_degree.to_string()),
        ("simple_branching", summary.simple_branching.to_string()),
    ];
    match args.format {
        Format::Json => {
            let value = json!({
                "d": args.d,
                "sizes": args.sizes.0,
                "seed": args.seed,
                "trials": summary.trials,
                "full": summary.full,
                "kernel_one": summary.kernel_one,
                "coprime": summary.coprime,
                "exact_degree": summary.exact_degree,
                "simple_branching": summary.simple_branching,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            let written = w
                .write_record(fields.iter().map(|f| f.0))
                .and_then(|_| w.write_record(fields.iter().map(|f| f.1.as_str())))
                .and_then(|_| w.flush().map_err(Into::into));
            if let Err(e) = written {
                eprintln!("error: {e}");
            }
        }
        Format::Table => {
            for (k, v) in &fields {
                println!("{k:<16} {v}");
            }
        }
    }
    if summary.all_full() {
        exit::OK
    } else {
        exit::ORACLE_FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Compute(a) => run_compute(a),
        Command::Table(a) => run_table(a),
        Command::Verify(a) => run_verify(a),
        Command::Oracle0(a) => run_oracle(a),
    };
    ExitCode::from(status)
}
