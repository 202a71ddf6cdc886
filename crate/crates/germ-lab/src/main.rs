//! Thin command-line front end over the `germ_lab` library.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 verification failure, 2 usage or input error.

use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;

use germ_lab::output::{self, Format};
use germ_lab::{blowup, chains, diophantine, monodromy, verify};

#[derive(Parser)]
#[command(name = "germ-lab", version, about = "Exact combinatorics of binomial plane-curve singularities", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the orbit tree up to a level.
    Tree {
        #[arg(long)]
        level: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Diophantine solutions, decorations, and extensions.
    Dio {
        #[command(subcommand)]
        command: DioCommand,
    },
    /// Minus-continued-fraction expansion of k/q.
    Hj {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Resolve x^k1 − y^k2 and print the dual graph.
    Resolve {
        #[arg(long)]
        k1: i64,
        #[arg(long)]
        k2: i64,
        /// Include the per-blowup trace.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Classify the germs branched at x^k1 − y^k2.
    Classify {
        #[arg(long)]
        k1: i64,
        #[arg(long)]
        k2: i64,
        /// Exhaustive enumeration cap on the cover degree.
        #[arg(long, default_value_t = monodromy::DEFAULT_DEGREE_CAP)]
        max_degree: usize,
        /// Print a witness monodromy triple.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Sweep bound (per-suite meaning; defaults per suite).
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum DioCommand {
    /// Check a tuple against the defining equation and solve for the
    /// auxiliary pair.
    Solve(QuadArgs),
    /// Extend a tuple to its eight-component solution.
    Extend(QuadArgs),
    /// The unique decorated orbit with left column (k, q).
    Pr1Inverse {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Args)]
struct QuadArgs {
    #[arg(long)]
    k1: i64,
    #[arg(long)]
    k2: i64,
    #[arg(long)]
    q1: i64,
    #[arg(long)]
    q2: i64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> germ_lab::Result<ExitCode> {
    match cli.command {
        Command::Tree { level, format } => {
            let text = match format {
                Format::Table => output::tree_table(level)?,
                Format::Json => output::tree_json(level)?,
                Format::Dot => output::tree_dot(level)?,
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Hj { k, q, format } => {
            let chain = chains::hj_expand(k, q)?;
            match format {
                Format::Table => {
                    println!("{k}/{q} = {chain}");
                    println!("continuant {}", chains::continuant(&chain.weights)?);
                }
                Format::Json => print!("{}", output::hj_json(k, q, &chain)?),
                Format::Dot => print!("{}", output::chain_dot(&chain, "expansion")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Resolve { k1, k2, trace, format } => {
            let r = blowup::resolve(k1, k2)?;
            match format {
                Format::Table => print!("{}", output::resolution_table(&r, trace)),
                Format::Json => print!("{}", output::resolution_json(&r, trace)),
                Format::Dot => print!("{}", output::resolution_dot(&r)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { k1, k2, max_degree, witness, format } => {
            let c = monodromy::classify_capped(k1, k2, max_degree)?;
            match format {
                Format::Table => print!("{}", output::classification_table(&c, witness)),
                Format::Json => print!("{}", output::classification_json(&c, witness)),
                Format::Dot => return Err(no_dot("classify")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dio { command } => run_dio(command),
        Command::Verify { suite, bound, format } => {
            let threads: usize = std::env::var("GERM_LAB_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(1);
            let reports = if suite == "all" {
                verify::run_all(bound, threads)?
            } else {
                vec![verify::run_suite(&suite, bound)?]
            };
            match format {
                Format::Json => print!("{}", output::to_json_pretty(&reports)),
                Format::Dot => return Err(no_dot("verify")),
                Format::Table => print!("{}", output::verify_table(&reports)),
            }
            let ok = reports.iter().all(|r| r.passed());
            for r in &reports {
                if !r.passed() {
                    eprintln!("suite {} failed {} of {} cases", r.suite, r.failure_count, r.cases);
                }
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn no_dot(command: &str) -> germ_lab::Error {
    germ_lab::Error::InvalidInput(format!("`{command}` has no dot output"))
}

fn run_dio(command: DioCommand) -> germ_lab::Result<ExitCode> {
    match command {
        DioCommand::Solve(args) => {
            let s = diophantine::DioSol4::new(args.k1, args.k2, args.q1, args.q2)?;
            let aux = if s.is_extendable() { Some(diophantine::solve_aux(&s)?) } else { None };
            match args.format {
                Format::Table => {
                    println!("{s} satisfies the defining equation (bounded: {})", s.is_bounded());
                    if let Some(a) = &aux {
                        println!("auxiliary pair (a1,a2) = ({},{})", a.a1, a.a2);
                    }
                }
                Format::Json => print!("{}", output::dio_solution_json(&s, aux.as_ref())?),
                Format::Dot => return Err(no_dot("dio solve")),
            }
            Ok(ExitCode::SUCCESS)
        }
        DioCommand::Extend(args) => {
            let s = diophantine::DioSol4::new(args.k1, args.k2, args.q1, args.q2)?;
            let e = diophantine::extend_to_8(&s)?;
            match args.format {
                Format::Table => println!("{e}"),
                Format::Json => print!("{}", output::extension_json(&e)?),
                Format::Dot => return Err(no_dot("dio extend")),
            }
            Ok(ExitCode::SUCCESS)
        }
        DioCommand::Pr1Inverse { k, q, format } => {
            let d = diophantine::pr1_inverse(k, q)?;
            match format {
                Format::Table => println!("{d}"),
                Format::Json => print!("{}", output::decorated_json(&d)?),
                Format::Dot => return Err(no_dot("dio pr1-inverse")),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
