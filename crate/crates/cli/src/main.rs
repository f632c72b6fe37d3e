use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cobkit_cli::commands::{self, Class, Failure, GenKind, Outcome};
use cobkit_cli::{read, CobFile};
use cobkit_core::gen::GenParams;

/// Compose, factor, lift and compare combinatorial cobordisms.
///
/// Exit status: 0 success or a positive answer, 1 a negative answer from
/// `eq` or `check`, 2 invalid input or a failed precondition.
#[derive(Parser)]
#[command(name = "cobkit", version)]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Seed for generator-backed subcommands.
    #[arg(long, global = true, env = "COBKIT_SEED", default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a file.
    Validate { file: PathBuf },
    /// Glue FIRST then SECOND along their shared boundary.
    Compose { first: PathBuf, second: PathBuf },
    /// Split into a cofibration followed by a fibration.
    Factor {
        file: PathBuf,
        #[arg(long)]
        cofib: Option<PathBuf>,
        #[arg(long)]
        fib: Option<PathBuf>,
    },
    /// Diagonal filler for the square with E, M on the left/right and U, V
    /// on the top/bottom.
    Lift { e: PathBuf, m: PathBuf, u: PathBuf, v: PathBuf },
    /// Strict equality, or equivalence up to boundary permutations.
    Eq {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        lax: bool,
    },
    /// Test membership in a class.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        class: Class,
    },
    /// Image of an oriented 1-cobordism in 2-Cob.
    Map { file: PathBuf },
    /// Graph description of a cobordism.
    Dot { file: PathBuf },
    /// Random cobordism.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Incoming boundary: a count for cob2, a sign string such as `+-` for cob1.
        #[arg(long = "in")]
        inputs: Option<String>,
        /// Outgoing boundary, as for `--in`.
        #[arg(long = "out")]
        outputs: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_circles: usize,
        #[arg(long, default_value_t = 4)]
        max_components: usize,
        #[arg(long, default_value_t = 2)]
        max_genus: u64,
        #[arg(long, default_value_t = 0.2)]
        loop_rate: f64,
    },
}

fn load(path: &Path) -> Result<CobFile, Failure> {
    read(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    Ok(match cli.command {
        Command::Validate { file } => commands::validate(&load(&file)?),
        Command::Compose { first, second } => commands::compose(&load(&first)?, &load(&second)?)?,
        Command::Factor { file, cofib, fib } => {
            let (c, f) = commands::factor(&load(&file)?)?;
            let mut rest = String::new();
            match cofib {
                Some(p) => write(&p, &c)?,
                None => rest.push_str(&c),
            }
            match fib {
                Some(p) => write(&p, &f)?,
                None => rest.push_str(&f),
            }
            Outcome { text: rest, positive: true }
        }
        Command::Lift { e, m, u, v } => commands::lift_square(&load(&e)?, &load(&m)?, &load(&u)?, &load(&v)?)?,
        Command::Eq { a, b, lax } => commands::eq(&load(&a)?, &load(&b)?, lax)?,
        Command::Check { file, class } => commands::check(&load(&file)?, class),
        Command::Map { file } => commands::map(&load(&file)?)?,
        Command::Dot { file } => commands::dot(&load(&file)?),
        Command::Gen { kind, inputs, outputs, max_circles, max_components, max_genus, loop_rate } => {
            if !(0.0..=1.0).contains(&loop_rate) {
                return Err(Failure(format!("loop rate {loop_rate} is outside [0, 1]")));
            }
            let params = GenParams { max_circles, max_components, max_genus, loop_rate, seed: cli.seed };
            commands::generate(kind, inputs.as_deref(), outputs.as_deref(), params)?
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli) {
        Ok(outcome) => {
            if let Some(path) = output {
                if let Err(e) = write(&path, &outcome.text) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(if outcome.positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
