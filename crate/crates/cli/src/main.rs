mod commands;
mod error;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "sliceforge",
    version,
    about = "Exact computations with Slodowy slices, foldings, ADE families and cyclic group cohomology"
)]
struct Cli {
    /// Output format; `smooth` defaults to json, everything else to text.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fold a diagram, or find the unfolded pair of a type.
    Fold(commands::FoldArgs),
    /// Slodowy slice, adjoint quotient, central fibre and its type.
    Slice(commands::SliceArgs),
    /// Family equation over the Hitchin base with bundle weights.
    Family(TypeArg),
    /// Local cameral curve of a section.
    Cameral(SectionArgs),
    /// Smoothness of the local threefold of a section.
    Smooth(commands::SmoothArgs),
    /// Discriminant of a section and transversality at its zeros.
    Discriminant(SectionArgs),
    /// Restriction of the unfolded family and wall containment.
    Restrict(TypeArg),
    /// Cohomology of a cyclic group acting on a lattice.
    Cohomology(commands::CohomologyArgs),
}

#[derive(Args, Debug)]
pub struct TypeArg {
    /// Dynkin type, e.g. B2.
    pub dynkin: String,
}

#[derive(Args, Debug)]
pub struct SectionArgs {
    /// Dynkin type, e.g. A1.
    pub dynkin: String,
    /// One component per invariant degree, in increasing degree.
    #[arg(long = "section", required = true)]
    pub section: Vec<String>,
    /// Chart variable of the section.
    #[arg(long, default_value = "x")]
    pub var: String,
}

fn configure_budget() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("SLICEFORGE_BUDGET") {
        let n: usize = v.trim().parse().map_err(|_| {
            CliError::BadInput(format!(
                "SLICEFORGE_BUDGET must be a positive integer, got `{v}`"
            ))
        })?;
        if n == 0 {
            return Err(CliError::BadInput(
                "SLICEFORGE_BUDGET must be positive".into(),
            ));
        }
        sliceforge::poly::set_default_budget(n);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<String, CliError> {
    configure_budget()?;
    let fmt = |default: Format| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Fold(a) => render::emit(&commands::fold(a)?, fmt(Format::Text)),
        Command::Slice(a) => render::emit(&commands::slice(a)?, fmt(Format::Text)),
        Command::Family(a) => render::emit(&commands::family(a)?, fmt(Format::Text)),
        Command::Cameral(a) => render::emit(&commands::cameral(a)?, fmt(Format::Text)),
        Command::Smooth(a) => render::emit(&commands::smooth(a)?, fmt(Format::Json)),
        Command::Discriminant(a) => render::emit(&commands::discriminant(a)?, fmt(Format::Text)),
        Command::Restrict(a) => {
            let r = commands::restrict(a)?;
            let out = render::emit(&r, fmt(Format::Text))?;
            if r.passed {
                Ok(out)
            } else {
                Err(CliError::Verification(out))
            }
        }
        Command::Cohomology(a) => render::emit(&commands::cohomology(a)?, fmt(Format::Text)),
    }
}

fn print_report(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print_report(&out);
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Verification(report) = &e {
                print_report(report);
            }
            eprintln!("error: {}", e.summary());
            ExitCode::from(e.code())
        }
    }
}
