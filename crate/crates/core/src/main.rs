use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sullivan::catalog::{CatalogKey, DzSign};
use sullivan::cli::{parse_window, run, CliConfig, Command, Format, EXIT_USAGE};
use sullivan::coalgebra::SignConvention;
use sullivan::homology::DegreeWindow;

#[derive(Parser)]
#[command(name = "sullivan", version, about = "Exact Sullivan models of section spaces and Thom spaces")]
struct Args {
    #[command(subcommand)]
    command: Cmd,
    #[arg(long, global = true)]
    n: Option<u32>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    d: Option<i64>,
    /// Degree window `LO:HI`.
    #[arg(long, global = true, value_parser = window)]
    window: Option<DegreeWindow>,
    #[arg(long, global = true, value_enum, default_value_t = Fmt::Text)]
    format: Fmt,
    #[arg(long, global = true, value_enum, default_value_t = Convention::Section3)]
    sign_convention: Convention,
    #[arg(long, global = true, value_enum, default_value_t = Dz::Minus)]
    gr2_dz_sign: Dz,
    /// Catalog key such as `gr1c-borel:n=3` or `sections:n=2,d=3`.
    #[arg(long, global = true, value_parser = key)]
    model: Option<CatalogKey>,
    #[arg(long, global = true, default_value_t = 5)]
    n_max: u32,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Print a catalog model as JSON.
    Model,
    /// Check d² = 0 and the chain maps attached to a model.
    Check,
    /// Betti numbers over a degree window.
    Cohomology,
    /// Component of the section-space model at degree d.
    Sections,
    /// Orbit map of the projective unitary group.
    Orbit,
    /// Torsion order, orbit decision, characteristic and Betti numbers.
    Invariants,
    /// Run the acceptance checks.
    VerifyAll,
}

#[derive(ValueEnum, Clone, Copy)]
enum Fmt {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy)]
enum Convention {
    #[value(name = "section-3")]
    Section3,
    #[value(name = "section-4")]
    Section4,
}

#[derive(ValueEnum, Clone, Copy)]
enum Dz {
    Minus,
    Plus,
}

fn window(s: &str) -> Result<DegreeWindow, String> {
    parse_window(s).map_err(|e| e.to_string())
}

fn key(s: &str) -> Result<CatalogKey, String> {
    s.parse().map_err(|e: sullivan::Error| e.to_string())
}

fn config(a: Args) -> CliConfig {
    let mut c = CliConfig::new(match a.command {
        Cmd::Model => Command::Model,
        Cmd::Check => Command::Check,
        Cmd::Cohomology => Command::Cohomology,
        Cmd::Sections => Command::Sections,
        Cmd::Orbit => Command::Orbit,
        Cmd::Invariants => Command::Invariants,
        Cmd::VerifyAll => Command::VerifyAll,
    });
    c.n = a.n;
    c.d = a.d;
    c.window = a.window;
    c.format = match a.format {
        Fmt::Json => Format::Json,
        Fmt::Text => Format::Text,
    };
    c.sign_convention = match a.sign_convention {
        Convention::Section3 => SignConvention::Section3,
        Convention::Section4 => SignConvention::Section4,
    };
    c.gr2_dz_sign = match a.gr2_dz_sign {
        Dz::Minus => DzSign::Minus,
        Dz::Plus => DzSign::Plus,
    };
    c.model = a.model;
    c.n_max = a.n_max;
    c
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    match run(&config(args)) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
