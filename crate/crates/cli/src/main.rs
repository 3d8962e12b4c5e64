use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopf_fusion::pipeline::{exit_code, run_pipeline, PipelineOptions, PipelineOutput, Stage};
use hopf_fusion::presentation::{builtin, parse_presentation, Presentation};
use hopf_fusion::{validate_hopf, Error};

#[derive(Parser)]
#[command(name = "hopf-fusion", version, about = "Verify semisimple Hopf algebras, their smash products and fusion rules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms.
    Validate(Source),
    /// Run the verification stages and print the report.
    Pipeline {
        #[command(flatten)]
        source: Source,
        /// Last stage to run.
        #[arg(long, default_value = "qdims", value_parser = parse_stage)]
        through: Stage,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print one fusion table as `a b c value` lines.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        table: Table,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Presentation file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in example, e.g. `kS3@p=7` or `builtin:dual-kD4@p=7`.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    #[value(name = "N")]
    N,
    #[value(name = "L")]
    L,
    #[value(name = "smash")]
    Smash,
    #[value(name = "C")]
    C,
}

fn parse_stage(s: &str) -> Result<Stage, String> {
    s.parse()
}

fn load(source: &Source) -> Result<(String, Presentation), Error> {
    match (&source.input, &source.builtin) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("cannot read {}: {e}", path.display()),
            })?;
            Ok((path.display().to_string(), parse_presentation(&text)?))
        }
        (None, Some(name)) => Ok((name.clone(), builtin(name)?)),
        (None, None) => unreachable!("clap requires a source"),
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Validate(source) => {
            let (_, pres) = load(&source)?;
            let report = validate_hopf(&pres.build()?);
            print!("{report}");
            Ok(if report.all_passed() { 0 } else { 2 })
        }
        Command::Pipeline { source, through, seed } => {
            let (name, pres) = load(&source)?;
            let out = run_pipeline(&name, &pres, &PipelineOptions { through, seed })?;
            print!("{}", out.render());
            Ok(out.exit_code())
        }
        Command::Export { source, table, seed } => {
            let (name, pres) = load(&source)?;
            let through = if matches!(table, Table::C) { Stage::Theorem } else { Stage::Fusion };
            let out = run_pipeline(&name, &pres, &PipelineOptions { through, seed })?;
            export(&out, table)
        }
    }
}

fn export(out: &PipelineOutput, table: Table) -> Result<i32, Error> {
    let a = &out.artifacts;
    let t = match table {
        Table::N => &a.n_table,
        Table::L => &a.l_table,
        Table::Smash => &a.smash_table,
        Table::C => &a.c_table,
    };
    match t {
        Some(t) => {
            print!("{}", t.dump());
            for c in out.report.failures() {
                eprintln!("{c}");
            }
            Ok(out.exit_code())
        }
        None => {
            for c in out.report.failures() {
                eprintln!("{c}");
            }
            eprintln!("error: the requested table was not computed (stage not reached)");
            Ok(out.exit_code().max(1))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    };
    ExitCode::from(code as u8)
}
