//! Command-line front end: argument parsing, configuration merging and
//! record emission.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error, 3 numerical failure.

mod args;
mod commands;
mod config;
mod emit;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};

use clap::Parser;

pub use args::{Cli, Command, Format, GlobalArgs, LadderArg, Spacing, Suite, SystemArg, WaveBranch};
pub use config::{parse_range, ConfigFile, RunConfig, TOLERANCES};
pub use emit::{Emitter, Value, SCHEMA_VERSION};

use crate::model::PhysicalParams;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numeric(#[from] crate::Error),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Numeric(_) => EXIT_NUMERIC,
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code. Records go to `--out` if given, else to `stdout`;
/// diagnostics go to `stderr`.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let file = match &cli.global.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let g = &cli.global;
    let out_path = file.pick(g.out.clone(), "out")?;
    let mut file_sink;
    let sink: &mut dyn Write = match &out_path {
        Some(p) => {
            file_sink = File::create(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            &mut file_sink
        }
        None => stdout,
    };
    let mut buffered = io::BufWriter::new(sink);

    let code = match cli.command {
        Command::Spectrum {
            system,
            n,
            e0,
            closed,
            ladder,
            g0,
        } => {
            let cfg = config::build(g, &file, &system, n, e0)?;
            let closed = file.flag(closed, "closed")?;
            let ladder = file.pick_enum(ladder, "ladder")?;
            if closed && ladder.is_some() {
                return Err(CliError::Usage("--closed and --ladder are exclusive".into()));
            }
            let g0 = file.pick(g0, "g0")?;
            commands::spectrum(&cfg, closed, ladder, g0, &mut buffered)?;
            EXIT_OK
        }
        Command::Wavefunction {
            system,
            grid,
            branch,
            n,
            e,
            g: coupling,
            gamma,
            phi,
        } => {
            let cfg = config::build(g, &file, &system, None, None)?;
            let points = commands::grid(&grid, &file)?;
            let opt = commands::WaveOptions {
                branch: file.pick_enum(branch, "branch")?,
                n: file.pick(n, "n")?,
                e: file.pick(e, "E")?,
                g: file.pick(coupling, "g")?,
                gamma: file.pick(gamma, "gamma")?,
                phi: file.pick(phi, "phi")?,
            };
            commands::wavefunction(&cfg, &points, opt, &mut buffered)?;
            EXIT_OK
        }
        Command::Potential { system, grid } => {
            let cfg = config::build(g, &file, &system, None, None)?;
            let points = commands::grid(&grid, &file)?;
            commands::potential_table(&cfg, &points, &mut buffered)?;
            EXIT_OK
        }
        Command::Phase { alpha, m, e, g: coupling } => {
            let cfg = plain(g, &file)?;
            let opt = commands::PhaseOptions {
                alpha: file.pick(alpha, "alpha")?.unwrap_or(1.0),
                m: file.pick(m, "M")?.unwrap_or(0.0),
                e: file.pick(e, "E")?,
                g: file.pick(coupling, "g")?,
            };
            commands::phase(&cfg, opt, &mut buffered)?;
            EXIT_OK
        }
        Command::Duality { alpha, e, m, r0, omega } => {
            let cfg = plain(g, &file)?;
            let opt = commands::DualityOptions {
                alpha: file.pick(alpha, "alpha")?.unwrap_or(1.0),
                e: file.pick(e, "E")?,
                m: file.pick(m, "M")?.unwrap_or(0.0),
                r0: file.pick(r0, "r0")?,
                omega: file.pick(omega, "omega")?,
            };
            commands::duality(&cfg, opt, &mut buffered)?;
            EXIT_OK
        }
        Command::Verify { suite } => {
            let cfg = plain(g, &file)?;
            let ok = verify::run(suite, cfg.output_format, PhysicalParams::natural(), &mut buffered)?;
            if ok {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
    };
    buffered.flush().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(code)
}

// Commands without a system selection.
fn plain(g: &GlobalArgs, file: &ConfigFile) -> Result<RunConfig, CliError> {
    Ok(RunConfig {
        units: config::units(g, file)?,
        system: crate::model::SystemKind::Free,
        m: 0.0,
        n_range: 0..=0,
        e0: None,
        tolerances: config::tolerances(g, file)?,
        output_format: file.pick_enum(g.format, "format")?.unwrap_or(Format::Json),
        output_path: file.pick(g.out.clone(), "out")?,
    })
}
