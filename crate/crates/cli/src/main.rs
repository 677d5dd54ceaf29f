//! `pseudohyp`: figures, verification reports and tables for the envelope of
//! pseudohyperbolic disks centred on the real diameter.

mod check;
mod format;
mod render;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pseudohyp::oracle::run_battery;

use crate::render::{render_svg, RenderConfig};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "pseudohyp", version, about, allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Draw the disk family, its envelope and optionally the cone as SVG.
    Render {
        #[arg(long)]
        r: f64,
        /// Number of family members drawn.
        #[arg(long = "disks", default_value_t = 15)]
        disks: usize,
        #[arg(long)]
        no_envelope: bool,
        #[arg(long)]
        cone: bool,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Run the verification battery and print one report per check.
    Check {
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<f64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Tabulate the closed forms as CSV.
    Table {
        #[arg(long)]
        r_min: f64,
        #[arg(long)]
        r_max: f64,
        #[arg(long, default_value_t = 9)]
        steps: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn valid_radius(r: f64) -> bool {
    r > 0.0 && r < 1.0
}

fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: writing to stdout: {e}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn cmd_render(cfg: RenderConfig) -> ExitCode {
    if !valid_radius(cfg.r) {
        return usage(format_args!("--r must lie in (0, 1), got {}", cfg.r));
    }
    if cfg.n_disks < 1 {
        return usage("--disks must be at least 1");
    }
    if cfg.width_px < 64 {
        return usage(format_args!(
            "--width must be at least 64, got {}",
            cfg.width_px
        ));
    }
    let svg = match render_svg(&cfg) {
        Ok(svg) => svg,
        Err(e) => return usage(e),
    };
    match std::fs::write(&cfg.output_path, svg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: writing {}: {e}", cfg.output_path.display());
            ExitCode::from(EXIT_IO)
        }
    }
}

fn cmd_check(radii: &[f64], seed: u64, format: Format) -> ExitCode {
    if let Some(bad) = radii.iter().find(|&&r| !valid_radius(r)) {
        return usage(format_args!("--r values must lie in (0, 1), got {bad}"));
    }
    let mut reports = Vec::new();
    for &r in radii {
        match run_battery(r, seed) {
            Ok(reps) => reports.extend(reps),
            Err(e) => return usage(e),
        }
    }
    let text = match format {
        Format::Json => check::to_json(&reports),
        Format::Csv => check::to_csv(&reports),
    };
    let code = emit(&text);
    if code != ExitCode::SUCCESS {
        return code;
    }
    if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn cmd_table(r_min: f64, r_max: f64, steps: usize) -> ExitCode {
    if !(valid_radius(r_min) && valid_radius(r_max) && r_min <= r_max) {
        return usage(format_args!(
            "need 0 < r-min <= r-max < 1, got {r_min}..{r_max}"
        ));
    }
    if steps < 1 {
        return usage("--steps must be at least 1");
    }
    match table::table(r_min, r_max, steps) {
        Ok(csv) => emit(&csv),
        Err(e) => usage(e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Render {
            r,
            disks,
            no_envelope,
            cone,
            width,
            output,
        } => cmd_render(RenderConfig {
            r,
            n_disks: disks,
            show_envelope: !no_envelope,
            show_cone: cone,
            width_px: width,
            output_path: output,
        }),
        Command::Check { r, seed, format } => cmd_check(&r, seed, format),
        Command::Table {
            r_min,
            r_max,
            steps,
        } => cmd_table(r_min, r_max, steps),
    }
}
