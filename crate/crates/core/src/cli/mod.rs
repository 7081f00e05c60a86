// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on I/O failure, 2 on configuration errors,
//! 3 on numerical failures and 4 when a check subcommand fails.

pub mod commands;
pub mod config;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use commands::{InspectKind, InspectParams};
use config::{ExperimentKind, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "chiralnet", version, about = "Photonic variational circuits from chiral waveguide scattering")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a one-dimensional target function.
    TrainRegression {
        #[command(flatten)]
        run: RunArgs,
        /// Target name (sin2pi, exp_shift, quartic, narrow_gauss, sigmoid15, relu, decay_cos) or letter a-g.
        #[arg(long)]
        task: Option<String>,
    },
    /// Train a binary classifier on a synthetic 2-D set.
    TrainClassify {
        #[command(flatten)]
        run: RunArgs,
        /// circle, xor or stripes.
        #[arg(long)]
        task: Option<String>,
        #[arg(long)]
        n_points: Option<usize>,
    },
    /// Fidelity of the imperfect gates over decay and chirality grids.
    FidelitySweep {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print one gate as JSON.
    GateInspect(InspectArgs),
    /// Compare the shift-rule gradient against finite differences.
    GradCheck {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        abs_tolerance: Option<f64>,
        /// Flip the sign of the analytic gradient.
        #[arg(long, hide = true)]
        corrupt_sign: bool,
    },
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// JSON config, or a run.json from an earlier run.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output directory [default: $CHIRALNET_OUT_DIR or ./out].
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub data_seed: Option<u64>,
    #[arg(long)]
    pub epochs: Option<usize>,
    #[arg(long)]
    pub learning_rate: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GateKindArg {
    Rotation,
    Phase,
    Controlled,
    Conversion,
}

#[derive(Debug, Args)]
pub struct InspectArgs {
    #[arg(long, value_enum, default_value = "rotation")]
    pub kind: GateKindArg,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub gamma: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub omega: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub delta_k: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub delta_laser: f64,
    /// Detuning of the converted photon.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub delta_conv: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub delta_target: f64,
    #[arg(long)]
    pub no_control_phase: bool,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub decay: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma_l: f64,
    /// Also print a finite-difference angle gradient.
    #[arg(long)]
    pub finite_diff: bool,
    #[arg(long, default_value_t = 1e-6)]
    pub fd_step: f64,
}

impl From<&InspectArgs> for InspectParams {
    fn from(a: &InspectArgs) -> Self {
        Self {
            kind: match a.kind {
                GateKindArg::Rotation => InspectKind::Rotation,
                GateKindArg::Phase => InspectKind::Phase,
                GateKindArg::Controlled => InspectKind::Controlled,
                GateKindArg::Conversion => InspectKind::Conversion,
            },
            gamma: a.gamma,
            omega: a.omega,
            delta_k: a.delta_k,
            delta_laser: a.delta_laser,
            delta_conv: a.delta_conv,
            delta_target: a.delta_target,
            control_phase: !a.no_control_phase,
            decay: a.decay,
            gamma_l: a.gamma_l,
            finite_diff: a.finite_diff.then_some(a.fd_step),
        }
    }
}

/// Loads the config for `kind` and applies flag overrides.
pub fn resolve_config(kind: ExperimentKind, run: &RunArgs) -> crate::Result<RunConfig> {
    let mut cfg = match &run.config {
        Some(path) => RunConfig::load(kind, path)?,
        None => RunConfig::defaults(kind),
    };
    if let Some(s) = run.seed {
        cfg.seed = s;
    }
    if let Some(s) = run.data_seed {
        cfg.data_seed = s;
    }
    if let Some(e) = run.epochs {
        cfg.train.epochs = e;
    }
    if let Some(l) = run.learning_rate {
        cfg.train.learning_rate = l;
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) | Error::Csv(_) => EXIT_IO,
        e if e.is_numerical() => EXIT_NUMERICAL,
        _ => EXIT_CONFIG,
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn execute(cli: Cli) -> crate::Result<i32> {
    match cli.command {
        Command::TrainRegression { run, task } => {
            let mut cfg = resolve_config(ExperimentKind::TrainRegression, &run)?;
            if let Some(t) = task {
                cfg.task = t;
            }
            let out = cfg.resolve_out_dir(run.out.as_deref());
            commands::cmd_train_regression(&cfg, &out)?;
        }
        Command::TrainClassify { run, task, n_points } => {
            let mut cfg = resolve_config(ExperimentKind::TrainClassify, &run)?;
            if let Some(t) = task {
                cfg.task = t;
            }
            if let Some(n) = n_points {
                cfg.n_points = n;
            }
            let out = cfg.resolve_out_dir(run.out.as_deref());
            commands::cmd_train_classify(&cfg, &out)?;
        }
        Command::FidelitySweep { run } => {
            let cfg = resolve_config(ExperimentKind::FidelitySweep, &run)?;
            let out = cfg.resolve_out_dir(run.out.as_deref());
            commands::cmd_fidelity_sweep(&cfg, &out)?;
        }
        Command::GateInspect(args) => {
            let doc = commands::gate_inspect(&InspectParams::from(&args))?;
            emit(&serde_json::to_string_pretty(&doc)?);
        }
        Command::GradCheck { run, abs_tolerance, corrupt_sign } => {
            let mut cfg = resolve_config(ExperimentKind::GradCheck, &run)?;
            if let Some(t) = abs_tolerance {
                cfg.grad_check.abs_tolerance = t;
            }
            let out = cfg.resolve_out_dir(run.out.as_deref());
            let (report, _) = commands::cmd_grad_check(&cfg, &out, corrupt_sign)?;
            emit(&serde_json::to_string_pretty(&report)?);
            if !report.pass {
                eprintln!(
                    "gradient check failed on {} of {} coordinates; worst {} {} (analytic {}, finite difference {})",
                    report.failures,
                    report.n_parameters,
                    report.worst_address,
                    report.worst_param,
                    report.worst_analytic,
                    report.worst_finite_diff
                );
                return Ok(EXIT_CHECK_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` and runs the selected command, returning the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
