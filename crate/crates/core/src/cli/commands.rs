// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::json;

use super::config::RunConfig;
use super::output::{write_csv, write_json};
use crate::circuit::{init_parameters, ParameterTable};
use crate::error::{Error, Result};
use crate::gates::{self, AngleGradient, ControlledGateParams, DriveParams};
use crate::learning::{self, tasks, Dataset, ShiftStrategy, TrainRun};
use crate::linalg::CMatrix;
use crate::scattering;

/// Files written by a command.
#[derive(Debug, Clone, PartialEq)]
pub struct Written {
    pub dir: PathBuf,
    pub files: Vec<PathBuf>,
}

fn num(v: f64) -> String {
    format!("{v}")
}

#[derive(Serialize)]
struct RunDocument<'a, R: Serialize> {
    experiment: &'static str,
    version: &'static str,
    config: &'a RunConfig,
    seeds: Seeds,
    run: R,
}

#[derive(Serialize)]
struct Seeds {
    seed: u64,
    data_seed: u64,
}

fn run_document<'a, R: Serialize>(cfg: &'a RunConfig, run: R) -> RunDocument<'a, R> {
    RunDocument {
        experiment: cfg.experiment.name(),
        version: env!("CARGO_PKG_VERSION"),
        config: cfg,
        seeds: Seeds { seed: cfg.seed, data_seed: cfg.data_seed },
        run,
    }
}

fn write_learning_curve(path: &Path, run: &TrainRun) -> Result<()> {
    let rows = run.cost_history.iter().enumerate().map(|(e, c)| vec![e.to_string(), num(*c)]);
    write_csv(path, &["epoch", "cost"], rows)
}

fn fit(cfg: &RunConfig, dataset: &Dataset) -> Result<(TrainRun, ParameterTable)> {
    let table = init_parameters(&cfg.circuit, cfg.seed, cfg.options)?;
    let run = learning::train(&table, dataset, &cfg.train)?;
    let trained = ParameterTable::from_document(&run.table)?;
    Ok((run, trained))
}

pub fn cmd_train_regression(cfg: &RunConfig, out: &Path) -> Result<Written> {
    cfg.validate()?;
    let dataset = tasks::regression_targets(&cfg.task, &tasks::uniform_grid(-1.0, 1.0, cfg.n_points))?;
    let (run, table) = fit(cfg, &dataset)?;
    let outputs = learning::predict(&table, table.theta(), &dataset, cfg.train.output)?;

    let files = [out.join("learning_curve.csv"), out.join("fit.csv"), out.join("run.json")];
    write_learning_curve(&files[0], &run)?;
    let rows =
        dataset.inputs.iter().zip(&dataset.teachers).zip(&outputs).map(|((x, f), g)| vec![num(x[0]), num(*f), num(*g)]);
    write_csv(&files[1], &["x", "teacher", "output"], rows)?;
    write_json(&files[2], &run_document(cfg, &run))?;
    eprintln!(
        "{}: {} epochs, cost {:.6}, mse {:.6}{}",
        dataset.name,
        run.epochs_run,
        run.metrics.cost,
        run.metrics.mse,
        if run.converged { ", converged" } else { "" }
    );
    Ok(Written { dir: out.to_path_buf(), files: files.to_vec() })
}

/// Side length of the decision-boundary grid.
pub const BOUNDARY_GRID: usize = 41;

pub fn cmd_train_classify(cfg: &RunConfig, out: &Path) -> Result<Written> {
    cfg.validate()?;
    let dataset = tasks::classification_sets(&cfg.task, cfg.n_points, cfg.data_seed)?;
    let (run, table) = fit(cfg, &dataset)?;
    let outputs = learning::predict(&table, table.theta(), &dataset, cfg.train.output)?;

    let axis = tasks::uniform_grid(-1.0, 1.0, BOUNDARY_GRID);
    let grid_inputs: Vec<Vec<f64>> = axis.iter().flat_map(|&a| axis.iter().map(move |&b| vec![a, b])).collect();
    let grid = Dataset::new(
        "boundary",
        learning::TaskKind::Regression,
        grid_inputs,
        vec![0.0; BOUNDARY_GRID * BOUNDARY_GRID],
    )?;
    let boundary = learning::predict(&table, table.theta(), &grid, cfg.train.output)?;

    let files =
        [out.join("learning_curve.csv"), out.join("boundary.csv"), out.join("points.csv"), out.join("run.json")];
    write_learning_curve(&files[0], &run)?;
    let rows = grid.inputs.iter().zip(&boundary).map(|(x, g)| vec![num(x[0]), num(x[1]), num(*g)]);
    write_csv(&files[1], &["x1", "x2", "output"], rows)?;
    let rows = dataset
        .inputs
        .iter()
        .zip(&dataset.teachers)
        .zip(&outputs)
        .map(|((x, t), g)| vec![num(x[0]), num(x[1]), (*t as u8).to_string(), ((*g >= 0.5) as u8).to_string()]);
    write_csv(&files[2], &["x1", "x2", "label", "predicted"], rows)?;
    write_json(&files[3], &run_document(cfg, &run))?;
    eprintln!(
        "{}: {} epochs, cost {:.6}, accuracy {:.4}",
        dataset.name,
        run.epochs_run,
        run.metrics.cost,
        run.metrics.accuracy.unwrap_or(f64::NAN)
    );
    Ok(Written { dir: out.to_path_buf(), files: files.to_vec() })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FidelityRow {
    pub gamma: f64,
    pub chirality_ratio: f64,
    pub gate_kind: &'static str,
    pub fidelity: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FidelityReport {
    pub rows: Vec<FidelityRow>,
    /// Type-c fidelity at the configured reference point.
    pub reference_fidelity: f64,
    pub reference_target: f64,
    pub reference_deviation: f64,
    /// Whether every sweep column decreases monotonically.
    pub monotone: bool,
}

pub fn fidelity_rows(cfg: &RunConfig) -> Result<FidelityReport> {
    let f = &cfg.fidelity;
    let drive = DriveParams::with_two_photon(1.0, f.omega, f.delta_k, f.two_photon)?;
    let ctrl = ControlledGateParams { delta_target: f.delta_target, include_control_phase: cfg.options.control_phase };
    let mut rows = Vec::new();
    for (kind, label) in [(0, "a"), (1, "c")] {
        for &gamma in &f.gammas {
            for &ratio in &f.chirality_ratios {
                let gamma_l = gates::left_coupling(1.0, ratio)?;
                let fidelity = if kind == 0 {
                    gates::rotation_fidelity(&drive, gamma_l, gamma)?
                } else {
                    gates::controlled_fidelity(&ctrl, 1.0, gamma_l, gamma)?
                };
                rows.push(FidelityRow { gamma, chirality_ratio: ratio, gate_kind: label, fidelity });
            }
        }
    }
    let reference_fidelity =
        gates::controlled_fidelity(&ctrl, 1.0, gates::left_coupling(1.0, f.reference_ratio)?, f.reference_gamma)?;
    let monotone = sweep_is_monotone(&rows, &f.gammas, &f.chirality_ratios);
    Ok(FidelityReport {
        rows,
        reference_fidelity,
        reference_target: f.reference_target,
        reference_deviation: reference_fidelity - f.reference_target,
        monotone,
    })
}

fn sorted(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

/// Non-increasing along both grid axes, provided the grids are ascending.
fn sweep_is_monotone(rows: &[FidelityRow], gammas: &[f64], ratios: &[f64]) -> bool {
    if !sorted(gammas) || !sorted(ratios) {
        return false;
    }
    let (ng, nr) = (gammas.len(), ratios.len());
    rows.chunks(ng * nr).all(|block| {
        let at = |g: usize, r: usize| block[g * nr + r].fidelity;
        let tol = 1e-12;
        (0..ng).all(|g| (1..nr).all(|r| at(g, r) <= at(g, r - 1) + tol))
            && (0..nr).all(|r| (1..ng).all(|g| at(g, r) <= at(g - 1, r) + tol))
    })
}

pub fn cmd_fidelity_sweep(cfg: &RunConfig, out: &Path) -> Result<Written> {
    cfg.validate()?;
    let report = fidelity_rows(cfg)?;
    let files = [out.join("fidelity.csv"), out.join("run.json")];
    let rows =
        report.rows.iter().map(|r| vec![num(r.gamma), num(r.chirality_ratio), r.gate_kind.to_owned(), num(r.fidelity)]);
    write_csv(&files[0], &["gamma", "chirality_ratio", "gate_kind", "fidelity"], rows)?;
    let summary = json!({
        "reference_fidelity": report.reference_fidelity,
        "reference_target": report.reference_target,
        "reference_deviation": report.reference_deviation,
        "monotone": report.monotone,
    });
    write_json(&files[1], &run_document(cfg, summary))?;
    eprintln!(
        "type c at ratio {:.5}, decay {}: fidelity {:.4} (target {}, deviation {:+.4})",
        cfg.fidelity.reference_ratio,
        cfg.fidelity.reference_gamma,
        report.reference_fidelity,
        report.reference_target,
        report.reference_deviation
    );
    Ok(Written { dir: out.to_path_buf(), files: files.to_vec() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InspectKind {
    Rotation,
    Phase,
    Controlled,
    Conversion,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InspectParams {
    pub kind: InspectKind,
    pub gamma: f64,
    pub omega: f64,
    pub delta_k: f64,
    pub delta_laser: f64,
    pub delta_conv: f64,
    pub delta_target: f64,
    pub control_phase: bool,
    pub decay: f64,
    pub gamma_l: f64,
    /// Step for the finite-difference angle gradient, when requested.
    pub finite_diff: Option<f64>,
}

impl Default for InspectParams {
    fn default() -> Self {
        Self {
            kind: InspectKind::Rotation,
            gamma: 1.0,
            omega: 0.0,
            delta_k: 0.0,
            delta_laser: 0.0,
            delta_conv: 0.0,
            delta_target: 0.0,
            control_phase: true,
            decay: 0.0,
            gamma_l: 0.0,
            finite_diff: None,
        }
    }
}

fn fd_angle(p: &DriveParams, h: f64, angle: fn(&DriveParams) -> Result<f64>) -> Result<AngleGradient> {
    let shifted = |dw: f64, dl: f64| DriveParams { omega: p.omega + dw, delta_laser: p.delta_laser + dl, ..*p };
    // one-sided in Ω at the boundary Ω = 0
    let (wp, wm) = if p.omega >= h { (h, -h) } else { (h, 0.0) };
    let diff = |a: f64, b: f64| gates::wrap_angle(a - b);
    let d_omega = diff(angle(&shifted(wp, 0.0))?, angle(&shifted(wm, 0.0))?) / (wp - wm);
    let d_delta_laser = diff(angle(&shifted(0.0, h))?, angle(&shifted(0.0, -h))?) / (2.0 * h);
    Ok(AngleGradient { d_omega, d_delta_laser })
}

/// JSON description of one gate.
pub fn gate_inspect(p: &InspectParams) -> Result<serde_json::Value> {
    let matrix_json = |m: &CMatrix| serde_json::to_value(m).map_err(Error::from);
    let mut doc = serde_json::Map::new();
    let lossy = p.decay != 0.0 || p.gamma_l != 0.0;
    match p.kind {
        InspectKind::Rotation | InspectKind::Phase => {
            let drive = DriveParams::new(p.gamma, p.omega, p.delta_k, p.delta_laser)?;
            let rotation = p.kind == InspectKind::Rotation;
            let (gate, angle, grad) = if rotation {
                (gates::rotation_gate(&drive)?, gates::angle_of_rotation(&drive)?, gates::dtheta_dparams(&drive)?)
            } else {
                (gates::phase_gate(&drive)?, gates::angle_of_phase(&drive)?, gates::dphi_dparams(&drive)?)
            };
            doc.insert("kind".into(), json!(if rotation { "rotation" } else { "phase" }));
            doc.insert("params".into(), serde_json::to_value(drive)?);
            doc.insert("two_photon_detuning".into(), json!(drive.two_photon_detuning()));
            doc.insert("matrix".into(), matrix_json(&gate.matrix)?);
            doc.insert(if rotation { "theta" } else { "phi" }.into(), json!(angle));
            doc.insert("gradient".into(), serde_json::to_value(grad)?);
            if let Some(h) = p.finite_diff {
                let f = if rotation { gates::angle_of_rotation } else { gates::angle_of_phase };
                doc.insert("finite_diff".into(), serde_json::to_value(fd_angle(&drive, h, f)?)?);
            }
            doc.insert("unitarity_residual".into(), json!(gate.matrix.unitarity_residual()));
            if rotation && lossy {
                let (imperfect, loss) = gates::imperfect_rotation_gate(&drive, p.gamma_l, p.decay)?;
                doc.insert("imperfect_matrix".into(), matrix_json(&imperfect.matrix)?);
                doc.insert("loss".into(), serde_json::to_value(loss)?);
                doc.insert("fidelity".into(), json!(gates::rotation_fidelity(&drive, p.gamma_l, p.decay)?));
            }
        }
        InspectKind::Controlled => {
            let c = ControlledGateParams { delta_target: p.delta_target, include_control_phase: p.control_phase };
            let gate = gates::controlled_gate(&c)?;
            doc.insert("kind".into(), json!("controlled"));
            doc.insert(
                "params".into(),
                json!({ "delta_target": c.delta_target, "control_phase": c.include_control_phase }),
            );
            doc.insert("matrix".into(), matrix_json(&gate.matrix)?);
            doc.insert("unitarity_residual".into(), json!(gate.matrix.unitarity_residual()));
            if lossy {
                let imperfect = gates::imperfect_controlled_gate(&c, p.gamma, p.gamma_l, p.decay)?;
                doc.insert("imperfect_matrix".into(), matrix_json(&imperfect.matrix)?);
                doc.insert("fidelity".into(), json!(gates::controlled_fidelity(&c, p.gamma, p.gamma_l, p.decay)?));
            }
        }
        InspectKind::Conversion => {
            let m = scattering::conversion_transfer(p.gamma, p.omega, p.delta_k, p.delta_conv, p.decay)?;
            doc.insert("kind".into(), json!("conversion"));
            doc.insert(
                "params".into(),
                json!({ "gamma": p.gamma, "omega": p.omega, "delta_k": p.delta_k, "delta_conv": p.delta_conv, "decay": p.decay }),
            );
            doc.insert("matrix".into(), matrix_json(&m.entries)?);
            doc.insert("conversion_probability".into(), json!(scattering::conversion_probability(&m)));
            doc.insert("unitarity_residual".into(), json!(m.entries.unitarity_residual()));
        }
    }
    Ok(serde_json::Value::Object(doc))
}

#[derive(Debug, Clone, Serialize)]
pub struct GradCheckReport {
    pub n_parameters: usize,
    pub n_points: usize,
    pub pass: bool,
    pub failures: usize,
    pub worst_index: usize,
    pub worst_address: String,
    pub worst_param: String,
    pub worst_analytic: f64,
    pub worst_finite_diff: f64,
    /// `|analytic − fd| / tolerance` at the worst coordinate.
    pub worst_ratio: f64,
}

/// Compares the shift-rule cost gradient with central differences on a
/// random instance. `corrupt` flips the analytic sign, for harness tests.
pub fn grad_check(cfg: &RunConfig, corrupt: bool) -> Result<GradCheckReport> {
    cfg.validate()?;
    let table = init_parameters(&cfg.circuit, cfg.seed, cfg.options)?;
    let table = match cfg.train.gradient_space {
        learning::GradientSpace::Physical => table,
        learning::GradientSpace::Angle => table.to_angle_space(table.theta())?,
    };
    let dataset = tasks::regression_targets(&cfg.task, &tasks::uniform_grid(-1.0, 1.0, cfg.n_points))?;
    let theta = table.theta().to_vec();
    let (_, mut analytic) = learning::cost_gradient(&table, &theta, &dataset, &cfg.train, ShiftStrategy::auto(&table))?;
    if corrupt {
        analytic.iter_mut().for_each(|g| *g = -*g);
    }
    let g = cfg.grad_check;
    let fd = learning::finite_difference_gradient(&table, &theta, &dataset, cfg.train.output, g.fd_step)?;
    let mut worst = (0, f64::NEG_INFINITY);
    let mut failures = 0;
    for (i, (a, f)) in analytic.iter().zip(&fd).enumerate() {
        let tol = g.abs_tolerance.max(g.rel_tolerance * f.abs());
        let ratio = (a - f).abs() / tol;
        if !(ratio <= 1.0) {
            failures += 1;
        }
        if !(ratio <= worst.1) {
            worst = (i, ratio);
        }
    }
    let r = table.theta_refs()[worst.0];
    Ok(GradCheckReport {
        n_parameters: theta.len(),
        n_points: dataset.len(),
        pass: failures == 0,
        failures,
        worst_index: worst.0,
        worst_address: table.address_of(&r).to_string(),
        worst_param: serde_json::to_value(r.name)?.as_str().unwrap_or_default().to_owned(),
        worst_analytic: analytic[worst.0],
        worst_finite_diff: fd[worst.0],
        worst_ratio: worst.1,
    })
}

pub fn cmd_grad_check(cfg: &RunConfig, out: &Path, corrupt: bool) -> Result<(GradCheckReport, Written)> {
    let report = grad_check(cfg, corrupt)?;
    let path = out.join("grad_check.json");
    write_json(&path, &run_document(cfg, &report))?;
    Ok((report, Written { dir: out.to_path_buf(), files: vec![path] }))
}
