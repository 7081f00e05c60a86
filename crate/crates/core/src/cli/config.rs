// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Run configuration documents.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::circuit::{CircuitOptions, CircuitSpec, OutputMap};
use crate::error::{Error, Result};
use crate::learning::{GradientSpace, TrainConfig};

pub const OUT_DIR_ENV: &str = "CHIRALNET_OUT_DIR";
pub const DEFAULT_OUT_DIR: &str = "out";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    TrainRegression,
    TrainClassify,
    FidelitySweep,
    GradCheck,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::TrainRegression => "train-regression",
            ExperimentKind::TrainClassify => "train-classify",
            ExperimentKind::FidelitySweep => "fidelity-sweep",
            ExperimentKind::GradCheck => "grad-check",
        }
    }
}

/// Grids and gate parameters of a fidelity sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FidelityConfig {
    /// Atomic decay rates `γ`, in units of `Γ_R`.
    pub gammas: Vec<f64>,
    /// Chirality ratios `Γ_L/(Γ_R + Γ_L)`.
    pub chirality_ratios: Vec<f64>,
    pub omega: f64,
    pub delta_k: f64,
    /// Two-photon detuning `Δ_k` of the type-a gate.
    pub two_photon: f64,
    /// Target detuning `δ″` of the type-c gate.
    pub delta_target: f64,
    /// Point at which the type-c fidelity is reported against `reference_target`.
    pub reference_ratio: f64,
    pub reference_gamma: f64,
    pub reference_target: f64,
}

impl Default for FidelityConfig {
    fn default() -> Self {
        let grid = |n: usize, hi: f64| (0..=n).map(|i| hi * i as f64 / n as f64).collect();
        Self {
            gammas: grid(10, 0.1),
            chirality_ratios: grid(10, 0.1),
            omega: 2.0,
            delta_k: 1.0,
            two_photon: 1.0,
            delta_target: 0.0,
            reference_ratio: 1.0 / 60.0,
            reference_gamma: 0.02,
            reference_target: 0.9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradCheckConfig {
    pub fd_step: f64,
    pub abs_tolerance: f64,
    pub rel_tolerance: f64,
}

impl Default for GradCheckConfig {
    fn default() -> Self {
        Self { fd_step: 1e-5, abs_tolerance: 1e-5, rel_tolerance: 1e-3 }
    }
}

/// Everything a run needs; `run.json` echoes it in full.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub experiment: ExperimentKind,
    pub circuit: CircuitSpec,
    pub options: CircuitOptions,
    pub train: TrainConfig,
    pub task: String,
    pub n_points: usize,
    pub seed: u64,
    pub data_seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out_dir: Option<PathBuf>,
    pub fidelity: FidelityConfig,
    pub grad_check: GradCheckConfig,
}

impl RunConfig {
    /// Defaults for `kind`, matching the published hyperparameters.
    pub fn defaults(kind: ExperimentKind) -> Self {
        let (circuit, output, task, n_points) = match kind {
            ExperimentKind::TrainClassify => {
                (CircuitSpec::classification(), OutputMap { weight: 1.0, bias: 0.0 }, "circle", 200)
            }
            ExperimentKind::GradCheck => {
                (CircuitSpec::regression(), OutputMap { weight: 2.0, bias: -0.5 }, "sin2pi", 5)
            }
            _ => (CircuitSpec::regression(), OutputMap { weight: 2.0, bias: -0.5 }, "sin2pi", 21),
        };
        // classification descends in gate-angle coordinates
        let (gradient_space, learning_rate) = if kind == ExperimentKind::TrainClassify {
            (GradientSpace::Angle, 0.06)
        } else {
            (GradientSpace::Physical, TrainConfig::default().learning_rate)
        };
        Self {
            experiment: kind,
            circuit,
            options: CircuitOptions::default(),
            train: TrainConfig { output, gradient_space, learning_rate, ..TrainConfig::default() },
            task: task.to_owned(),
            n_points,
            seed: 0,
            data_seed: 0,
            out_dir: None,
            fidelity: FidelityConfig::default(),
            grad_check: GradCheckConfig::default(),
        }
    }

    /// Overlays a JSON document on the defaults for `kind`.
    ///
    /// A `run.json` written by an earlier run is accepted as well; its
    /// `config` member is used.
    pub fn from_json(kind: ExperimentKind, text: &str) -> Result<Self> {
        let mut doc: Value = serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid JSON: {e}")))?;
        if is_run_document(&doc) {
            doc = doc["config"].take();
        }
        if !doc.is_object() {
            return Err(Error::Config("config must be a JSON object".into()));
        }
        if let Some(e) = doc.get("experiment") {
            let named: ExperimentKind =
                serde_json::from_value(e.clone()).map_err(|e| Error::Config(format!("experiment: {e}")))?;
            if named != kind {
                return Err(Error::Config(format!("config is for {}, not {}", named.name(), kind.name())));
            }
        }
        let mut base = serde_json::to_value(Self::defaults(kind))?;
        merge(&mut base, doc);
        let cfg: Self = serde_json::from_value(base).map_err(|e| Error::Config(e.to_string()))?;
        Ok(cfg)
    }

    pub fn load(kind: ExperimentKind, path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(kind, &text)
    }

    pub fn validate(&self) -> Result<()> {
        self.circuit.validate()?;
        self.train.validate()?;
        if self.n_points == 0 {
            return Err(Error::Config("n_points must be >= 1".into()));
        }
        let f = &self.fidelity;
        let in_unit = |v: &f64| (0.0..1.0).contains(v);
        if f.gammas.is_empty() || f.chirality_ratios.is_empty() {
            return Err(Error::Config("fidelity grids must be nonempty".into()));
        }
        if !f.gammas.iter().all(|g| g.is_finite() && *g >= 0.0) {
            return Err(Error::Config("decay rates must be finite and >= 0".into()));
        }
        if !f.chirality_ratios.iter().all(in_unit) || !in_unit(&f.reference_ratio) {
            return Err(Error::Config("chirality ratios must lie in [0, 1)".into()));
        }
        let g = &self.grad_check;
        if !(g.fd_step > 0.0 && g.abs_tolerance >= 0.0 && g.rel_tolerance >= 0.0) {
            return Err(Error::Config("gradient-check step and tolerances must be positive".into()));
        }
        Ok(())
    }

    /// `--out`, then the config, then the environment, then `./out`.
    pub fn resolve_out_dir(&self, flag: Option<&Path>) -> PathBuf {
        flag.map(Path::to_path_buf)
            .or_else(|| self.out_dir.clone())
            .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR))
    }
}

fn is_run_document(doc: &Value) -> bool {
    doc.get("config").is_some_and(Value::is_object) && doc.get("run").is_some()
}

fn merge(base: &mut Value, over: Value) {
    match (base, over) {
        (Value::Object(b), Value::Object(o)) => {
            for (k, v) in o {
                match b.get_mut(&k) {
                    Some(slot) if slot.is_object() && v.is_object() => merge(slot, v),
                    _ => {
                        b.insert(k, v);
                    }
                }
            }
        }
        (b, o) => *b = o,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_match_captions() {
        let r = RunConfig::defaults(ExperimentKind::TrainRegression);
        assert_eq!(r.circuit, CircuitSpec::regression());
        assert_eq!(r.train.output, OutputMap { weight: 2.0, bias: -0.5 });
        let c = RunConfig::defaults(ExperimentKind::TrainClassify);
        assert_eq!(c.circuit, CircuitSpec::classification());
        assert_eq!(c.train.output, OutputMap { weight: 1.0, bias: 0.0 });
        assert_eq!(c.n_points, 200);
        assert_eq!(c.train.gradient_space, GradientSpace::Angle);
        assert_eq!(c.train.learning_rate, 0.06);
        assert_eq!(r.train.gradient_space, GradientSpace::Physical);
    }

    #[test]
    fn overlay_keeps_unset_defaults() {
        let r = RunConfig::from_json(ExperimentKind::TrainRegression, r#"{"train": {"epochs": 7}, "task": "relu"}"#)
            .unwrap();
        assert_eq!(r.train.epochs, 7);
        assert_eq!(r.train.learning_rate, 0.05);
        assert_eq!(r.task, "relu");
    }

    #[test]
    fn rejects_unknown_keys_and_wrong_kind() {
        assert!(RunConfig::from_json(ExperimentKind::TrainRegression, r#"{"epochz": 3}"#).is_err());
        assert!(RunConfig::from_json(ExperimentKind::TrainRegression, r#"{"train": {"eta": 3}}"#).is_err());
        assert!(RunConfig::from_json(ExperimentKind::TrainRegression, r#"{"experiment": "train-classify"}"#).is_err());
        assert!(RunConfig::from_json(ExperimentKind::TrainRegression, "[1]").is_err());
    }

    #[test]
    fn accepts_run_document() {
        let mut cfg = RunConfig::defaults(ExperimentKind::TrainRegression);
        cfg.seed = 42;
        let run = serde_json::json!({ "experiment": "train-regression", "config": cfg, "run": {} });
        let back = RunConfig::from_json(ExperimentKind::TrainRegression, &run.to_string()).unwrap();
        assert_eq!(back, cfg);
    }
}
