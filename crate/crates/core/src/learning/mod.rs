// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Quadratic-cost training of the circuit by full-batch gradient descent.

pub mod gradient;
pub mod tasks;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circuit::{OutputMap, ParameterTable, TableDocument};
use crate::error::{Error, Result};
pub use gradient::{physical_gradient, probability_gradient, shift_gradient, ShiftStrategy};
pub use tasks::{classification_sets, regression_targets, uniform_grid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TaskKind {
    Regression,
    Classification,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Split {
    Train,
    Test,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub name: String,
    pub kind: TaskKind,
    pub inputs: Vec<Vec<f64>>,
    pub teachers: Vec<f64>,
    pub split: Vec<Split>,
}

impl Dataset {
    /// All points are tagged [`Split::Train`].
    pub fn new(name: &str, kind: TaskKind, inputs: Vec<Vec<f64>>, teachers: Vec<f64>) -> Result<Self> {
        if inputs.len() != teachers.len() {
            return Err(Error::DimensionMismatch { expected: inputs.len(), got: teachers.len() });
        }
        if kind == TaskKind::Classification && teachers.iter().any(|&t| t != 0.0 && t != 1.0) {
            return Err(Error::InvalidParameter("classification teachers must be 0 or 1".into()));
        }
        let split = vec![Split::Train; inputs.len()];
        Ok(Self { name: name.to_owned(), kind, inputs, teachers, split })
    }

    pub fn len(&self) -> usize {
        self.inputs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inputs.is_empty()
    }

    /// Points tagged `split`.
    pub fn subset(&self, split: Split) -> Self {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| self.split[i] == split).collect();
        Self {
            name: self.name.clone(),
            kind: self.kind,
            inputs: keep.iter().map(|&i| self.inputs[i].clone()).collect(),
            teachers: keep.iter().map(|&i| self.teachers[i]).collect(),
            split: vec![split; keep.len()],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GradientSpace {
    /// Differentiate with respect to `Ω` and `Δ` through the chain rule.
    Physical,
    /// Train the Part-Two gate angles directly.
    Angle,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub epochs: usize,
    pub shift: f64,
    pub gradient_space: GradientSpace,
    pub output: OutputMap,
    /// Stop once the cost drops below this; `None` means `1e−3 · n`.
    pub cost_threshold: Option<f64>,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self {
            learning_rate: 0.05,
            epochs: 500,
            shift: std::f64::consts::FRAC_PI_2,
            gradient_space: GradientSpace::Physical,
            output: OutputMap { weight: 1.0, bias: 0.0 },
            cost_threshold: None,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.learning_rate > 0.0 && self.learning_rate.is_finite()) {
            return Err(Error::Config(format!("learning rate must be positive, got {}", self.learning_rate)));
        }
        gradient::check_shift(self.shift)?;
        if !(self.output.weight.is_finite() && self.output.bias.is_finite()) {
            return Err(Error::Config("output map must be finite".into()));
        }
        if let Some(t) = self.cost_threshold {
            if !(t >= 0.0) {
                return Err(Error::Config(format!("cost threshold must be nonnegative, got {t}")));
            }
        }
        Ok(())
    }

    pub fn threshold_for(&self, n: usize) -> f64 {
        self.cost_threshold.unwrap_or(1e-3 * n as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub cost: f64,
    /// Mean squared residual.
    pub mse: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub accuracy: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainRun {
    /// Initial cost followed by the cost after every step.
    pub cost_history: Vec<f64>,
    pub epochs_run: usize,
    pub converged: bool,
    pub metrics: Metrics,
    pub theta: Vec<f64>,
    /// Trained table, in the parameterization actually optimized.
    pub table: TableDocument,
    pub config: TrainConfig,
    pub wall_time_s: f64,
}

fn check_dataset(dataset: &Dataset) -> Result<()> {
    if dataset.is_empty() {
        return Err(Error::InvalidParameter(format!("dataset {} is empty", dataset.name)));
    }
    Ok(())
}

/// Model outputs `g(x_i)` for every input.
pub fn predict(table: &ParameterTable, theta: &[f64], dataset: &Dataset, output: OutputMap) -> Result<Vec<f64>> {
    dataset.inputs.par_iter().map(|x| table.forward_input(theta, x).map(|p| output.apply(p))).collect()
}

/// `½ Σ (g − f)²`.
pub fn quadratic_cost(outputs: &[f64], teachers: &[f64]) -> f64 {
    0.5 * outputs.iter().zip(teachers).map(|(g, f)| (g - f).powi(2)).sum::<f64>()
}

pub fn cost(table: &ParameterTable, theta: &[f64], dataset: &Dataset, output: OutputMap) -> Result<f64> {
    check_dataset(dataset)?;
    Ok(quadratic_cost(&predict(table, theta, dataset, output)?, &dataset.teachers))
}

/// Cost and `∇_Θ L = Σ (g − f)·ω·∂P/∂Θ`.
///
/// Samples are evaluated in parallel and summed in dataset order.
pub fn cost_gradient(
    table: &ParameterTable,
    theta: &[f64],
    dataset: &Dataset,
    config: &TrainConfig,
    strategy: ShiftStrategy,
) -> Result<(f64, Vec<f64>)> {
    check_dataset(dataset)?;
    let per_sample: Vec<(f64, Vec<f64>)> = dataset
        .inputs
        .par_iter()
        .map(|x| {
            let binding = table.encode(x)?;
            probability_gradient(table, theta, &binding, config.shift, strategy)
        })
        .collect::<Result<_>>()?;
    let w = config.output.weight;
    let mut grad = vec![0.0; theta.len()];
    let mut total = 0.0;
    for ((p, dp), f) in per_sample.iter().zip(&dataset.teachers) {
        let r = config.output.apply(*p) - f;
        total += 0.5 * r * r;
        for (g, d) in grad.iter_mut().zip(dp) {
            *g += r * w * d;
        }
    }
    Ok((total, grad))
}

/// Central-difference `∇_Θ L` with step `h`.
pub fn finite_difference_gradient(
    table: &ParameterTable,
    theta: &[f64],
    dataset: &Dataset,
    output: OutputMap,
    h: f64,
) -> Result<Vec<f64>> {
    (0..theta.len())
        .into_par_iter()
        .map(|i| {
            let mut t = theta.to_vec();
            t[i] = theta[i] + h;
            let plus = cost(table, &t, dataset, output)?;
            t[i] = theta[i] - h;
            let minus = cost(table, &t, dataset, output)?;
            Ok((plus - minus) / (2.0 * h))
        })
        .collect()
}

fn descend(theta: &[f64], grad: &[f64], eta: f64) -> Vec<f64> {
    theta.iter().zip(grad).map(|(t, g)| t - eta * g).collect()
}

/// One full-batch step `Θ′ = Θ − η ∇L`.
pub fn gd_step(table: &ParameterTable, theta: &[f64], dataset: &Dataset, config: &TrainConfig) -> Result<Vec<f64>> {
    config.validate()?;
    let (_, grad) = cost_gradient(table, theta, dataset, config, ShiftStrategy::auto(table))?;
    Ok(descend(theta, &grad, config.learning_rate))
}

/// Fraction of points where `g ≥ 0.5` agrees with the label.
pub fn classify_metric(outputs: &[f64], teachers: &[f64]) -> f64 {
    if outputs.is_empty() {
        return 0.0;
    }
    let hits = outputs.iter().zip(teachers).filter(|(g, t)| ((**g >= 0.5) as u8 as f64) == **t).count();
    hits as f64 / outputs.len() as f64
}

pub fn evaluate(table: &ParameterTable, theta: &[f64], dataset: &Dataset, output: OutputMap) -> Result<Metrics> {
    check_dataset(dataset)?;
    let g = predict(table, theta, dataset, output)?;
    let cost = quadratic_cost(&g, &dataset.teachers);
    let accuracy = (dataset.kind == TaskKind::Classification).then(|| classify_metric(&g, &dataset.teachers));
    Ok(Metrics { cost, mse: 2.0 * cost / dataset.len() as f64, accuracy })
}

/// Gradient descent from the table's current `Θ`.
///
/// With [`GradientSpace::Angle`] the Part-Two gates are first
/// re-parameterized by the angles they currently realize.
pub fn train(table: &ParameterTable, dataset: &Dataset, config: &TrainConfig) -> Result<TrainRun> {
    config.validate()?;
    check_dataset(dataset)?;
    let start = Instant::now();
    let mut table = match config.gradient_space {
        GradientSpace::Physical => table.clone(),
        GradientSpace::Angle => table.to_angle_space(table.theta())?,
    };
    let strategy = ShiftStrategy::auto(&table);
    let threshold = config.threshold_for(dataset.len());
    let mut theta = table.theta().to_vec();

    let (mut c, mut grad) = if config.epochs > 0 {
        cost_gradient(&table, &theta, dataset, config, strategy)?
    } else {
        (cost(&table, &theta, dataset, config.output)?, Vec::new())
    };
    let mut history = vec![c];
    let mut epochs_run = 0;
    while epochs_run < config.epochs && !(c < threshold) {
        theta = descend(&theta, &grad, config.learning_rate);
        epochs_run += 1;
        if epochs_run == config.epochs {
            c = cost(&table, &theta, dataset, config.output)?;
        } else {
            (c, grad) = cost_gradient(&table, &theta, dataset, config, strategy)?;
        }
        if !c.is_finite() {
            return Err(Error::NonFiniteGradient(format!("cost diverged at epoch {epochs_run}")));
        }
        history.push(c);
    }
    table.set_theta(theta.clone())?;
    let metrics = evaluate(&table, &theta, dataset, config.output)?;
    Ok(TrainRun {
        cost_history: history,
        epochs_run,
        converged: c < threshold,
        metrics,
        theta,
        table: table.to_document(),
        config: *config,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{init_parameters, CircuitOptions, CircuitSpec};

    #[test]
    fn cost_examples() {
        assert_eq!(quadratic_cost(&[0.3, 0.4], &[0.3, 0.4]), 0.0);
        assert_eq!(quadratic_cost(&[1.0], &[0.0]), 0.5);
        assert!((quadratic_cost(&[0.1, -0.2], &[0.0, 0.0]) - 0.025).abs() < 1e-16);
    }

    #[test]
    fn metric_examples() {
        let t = [0.0, 1.0, 1.0, 0.0];
        assert_eq!(classify_metric(&t, &t), 1.0);
        assert_eq!(classify_metric(&[0.5; 4], &t), 0.5);
        let flipped: Vec<f64> = t.iter().map(|v| 1.0 - v).collect();
        assert_eq!(classify_metric(&flipped, &t), 0.0);
    }

    #[test]
    fn config_validation() {
        assert!(TrainConfig::default().validate().is_ok());
        assert!(TrainConfig { learning_rate: 0.0, ..Default::default() }.validate().is_err());
        assert!(TrainConfig { shift: 0.0, ..Default::default() }.validate().is_err());
        assert_eq!(TrainConfig::default().threshold_for(21), 0.021);
    }

    #[test]
    fn dataset_rejects_mismatch() {
        assert!(Dataset::new("x", TaskKind::Regression, vec![vec![0.0]], vec![]).is_err());
        assert!(Dataset::new("x", TaskKind::Classification, vec![vec![0.0]], vec![0.5]).is_err());
    }

    fn small() -> (ParameterTable, Dataset) {
        let t = init_parameters(&CircuitSpec::new(2, 1, 2, 2).unwrap(), 9, CircuitOptions::default()).unwrap();
        let d = regression_targets("sin2pi", &uniform_grid(-1.0, 1.0, 5)).unwrap();
        (t, d)
    }

    #[test]
    fn zero_epochs_records_initial_cost() {
        let (t, d) = small();
        let cfg = TrainConfig { epochs: 0, ..Default::default() };
        let run = train(&t, &d, &cfg).unwrap();
        assert_eq!(run.cost_history.len(), 1);
        assert_eq!(run.epochs_run, 0);
        assert_eq!(run.theta, t.theta());
    }

    #[test]
    fn zero_cost_dataset_is_a_fixed_point() {
        let (t, d) = small();
        let cfg = TrainConfig::default();
        let g = predict(&t, t.theta(), &d, cfg.output).unwrap();
        let exact = Dataset::new("fit", TaskKind::Regression, d.inputs.clone(), g).unwrap();
        assert_eq!(gd_step(&t, t.theta(), &exact, &cfg).unwrap(), t.theta());
    }

    #[test]
    fn training_is_deterministic_and_descends() {
        let (t, d) = small();
        let cfg = TrainConfig { epochs: 20, learning_rate: 0.05, ..Default::default() };
        let a = train(&t, &d, &cfg).unwrap();
        let b = train(&t, &d, &cfg).unwrap();
        assert_eq!(a.cost_history, b.cost_history);
        assert!(a.cost_history.last().unwrap() < &a.cost_history[0]);
        assert_eq!(a.cost_history.len(), a.epochs_run + 1);
    }

    #[test]
    fn angle_space_training_runs() {
        let (t, d) = small();
        let cfg = TrainConfig { epochs: 5, gradient_space: GradientSpace::Angle, ..Default::default() };
        let run = train(&t, &d, &cfg).unwrap();
        assert_eq!(run.cost_history.len(), 6);
        let back = ParameterTable::from_document(&run.table).unwrap();
        assert!((evaluate(&back, back.theta(), &d, cfg.output).unwrap().cost - run.metrics.cost).abs() < 1e-12);
    }
}
