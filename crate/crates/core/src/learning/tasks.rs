// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! Regression targets and synthetic 2-D classification sets.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Dataset, TaskKind};
use crate::error::{Error, Result};

/// Canonical names of the regression targets, in figure order `(a)`–`(g)`.
pub const REGRESSION_TARGETS: [&str; 7] =
    ["sin2pi", "exp_shift", "quartic", "narrow_gauss", "sigmoid15", "relu", "decay_cos"];

pub const CLASSIFICATION_SETS: [&str; 3] = ["circle", "xor", "stripes"];

/// Radius of the `circle` class-1 disc.
pub const CIRCLE_RADIUS: f64 = 0.6;

/// `n` evenly spaced points covering `[lo, hi]`.
pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// Resolves a target name or its figure letter.
pub fn canonical_target(name: &str) -> Result<&'static str> {
    let letter = ["a", "b", "c", "d", "e", "f", "g"];
    REGRESSION_TARGETS
        .iter()
        .zip(letter)
        .find(|(full, l)| **full == name || *l == name)
        .map(|(full, _)| *full)
        .ok_or_else(|| Error::Unknown { kind: "regression target", name: name.to_owned() })
}

pub fn target_fn(name: &str) -> Result<fn(f64) -> f64> {
    Ok(match canonical_target(name)? {
        "sin2pi" => |x: f64| (x * PI).sin().powi(2),
        "exp_shift" => |x: f64| (x - 1.0).exp(),
        "quartic" => |x: f64| x.powi(4),
        "narrow_gauss" => |x: f64| (-x * x / 0.01).exp(),
        "sigmoid15" => |x: f64| 1.0 / (1.0 + (-15.0 * x).exp()),
        "relu" => |x: f64| x.max(0.0),
        "decay_cos" => |x: f64| (x * PI).cos().abs() * (-(x + 1.0)).exp(),
        _ => unreachable!(),
    })
}

pub fn regression_targets(name: &str, grid: &[f64]) -> Result<Dataset> {
    let f = target_fn(name)?;
    let inputs = grid.iter().map(|&x| vec![x]).collect();
    let teachers = grid.iter().map(|&x| f(x)).collect();
    Dataset::new(canonical_target(name)?, TaskKind::Regression, inputs, teachers)
}

fn label_fn(name: &str) -> Result<fn(f64, f64) -> bool> {
    Ok(match name {
        "circle" => |x1: f64, x2: f64| x1 * x1 + x2 * x2 < CIRCLE_RADIUS * CIRCLE_RADIUS,
        "xor" => |x1: f64, x2: f64| x1 * x2 > 0.0,
        "stripes" => |x1: f64, _| (2.0 * PI * x1).sin() > 0.0,
        _ => return Err(Error::Unknown { kind: "classification set", name: name.to_owned() }),
    })
}

pub fn classify_point(name: &str, x1: f64, x2: f64) -> Result<f64> {
    Ok(if label_fn(name)?(x1, x2) { 1.0 } else { 0.0 })
}

/// `n_points` uniform draws from `[−1, 1]²`, stratified so that
/// `⌈n/2⌉` points carry label 1 and the rest label 0.
pub fn classification_sets(name: &str, n_points: usize, seed: u64) -> Result<Dataset> {
    let label = label_fn(name)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut want = [n_points / 2, n_points - n_points / 2];
    let mut inputs = Vec::with_capacity(n_points);
    let mut teachers = Vec::with_capacity(n_points);
    while inputs.len() < n_points {
        let x1: f64 = rng.gen_range(-1.0..=1.0);
        let x2: f64 = rng.gen_range(-1.0..=1.0);
        let y = label(x1, x2) as usize;
        if want[y] == 0 {
            continue;
        }
        want[y] -= 1;
        inputs.push(vec![x1, x2]);
        teachers.push(y as f64);
    }
    Dataset::new(name, TaskKind::Classification, inputs, teachers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints() {
        let g = uniform_grid(-1.0, 1.0, 21);
        assert_eq!(g.len(), 21);
        assert_eq!(g[0], -1.0);
        assert_eq!(g[20], 1.0);
        assert!((g[10]).abs() < 1e-15);
    }

    #[test]
    fn target_examples() {
        assert!((target_fn("sin2pi").unwrap()(0.5) - 1.0).abs() < 1e-15);
        assert_eq!(target_fn("relu").unwrap()(-0.3), 0.0);
        assert!((target_fn("decay_cos").unwrap()(0.0) - 0.367879).abs() < 1e-6);
        assert_eq!(target_fn("b").unwrap()(1.0), 1.0);
        assert!(matches!(target_fn("cubic"), Err(Error::Unknown { .. })));
    }

    #[test]
    fn label_examples() {
        assert_eq!(classify_point("circle", 0.0, 0.0).unwrap(), 1.0);
        assert_eq!(classify_point("xor", 0.5, -0.5).unwrap(), 0.0);
        assert_eq!(classify_point("stripes", 0.25, 0.9).unwrap(), 1.0);
        assert!(classify_point("spiral", 0.0, 0.0).is_err());
    }

    #[test]
    fn sets_are_balanced_and_seeded() {
        for name in CLASSIFICATION_SETS {
            let d = classification_sets(name, 200, 5).unwrap();
            let ones = d.teachers.iter().filter(|&&t| t == 1.0).count();
            assert_eq!(ones, 100);
            for (x, t) in d.inputs.iter().zip(&d.teachers) {
                assert!(x.iter().all(|v| (-1.0..=1.0).contains(v)));
                assert_eq!(classify_point(name, x[0], x[1]).unwrap(), *t);
            }
            assert_eq!(d, classification_sets(name, 200, 5).unwrap());
            assert_ne!(d, classification_sets(name, 200, 6).unwrap());
        }
    }
}
