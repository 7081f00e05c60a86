// Copyright 2026 Chiralnet Contributors
// SPDX-License-Identifier: Apache-2.0

//! C ABI over the chiralnet circuit model.
//!
//! Every function returns a [`ChiralnetStatus`]; on failure a description
//! is available from [`chiralnet_last_error_message`] on the same thread.
//! Models are opaque and must be released with [`chiralnet_model_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chiralnet::circuit::{init_parameters, CircuitOptions, CircuitSpec, OutputMap, ParameterTable};
use chiralnet::gates::{self, DriveParams};
use chiralnet::learning::{self, Dataset, ShiftStrategy, TaskKind, TrainConfig};
use chiralnet::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiralnetStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Numerical = 3,
    LengthMismatch = 4,
    Panic = 5,
}

/// Opaque circuit model: layout, fixed detunings and current parameters.
pub struct ChiralnetModel {
    table: ParameterTable,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> ChiralnetStatus {
    match err {
        Error::DimensionMismatch { .. } => ChiralnetStatus::LengthMismatch,
        e if e.is_numerical() => ChiralnetStatus::Numerical,
        _ => ChiralnetStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), ChiralnetStatus>) -> ChiralnetStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ChiralnetStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            ChiralnetStatus::Panic
        }
    }
}

fn fail(err: Error) -> ChiralnetStatus {
    set_error(err.to_string());
    status_of(&err)
}

fn null(what: &str) -> ChiralnetStatus {
    set_error(format!("{what} is null"));
    ChiralnetStatus::NullPointer
}

unsafe fn model_ref<'a>(m: *const ChiralnetModel) -> Result<&'a ChiralnetModel, ChiralnetStatus> {
    m.as_ref().ok_or_else(|| null("model"))
}

unsafe fn slice<'a>(p: *const f64, len: usize, what: &str) -> Result<&'a [f64], ChiralnetStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn slice_mut<'a>(p: *mut f64, len: usize, what: &str) -> Result<&'a mut [f64], ChiralnetStatus> {
    if len == 0 {
        return Ok(&mut []);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts_mut(p, len))
}

fn expect_len(got: usize, expected: usize) -> Result<(), ChiralnetStatus> {
    if got != expected {
        set_error(format!("buffer length {got}, expected {expected}"));
        return Err(ChiralnetStatus::LengthMismatch);
    }
    Ok(())
}

/// Message for the last failed call on this thread, or null.
///
/// The pointer stays valid until the next chiralnet call on this thread.
#[no_mangle]
pub extern "C" fn chiralnet_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn chiralnet_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a model with `q` qubits, `layers` Part-One layers of `rotations`
/// rotations each and `layers_two` Part-Two layers, seeded by `seed`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn chiralnet_model_new(
    q: usize,
    layers: usize,
    rotations: usize,
    layers_two: usize,
    seed: u64,
    out: *mut *mut ChiralnetModel,
) -> ChiralnetStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let spec = CircuitSpec::new(q, layers, rotations, layers_two).map_err(fail)?;
        let table = init_parameters(&spec, seed, CircuitOptions::default()).map_err(fail)?;
        *out = Box::into_raw(Box::new(ChiralnetModel { table }));
        Ok(())
    })
}

/// Releases a model. Null is ignored.
///
/// # Safety
/// `model` must come from [`chiralnet_model_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn chiralnet_model_free(model: *mut ChiralnetModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Number of trainable parameters, or 0 for a null model.
///
/// # Safety
/// `model` must be null or a live model.
#[no_mangle]
pub unsafe extern "C" fn chiralnet_model_num_params(model: *const ChiralnetModel) -> usize {
    model.as_ref().map_or(0, |m| m.table.n_trainable())
}

/// Copies the parameters into `out[0..len]`; `len` must equal the count.
///
/// # Safety
/// `model` must be live and `out` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn chiralnet_model_get_params(
    model: *const ChiralnetModel,
    out: *mut f64,
    len: usize,
) -> ChiralnetStatus {
    guard(|| {
        let m = model_ref(model)?;
        expect_len(len, m.table.n_trainable())?;
        slice_mut(out, len, "out")?.copy_from_slice(m.table.theta());
        Ok(())
    })
}

/// Replaces the parameters with `params[0..len]`.
///
/// # Safety
/// `model` must be live and `params` must point to `len` readable doubles.
#[no_mangle]
pub unsafe extern "C" fn chiralnet_model_set_params(
    model: *mut ChiralnetModel,
    params: *const f64,
    len: usize,
) -> ChiralnetStatus {
    guard(|| {
        let m = model.as_mut().ok_or_else(|| null("model"))?;
        expect_len(len, m.table.n_trainable())?;
        let p = slice(params, len, "params")?;
        if p.iter().any(|v| !v.is_finite()) {
            set_error("parameters must be finite");
            return Err(ChiralnetStatus::InvalidArgument);
        }
        m.table.set_theta(p.to_vec()).map_err(fail)
    })
}

/// Probability of the last qubit reading `|1⟩` for a 1- or 2-feature input.
///
/// # Safety
/// `input` must point to `input_len` doubles and `out` to one writable double.
#[no_mangle]
pub unsafe extern "C" fn chiralnet_model_forward(
    model: *const ChiralnetModel,
    input: *const f64,
    input_len: usize,
    out: *mut f64,
) -> ChiralnetStatus {
    guard(|| {
        let m = model_ref(model)?;
        let x = slice(input, input_len, "input")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = m.table.forward_input(m.table.theta(), x).map_err(fail)?;
        Ok(())
    })
}

/// `∂P/∂Θ` by the parameter-shift rule with shift `shift`.
///
/// # Safety
/// `input` must point to `input_len` doubles and `out` to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn chiralnet_model_gradient(
    model: *const ChiralnetModel,
    input: *const f64,
    input_len: usize,
    shift: f64,
    out: *mut f64,
    len: usize,
) -> ChiralnetStatus {
    guard(|| {
        let m = model_ref(model)?;
        expect_len(len, m.table.n_trainable())?;
        let x = slice(input, input_len, "input")?;
        let dst = slice_mut(out, len, "out")?;
        let binding = m.table.encode(x).map_err(fail)?;
        let (_, grad) =
            learning::probability_gradient(&m.table, m.table.theta(), &binding, shift, ShiftStrategy::auto(&m.table))
                .map_err(fail)?;
        dst.copy_from_slice(&grad);
        Ok(())
    })
}

/// Full-batch gradient descent on `n` samples of dimension `dim`, stored
/// row-major in `inputs`, with output map `g = weight·P + bias`. The model
/// keeps the trained parameters; the final cost goes to `final_cost`.
///
/// # Safety
/// `inputs` must hold `n·dim` doubles, `teachers` `n` doubles, and
/// `final_cost` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn chiralnet_model_train(
    model: *mut ChiralnetModel,
    inputs: *const f64,
    dim: usize,
    teachers: *const f64,
    n: usize,
    learning_rate: f64,
    epochs: usize,
    weight: f64,
    bias: f64,
    final_cost: *mut f64,
) -> ChiralnetStatus {
    guard(|| {
        let m = model.as_mut().ok_or_else(|| null("model"))?;
        let total = n.checked_mul(dim).ok_or_else(|| {
            set_error("sample buffer size overflows");
            ChiralnetStatus::InvalidArgument
        })?;
        let xs = slice(inputs, total, "inputs")?;
        let ts = slice(teachers, n, "teachers")?;
        let rows = if dim == 0 { Vec::new() } else { xs.chunks(dim).map(<[f64]>::to_vec).collect() };
        let dataset = Dataset::new("ffi", TaskKind::Regression, rows, ts.to_vec()).map_err(fail)?;
        let config =
            TrainConfig { learning_rate, epochs, output: OutputMap { weight, bias }, ..TrainConfig::default() };
        let run = learning::train(&m.table, &dataset, &config).map_err(fail)?;
        m.table.set_theta(run.theta).map_err(fail)?;
        if !final_cost.is_null() {
            *final_cost = run.metrics.cost;
        }
        Ok(())
    })
}

/// Type-a rotation matrix, written row-major as `(re, im)` pairs into
/// `out[0..8]`.
///
/// # Safety
/// `out` must point to 8 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn chiralnet_rotation_gate(
    gamma: f64,
    omega: f64,
    delta_k: f64,
    delta_laser: f64,
    out: *mut f64,
) -> ChiralnetStatus {
    guard(|| {
        let dst = slice_mut(out, 8, "out")?;
        let p = DriveParams::new(gamma, omega, delta_k, delta_laser).map_err(fail)?;
        let g = gates::rotation_gate(&p).map_err(fail)?;
        for (k, z) in g.matrix.as_slice().iter().enumerate() {
            dst[2 * k] = z.re;
            dst[2 * k + 1] = z.im;
        }
        Ok(())
    })
}
