/* Copyright 2026 Chiralnet Contributors */
/* SPDX-License-Identifier: Apache-2.0 */

#ifndef CHIRALNET_H
#define CHIRALNET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChiralnetStatus {
  CHIRALNET_STATUS_OK = 0,
  CHIRALNET_STATUS_NULL_POINTER = 1,
  CHIRALNET_STATUS_INVALID_ARGUMENT = 2,
  CHIRALNET_STATUS_NUMERICAL = 3,
  CHIRALNET_STATUS_LENGTH_MISMATCH = 4,
  CHIRALNET_STATUS_PANIC = 5,
} ChiralnetStatus;

// Opaque circuit model: layout, fixed detunings and current parameters.
typedef struct ChiralnetModel ChiralnetModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null.
//
// The pointer stays valid until the next chiralnet call on this thread.
const char *chiralnet_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *chiralnet_version(void);

// Builds a model with `q` qubits, `layers` Part-One layers of `rotations`
// rotations each and `layers_two` Part-Two layers, seeded by `seed`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one pointer.
enum ChiralnetStatus chiralnet_model_new(size_t q,
                                         size_t layers,
                                         size_t rotations,
                                         size_t layers_two,
                                         uint64_t seed,
                                         struct ChiralnetModel **out);

// Releases a model. Null is ignored.
//
// # Safety
// `model` must come from [`chiralnet_model_new`] and not be used afterwards.
void chiralnet_model_free(struct ChiralnetModel *model);

// Number of trainable parameters, or 0 for a null model.
//
// # Safety
// `model` must be null or a live model.
size_t chiralnet_model_num_params(const struct ChiralnetModel *model);

// Copies the parameters into `out[0..len]`; `len` must equal the count.
//
// # Safety
// `model` must be live and `out` must point to `len` writable doubles.
enum ChiralnetStatus chiralnet_model_get_params(const struct ChiralnetModel *model,
                                                double *out,
                                                size_t len);

// Replaces the parameters with `params[0..len]`.
//
// # Safety
// `model` must be live and `params` must point to `len` readable doubles.
enum ChiralnetStatus chiralnet_model_set_params(struct ChiralnetModel *model,
                                                const double *params,
                                                size_t len);

// Probability of the last qubit reading `|1⟩` for a 1- or 2-feature input.
//
// # Safety
// `input` must point to `input_len` doubles and `out` to one writable double.
enum ChiralnetStatus chiralnet_model_forward(const struct ChiralnetModel *model,
                                             const double *input,
                                             size_t input_len,
                                             double *out);

// `∂P/∂Θ` by the parameter-shift rule with shift `shift`.
//
// # Safety
// `input` must point to `input_len` doubles and `out` to `len` writable doubles.
enum ChiralnetStatus chiralnet_model_gradient(const struct ChiralnetModel *model,
                                              const double *input,
                                              size_t input_len,
                                              double shift,
                                              double *out,
                                              size_t len);

// Full-batch gradient descent on `n` samples of dimension `dim`, stored
// row-major in `inputs`, with output map `g = weight·P + bias`. The model
// keeps the trained parameters; the final cost goes to `final_cost`.
//
// # Safety
// `inputs` must hold `n·dim` doubles, `teachers` `n` doubles, and
// `final_cost` must be null or writable.
enum ChiralnetStatus chiralnet_model_train(struct ChiralnetModel *model,
                                           const double *inputs,
                                           size_t dim,
                                           const double *teachers,
                                           size_t n,
                                           double learning_rate,
                                           size_t epochs,
                                           double weight,
                                           double bias,
                                           double *final_cost);

// Type-a rotation matrix, written row-major as `(re, im)` pairs into
// `out[0..8]`.
//
// # Safety
// `out` must point to 8 writable doubles.
enum ChiralnetStatus chiralnet_rotation_gate(double gamma,
                                             double omega,
                                             double delta_k,
                                             double delta_laser,
                                             double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHIRALNET_H */
