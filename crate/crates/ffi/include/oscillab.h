#ifndef OSCILLAB_H
#define OSCILLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum OslStatus {
  OSL_STATUS_OK = 0,
  OSL_STATUS_INVALID_ARGUMENT = 1,
  OSL_STATUS_DIMENSION_MISMATCH = 2,
  OSL_STATUS_OUT_OF_RANGE = 3,
  OSL_STATUS_TOLERANCE_BREACH = 4,
  OSL_STATUS_NULL_POINTER = 5,
  OSL_STATUS_BUFFER_TOO_SMALL = 6,
  OSL_STATUS_INTERNAL = 7,
} OslStatus;

// Selects one of the three ladder generators of a representation.
typedef enum OslGenerator {
  OSL_GENERATOR_L3 = 0,
  OSL_GENERATOR_RAISE = 1,
  OSL_GENERATOR_LOWER = 2,
} OslGenerator;

// Opaque handle to a ladder representation.
typedef struct OslRep OslRep;

// Opaque handle to a truncated two-mode Fock space.
typedef struct OslTwoMode OslTwoMode;

// Residuals of the two-mode checks, all max-entry norms on the interior.
typedef struct OslTwoModeResiduals {
  double casimir;
  double sectors;
  double h0_casimir;
  double hi_l2;
  double h0_hi_commutator;
  double l2_first;
  double l2_second;
} OslTwoModeResiduals;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *osl_version(void);

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next `osl_*` call on the same thread.
const char *osl_last_error_message(void);

// su(2) irrep with label `l = twice_l / 2`.
//
// # Safety
// `out` must be valid for a pointer write. The handle written there is
// released with [`osl_rep_free`].
enum OslStatus osl_rep_su2(uint32_t twice_l, struct OslRep **out);

// Truncated D⁺ₖ with `k = twice_k / 2` and `dim` basis states.
//
// # Safety
// As for [`osl_rep_su2`].
enum OslStatus osl_rep_su11(uint32_t twice_k, size_t dim, struct OslRep **out);

// Truncated oscillator with `dim` basis states.
//
// # Safety
// As for [`osl_rep_su2`].
enum OslStatus osl_rep_h1(size_t dim, struct OslRep **out);

// # Safety
// `rep` must be null or a handle from an `osl_rep_*` constructor that has
// not been freed.
void osl_rep_free(struct OslRep *rep);

// # Safety
// `rep` must be a live handle and `out` valid for a write.
enum OslStatus osl_rep_dim(const struct OslRep *rep, size_t *out);

// Matrix element `⟨row|G|col⟩`.
//
// # Safety
// `rep` must be a live handle; `re` and `im` valid for writes.
enum OslStatus osl_rep_element(const struct OslRep *rep,
                               enum OslGenerator generator,
                               size_t row,
                               size_t col,
                               double *re,
                               double *im);

// Worst violation of the defining commutation relations on the leading
// `interior` basis states.
//
// # Safety
// `rep` must be a live handle and `residual` valid for a write.
enum OslStatus osl_rep_check_relations(const struct OslRep *rep, size_t interior, double *residual);

// `‖([a,a†] - 1)|n⟩‖` for the scaled ladders of an su(2) or su(1,1) rep.
//
// # Safety
// `rep` must be a live handle and `out` valid for a write.
enum OslStatus osl_contraction_deviation(const struct OslRep *rep, size_t n, double *out);

// Ascending energies of the `n_states`-state cyclic evolution with step
// `tau`, written to `out[0..n_states]`.
//
// # Safety
// `out` must be valid for `len` writes of `f64`.
enum OslStatus osl_evolution_energies(size_t n_states, double tau, double *out, size_t len);

// The scalar `φ` with `U^N = φ·1`.
//
// # Safety
// `re` and `im` must be valid for writes.
enum OslStatus osl_geometric_phase(size_t n_states, double *re, double *im);

// Touch angles `θ_1..θ_count` of the `n_sites` circle system, in `[0, 2π)`.
//
// # Safety
// `out` must be valid for `count` writes of `f64`.
enum OslStatus osl_thooft_touch_angles(uint64_t n_sites, double *out, size_t count);

// Largest circular gap on each circle after `steps` torus jumps.
//
// # Safety
// `gap1` and `gap2` must be valid for writes.
enum OslStatus osl_torus_max_gaps(double alpha1,
                                  double alpha2,
                                  double tau,
                                  size_t steps,
                                  double start1,
                                  double start2,
                                  double *gap1,
                                  double *gap2);

// Two-mode space with occupations `0..=n_max` per mode.
//
// # Safety
// `out` must be valid for a pointer write; release with
// [`osl_two_mode_free`].
enum OslStatus osl_two_mode_new(size_t n_max, struct OslTwoMode **out);

// # Safety
// `space` must be null or a live handle from [`osl_two_mode_new`].
void osl_two_mode_free(struct OslTwoMode *space);

// Runs the Casimir, sector, Hamiltonian and L₂ checks. Returns
// `ToleranceBreach` when the library rejects a residual outright; the
// filled residuals are then unspecified.
//
// # Safety
// `space` must be a live handle and `out` valid for a write.
enum OslStatus osl_two_mode_check(const struct OslTwoMode *space,
                                  double big_omega,
                                  double gamma,
                                  struct OslTwoModeResiduals *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OSCILLAB_H */
