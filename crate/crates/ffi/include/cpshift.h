/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef CPSHIFT_H
#define CPSHIFT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CpsGeometryKind {
  // `a` = distance `d`.
  CPS_GEOMETRY_KIND_PLANE = 0,
  // `a` = radius `R`, `b` = distance `rho` from the axis.
  CPS_GEOMETRY_KIND_WIRE = 1,
  // `a` = distance `rho` from the edge, `b` = angle `phi`.
  CPS_GEOMETRY_KIND_HALF_PLANE = 2,
} CpsGeometryKind;

// Result code of every call.
typedef enum CpsStatus {
  CPS_STATUS_OK = 0,
  CPS_STATUS_NULL_POINTER = 1,
  // A parameter is outside its domain (negative distance, atom inside the wire, ...).
  CPS_STATUS_INVALID_ARGUMENT = 2,
  // The configuration is valid but closer to the surface than supported;
  // use the plane-mirror results instead.
  CPS_STATUS_OUT_OF_RANGE = 3,
  // An integral or series failed to reach the requested tolerance.
  CPS_STATUS_NO_CONVERGENCE = 4,
  CPS_STATUS_PANIC = 5,
} CpsStatus;

// Tolerances shared by all evaluations. Create with [`cps_settings_new`],
// release with [`cps_settings_free`].
typedef struct CpsSettings CpsSettings;

// The three response functions and an absolute error estimate.
typedef struct CpsXi {
  double rho;
  double phi;
  double z;
  double error_estimate;
} CpsXi;

// Unit vector of the force on an isotropic atom near a half-plane.
typedef struct CpsForceDirection {
  double e_rho;
  double e_phi;
  // Nonzero when the gradient vanished and the direction is meaningless.
  int32_t degenerate;
  // Nonzero when the retarded closed forms were used.
  int32_t asymptotic;
} CpsForceDirection;

typedef struct CpsGeometry {
  // One of the `CpsGeometryKind` values; anything else is rejected.
  int32_t kind;
  double a;
  double b;
} CpsGeometry;

// One dipole transition: energy and `(|μ_ρ|², |μ_φ|², |μ_z|²)`.
typedef struct CpsTransition {
  double energy;
  double mu_sq[3];
} CpsTransition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or an empty string. The
// pointer stays valid until the next call into this library on the same
// thread.
const char *cps_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *cps_version(void);

// New settings handle with default tolerances.
struct CpsSettings *cps_settings_new(void);

// # Safety
// `settings` must be null or a handle from [`cps_settings_new`] that has
// not been freed.
void cps_settings_free(struct CpsSettings *settings);

// Relative tolerance of every integral (default `1e-8`).
//
// # Safety
// `settings` must be null or a live handle.
enum CpsStatus cps_settings_set_rel_tol(struct CpsSettings *settings, double rel_tol);

// Absolute tolerance floor (default `1e-14`).
//
// # Safety
// `settings` must be null or a live handle.
enum CpsStatus cps_settings_set_abs_tol(struct CpsSettings *settings, double abs_tol);

// Largest order of the wire's angular-momentum series (default `50000`).
//
// # Safety
// `settings` must be null or a live handle.
enum CpsStatus cps_settings_set_m_max(struct CpsSettings *settings, size_t m_max);

// `(Ξ_⊥, Ξ_∥, Ξ_∥)` for a plane mirror at distance `d`.
//
// # Safety
// `settings` must be null or a live handle; `out` must be valid for writes.
enum CpsStatus cps_xi_plane(const struct CpsSettings *settings,
                            double d,
                            double energy,
                            struct CpsXi *out);

// `Ξ` outside a wire of radius `radius`, atom at `rho` from the axis.
//
// # Safety
// `settings` must be null or a live handle; `out` must be valid for writes.
enum CpsStatus cps_xi_wire(const struct CpsSettings *settings,
                           double radius,
                           double rho,
                           double energy,
                           struct CpsXi *out);

// `lim E·Ξ` as `E → ∞` for the wire.
//
// # Safety
// `settings` must be null or a live handle; `out` must be valid for writes.
enum CpsStatus cps_xi_wire_retarded_limit(const struct CpsSettings *settings,
                                          double radius,
                                          double rho,
                                          struct CpsXi *out);

// `Ξ` near a half-plane; `rho` from the edge, `phi` measured from the
// conductor.
//
// # Safety
// `settings` must be null or a live handle; `out` must be valid for writes.
enum CpsStatus cps_xi_halfplane(const struct CpsSettings *settings,
                                double rho,
                                double phi,
                                double energy,
                                struct CpsXi *out);

// Electrostatic closed forms for the half-plane.
//
// # Safety
// `out` must be valid for writes.
enum CpsStatus cps_xi_halfplane_nonretarded(double rho, double phi, struct CpsXi *out);

// Direction of the force on an isotropic atom near a half-plane.
//
// # Safety
// `settings` must be null or a live handle; `out` must be valid for writes.
enum CpsStatus cps_force_direction_halfplane(const struct CpsSettings *settings,
                                             double rho,
                                             double phi,
                                             double energy,
                                             struct CpsForceDirection *out);

// Energy shift `ΔW = -Σ Ξ_i(E_j) |μ_i|²` summed over `count` transitions,
// in `μ²/(4πε₀L³)`.
//
// # Safety
// `settings` must be null or a live handle; `transitions` must point to
// `count` readable elements; `out` must be valid for writes.
enum CpsStatus cps_energy_shift(const struct CpsSettings *settings,
                                struct CpsGeometry geometry,
                                const struct CpsTransition *transitions,
                                size_t count,
                                double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CPSHIFT_H */
