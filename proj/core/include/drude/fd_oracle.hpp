// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DRUDE_FD_ORACLE_HPP
#define DRUDE_FD_ORACLE_HPP

#include <vector>

#include "drude/rootfinding.hpp"
#include "drude/types.hpp"

namespace drude::fd {

// Uniform Dirichlet grid on (0, X) with n cells. When the two coefficient
// regions differ the grid must place a node on the interface; `aligned`
// snaps the requested cell count to the nearest count that does.
struct FdGrid {
  double X = 1.0;
  double h = 0.0;
  int n = 0;                // cells; interior unknowns are n-1
  double slab_end = 1.0;
  int interface_index = 0;  // grid node at x = slab_end, 0 if none

  static FdGrid aligned(double X, double slab_end, int n_target);
  static FdGrid uniform(double X, int n);  // no interface alignment required
  void validate() const;
};

// Complex determinant in scaled form mantissa * 2^exponent, |mantissa| in
// [1, 2); exact for interior sizes up to 1e6 without overflow.
struct LogDet {
  Complex mantissa;
  long exponent = 0;

  double log2_abs() const;
};

// Determinant of the second-order finite-difference discretization of
//   -u'' + (kappa_sq - g(omega, x)) u = 0,  u(0) = u(X) = 0,
// with g the slab symbol left of the interface, omega^2 right of it, and the
// arithmetic mean at the interface node. Evaluated by the three-term
// recurrence with per-step base-2 renormalization.
LogDet fd_det(Complex omega, double kappa_sq, const FdGrid& grid,
              const MaterialParams& params);

// Convenience overload taking the transverse mode.
LogDet fd_det(Complex omega, ModeIndex mode, const WaveguideGeometry& geometry,
              const FdGrid& grid, const MaterialParams& params);

// Finite-difference eigenvalues: zeros of the scaled determinant, isolated
// by the argument-principle machinery. The hunt function is the mantissa
// re-exponentiated relative to the determinant scale at the region centre,
// clamped to stay representable.
std::vector<rootfinding::CertifiedRoot> oracle_spectrum(
    ModeIndex mode, const WaveguideGeometry& geometry, const FdGrid& grid,
    const MaterialParams& params, const rootfinding::SearchRegion& region,
    double tol);

struct ConvergenceSample {
  double h = 0.0;
  Complex fd_root;
  double gap = 0.0;  // |fd_root - reference|
};

struct ConvergenceResult {
  double order = 0.0;  // least-squares slope of log(gap) vs log(h)
  Complex reference;   // certified dispersion root used as truth
  std::vector<ConvergenceSample> samples;
};

// Observed convergence order against the certified dispersion root nearest
// to `seed` (the root search runs in `region`). h_list must contain at
// least 3 strictly decreasing steps. Throws NoReferenceRoot when the
// dispersion solver finds nothing in the region.
ConvergenceResult convergence_order(ModeIndex mode,
                                    const WaveguideGeometry& geometry,
                                    const MaterialParams& params,
                                    const std::vector<double>& h_list,
                                    const rootfinding::SearchRegion& region,
                                    Complex seed, double tol);

}  // namespace drude::fd

#endif  // DRUDE_FD_ORACLE_HPP
