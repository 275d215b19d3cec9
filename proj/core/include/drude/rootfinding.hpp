// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DRUDE_ROOTFINDING_HPP
#define DRUDE_ROOTFINDING_HPP

#include <functional>
#include <vector>

#include "drude/types.hpp"

namespace drude::rootfinding {

// Dense polynomial with ascending coefficients. Degree is capped at 16;
// the intended use is low-degree dispersion symbols.
struct Polynomial {
  std::vector<Complex> coeffs;  // coeffs[k] multiplies omega^k

  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex eval(Complex z) const;
  Complex eval_derivative(Complex z) const;

  // Monic polynomial with the given roots.
  static Polynomial from_roots(const std::vector<Complex>& roots);
};

// All roots with multiplicity via Aberth-Ehrlich simultaneous iteration.
// Each returned root z satisfies |p(z)| <= 1e-10 * max(1,|z|)^deg * max|c|.
// Output sorted by (Re, Im). Throws NoConvergence after 500 sweeps.
std::vector<Complex> poly_roots(const Polynomial& p);

// Axis-aligned search rectangle in the omega plane plus subdivision limits.
struct SearchRegion {
  double re_min = -1.0;
  double re_max = 1.0;
  double im_min = -1.0;
  double im_max = 1.0;
  int max_depth = 48;
  int boundary_samples = 64;

  void validate() const;
  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
  double diameter() const;
  Complex center() const;
  bool contains(Complex z) const;

  // Rectangle grown by `amount` on every side.
  SearchRegion grown(double amount) const;
};

using ScalarFn = std::function<Complex(Complex)>;

// Winding number of F along the rectangle boundary by adaptive argument
// tracking: segments whose phase jump exceeds pi/2 are split until resolved.
// Preconditions: F analytic inside, no zeros on the boundary (checked as
// min boundary |F| > 1e-13 * max boundary |F|, else BoundaryZero). Throws
// PhaseUnresolved when refinement would exceed 2^16 samples or the
// accumulated phase fails to round to an integer within defect 0.25.
int winding_count(const ScalarFn& F, const SearchRegion& region);

// A root certificate: the isolating rectangle carries winding number one
// and the polished value meets the caller's residual tolerance.
struct CertifiedRoot {
  Complex value;
  double residual = 0.0;
  int winding = 1;
  SearchRegion region;
};

// Recursive quadrisection driven by winding counts. Rectangles with count
// zero are dropped; others split until a single zero is isolated in a
// rectangle of diameter < 1e-3, then polished by Newton with a
// central-difference derivative (step 1e-7*(1+|z|), at most 50 iterations).
// Boundary failures retry up to 3 times on a rectangle grown by 1e-6 of its
// diameter before propagating. Results sorted by (Re, Im).
std::vector<CertifiedRoot> isolate_roots(const ScalarFn& F,
                                         const SearchRegion& region,
                                         double tol_residual, int max_roots);

}  // namespace drude::rootfinding

#endif  // DRUDE_ROOTFINDING_HPP
