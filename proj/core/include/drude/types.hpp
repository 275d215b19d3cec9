// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DRUDE_TYPES_HPP
#define DRUDE_TYPES_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace drude {

using Complex = std::complex<double>;

inline constexpr const char* kToolVersion = "0.1.0";

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation requested within tolerance of a pole of the rational symbol.
struct PoleAtOmega : Error {
  using Error::Error;
};

// Evaluation requested within tolerance of a square-root branch cut.
struct BranchCut : Error {
  using Error::Error;
};

// Argument-principle boundary passes too close to a zero.
struct BoundaryZero : Error {
  using Error::Error;
};

// Adaptive phase tracking exhausted its sample budget.
struct PhaseUnresolved : Error {
  using Error::Error;
};

// An iteration failed to converge within its budget.
struct NoConvergence : Error {
  using Error::Error;
};

// Parameter combination outside the closed-form formula's domain.
struct DegenerateParams : Error {
  using Error::Error;
};

// Operation defined only for a restricted parameter regime.
struct UnsupportedParams : Error {
  using Error::Error;
};

// No reference eigenvalue available to compare against.
struct NoReferenceRoot : Error {
  using Error::Error;
};

// Malformed arguments or configuration.
struct InvalidInput : Error {
  using Error::Error;
};

// Damping constants and squared coupling strengths of the two-pole lossy
// material model. `alpha_*` are the squared couplings inside the slab,
// `theta_*_inf_sq` the squared couplings at infinity.
struct MaterialParams {
  double gamma_e = 4.0;
  double gamma_m = 1.0;
  double alpha_e = 400.0;
  double alpha_m = 10.0;
  double theta_e_inf_sq = 0.0;
  double theta_m_inf_sq = 0.0;

  void validate() const {
    if (!(gamma_e > 0.0) || !(gamma_m > 0.0))
      throw InvalidInput("MaterialParams: damping constants must be positive");
    if (alpha_e < 0.0 || alpha_m < 0.0 || theta_e_inf_sq < 0.0 ||
        theta_m_inf_sq < 0.0)
      throw InvalidInput("MaterialParams: squared couplings must be >= 0");
  }

  double theta_e_sup_sq() const { return std::max(alpha_e, theta_e_inf_sq); }
  double theta_m_sup_sq() const { return std::max(alpha_m, theta_m_inf_sq); }
  double gamma_max() const { return std::max(gamma_e, gamma_m); }
  bool vacuum_at_infinity() const {
    return theta_e_inf_sq == 0.0 && theta_m_inf_sq == 0.0;
  }
};

// Semi-infinite rectangular waveguide (0, X) x (0, L2) x (0, L3) with a
// material slab on (0, slab_end). X = +infinity selects the untruncated
// problem.
struct WaveguideGeometry {
  double L2 = 1.0;
  double L3 = 3.14159265358979323846;
  double slab_end = 1.0;
  double X = std::numeric_limits<double>::infinity();

  bool truncated() const { return std::isfinite(X); }

  void validate() const {
    if (!(L2 > 0.0) || !(L3 > 0.0))
      throw InvalidInput("WaveguideGeometry: cross-section lengths must be positive");
    if (!(slab_end > 0.0))
      throw InvalidInput("WaveguideGeometry: slab_end must be positive");
    if (truncated() && !(X > slab_end))
      throw InvalidInput("WaveguideGeometry: X must exceed slab_end");
  }
};

// Transverse mode index; both components start at 1.
struct ModeIndex {
  int n2 = 1;
  int n3 = 1;

  void validate() const {
    if (n2 < 1 || n3 < 1) throw InvalidInput("ModeIndex: indices must be >= 1");
  }
  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

// Sign-region tag of the complex plane: the two open quadrant-like regions
// on which the reduced problem is accretive/dissipative, and the excluded
// union of the imaginary axis with one horizontal line.
enum class RegionTag { Sigma1, Sigma2, Excluded };

inline const char* to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::Sigma1: return "sigma1";
    case RegionTag::Sigma2: return "sigma2";
    default: return "excluded";
  }
}

// The set (-inf, -threshold] U [threshold, inf) on the real axis.
struct HalfLinePair {
  double threshold = 1.0;

  double distance_to(Complex omega) const {
    const double x = std::abs(omega.real());
    const double y = omega.imag();
    if (x >= threshold) return std::abs(y);
    return std::hypot(threshold - x, y);
  }
};

}  // namespace drude

#endif  // DRUDE_TYPES_HPP
