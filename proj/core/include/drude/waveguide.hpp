// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DRUDE_WAVEGUIDE_HPP
#define DRUDE_WAVEGUIDE_HPP

#include <string>
#include <vector>

#include "drude/rootfinding.hpp"
#include "drude/types.hpp"

namespace drude::waveguide {

// Transverse cutoff kappa_n^2 = pi^2 n2^2 / L2^2 + pi^2 n3^2 / L3^2.
double cutoff(ModeIndex mode, const WaveguideGeometry& geometry);

// lambda2^2 = kappa_n^2 - omega^2 (vacuum side).
Complex lambda2_sq(Complex omega, ModeIndex mode, const WaveguideGeometry& geometry);

// lambda1^2 = kappa_n^2 - f_slab(omega) (slab side). Throws PoleAtOmega.
Complex lambda1_sq(Complex omega, ModeIndex mode, const WaveguideGeometry& geometry,
                   const MaterialParams& params);

// Regularized dispersion function of the semi-infinite problem,
//   cosh(lambda1) + lambda2 * sinh(lambda1)/lambda1,
// analytic in lambda1^2 (hence free of the lambda1 branch), principal branch
// Re lambda2 >= 0 on the vacuum side. Zeros coincide with solutions of
// lambda1*coth(lambda1) + lambda2 = 0 away from sinh(lambda1) = 0; the raw
// variant is the direct combination used to reject those spurious points.
// Throws BranchCut within 1e-10 of the real segments |Re omega| >= kappa_n.
Complex dispersion_full(Complex omega, ModeIndex mode,
                        const WaveguideGeometry& geometry,
                        const MaterialParams& params);
Complex dispersion_full_raw(Complex omega, ModeIndex mode,
                            const WaveguideGeometry& geometry,
                            const MaterialParams& params);

// Regularized dispersion function of the truncated problem,
//   cosh(l1)*(X-1)*sinh(z)/z + cosh(z)*sinh(l1)/l1,   z = lambda2*(X-1),
// even in both lambdas separately, hence entire in omega off the poles of
// the slab symbol. Hyperbolic factors are evaluated in exponentially scaled
// form; when the common scale exp(Re l1 + Re z) exceeds exp(600) the
// returned value is compressed by the excess (zeros and phase unaffected).
// The raw variant evaluates lambda1 coth lambda1 + lambda2 coth(lambda2 (X-1)).
Complex dispersion_truncated(Complex omega, ModeIndex mode,
                             const WaveguideGeometry& geometry,
                             const MaterialParams& params);
Complex dispersion_truncated_raw(Complex omega, ModeIndex mode,
                                 const WaveguideGeometry& geometry,
                                 const MaterialParams& params);

enum class PointClass { TrueEig, TruncatedEig, PollutionCandidate, Converged };

const char* to_string(PointClass cls);

// One certified eigenvalue with its enclosure verdicts.
struct SpectrumPoint {
  ModeIndex mode;
  Complex omega;
  double residual = 0.0;  // raw dispersion residual at the root
  int winding = 1;
  PointClass cls = PointClass::TrueEig;
  bool in_strip = false;
  bool in_enc = false;
  bool in_gamma = false;
  RegionTag sigma = RegionTag::Excluded;
};

struct ModeWarning {
  ModeIndex mode;
  std::string message;
};

struct SpectrumResult {
  std::vector<SpectrumPoint> points;
  std::vector<ModeWarning> warnings;
};

// Eigenvalue sweep over all modes with n2, n3 <= n_max: isolates dispersion
// roots in `region` minus small disks around the material poles, rejects
// points whose raw residual exceeds 10*tol, and attaches enclosure verdicts.
// Per-mode failures become warnings instead of aborting the sweep.
SpectrumResult spectrum(const WaveguideGeometry& geometry,
                        const MaterialParams& params,
                        const rootfinding::SearchRegion& region, int n_max,
                        double tol, int threads = 1);

enum class LimitClass { ConvergesToTrueEig, AccumulatesOnWe, Undecided };

const char* to_string(LimitClass cls);

// One linked eigenvalue trajectory across increasing truncation lengths.
struct TrajectorySample {
  double X = 0.0;
  Complex omega;
  double dist_to_we = 0.0;    // distance to the essential numerical range
  double dist_to_true = 0.0;  // distance to the nearest full-problem root
};

struct TrajectoryReport {
  int chain_id = 0;
  ModeIndex mode;
  std::vector<TrajectorySample> samples;
  LimitClass limit_class = LimitClass::Undecided;
  Complex limit_target;  // meaningful for ConvergesToTrueEig
  bool broken = false;   // chain lost its continuation at some X
};

// Domain-truncation study: computes the spectrum at every X in X_list plus
// the semi-infinite reference, links points across consecutive X by nearest
// neighbour (threshold 0.5) within each mode, and classifies each chain.
std::vector<TrajectoryReport> truncation_study(
    const WaveguideGeometry& base, const MaterialParams& params,
    const std::vector<double>& X_list, const rootfinding::SearchRegion& region,
    int n_max, double tol, int threads = 1);

// Full-problem reference spectrum used by the study; exposed for reuse.
SpectrumResult reference_spectrum(const WaveguideGeometry& base,
                                  const MaterialParams& params,
                                  const rootfinding::SearchRegion& region,
                                  int n_max, double tol, int threads = 1);

}  // namespace drude::waveguide

#endif  // DRUDE_WAVEGUIDE_HPP
