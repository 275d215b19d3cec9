// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DRUDE_MODEL_HPP
#define DRUDE_MODEL_HPP

#include <vector>

#include "drude/rootfinding.hpp"
#include "drude/types.hpp"

namespace drude::model {

// Which coefficient set enters a rational symbol: the slab couplings or the
// values at infinity.
enum class Coefficients { Slab, AtInfinity };

// Quadratic pencil omega^2 + i*gamma*omega - theta_sq.
Complex theta_pencil(Complex omega, double gamma, double theta_sq);

// Rational symbol Theta_e(omega)*Theta_m(omega) /
// ((omega + i gamma_e)(omega + i gamma_m)) with the squared couplings taken
// from the requested coefficient site. Throws PoleAtOmega within absolute
// tolerance 1e-12 of either pole.
Complex f_eval(Complex omega, const MaterialParams& params, Coefficients site);

// Sign-region classification: Sigma1 where Re(omega)*Im(omega + i gamma_m/2)
// is positive, Sigma2 where negative, Excluded where the product vanishes
// within 1e-14.
RegionTag classify_sigma(Complex omega, double gamma_m);

// Horizontal-strip enclosure: -max(gamma_e, gamma_m) <= Im omega <= 0.
bool strip_contains(Complex omega, const MaterialParams& params);

// Non-convex enclosure 0 <= -Im omega <= min(max gamma, K/(Re omega)^2) with
// K = gamma_e*sup theta_e^2 + gamma_m*sup theta_m^2; on the imaginary axis
// only the strip bound applies.
bool enc_contains(Complex omega, const MaterialParams& params);

// Refined enclosure: on the imaginary axis, Im omega in (-gamma_e, 0) minus
// the point -gamma_m; off the axis, Im omega >= -(gamma_e+gamma_m)/2
// together with enc_contains. Boundary lines count as inside except the
// explicitly excluded points.
bool gamma_set_contains(Complex omega, const MaterialParams& params);

// Monic quartic in omega whose roots solve
// Theta_{e,inf}(omega) * Theta_{m,inf}(omega) = t * (omega+i ge)(omega+i gm).
rootfinding::Polynomial essential_quartic(const MaterialParams& params, double t);

// Essential-spectrum curve of the constant-coefficient problem: all quartic
// roots over n_samples values of t in [t_min, t_max]. Roots that merely
// reproduce a pole cancelled by the numerator are discarded; output is
// lexicographically sorted by (Re, Im) with duplicates within 1e-10 merged.
// When a geometry is supplied, t_min must be at least the transverse
// threshold (pi/max{L2,L3})^2.
std::vector<Complex> essential_curve_s_infty(const MaterialParams& params,
                                             double t_min, double t_max,
                                             int n_samples,
                                             const WaveguideGeometry* geometry = nullptr);

// The at-most-six essential-spectrum points contributed by gradient fields
// for the step-coefficient slab:
//   {0, -i ge, -i ge/2 +- sqrt(alpha_e - ge^2/4), -i ge/2 +- sqrt(alpha_e/2 - ge^2/4)}
// with negative sqrt arguments collapsing the pair onto the imaginary axis.
// Duplicates merged; sorted by (Re, Im).
std::vector<Complex> sigma_e_G_points(const MaterialParams& params);

// Parametric curve -i ge/2 +- sqrt(theta_sq - ge^2/4) sampled over
// [theta_sq_min, theta_sq_max]; the plus branch for all samples first, then
// the minus branch.
std::vector<Complex> sigma_e_G_curve(double theta_sq_min, double theta_sq_max,
                                     double gamma_e, int n_samples);

// Essential numerical range of the constant-coefficient pencil as a pair of
// real half-lines +-[pi/max{L2,L3}, inf). Only valid with vacuum at
// infinity, where the symbol reduces to omega^2; otherwise throws
// UnsupportedParams (use we_s_infty_contains for the general case).
HalfLinePair we_s_infty(const WaveguideGeometry& geometry,
                        const MaterialParams& params);

// Membership test in the general essential numerical range: the
// at-infinity symbol must be real within tol and at least the transverse
// threshold (pi/max{L2,L3})^2 - tol.
bool we_s_infty_contains(Complex omega, const WaveguideGeometry& geometry,
                         const MaterialParams& params, double tol);

enum class AsymptoticBranch { NearPoleE, NearPoleM, LargeRealPlus, LargeRealMinus };

// Leading-order root locations of the quartic as t -> +inf:
//   NearPole branches: -i gamma_x - i c/t with
//     c = theta_x0^2 * (-gamma_x + theta_x0^2 theta_y0^2 / (gamma_y - gamma_x));
//   LargeReal branches: +-sqrt(t) - i K/(2 t) with
//     K = theta_e0^2 gamma_e + theta_m0^2 gamma_m.
// The halved decay constant K/(2 x^2) is the variant that matches the
// quartic roots (the tests pin the match; the unhalved candidate is off by
// a factor of two in the imaginary part). Throws DegenerateParams when
// gamma_e == gamma_m for the pole branches.
Complex asymptotic_root(double t, AsymptoticBranch branch,
                        const MaterialParams& params);

// Both candidates for the imaginary-part decay of the LargeReal branches at
// leading order (Re omega)^2 ~ t: {-K/t, -K/(2t)}. Exposed so tests can
// demonstrate which one the quartic selects.
std::pair<double, double> large_real_imag_candidates(double t,
                                                     const MaterialParams& params);

// Reflection omega -> -conj(omega); the spectrum is closed under it.
Complex reflect(Complex omega);

}  // namespace drude::model

#endif  // DRUDE_MODEL_HPP
