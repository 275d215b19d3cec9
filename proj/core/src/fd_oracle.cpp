// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#include "drude/fd_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "drude/model.hpp"
#include "drude/waveguide.hpp"

namespace drude::fd {

namespace {

constexpr int kMinCells = 16;
constexpr double kAlignTol = 1e-9;  // relative to h
constexpr long kExponentClamp = 900;

}  // namespace

FdGrid FdGrid::aligned(double X, double slab_end, int n_target) {
  if (!(X > slab_end) || !(slab_end > 0.0))
    throw InvalidInput("FdGrid: need 0 < slab_end < X");
  if (n_target < kMinCells) throw InvalidInput("FdGrid: need at least 16 cells");
  // Walk outward from the requested count until a node lands on the
  // interface. For rational slab_end/X this terminates quickly.
  const int limit = std::max(64, n_target);
  for (int d = 0; d <= limit; ++d) {
    for (const int n : {n_target + d, n_target - d}) {
      if (n < kMinCells) continue;
      const double h = X / n;
      const double idx = slab_end / h;
      const double snapped = std::round(idx);
      if (snapped >= 1.0 && std::abs(idx - snapped) <= kAlignTol) {
        FdGrid g;
        g.X = X;
        g.h = h;
        g.n = n;
        g.slab_end = slab_end;
        g.interface_index = static_cast<int>(snapped);
        return g;
      }
    }
  }
  throw InvalidInput("FdGrid: no aligned cell count near the requested size");
}

FdGrid FdGrid::uniform(double X, int n) {
  if (!(X > 0.0)) throw InvalidInput("FdGrid: X must be positive");
  if (n < kMinCells) throw InvalidInput("FdGrid: need at least 16 cells");
  FdGrid g;
  g.X = X;
  g.h = X / n;
  g.n = n;
  g.slab_end = X;  // single-region grid
  g.interface_index = 0;
  return g;
}

void FdGrid::validate() const {
  if (n < kMinCells) throw InvalidInput("FdGrid: need at least 16 cells");
  if (!(h > 0.0) || std::abs(n * h - X) > 1e-9 * X)
    throw InvalidInput("FdGrid: n*h must equal X");
}

double LogDet::log2_abs() const {
  return std::log2(std::abs(mantissa)) + static_cast<double>(exponent);
}

LogDet fd_det(Complex omega, double kappa_sq, const FdGrid& grid,
              const MaterialParams& params) {
  grid.validate();
  const Complex f = model::f_eval(omega, params, model::Coefficients::Slab);
  const Complex w2 = omega * omega;
  const double h2 = grid.h * grid.h;

  Complex d_prev2 = 0.0;  // D_{-1}
  Complex d_prev = 1.0;   // D_0
  long exponent = 0;
  for (int j = 1; j <= grid.n - 1; ++j) {
    Complex g;
    if (grid.interface_index == 0)
      g = w2;  // uniform grid: both regions carry the vacuum symbol
    else if (j < grid.interface_index)
      g = f;
    else if (j == grid.interface_index)
      g = 0.5 * (f + w2);
    else
      g = w2;
    const Complex a = -(2.0 + h2 * (kappa_sq - g));
    Complex d = a * d_prev - d_prev2;
    const double mag = std::abs(d);
    if (mag > 0.0 && std::isfinite(mag)) {
      const int k = std::ilogb(mag);
      if (k != 0) {
        const double scale = std::ldexp(1.0, -k);
        d *= scale;
        d_prev *= scale;
        exponent += k;
      }
    }
    d_prev2 = d_prev;
    d_prev = d;
  }
  // Final normalization to |mantissa| in [1, 2).
  const double mag = std::abs(d_prev);
  if (mag > 0.0 && std::isfinite(mag)) {
    const int k = std::ilogb(mag);
    d_prev = d_prev * std::ldexp(1.0, -k);
    exponent += k;
  }
  return {d_prev, exponent};
}

LogDet fd_det(Complex omega, ModeIndex mode, const WaveguideGeometry& geometry,
              const FdGrid& grid, const MaterialParams& params) {
  return fd_det(omega, waveguide::cutoff(mode, geometry), grid, params);
}

std::vector<rootfinding::CertifiedRoot> oracle_spectrum(
    ModeIndex mode, const WaveguideGeometry& geometry, const FdGrid& grid,
    const MaterialParams& params, const rootfinding::SearchRegion& region,
    double tol) {
  const double kappa_sq = waveguide::cutoff(mode, geometry);
  const long ref = fd_det(region.center(), kappa_sq, grid, params).exponent;
  auto hunt_fn = [=](Complex w) {
    const LogDet d = fd_det(w, kappa_sq, grid, params);
    const long s =
        std::clamp(d.exponent - ref, -kExponentClamp, kExponentClamp);
    return d.mantissa * std::ldexp(1.0, static_cast<int>(s));
  };
  return rootfinding::isolate_roots(hunt_fn, region, tol, 1024);
}

ConvergenceResult convergence_order(ModeIndex mode,
                                    const WaveguideGeometry& geometry,
                                    const MaterialParams& params,
                                    const std::vector<double>& h_list,
                                    const rootfinding::SearchRegion& region,
                                    Complex seed, double tol) {
  if (h_list.size() < 3)
    throw InvalidInput("convergence_order: need at least 3 step sizes");
  for (size_t i = 0; i + 1 < h_list.size(); ++i)
    if (!(h_list[i + 1] < h_list[i]))
      throw InvalidInput("convergence_order: h_list must be strictly decreasing");

  // Reference: dispersion root nearest the seed.
  rootfinding::ScalarFn disp;
  if (geometry.truncated())
    disp = [=](Complex w) {
      return waveguide::dispersion_truncated(w, mode, geometry, params);
    };
  else
    disp = [=](Complex w) {
      return waveguide::dispersion_full(w, mode, geometry, params);
    };
  const auto roots = rootfinding::isolate_roots(disp, region, tol, 1024);
  if (roots.empty())
    throw NoReferenceRoot("convergence_order: no dispersion root in region");
  Complex reference = roots.front().value;
  for (const auto& r : roots)
    if (std::abs(r.value - seed) < std::abs(reference - seed))
      reference = r.value;

  ConvergenceResult result;
  result.reference = reference;
  const bool uniform = params.alpha_e == params.theta_e_inf_sq &&
                       params.alpha_m == params.theta_m_inf_sq;
  for (const double h : h_list) {
    const int n_target = static_cast<int>(std::round(geometry.X / h));
    const FdGrid grid = uniform
                            ? FdGrid::uniform(geometry.X, n_target)
                            : FdGrid::aligned(geometry.X, geometry.slab_end,
                                              n_target);
    // Local refinement around the reference is enough to measure the gap.
    rootfinding::SearchRegion local;
    local.re_min = reference.real() - 0.05;
    local.re_max = reference.real() + 0.05;
    local.im_min = reference.imag() - 0.05;
    local.im_max = reference.imag() + 0.05;
    local.boundary_samples = region.boundary_samples;
    local.max_depth = region.max_depth;
    const auto fd_roots =
        oracle_spectrum(mode, geometry, grid, params, local, tol);
    if (fd_roots.empty())
      throw NoReferenceRoot("convergence_order: FD root not found near reference");
    Complex fd_root = fd_roots.front().value;
    for (const auto& r : fd_roots)
      if (std::abs(r.value - reference) < std::abs(fd_root - reference))
        fd_root = r.value;
    result.samples.push_back({grid.h, fd_root, std::abs(fd_root - reference)});
  }

  // Least-squares slope of log(gap) vs log(h).
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(result.samples.size());
  for (const auto& s : result.samples) {
    const double x = std::log(s.h);
    const double y = std::log(std::max(s.gap, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  result.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return result;
}

}  // namespace drude::fd
