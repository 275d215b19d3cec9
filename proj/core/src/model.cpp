// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#include "drude/model.hpp"

#include <algorithm>
#include <cmath>

#include "drude/complexfn.hpp"

namespace drude::model {

namespace {

constexpr double kPoleTol = 1e-12;
constexpr double kSigmaTol = 1e-14;
constexpr double kCurveMergeTol = 1e-10;
constexpr double kPointMergeTol = 1e-12;

void merge_close_sorted(std::vector<Complex>& pts, double tol) {
  std::vector<Complex> merged;
  for (const Complex& p : pts) {
    if (!merged.empty() && std::abs(p - merged.back()) <= tol) continue;
    merged.push_back(p);
  }
  pts = std::move(merged);
}

void sort_lex(std::vector<Complex>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

double we_threshold_sq(const WaveguideGeometry& g) {
  const double L = std::max(g.L2, g.L3);
  return (M_PI / L) * (M_PI / L);
}

}  // namespace

Complex theta_pencil(Complex omega, double gamma, double theta_sq) {
  return omega * omega + Complex(0.0, gamma) * omega - theta_sq;
}

Complex f_eval(Complex omega, const MaterialParams& params, Coefficients site) {
  const Complex pe(0.0, -params.gamma_e);
  const Complex pm(0.0, -params.gamma_m);
  if (std::abs(omega - pe) < kPoleTol || std::abs(omega - pm) < kPoleTol)
    throw PoleAtOmega("f_eval: omega within 1e-12 of a pole");
  const bool slab = site == Coefficients::Slab;
  const double te = slab ? params.alpha_e : params.theta_e_inf_sq;
  const double tm = slab ? params.alpha_m : params.theta_m_inf_sq;
  return theta_pencil(omega, params.gamma_e, te) *
         theta_pencil(omega, params.gamma_m, tm) /
         ((omega - pe) * (omega - pm));
}

RegionTag classify_sigma(Complex omega, double gamma_m) {
  const double product = omega.real() * (omega.imag() + 0.5 * gamma_m);
  if (std::abs(product) <= kSigmaTol) return RegionTag::Excluded;
  return product > 0.0 ? RegionTag::Sigma1 : RegionTag::Sigma2;
}

bool strip_contains(Complex omega, const MaterialParams& params) {
  return omega.imag() <= 0.0 && omega.imag() >= -params.gamma_max();
}

bool enc_contains(Complex omega, const MaterialParams& params) {
  const double depth = -omega.imag();
  if (depth < 0.0) return false;
  if (omega.real() == 0.0) return depth <= params.gamma_max();
  const double k = params.gamma_e * params.theta_e_sup_sq() +
                   params.gamma_m * params.theta_m_sup_sq();
  const double bound =
      std::min(params.gamma_max(), k / (omega.real() * omega.real()));
  return depth <= bound;
}

bool gamma_set_contains(Complex omega, const MaterialParams& params) {
  if (omega.real() == 0.0) {
    const double y = omega.imag();
    return y > -params.gamma_e && y < 0.0 && y != -params.gamma_m;
  }
  if (omega.imag() < -0.5 * (params.gamma_e + params.gamma_m)) return false;
  return enc_contains(omega, params);
}

rootfinding::Polynomial essential_quartic(const MaterialParams& params, double t) {
  const double ge = params.gamma_e, gm = params.gamma_m;
  const double a = params.theta_e_inf_sq, b = params.theta_m_inf_sq;
  std::vector<Complex> c(5);
  c[4] = 1.0;
  c[3] = Complex(0.0, ge + gm);
  c[2] = -(ge * gm) - a - b - t;
  c[1] = Complex(0.0, -(ge * b + gm * a) - t * (ge + gm));
  c[0] = a * b + t * ge * gm;
  return rootfinding::Polynomial(std::move(c));
}

std::vector<Complex> essential_curve_s_infty(const MaterialParams& params,
                                             double t_min, double t_max,
                                             int n_samples,
                                             const WaveguideGeometry* geometry) {
  if (n_samples < 2) throw InvalidInput("essential_curve_s_infty: n_samples must be >= 2");
  if (!(t_min <= t_max)) throw InvalidInput("essential_curve_s_infty: t_min > t_max");
  if (geometry && t_min < we_threshold_sq(*geometry) - 1e-12)
    throw InvalidInput("essential_curve_s_infty: t_min below the transverse threshold");

  // A quartic root that merely reproduces a pole is kept only when the
  // numerator does not vanish there; a vanishing numerator means the linear
  // factor cancels and the root is spurious.
  const Complex pole_e(0.0, -params.gamma_e);
  const Complex pole_m(0.0, -params.gamma_m);
  auto numerator_at = [&](Complex w) {
    return theta_pencil(w, params.gamma_e, params.theta_e_inf_sq) *
           theta_pencil(w, params.gamma_m, params.theta_m_inf_sq);
  };
  const double num_scale =
      1.0 + std::abs(numerator_at(Complex(0.0, -params.gamma_max())));

  std::vector<Complex> pts;
  for (int i = 0; i < n_samples; ++i) {
    const double t =
        t_min + (t_max - t_min) * static_cast<double>(i) / (n_samples - 1);
    const auto roots = rootfinding::poly_roots(essential_quartic(params, t));
    for (const Complex& r : roots) {
      bool spurious = false;
      for (const Complex& p : {pole_e, pole_m}) {
        if (std::abs(r - p) < 1e-8 && std::abs(numerator_at(p)) <= 1e-10 * num_scale)
          spurious = true;
      }
      if (!spurious) pts.push_back(r);
    }
  }
  sort_lex(pts);
  merge_close_sorted(pts, kCurveMergeTol);
  return pts;
}

std::vector<Complex> sigma_e_G_points(const MaterialParams& params) {
  const double ge = params.gamma_e;
  const Complex half_pole(0.0, -0.5 * ge);
  std::vector<Complex> pts{Complex(0.0, 0.0), Complex(0.0, -ge)};
  for (const double arg : {params.alpha_e - 0.25 * ge * ge,
                           0.5 * params.alpha_e - 0.25 * ge * ge}) {
    const Complex s = sqrt_principal(Complex(arg, 0.0));
    pts.push_back(half_pole + s);
    pts.push_back(half_pole - s);
  }
  sort_lex(pts);
  merge_close_sorted(pts, kPointMergeTol);
  return pts;
}

std::vector<Complex> sigma_e_G_curve(double theta_sq_min, double theta_sq_max,
                                     double gamma_e, int n_samples) {
  if (theta_sq_min < 0.0 || !(theta_sq_min <= theta_sq_max))
    throw InvalidInput("sigma_e_G_curve: interval must lie in [0, inf)");
  if (n_samples < 1) throw InvalidInput("sigma_e_G_curve: n_samples must be >= 1");
  const Complex half_pole(0.0, -0.5 * gamma_e);
  std::vector<Complex> plus, minus;
  plus.reserve(static_cast<size_t>(n_samples));
  minus.reserve(static_cast<size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double t = n_samples == 1
                         ? theta_sq_min
                         : theta_sq_min + (theta_sq_max - theta_sq_min) *
                                              static_cast<double>(i) / (n_samples - 1);
    const Complex s = sqrt_principal(Complex(t - 0.25 * gamma_e * gamma_e, 0.0));
    plus.push_back(half_pole + s);
    minus.push_back(half_pole - s);
  }
  plus.insert(plus.end(), minus.begin(), minus.end());
  return plus;
}

HalfLinePair we_s_infty(const WaveguideGeometry& geometry,
                        const MaterialParams& params) {
  if (!params.vacuum_at_infinity())
    throw UnsupportedParams(
        "we_s_infty: half-line form requires vacuum at infinity; use "
        "we_s_infty_contains instead");
  return HalfLinePair{M_PI / std::max(geometry.L2, geometry.L3)};
}

bool we_s_infty_contains(Complex omega, const WaveguideGeometry& geometry,
                         const MaterialParams& params, double tol) {
  Complex f;
  try {
    f = f_eval(omega, params, Coefficients::AtInfinity);
  } catch (const PoleAtOmega&) {
    return false;
  }
  return std::abs(f.imag()) <= tol && f.real() >= we_threshold_sq(geometry) - tol;
}

Complex asymptotic_root(double t, AsymptoticBranch branch,
                        const MaterialParams& params) {
  if (!(t > 0.0)) throw InvalidInput("asymptotic_root: t must be positive");
  const double ge = params.gamma_e, gm = params.gamma_m;
  const double a = params.theta_e_inf_sq, b = params.theta_m_inf_sq;
  switch (branch) {
    case AsymptoticBranch::NearPoleE:
    case AsymptoticBranch::NearPoleM: {
      if (ge == gm)
        throw DegenerateParams("asymptotic_root: gamma_e == gamma_m");
      const bool e_branch = branch == AsymptoticBranch::NearPoleE;
      const double gx = e_branch ? ge : gm;
      const double gy = e_branch ? gm : ge;
      const double tx = e_branch ? a : b;
      const double ty = e_branch ? b : a;
      const double c = tx * (-gx + tx * ty / (gy - gx));
      return Complex(0.0, -gx) - Complex(0.0, c / t);
    }
    case AsymptoticBranch::LargeRealPlus:
    case AsymptoticBranch::LargeRealMinus: {
      const double sign = branch == AsymptoticBranch::LargeRealPlus ? 1.0 : -1.0;
      return Complex(sign * std::sqrt(t), large_real_imag_candidates(t, params).second);
    }
  }
  throw InvalidInput("asymptotic_root: unknown branch");
}

std::pair<double, double> large_real_imag_candidates(double t,
                                                     const MaterialParams& params) {
  const double k = params.theta_e_inf_sq * params.gamma_e +
                   params.theta_m_inf_sq * params.gamma_m;
  return {-k / t, -k / (2.0 * t)};
}

Complex reflect(Complex omega) { return {-omega.real(), omega.imag()}; }

}  // namespace drude::model
