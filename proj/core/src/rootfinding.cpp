// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#include "drude/rootfinding.hpp"

#include <algorithm>
#include <cmath>

namespace drude::rootfinding {

namespace {

constexpr double kTrimThreshold = 1e-300;
constexpr int kMaxPolyDegree = 16;
constexpr int kAberthMaxSweeps = 500;
constexpr int kPhaseSampleBudget = 1 << 16;
constexpr double kBoundaryZeroRatio = 1e-13;
constexpr double kWindingDefect = 0.25;
constexpr double kIsolationDiameter = 1e-3;
constexpr int kNewtonMaxIters = 50;

bool lex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> c) : coeffs(std::move(c)) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= kTrimThreshold)
    coeffs.pop_back();
  if (coeffs.empty() || std::abs(coeffs.back()) <= kTrimThreshold)
    throw InvalidInput("Polynomial: all coefficients vanish");
  if (degree() > kMaxPolyDegree)
    throw InvalidInput("Polynomial: degree exceeds 16");
}

Complex Polynomial::eval(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex Polynomial::eval_derivative(Complex z) const {
  Complex acc = 0.0;
  for (int k = degree(); k >= 1; --k)
    acc = acc * z + static_cast<double>(k) * coeffs[static_cast<size_t>(k)];
  return acc;
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1.0};
  for (const Complex& r : roots) {
    c.push_back(0.0);
    for (size_t k = c.size() - 1; k >= 1; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

std::vector<Complex> poly_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw InvalidInput("poly_roots: degree must be >= 1");
  if (n == 1) return {-p.coeffs[0] / p.coeffs[1]};

  double coeff_sup = 0.0;
  for (const Complex& c : p.coeffs) coeff_sup = std::max(coeff_sup, std::abs(c));

  // Cauchy bound for the initial circle, perturbed angularly so the start
  // configuration shares no symmetry with the root set.
  double radius = 0.0;
  const double lead = std::abs(p.coeffs.back());
  for (int k = 0; k < n; ++k)
    radius = std::max(radius, std::abs(p.coeffs[static_cast<size_t>(k)]) / lead);
  radius = 1.0 + radius;

  std::vector<Complex> z(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double phi = 2.0 * M_PI * (i + 0.25) / n + 0.43;
    z[static_cast<size_t>(i)] = 0.5 * radius * Complex(std::cos(phi), std::sin(phi));
  }

  for (int sweep = 0; sweep < kAberthMaxSweeps; ++sweep) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex zi = z[static_cast<size_t>(i)];
      const Complex pv = p.eval(zi);
      if (pv == Complex(0.0)) continue;
      Complex pd = p.eval_derivative(zi);
      if (pd == Complex(0.0)) pd = Complex(1e-30);
      const Complex newton = pv / pd;
      Complex repel = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex d = zi - z[static_cast<size_t>(j)];
        if (d == Complex(0.0)) d = Complex(1e-30);
        repel += 1.0 / d;
      }
      const Complex denom = 1.0 - newton * repel;
      const Complex step = denom == Complex(0.0) ? newton : newton / denom;
      z[static_cast<size_t>(i)] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zi)));
    }
    if (max_step < 1e-15) break;
    if (sweep == kAberthMaxSweeps - 1)
      throw NoConvergence("poly_roots: Aberth iteration did not settle");
  }

  for (const Complex& zi : z) {
    const double bound =
        1e-10 * std::pow(std::max(1.0, std::abs(zi)), n) * coeff_sup;
    if (std::abs(p.eval(zi)) > bound)
      throw NoConvergence("poly_roots: residual above certification bound");
  }

  std::sort(z.begin(), z.end(), lex_less);
  return z;
}

void SearchRegion::validate() const {
  if (!(re_min < re_max) || !(im_min < im_max))
    throw InvalidInput("SearchRegion: empty or inverted rectangle");
  if (max_depth < 1) throw InvalidInput("SearchRegion: max_depth must be >= 1");
  if (boundary_samples < 16)
    throw InvalidInput("SearchRegion: boundary_samples must be >= 16");
}

double SearchRegion::diameter() const { return std::hypot(width(), height()); }

Complex SearchRegion::center() const {
  return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)};
}

bool SearchRegion::contains(Complex z) const {
  return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min &&
         z.imag() <= im_max;
}

SearchRegion SearchRegion::grown(double amount) const {
  SearchRegion g = *this;
  g.re_min -= amount;
  g.re_max += amount;
  g.im_min -= amount;
  g.im_max += amount;
  return g;
}

namespace {

// Perimeter parametrization: t in [0,1) runs counterclockwise from the
// bottom-left corner.
Complex perimeter_point(const SearchRegion& r, double t) {
  const double s = 4.0 * t;
  if (s < 1.0) return {r.re_min + s * r.width(), r.im_min};
  if (s < 2.0) return {r.re_max, r.im_min + (s - 1.0) * r.height()};
  if (s < 3.0) return {r.re_max - (s - 2.0) * r.width(), r.im_max};
  return {r.re_min, r.im_max - (s - 3.0) * r.height()};
}

struct BoundarySample {
  double t;
  Complex value;
};

}  // namespace

int winding_count(const ScalarFn& F, const SearchRegion& region) {
  region.validate();

  const int n0 = std::max(16, region.boundary_samples);
  std::vector<BoundarySample> samples;
  samples.reserve(static_cast<size_t>(n0) + 1);

  double max_abs = 0.0;
  double min_abs = std::numeric_limits<double>::infinity();
  int evals = 0;

  auto eval_at = [&](double t) {
    const Complex v = F(perimeter_point(region, t));
    ++evals;
    const double a = std::abs(v);
    if (!std::isfinite(a))
      throw PhaseUnresolved("winding_count: non-finite boundary value");
    max_abs = std::max(max_abs, a);
    min_abs = std::min(min_abs, a);
    return v;
  };

  for (int i = 0; i < n0; ++i) {
    const double t = static_cast<double>(i) / n0;
    samples.push_back({t, eval_at(t)});
  }
  samples.push_back({1.0, samples.front().value});

  if (!(min_abs > kBoundaryZeroRatio * max_abs))
    throw BoundaryZero("winding_count: boundary passes too close to a zero");

  // Phase jump of a segment, refining until every jump is below pi/2.
  double total = 0.0;
  std::function<double(double, Complex, double, Complex)> segment_phase =
      [&](double t0, Complex v0, double t1, Complex v1) -> double {
    const double d = std::remainder(std::arg(v1) - std::arg(v0), 2.0 * M_PI);
    if (std::abs(d) <= 0.5 * M_PI) return d;
    if (evals > kPhaseSampleBudget)
      throw PhaseUnresolved("winding_count: sample budget exhausted");
    const double tm = 0.5 * (t0 + t1);
    if (tm == t0 || tm == t1)
      throw PhaseUnresolved("winding_count: phase jump at sampling resolution");
    const Complex vm = eval_at(tm);
    if (!(std::abs(vm) > kBoundaryZeroRatio * max_abs))
      throw BoundaryZero("winding_count: boundary passes too close to a zero");
    return segment_phase(t0, v0, tm, vm) + segment_phase(tm, vm, t1, v1);
  };

  for (size_t i = 0; i + 1 < samples.size(); ++i)
    total += segment_phase(samples[i].t, samples[i].value, samples[i + 1].t,
                           samples[i + 1].value);

  const double turns = total / (2.0 * M_PI);
  const int count = static_cast<int>(std::lround(turns));
  if (std::abs(turns - count) >= kWindingDefect)
    throw PhaseUnresolved("winding_count: rounding defect exceeds 0.25");
  return count;
}

namespace {

int winding_with_retries(const ScalarFn& F, SearchRegion r) {
  for (int attempt = 0;; ++attempt) {
    try {
      return winding_count(F, r);
    } catch (const Error&) {
      if (attempt >= 3) throw;
      r = r.grown(1e-6 * r.diameter());
    }
  }
}

CertifiedRoot polish(const ScalarFn& F, const SearchRegion& box,
                     double tol_residual) {
  Complex z = box.center();
  Complex best = z;
  double best_abs = std::abs(F(z));
  for (int it = 0; it < kNewtonMaxIters; ++it) {
    const double h = 1e-7 * (1.0 + std::abs(z));
    const Complex fz = F(z);
    const double az = std::abs(fz);
    if (az < best_abs) {
      best_abs = az;
      best = z;
    }
    if (az == 0.0) break;
    const Complex d = (F(z + h) - F(z - h)) / (2.0 * h);
    if (d == Complex(0.0)) break;
    const Complex step = fz / d;
    z -= step;
    if (std::abs(step) < 1e-14 * (1.0 + std::abs(z))) {
      const double fa = std::abs(F(z));
      if (fa < best_abs) {
        best_abs = fa;
        best = z;
      }
      break;
    }
  }
  if (!(best_abs <= tol_residual))
    throw NoConvergence("isolate_roots: Newton polish missed the residual tolerance");
  // The certificate ties the root to its isolating rectangle.
  if (!box.grown(0.1 * box.diameter()).contains(best))
    throw NoConvergence("isolate_roots: polished root escaped its rectangle");
  return {best, best_abs, 1, box};
}

void hunt(const ScalarFn& F, const SearchRegion& r, double tol_residual,
          int max_roots, int depth, std::vector<CertifiedRoot>& out) {
  const int count = winding_with_retries(F, r);
  if (count == 0) return;
  if (count == 1 && r.diameter() < kIsolationDiameter) {
    if (static_cast<int>(out.size()) >= max_roots)
      throw NoConvergence("isolate_roots: more roots than max_roots");
    out.push_back(polish(F, r, tol_residual));
    return;
  }
  if (depth >= r.max_depth)
    throw NoConvergence("isolate_roots: subdivision depth exhausted");
  const double rm = 0.5 * (r.re_min + r.re_max);
  const double im = 0.5 * (r.im_min + r.im_max);
  SearchRegion q = r;
  const double quads[4][4] = {{r.re_min, rm, r.im_min, im},
                              {rm, r.re_max, r.im_min, im},
                              {r.re_min, rm, im, r.im_max},
                              {rm, r.re_max, im, r.im_max}};
  for (const auto& qb : quads) {
    q.re_min = qb[0];
    q.re_max = qb[1];
    q.im_min = qb[2];
    q.im_max = qb[3];
    hunt(F, q, tol_residual, max_roots, depth + 1, out);
  }
}

}  // namespace

std::vector<CertifiedRoot> isolate_roots(const ScalarFn& F,
                                         const SearchRegion& region,
                                         double tol_residual, int max_roots) {
  region.validate();
  if (max_roots < 1) throw InvalidInput("isolate_roots: max_roots must be >= 1");
  std::vector<CertifiedRoot> out;
  hunt(F, region, tol_residual, max_roots, 0, out);
  std::sort(out.begin(), out.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
    return lex_less(a.value, b.value);
  });
  return out;
}

}  // namespace drude::rootfinding
