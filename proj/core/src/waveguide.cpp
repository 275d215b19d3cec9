// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#include "drude/waveguide.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>

#include "drude/complexfn.hpp"
#include "drude/model.hpp"

namespace drude::waveguide {

namespace {

constexpr double kBranchCutTol = 1e-10;
constexpr double kPoleDiskRadius = 0.05;
constexpr double kPoleExclusion = 1e-6;
constexpr double kDuplicateTol = 1e-9;
constexpr double kScaleCap = 600.0;  // exp cap for the truncated dispersion
constexpr double kLinkThreshold = 0.5;
constexpr double kLinkTol = 1e-3;

void check_branch_cut(Complex omega, double kappa) {
  const double off_axis = std::abs(omega.imag());
  const double past_branch_point = std::max(0.0, kappa - std::abs(omega.real()));
  if (std::hypot(off_axis, past_branch_point) < kBranchCutTol)
    throw BranchCut("dispersion_full: omega within 1e-10 of the branch cut");
}

}  // namespace

double cutoff(ModeIndex mode, const WaveguideGeometry& geometry) {
  mode.validate();
  const double a = M_PI * mode.n2 / geometry.L2;
  const double b = M_PI * mode.n3 / geometry.L3;
  return a * a + b * b;
}

Complex lambda2_sq(Complex omega, ModeIndex mode, const WaveguideGeometry& geometry) {
  return cutoff(mode, geometry) - omega * omega;
}

Complex lambda1_sq(Complex omega, ModeIndex mode, const WaveguideGeometry& geometry,
                   const MaterialParams& params) {
  return cutoff(mode, geometry) -
         model::f_eval(omega, params, model::Coefficients::Slab);
}

Complex dispersion_full(Complex omega, ModeIndex mode,
                        const WaveguideGeometry& geometry,
                        const MaterialParams& params) {
  const double kappa = std::sqrt(cutoff(mode, geometry));
  check_branch_cut(omega, kappa);
  const Complex u1 = lambda1_sq(omega, mode, geometry, params);
  const Complex l2 = sqrt_principal(lambda2_sq(omega, mode, geometry));
  return cosh_sqrt(u1) + l2 * sinhc_sqrt(u1);
}

Complex dispersion_full_raw(Complex omega, ModeIndex mode,
                            const WaveguideGeometry& geometry,
                            const MaterialParams& params) {
  const Complex u1 = lambda1_sq(omega, mode, geometry, params);
  const Complex l2 = sqrt_principal(lambda2_sq(omega, mode, geometry));
  return coth_sqrt_scaled(u1) + l2;
}

Complex dispersion_truncated(Complex omega, ModeIndex mode,
                             const WaveguideGeometry& geometry,
                             const MaterialParams& params) {
  if (!geometry.truncated())
    throw InvalidInput("dispersion_truncated: X must be finite");
  const double span = geometry.X - geometry.slab_end;
  const Complex l1 = sqrt_principal(lambda1_sq(omega, mode, geometry, params));
  const Complex z = sqrt_principal(lambda2_sq(omega, mode, geometry)) * span;
  const double sigma = l1.real() + z.real();
  const Complex scaled = cosh_scaled(l1) * span * sinhc_scaled(z) +
                         cosh_scaled(z) * sinhc_scaled(l1);
  return scaled * std::exp(std::min(sigma, kScaleCap));
}

Complex dispersion_truncated_raw(Complex omega, ModeIndex mode,
                                 const WaveguideGeometry& geometry,
                                 const MaterialParams& params) {
  if (!geometry.truncated())
    throw InvalidInput("dispersion_truncated_raw: X must be finite");
  const double span = geometry.X - geometry.slab_end;
  const Complex u1 = lambda1_sq(omega, mode, geometry, params);
  const Complex u2 = lambda2_sq(omega, mode, geometry);
  return coth_sqrt_scaled(u1) + coth_sqrt_scaled(u2 * span * span) / span;
}

const char* to_string(PointClass cls) {
  switch (cls) {
    case PointClass::TrueEig: return "true_eig";
    case PointClass::TruncatedEig: return "truncated_eig";
    case PointClass::PollutionCandidate: return "pollution_candidate";
    default: return "converged";
  }
}

const char* to_string(LimitClass cls) {
  switch (cls) {
    case LimitClass::ConvergesToTrueEig: return "converges_to_true_eig";
    case LimitClass::AccumulatesOnWe: return "accumulates_on_we";
    default: return "undecided";
  }
}

namespace {

// Carve the pole squares (half-width kPoleDiskRadius) out of the region so
// no hunt rectangle encloses a pole of the slab symbol.
std::vector<rootfinding::SearchRegion> subtract_poles(
    const rootfinding::SearchRegion& region, const MaterialParams& params) {
  std::vector<rootfinding::SearchRegion> rects{region};
  for (const double g : {params.gamma_e, params.gamma_m}) {
    const double px_lo = -kPoleDiskRadius, px_hi = kPoleDiskRadius;
    const double py_lo = -g - kPoleDiskRadius, py_hi = -g + kPoleDiskRadius;
    std::vector<rootfinding::SearchRegion> next;
    for (const auto& r : rects) {
      const bool overlaps = px_lo < r.re_max && px_hi > r.re_min &&
                            py_lo < r.im_max && py_hi > r.im_min;
      if (!overlaps) {
        next.push_back(r);
        continue;
      }
      auto emit = [&](double a, double b, double c, double d) {
        if (a < b && c < d) {
          rootfinding::SearchRegion s = r;
          s.re_min = a;
          s.re_max = b;
          s.im_min = c;
          s.im_max = d;
          next.push_back(s);
        }
      };
      const double cx_lo = std::max(px_lo, r.re_min);
      const double cx_hi = std::min(px_hi, r.re_max);
      emit(r.re_min, cx_lo, r.im_min, r.im_max);              // left band
      emit(cx_hi, r.re_max, r.im_min, r.im_max);              // right band
      emit(cx_lo, cx_hi, r.im_min, std::max(py_lo, r.im_min));  // below
      emit(cx_lo, cx_hi, std::min(py_hi, r.im_max), r.im_max);  // above
    }
    rects = std::move(next);
  }
  return rects;
}

SpectrumPoint make_point(ModeIndex mode, Complex omega, double raw_residual,
                         const MaterialParams& params, bool truncated) {
  SpectrumPoint p;
  p.mode = mode;
  p.omega = omega;
  p.residual = raw_residual;
  p.winding = 1;
  p.cls = truncated ? PointClass::TruncatedEig : PointClass::TrueEig;
  p.in_strip = model::strip_contains(omega, params);
  p.in_enc = model::enc_contains(omega, params);
  p.in_gamma = model::gamma_set_contains(omega, params);
  p.sigma = model::classify_sigma(omega, params.gamma_m);
  return p;
}

SpectrumResult sweep_mode(ModeIndex mode, const WaveguideGeometry& geometry,
                          const MaterialParams& params,
                          const rootfinding::SearchRegion& region, double tol) {
  SpectrumResult result;
  const bool truncated = geometry.truncated();
  rootfinding::ScalarFn fn, raw;
  if (truncated) {
    fn = [=](Complex w) { return dispersion_truncated(w, mode, geometry, params); };
    raw = [=](Complex w) { return dispersion_truncated_raw(w, mode, geometry, params); };
  } else {
    fn = [=](Complex w) { return dispersion_full(w, mode, geometry, params); };
    raw = [=](Complex w) { return dispersion_full_raw(w, mode, geometry, params); };
  }

  std::vector<SpectrumPoint> pts;
  for (const auto& rect : subtract_poles(region, params)) {
    std::vector<rootfinding::CertifiedRoot> roots;
    try {
      roots = rootfinding::isolate_roots(fn, rect, tol, 4096);
    } catch (const Error& e) {
      result.warnings.push_back({mode, e.what()});
      continue;
    }
    for (const auto& root : roots) {
      const Complex w = root.value;
      if (std::abs(w - Complex(0.0, -params.gamma_e)) < kPoleExclusion ||
          std::abs(w - Complex(0.0, -params.gamma_m)) < kPoleExclusion)
        continue;
      double raw_res;
      try {
        raw_res = std::abs(raw(w));
      } catch (const Error&) {
        continue;
      }
      if (raw_res > 10.0 * tol) continue;  // spurious regularization zero
      pts.push_back(make_point(mode, w, raw_res, params, truncated));
    }
  }

  std::sort(pts.begin(), pts.end(), [](const SpectrumPoint& a, const SpectrumPoint& b) {
    if (a.omega.real() != b.omega.real()) return a.omega.real() < b.omega.real();
    return a.omega.imag() < b.omega.imag();
  });
  for (const auto& p : pts) {
    if (!result.points.empty() &&
        std::abs(p.omega - result.points.back().omega) <= kDuplicateTol)
      continue;
    result.points.push_back(p);
  }
  return result;
}

template <typename Task>
std::vector<SpectrumResult> run_tasks(const std::vector<Task>& tasks, int threads) {
  std::vector<SpectrumResult> results(tasks.size());
  if (threads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::vector<std::future<SpectrumResult>> futures(tasks.size());
  size_t next = 0;
  while (next < tasks.size()) {
    const size_t batch = std::min<size_t>(static_cast<size_t>(threads),
                                          tasks.size() - next);
    for (size_t k = 0; k < batch; ++k)
      futures[next + k] = std::async(std::launch::async, tasks[next + k]);
    for (size_t k = 0; k < batch; ++k) results[next + k] = futures[next + k].get();
    next += batch;
  }
  return results;
}

}  // namespace

SpectrumResult spectrum(const WaveguideGeometry& geometry,
                        const MaterialParams& params,
                        const rootfinding::SearchRegion& region, int n_max,
                        double tol, int threads) {
  geometry.validate();
  params.validate();
  region.validate();
  if (n_max < 1) throw InvalidInput("spectrum: n_max must be >= 1");

  std::vector<std::function<SpectrumResult()>> tasks;
  for (int n2 = 1; n2 <= n_max; ++n2)
    for (int n3 = 1; n3 <= n_max; ++n3)
      tasks.push_back([=] {
        return sweep_mode(ModeIndex{n2, n3}, geometry, params, region, tol);
      });

  SpectrumResult merged;
  for (auto& r : run_tasks(tasks, threads)) {
    merged.points.insert(merged.points.end(), r.points.begin(), r.points.end());
    merged.warnings.insert(merged.warnings.end(), r.warnings.begin(),
                           r.warnings.end());
  }
  std::sort(merged.points.begin(), merged.points.end(),
            [](const SpectrumPoint& a, const SpectrumPoint& b) {
              if (a.mode.n2 != b.mode.n2) return a.mode.n2 < b.mode.n2;
              if (a.mode.n3 != b.mode.n3) return a.mode.n3 < b.mode.n3;
              if (a.omega.real() != b.omega.real())
                return a.omega.real() < b.omega.real();
              return a.omega.imag() < b.omega.imag();
            });
  return merged;
}

SpectrumResult reference_spectrum(const WaveguideGeometry& base,
                                  const MaterialParams& params,
                                  const rootfinding::SearchRegion& region,
                                  int n_max, double tol, int threads) {
  WaveguideGeometry full = base;
  full.X = std::numeric_limits<double>::infinity();
  return spectrum(full, params, region, n_max, tol, threads);
}

namespace {

bool weakly_decreasing(const std::vector<double>& v, double slack) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] > v[i] * 1.05 + slack) return false;
  return true;
}

}  // namespace

std::vector<TrajectoryReport> truncation_study(
    const WaveguideGeometry& base, const MaterialParams& params,
    const std::vector<double>& X_list, const rootfinding::SearchRegion& region,
    int n_max, double tol, int threads) {
  if (X_list.size() < 3)
    throw InvalidInput("truncation_study: need at least 3 truncation lengths");
  for (size_t i = 0; i + 1 < X_list.size(); ++i)
    if (!(X_list[i] < X_list[i + 1]))
      throw InvalidInput("truncation_study: X_list must be strictly increasing");

  const SpectrumResult reference =
      reference_spectrum(base, params, region, n_max, tol, threads);

  std::vector<SpectrumResult> per_x;
  per_x.reserve(X_list.size());
  for (const double x : X_list) {
    WaveguideGeometry g = base;
    g.X = x;
    per_x.push_back(spectrum(g, params, region, n_max, tol, threads));
  }

  const bool have_we = params.vacuum_at_infinity();
  const HalfLinePair we =
      have_we ? model::we_s_infty(base, params) : HalfLinePair{0.0};

  auto dist_to_true = [&](const SpectrumPoint& p, Complex* target) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : reference.points) {
      if (!(q.mode == p.mode)) continue;
      const double d = std::abs(q.omega - p.omega);
      if (d < best) {
        best = d;
        if (target) *target = q.omega;
      }
    }
    return best;
  };

  // Seed one chain per point at the first X, then extend greedily by
  // nearest neighbour within the same mode.
  std::vector<TrajectoryReport> chains;
  int next_id = 0;
  for (const auto& p : per_x.front().points) {
    TrajectoryReport c;
    c.chain_id = next_id++;
    c.mode = p.mode;
    Complex tgt;
    const double dt = dist_to_true(p, &tgt);
    c.samples.push_back({X_list.front(), p.omega,
                         have_we ? we.distance_to(p.omega) : 0.0, dt});
    chains.push_back(std::move(c));
  }

  for (size_t k = 1; k < X_list.size(); ++k) {
    std::vector<const SpectrumPoint*> pool;
    for (const auto& p : per_x[k].points) pool.push_back(&p);
    std::vector<bool> claimed(pool.size(), false);

    struct Link {
      double dist;
      size_t chain;
      size_t point;
    };
    std::vector<Link> candidates;
    for (size_t ci = 0; ci < chains.size(); ++ci) {
      auto& c = chains[ci];
      if (c.broken || c.samples.size() != k) continue;
      for (size_t pi = 0; pi < pool.size(); ++pi) {
        if (!(pool[pi]->mode == c.mode)) continue;
        const double d = std::abs(pool[pi]->omega - c.samples.back().omega);
        if (d < kLinkThreshold) candidates.push_back({d, ci, pi});
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Link& a, const Link& b) { return a.dist < b.dist; });
    std::vector<bool> extended(chains.size(), false);
    for (const Link& l : candidates) {
      if (extended[l.chain] || claimed[l.point]) continue;
      extended[l.chain] = true;
      claimed[l.point] = true;
      const SpectrumPoint& p = *pool[l.point];
      chains[l.chain].samples.push_back(
          {X_list[k], p.omega, have_we ? we.distance_to(p.omega) : 0.0,
           dist_to_true(p, nullptr)});
    }
    for (size_t ci = 0; ci < chains.size(); ++ci)
      if (!chains[ci].broken && chains[ci].samples.size() == k && !extended[ci])
        chains[ci].broken = true;
    for (size_t pi = 0; pi < pool.size(); ++pi) {
      if (claimed[pi]) continue;
      TrajectoryReport c;
      c.chain_id = next_id++;
      c.mode = pool[pi]->mode;
      c.samples.push_back({X_list[k], pool[pi]->omega,
                           have_we ? we.distance_to(pool[pi]->omega) : 0.0,
                           dist_to_true(*pool[pi], nullptr)});
      // A chain born after the first X cannot span the whole list.
      c.broken = k > 0;
      chains.push_back(std::move(c));
    }
  }

  for (auto& c : chains) {
    if (c.samples.size() != X_list.size()) {
      c.limit_class = LimitClass::Undecided;
      continue;
    }
    std::vector<double> d_true, d_we, im_abs;
    for (const auto& s : c.samples) {
      d_true.push_back(s.dist_to_true);
      d_we.push_back(s.dist_to_we);
      im_abs.push_back(std::abs(s.omega.imag()));
    }
    if (weakly_decreasing(d_true, 1e-10) && d_true.back() < 10.0 * kLinkTol) {
      c.limit_class = LimitClass::ConvergesToTrueEig;
      Complex tgt;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : reference.points) {
        if (!(q.mode == c.mode)) continue;
        const double d = std::abs(q.omega - c.samples.back().omega);
        if (d < best) {
          best = d;
          tgt = q.omega;
        }
      }
      c.limit_target = tgt;
      // per-sample distances re-measured against the settled target
      for (auto& s : c.samples) s.dist_to_true = std::abs(s.omega - tgt);
    } else if (have_we && weakly_decreasing(im_abs, 1e-12) &&
               weakly_decreasing(d_we, 1e-12)) {
      c.limit_class = LimitClass::AccumulatesOnWe;
    } else {
      c.limit_class = LimitClass::Undecided;
    }
  }

  std::sort(chains.begin(), chains.end(),
            [](const TrajectoryReport& a, const TrajectoryReport& b) {
              return a.chain_id < b.chain_id;
            });
  return chains;
}

}  // namespace drude::waveguide
