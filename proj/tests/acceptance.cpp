// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Run with no arguments for all criteria or with a number for one of them.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "drude/complexfn.hpp"
#include "drude/fd_oracle.hpp"
#include "drude/model.hpp"
#include "drude/rootfinding.hpp"
#include "drude/waveguide.hpp"

using namespace drude;

namespace {

struct Checker {
  std::ostringstream failures;
  int count = 0;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++count;
      failures << "\n    - " << what;
    }
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const MaterialParams kDemo{};        // gamma_e=4, gamma_m=1, alpha=400/10
const WaveguideGeometry kGeometry{};  // L2=1, L3=pi, slab interface at 1
constexpr int kThreads = 4;

MaterialParams demo_infinity_surrogate() {
  MaterialParams p = kDemo;
  p.theta_e_inf_sq = 400.0;
  p.theta_m_inf_sq = 10.0;
  return p;
}

// --- criterion 1: exact gradient-contribution point set ---------------

void criterion_exact_points(Checker& c) {
  const auto pts = model::sigma_e_G_points(kDemo);
  c.require(pts.size() == 6, "expected 6 points, got " + std::to_string(pts.size()));
  const double s396 = std::sqrt(396.0);
  const std::vector<Complex> expected{{-s396, -2.0}, {-14.0, -2.0}, {0.0, -4.0},
                                      {0.0, 0.0},    {14.0, -2.0},  {s396, -2.0}};
  for (const Complex& e : expected) {
    double best = 1e300;
    for (const Complex& p : pts) best = std::min(best, std::abs(p - e));
    c.require(best <= 1e-12, "point (" + fmt(e.real()) + "," + fmt(e.imag()) +
                                 ") off by " + fmt(best));
  }
}

// --- criterion 2: quartic solver as essential-curve oracle ------------

void criterion_quartic_oracle(Checker& c) {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> tdist(1.0, 1e4);
  std::uniform_real_distribution<double> gdist(0.5, 6.0), thdist(0.0, 500.0);
  for (int i = 0; i < 50; ++i) {
    MaterialParams p;
    p.gamma_e = gdist(rng);
    p.gamma_m = gdist(rng);
    p.theta_e_inf_sq = thdist(rng);
    p.theta_m_inf_sq = thdist(rng);
    const double t = tdist(rng);
    const auto q = model::essential_quartic(p, t);
    for (const Complex& r : rootfinding::poly_roots(q)) {
      const double m = std::abs(r);
      c.require(std::abs(q.eval(r)) < 1e-9 * (1.0 + m * m * m * m),
                "quartic residual too large at t=" + fmt(t));
    }
  }
  for (int i = 0; i < 20; ++i) {
    MaterialParams p = kDemo;  // vacuum at infinity
    p.gamma_e = gdist(rng);
    p.gamma_m = gdist(rng);
    const double t = tdist(rng);
    const auto pts = model::essential_curve_s_infty(p, t, t, 2);
    c.require(pts.size() == 2, "vacuum curve sample count != 2 at t=" + fmt(t));
    if (pts.size() == 2) {
      c.require(std::abs(pts[0] - Complex(-std::sqrt(t), 0)) < 1e-10,
                "-sqrt(t) missing at t=" + fmt(t));
      c.require(std::abs(pts[1] - Complex(std::sqrt(t), 0)) < 1e-10,
                "+sqrt(t) missing at t=" + fmt(t));
    }
  }
}

// --- criterion 3: large-t asymptotics of the quartic roots ------------

void criterion_asymptotics(Checker& c) {
  const MaterialParams p = demo_infinity_surrogate();
  const double c_const = 400.0 * (-4.0 + 400.0 * 10.0 / (1.0 - 4.0));
  c.require(std::abs(c_const - (-534933.3333333333)) < 1e-6,
            "pinned constant mismatch");

  auto error_at = [&](double t) {
    const Complex pred = model::asymptotic_root(t, model::AsymptoticBranch::NearPoleE, p);
    c.require(std::abs(pred - (Complex(0.0, -4.0) - Complex(0.0, c_const / t))) <
                  1e-12,
              "asymptotic_root disagrees with the pinned formula");
    const auto roots = rootfinding::poly_roots(model::essential_quartic(p, t));
    Complex nearest = roots.front();
    for (const Complex& r : roots)
      if (std::abs(r - Complex(0, -4)) < std::abs(nearest - Complex(0, -4)))
        nearest = r;
    return std::abs(nearest - pred);
  };
  const double e6 = error_at(1e6);
  const double e8 = error_at(1e8);
  c.require(e8 / e6 <= 0.2, "error ratio " + fmt(e8 / e6) + " exceeds 0.2");

  // Branch (ii) factor-of-two resolution: the halved decay constant wins.
  for (const double t : {1e6, 1e8}) {
    const auto roots = rootfinding::poly_roots(model::essential_quartic(p, t));
    Complex near_plus = roots.front();
    for (const Complex& r : roots)
      if (std::abs(r - std::sqrt(t)) < std::abs(near_plus - std::sqrt(t)))
        near_plus = r;
    const auto [full, half] = model::large_real_imag_candidates(t, p);
    const double err_full = std::abs(near_plus.imag() - full);
    const double err_half = std::abs(near_plus.imag() - half);
    c.require(err_half < 0.1 * err_full,
              "halved decay constant not selected at t=" + fmt(t));
  }
  std::printf(
      "    note: imaginary-part decay constant resolved to K/(2 x^2)\n");
}

// --- criterion 4: certified eigenvalues and their enclosures ----------

void criterion_certification(Checker& c) {
  const rootfinding::SearchRegion region{-25.0, 25.0, -4.5, -1e-6, 48, 64};
  const auto result = waveguide::spectrum(kGeometry, kDemo, region, 6, 1e-10,
                                          kThreads);
  c.require(!result.points.empty(), "no eigenvalues certified");
  c.require(result.warnings.empty(),
            "sweep warnings: " + std::to_string(result.warnings.size()));
  for (const auto& p : result.points) {
    c.require(p.residual < 1e-9, "raw residual " + fmt(p.residual));
    c.require(p.winding == 1, "winding != 1");
    c.require(p.in_gamma, "eigenvalue outside the refined enclosure at re=" +
                              fmt(p.omega.real()));
    c.require(p.in_strip, "eigenvalue outside the strip");
  }
  for (const auto& p : result.points) {
    const Complex mirrored = model::reflect(p.omega);
    double best = 1e300;
    for (const auto& q : result.points)
      if (q.mode == p.mode) best = std::min(best, std::abs(q.omega - mirrored));
    c.require(best < 1e-8, "reflection partner missing, gap " + fmt(best));
  }
}

// --- criterion 5: exponential truncation convergence ------------------

void criterion_truncation_convergence(Checker& c) {
  const rootfinding::SearchRegion region{0.5, 8.0, -4.5, -1e-6, 48, 64};
  const auto chains = waveguide::truncation_study(
      kGeometry, kDemo, {5.0, 10.0, 25.0}, region, 1, 1e-10, kThreads);

  // Pick the converging chain with the largest initial error; below the
  // solver's position resolution the exponential bound is unobservable, so
  // comparisons are floored at 1e-10.
  const double floor = 1e-10;
  const waveguide::TrajectoryReport* best = nullptr;
  for (const auto& chain : chains) {
    if (chain.limit_class != waveguide::LimitClass::ConvergesToTrueEig) continue;
    if (chain.samples.size() != 3) continue;
    if (!best || chain.samples[0].dist_to_true > best->samples[0].dist_to_true)
      best = &chain;
  }
  c.require(best != nullptr, "no converging chain tracked");
  if (!best) return;

  const double kappa_sq = waveguide::cutoff(best->mode, kGeometry);
  const Complex l2 =
      sqrt_principal(kappa_sq - best->limit_target * best->limit_target);
  for (size_t k = 0; k + 1 < best->samples.size(); ++k) {
    const double d0 = best->samples[k].dist_to_true;
    const double d1 = best->samples[k + 1].dist_to_true;
    c.require(d1 <= d0 + floor, "distance increased along the chain");
    const double dx = best->samples[k + 1].X - best->samples[k].X;
    const double bound = 10.0 * d0 * std::exp(-0.75 * 2.0 * l2.real() * dx);
    c.require(d1 <= std::max(bound, floor),
              "exponential bound violated: " + fmt(d1) + " > " + fmt(bound));
  }
}

// --- criterion 6: accumulation towards the essential numerical range --

void criterion_pollution_accumulation(Checker& c) {
  const rootfinding::SearchRegion region{0.5, 25.0, -4.5, -1e-6, 48, 64};
  const HalfLinePair we = model::we_s_infty(kGeometry, kDemo);
  auto near_axis_points = [&](double X) {
    WaveguideGeometry g = kGeometry;
    g.X = X;
    const auto result = waveguide::spectrum(g, kDemo, region, 1, 1e-10, kThreads);
    std::vector<Complex> sel;
    for (const auto& p : result.points)
      if (std::abs(p.omega.imag()) < 0.2 && p.omega.real() >= 1.0 - 0.05)
        sel.push_back(p.omega);
    return sel;
  };
  const auto at5 = near_axis_points(5.0);
  const auto at25 = near_axis_points(25.0);
  c.require(at25.size() >= 5, "only " + std::to_string(at25.size()) +
                                  " near-axis eigenvalues at X=25");
  c.require(!at5.empty(), "no near-axis eigenvalues at X=5");
  if (at5.empty() || at25.empty()) return;
  auto min_dist = [&](const std::vector<Complex>& pts) {
    double best = 1e300;
    for (const Complex& w : pts) best = std::min(best, we.distance_to(w));
    return best;
  };
  const double d5 = min_dist(at5);
  const double d25 = min_dist(at25);
  c.require(d25 < d5, "min distance to the essential numerical range did not "
                      "decrease: " + fmt(d25) + " vs " + fmt(d5));
}

// --- criterion 7: finite-difference oracle agreement ------------------

void criterion_fd_oracle(Checker& c) {
  WaveguideGeometry geom = kGeometry;
  geom.X = 5.0;
  const rootfinding::SearchRegion region{0.5, 5.0, -3.0, -0.02, 48, 64};
  const ModeIndex mode{1, 1};
  auto disp = [&](Complex w) {
    return waveguide::dispersion_truncated(w, mode, geom, kDemo);
  };
  const auto disp_roots = rootfinding::isolate_roots(disp, region, 1e-10, 64);
  c.require(!disp_roots.empty(), "no dispersion roots in the window");

  const auto coarse = fd::FdGrid::aligned(5.0, 1.0, 2048);  // snaps to 2050
  const auto fine = fd::FdGrid::aligned(5.0, 1.0, coarse.n * 2);
  const auto fd_coarse =
      fd::oracle_spectrum(mode, geom, coarse, kDemo, region, 1e-8);
  const auto fd_fine = fd::oracle_spectrum(mode, geom, fine, kDemo, region, 1e-8);
  c.require(fd_coarse.size() == disp_roots.size(),
            "FD root count " + std::to_string(fd_coarse.size()) +
                " != dispersion count " + std::to_string(disp_roots.size()));

  for (const auto& r : fd_coarse) {
    double gap = 1e300;
    Complex truth;
    for (const auto& d : disp_roots)
      if (std::abs(d.value - r.value) < gap) {
        gap = std::abs(d.value - r.value);
        truth = d.value;
      }
    c.require(gap < 5e-3, "FD root off by " + fmt(gap));
    double gap_fine = 1e300;
    for (const auto& f : fd_fine)
      gap_fine = std::min(gap_fine, std::abs(f.value - truth));
    const double ratio = gap / gap_fine;
    c.require(ratio >= 2.0 && ratio <= 5.0,
              "halving ratio " + fmt(ratio) + " outside [2,5]");
  }

  // Vacuum null case: Dirichlet frequencies of -u'' on (0, pi).
  MaterialParams vacuum = kDemo;
  vacuum.alpha_e = vacuum.alpha_m = 0.0;
  const auto grid = fd::FdGrid::uniform(M_PI, 512);
  const long ref = fd::fd_det(Complex(2.0, 0.0), 0.0, grid, vacuum).exponent;
  auto hunt = [&](Complex w) {
    const auto d = fd::fd_det(w, 0.0, grid, vacuum);
    const long s = std::clamp(d.exponent - ref, -900L, 900L);
    return d.mantissa * std::ldexp(1.0, static_cast<int>(s));
  };
  const rootfinding::SearchRegion axis{0.5, 3.5, -0.4, 0.4, 48, 64};
  const auto dirichlet = rootfinding::isolate_roots(hunt, axis, 1e-8, 8);
  c.require(dirichlet.size() == 3, "expected the 3 Dirichlet frequencies");
  for (int k = 1; k <= static_cast<int>(dirichlet.size()) && k <= 3; ++k)
    c.require(std::abs(dirichlet[static_cast<size_t>(k - 1)].value -
                       Complex(k, 0)) < 5e-3,
              "Dirichlet frequency " + std::to_string(k) + " off");
}

// --- criterion 8: enclosure consistency sweep -------------------------

void criterion_enclosure_consistency(Checker& c) {
  const int n = 200;
  const double re0 = -30.0, re1 = 30.0, im0 = -6.0, im1 = 1.0;
  for (int i = 0; i < n; ++i) {
    const double re = re0 + (re1 - re0) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double im = im0 + (im1 - im0) * j / (n - 1);
      const Complex w(re, im);
      if (model::gamma_set_contains(w, kDemo) && re != 0.0)
        c.require(model::strip_contains(w, kDemo),
                  "refined enclosure leaves the strip at re=" + fmt(re));
    }
  }
  const rootfinding::SearchRegion region{0.5, 25.0, -4.5, -1e-6, 48, 64};
  const auto result = waveguide::spectrum(kGeometry, kDemo, region, 2, 1e-10,
                                          kThreads);
  c.require(!result.points.empty(), "no eigenvalues for the enclosure check");
  for (const auto& p : result.points) {
    c.require(p.in_strip && p.in_enc && p.in_gamma,
              "eigenvalue violates an enclosure at re=" + fmt(p.omega.real()));
  }
}

struct Criterion {
  int id;
  const char* label;
  std::function<void(Checker&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "exact gradient-contribution spectrum points", criterion_exact_points},
      {2, "essential-curve quartic oracle equivalence", criterion_quartic_oracle},
      {3, "large-t asymptotics of quartic roots", criterion_asymptotics},
      {4, "dispersion-root certification and enclosures", criterion_certification},
      {5, "exponential truncation convergence", criterion_truncation_convergence},
      {6, "pollution accumulation towards the real axis",
       criterion_pollution_accumulation},
      {7, "finite-difference oracle agreement", criterion_fd_oracle},
      {8, "enclosure consistency sweep", criterion_enclosure_consistency},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failures = 0;
  for (const auto& criterion : criteria()) {
    if (only != 0 && criterion.id != only) continue;
    Checker checker;
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.require(false, std::string("exception: ") + e.what());
    }
    if (checker.count == 0) {
      std::printf("[PASS] criterion %d: %s\n", criterion.id, criterion.label);
    } else {
      ++failures;
      std::printf("[FAIL] criterion %d: %s%s\n", criterion.id, criterion.label,
                  checker.failures.str().c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
