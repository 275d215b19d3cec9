// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "drude/fd_oracle.hpp"
#include "drude/model.hpp"
#include "drude/rootfinding.hpp"
#include "drude/waveguide.hpp"

namespace {

const drude::MaterialParams kParams{};
const drude::WaveguideGeometry kGeometry{};

void BM_QuarticRoots(benchmark::State& state) {
  drude::MaterialParams p = kParams;
  p.theta_e_inf_sq = 400.0;
  p.theta_m_inf_sq = 10.0;
  const auto q = drude::model::essential_quartic(p, 123.0);
  for (auto _ : state) {
    auto roots = drude::rootfinding::poly_roots(q);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(BM_QuarticRoots);

void BM_DispersionFull(benchmark::State& state) {
  const drude::Complex w(2.0, -0.5);
  for (auto _ : state) {
    auto v = drude::waveguide::dispersion_full(w, {1, 1}, kGeometry, kParams);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_DispersionFull);

void BM_DispersionTruncated(benchmark::State& state) {
  drude::WaveguideGeometry g = kGeometry;
  g.X = 25.0;
  const drude::Complex w(5.0, -0.01);
  for (auto _ : state) {
    auto v = drude::waveguide::dispersion_truncated(w, {1, 1}, g, kParams);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_DispersionTruncated);

void BM_FdDet(benchmark::State& state) {
  drude::WaveguideGeometry g = kGeometry;
  g.X = 5.0;
  const auto grid = drude::fd::FdGrid::aligned(g.X, g.slab_end,
                                               static_cast<int>(state.range(0)));
  const double kappa_sq = drude::waveguide::cutoff({1, 1}, g);
  const drude::Complex w(2.0, -1.0);
  for (auto _ : state) {
    auto d = drude::fd::fd_det(w, kappa_sq, grid, kParams);
    benchmark::DoNotOptimize(d);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FdDet)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

void BM_WindingCount(benchmark::State& state) {
  const drude::rootfinding::SearchRegion region{0.5, 5.0, -3.0, -0.02, 48, 64};
  auto fn = [](drude::Complex w) {
    drude::WaveguideGeometry g;
    g.X = 5.0;
    return drude::waveguide::dispersion_truncated(w, {1, 1}, g, kParams);
  };
  for (auto _ : state) {
    int n = drude::rootfinding::winding_count(fn, region);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_WindingCount);

}  // namespace

BENCHMARK_MAIN();
