// Copyright (c) the drude-spectra authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DRUDE_COMPLEXFN_HPP
#define DRUDE_COMPLEXFN_HPP

#include <cmath>
#include <complex>

#include "drude/types.hpp"

namespace drude {

// Square root with the project-wide branch convention: principal branch with
// Re >= 0; a negative real argument resolves to +i*sqrt|.|. This matches the
// decay normalization Re lambda >= 0 used by the dispersion relations.
inline Complex sqrt_principal(Complex z) {
  Complex r = std::sqrt(z);
  if (r.real() < 0.0) r = -r;
  if (r.real() == 0.0 && r.imag() < 0.0) r = -r;
  return r;
}

namespace detail {
// Series thresholds: |w| < 1e-4, i.e. |w^2| < 1e-8. Terms through w^6 leave
// a remainder below 1e-32 there.
inline constexpr double kSeriesThresholdSq = 1e-8;
}  // namespace detail

// cosh(sqrt(u)): even in the sqrt branch, hence entire in u.
inline Complex cosh_sqrt(Complex u) {
  if (std::abs(u) < detail::kSeriesThresholdSq)
    return 1.0 + u * (1.0 / 2.0) + u * u * (1.0 / 24.0) + u * u * u * (1.0 / 720.0);
  return std::cosh(sqrt_principal(u));
}

// sinh(sqrt(u))/sqrt(u): even in the sqrt branch, entire in u, equals 1 at 0.
inline Complex sinhc_sqrt(Complex u) {
  if (std::abs(u) < detail::kSeriesThresholdSq)
    return 1.0 + u * (1.0 / 6.0) + u * u * (1.0 / 120.0) + u * u * u * (1.0 / 5040.0);
  const Complex w = sqrt_principal(u);
  return std::sinh(w) / w;
}

// sqrt(u)*coth(sqrt(u)): even in the sqrt branch, equals 1 at 0. Uses the
// exponentially stable form for large Re sqrt(u); has poles where
// sinh(sqrt(u)) = 0, u != 0.
inline Complex coth_sqrt_scaled(Complex u) {
  if (std::abs(u) < detail::kSeriesThresholdSq)
    return 1.0 + u * (1.0 / 3.0) - u * u * (1.0 / 45.0) + u * u * u * (2.0 / 945.0);
  const Complex w = sqrt_principal(u);
  const Complex em = std::exp(-2.0 * w);  // |em| <= 1 since Re w >= 0
  return w * (1.0 + em) / (1.0 - em);
}

// cosh(w) * exp(-Re w) for Re w >= 0; all internal exponents have
// nonpositive real part, so the value never overflows.
inline Complex cosh_scaled(Complex w) {
  return 0.5 * (std::exp(Complex(0.0, w.imag())) + std::exp(-w - w.real()));
}

// (sinh(w)/w) * exp(-Re w) for Re w >= 0, with the removable singularity at
// w = 0 handled by series.
inline Complex sinhc_scaled(Complex w) {
  if (std::abs(w) < 1e-4) {
    const Complex u = w * w;
    const Complex s = 1.0 + u * (1.0 / 6.0) + u * u * (1.0 / 120.0);
    return s * std::exp(-w.real());
  }
  return (std::exp(Complex(0.0, w.imag())) - std::exp(-w - w.real())) / (2.0 * w);
}

}  // namespace drude

#endif  // DRUDE_COMPLEXFN_HPP
