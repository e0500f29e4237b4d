#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "parq/arith.hpp"

namespace parq {

struct RootOptions {
  double tol = 1e-14;      // per-iteration stop on |p(z)/p'(z)| corrections
  int max_iter = 200;
  int polish_iter = 12;    // final Newton polish steps per root
};

namespace detail {

inline Complex horner(const std::vector<Complex>& cs, Complex z) {
  Complex acc(0.0);
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * z + cs[i];
  return acc;
}

inline std::vector<Complex> derivative(const std::vector<Complex>& cs) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < cs.size(); ++i) d.push_back(cs[i] * double(i));
  return d;
}

}  // namespace detail

/// All complex roots of sum_k cs[k] z^k by Aberth-Ehrlich simultaneous
/// iteration. Coefficients are dense, index = degree. Leading/trailing zero
/// coefficients are handled (roots at 0 returned explicitly).
inline std::vector<Complex> aberth_roots(std::vector<Complex> cs,
                                         const RootOptions& opt = {}) {
  // strip vanishing leading coefficients
  while (!cs.empty() && std::abs(cs.back()) == 0.0) cs.pop_back();
  if (cs.size() <= 1) return {};  // constant (or identically zero): no isolated roots

  std::vector<Complex> roots;
  // factor out z^m
  std::size_t m = 0;
  while (m < cs.size() && std::abs(cs[m]) == 0.0) ++m;
  for (std::size_t k = 0; k < m; ++k) roots.push_back(Complex(0.0));
  cs.erase(cs.begin(), cs.begin() + m);
  std::size_t n = cs.size() - 1;
  if (n == 0) return roots;

  if (n == 1) {
    roots.push_back(-cs[0] / cs[1]);
    return roots;
  }

  // Cauchy-style inclusion radius
  double r = 0.0;
  for (std::size_t k = 0; k < n; ++k) r = std::max(r, std::abs(cs[k] / cs[n]));
  r = 1.0 + r;

  std::vector<Complex> z(n);
  const double golden = 2.0 * M_PI * 0.6180339887498949;
  for (std::size_t k = 0; k < n; ++k) {
    double ang = golden * double(k + 1) + 0.4;
    double rad = r * (0.5 + 0.5 * double(k + 1) / double(n));
    z[k] = Complex(rad * std::cos(ang), rad * std::sin(ang));
  }

  auto dcs = detail::derivative(cs);
  for (int it = 0; it < opt.max_iter; ++it) {
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex p = detail::horner(cs, z[k]);
      Complex dp = detail::horner(dcs, z[k]);
      Complex ratio = (std::abs(dp) == 0.0) ? Complex(0.0) : p / dp;
      Complex sum(0.0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += Complex(1.0) / (z[k] - z[j]);
      Complex denom = Complex(1.0) - ratio * sum;
      Complex step = (std::abs(denom) == 0.0) ? ratio : ratio / denom;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < opt.tol) break;
  }

  // Newton polish
  for (std::size_t k = 0; k < n; ++k) {
    for (int it = 0; it < opt.polish_iter; ++it) {
      Complex p = detail::horner(cs, z[k]);
      Complex dp = detail::horner(dcs, z[k]);
      if (std::abs(dp) == 0.0) break;
      Complex step = p / dp;
      z[k] -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z[k]))) break;
    }
    roots.push_back(z[k]);
  }

  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace parq
