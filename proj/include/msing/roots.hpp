#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "msing/univariate.hpp"

namespace msing {

struct RootSettings {
  int max_iterations = 500;
  double residual_tolerance = 1e-10;
};

class RootFindingError : public Error {
 public:
  RootFindingError(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct Root {
  Complex value;
  unsigned multiplicity = 1;
};

namespace detail {

// sum |c_i| |z|^i, the natural scale of an evaluation at z
inline double evaluation_scale(const ComplexUnivariate& p, Complex z) {
  double s = 0, r = std::abs(z), pw = 1;
  for (const auto& c : p.coeffs()) {
    s += std::abs(c) * pw;
    pw *= r;
  }
  return s;
}

inline double relative_residual(const ComplexUnivariate& p, Complex z) {
  double scale = evaluation_scale(p, z);
  return scale == 0 ? 0 : std::abs(p(z)) / scale;
}

}  // namespace detail

/// All roots of a complex polynomial by Aberth-Ehrlich simultaneous iteration,
/// followed by Newton polishing. Intended for squarefree input.
inline std::vector<Complex> aberth_roots(const ComplexUnivariate& p, const RootSettings& cfg = {}) {
  if (p.degree() < 1) throw InputError("root finding needs degree >= 1");
  std::size_t zeros = 0;
  while (p[zeros] == Complex(0)) ++zeros;
  if (zeros > 0) {
    // exact roots at the origin; the relative residual is meaningless there
    std::vector<Complex> out(zeros, Complex(0));
    if (p.degree() > static_cast<int>(zeros)) {
      ComplexUnivariate rest(std::vector<Complex>(p.coeffs().begin() + static_cast<long>(zeros), p.coeffs().end()));
      for (const auto& z : aberth_roots(rest, cfg)) out.push_back(z);
    }
    return out;
  }
  int n = p.degree();
  ComplexUnivariate dp = p.derivative();
  if (n == 1) return {-p[0] / p[1]};

  // Cauchy-style radius from the coefficient ratios
  double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(p[i] / p.leading()), 1.0 / (n - i)));
  if (radius == 0) radius = 1;
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    double angle = 2 * std::numbers::pi * k / n + 0.4;
    z[k] = std::polar(radius, angle);
  }

  for (int it = 0; it < cfg.max_iterations; ++it) {
    double max_step = 0;
    for (int k = 0; k < n; ++k) {
      Complex pk = p(z[k]);
      if (pk == Complex(0)) continue;
      Complex ratio = pk / dp(z[k]);
      Complex sum(0);
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      Complex step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (max_step < 1e-15) break;
  }

  double worst = 0;
  for (auto& root : z) {
    for (int it = 0; it < 5; ++it) {
      Complex d = dp(root);
      if (d == Complex(0)) break;
      Complex step = p(root) / d;
      Complex next = root - step;
      if (detail::relative_residual(p, next) <= detail::relative_residual(p, root)) root = next;
      else break;
    }
    worst = std::max(worst, detail::relative_residual(p, root));
  }
  if (worst > cfg.residual_tolerance)
    throw RootFindingError("root finding did not converge (relative residual " + std::to_string(worst) + ")", worst);
  return z;
}

/// Complex roots with exact multiplicities: squarefree decomposition over the
/// rationals first, simultaneous iteration on each squarefree factor after.
inline std::vector<Root> roots_with_multiplicity(const ExactUnivariate& p, const RootSettings& cfg = {}) {
  if (p.degree() < 1) throw InputError("root finding needs degree >= 1");
  std::vector<Root> out;
  auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    for (const auto& z : aberth_roots(to_complex(factors[i]), cfg))
      out.push_back({z, static_cast<unsigned>(i + 1)});
  }
  return out;
}

/// Roots listed with multiplicity.
inline std::vector<Complex> roots_numeric(const ExactUnivariate& p, const RootSettings& cfg = {}) {
  std::vector<Complex> out;
  for (const auto& r : roots_with_multiplicity(p, cfg))
    for (unsigned k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  return out;
}

inline std::vector<Complex> roots_numeric(const ComplexUnivariate& p, const RootSettings& cfg = {}) {
  return aberth_roots(p, cfg);
}

}  // namespace msing
