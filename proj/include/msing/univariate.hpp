#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "msing/poly.hpp"

namespace msing {

using Complex = std::complex<double>;

/// Dense univariate polynomial, coefficients low degree first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty).
template <class C>
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  const std::vector<C>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const C& leading() const { return c_.back(); }
  C operator[](std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }

  template <class X>
  X operator()(const X& x) const {
    X r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + X(*it);
    return r;
  }

  Univariate derivative() const {
    std::vector<C> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * C(static_cast<long>(i)));
    return Univariate(std::move(d));
  }

  friend Univariate operator-(const Univariate& a, const Univariate& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Univariate(std::move(r));
  }
  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Univariate(std::move(r));
  }
  friend bool operator==(const Univariate& a, const Univariate& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
  }
  std::vector<C> c_;
};

using ExactUnivariate = Univariate<Scalar>;
using ComplexUnivariate = Univariate<Complex>;

/// Quotient and remainder of exact division a = q*b + r.
inline std::pair<ExactUnivariate, ExactUnivariate> divmod(const ExactUnivariate& a, const ExactUnivariate& b) {
  if (b.is_zero()) throw Error("univariate division by zero");
  std::vector<Scalar> r = a.coeffs();
  int db = b.degree();
  std::vector<Scalar> q(std::max(0, a.degree() - db + 1), Scalar(0));
  for (int i = a.degree(); i >= db; --i) {
    Scalar f = r[i] / b.leading();
    if (f == 0) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  return {ExactUnivariate(std::move(q)), ExactUnivariate(std::move(r))};
}

inline ExactUnivariate monic(const ExactUnivariate& a) {
  if (a.is_zero()) return a;
  std::vector<Scalar> c = a.coeffs();
  Scalar lc = a.leading();
  for (auto& x : c) x /= lc;
  return ExactUnivariate(std::move(c));
}

inline ExactUnivariate gcd(ExactUnivariate a, ExactUnivariate b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Yun's squarefree decomposition: returns factors f_1, f_2, ... with
/// a = lc * prod f_i^i, each f_i squarefree and monic (possibly constant 1).
inline std::vector<ExactUnivariate> squarefree_decomposition(const ExactUnivariate& a) {
  std::vector<ExactUnivariate> out;
  if (a.degree() < 1) return out;
  ExactUnivariate f = monic(a);
  ExactUnivariate d = f.derivative();
  ExactUnivariate g = gcd(f, d);
  ExactUnivariate b = divmod(f, g).first;
  ExactUnivariate c = divmod(d, g).first;
  ExactUnivariate e = c - b.derivative();
  while (b.degree() >= 1) {
    ExactUnivariate h = gcd(b, e);
    out.push_back(h);
    b = divmod(b, h).first;
    c = divmod(e, h).first;
    e = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

inline ExactUnivariate squarefree_part(const ExactUnivariate& a) {
  if (a.degree() < 1) return a;
  return monic(divmod(a, gcd(a, a.derivative())).first);
}

inline ComplexUnivariate to_complex(const ExactUnivariate& a) {
  std::vector<Complex> c;
  for (const auto& q : a.coeffs()) c.emplace_back(q.get_d(), 0.0);
  return ComplexUnivariate(std::move(c));
}

/// Reads p as a polynomial in v alone; throws if other variables occur.
inline ExactUnivariate to_univariate(const Poly& p, const Var& v) {
  std::vector<Scalar> c(p.degree(v) + 1, Scalar(0));
  for (const auto& [m, q] : p.terms()) {
    if (m.powers().size() > 1 || (m.powers().size() == 1 && m.powers()[0].first != v))
      throw InputError("polynomial is not univariate in " + v + ": " + p.to_string());
    c[m.exponent(v)] += q;
  }
  return ExactUnivariate(std::move(c));
}

inline Poly from_univariate(const ExactUnivariate& u, const Var& v) {
  Poly p;
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) p.add_term(Monomial(v, static_cast<unsigned>(i)), u.coeffs()[i]);
  return p;
}

}  // namespace msing
