#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "msing/error.hpp"

namespace msing {

/// Exact rational coefficient; GMP keeps it reduced with a positive denominator.
using Scalar = mpq_class;

using Var = std::string;

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw InputError("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

inline bool is_integer(const Scalar& q) { return q.get_den() == 1; }

/// Product of variable powers; stored sparsely, sorted by variable name,
/// exponents strictly positive.
class Monomial {
 public:
  using Power = std::pair<Var, unsigned>;

  Monomial() = default;
  explicit Monomial(Var v, unsigned e = 1) {
    if (e > 0) powers_.emplace_back(std::move(v), e);
  }
  explicit Monomial(std::vector<Power> powers) : powers_(std::move(powers)) {
    std::sort(powers_.begin(), powers_.end());
    std::vector<Power> merged;
    for (auto& p : powers_) {
      if (p.second == 0) continue;
      if (!merged.empty() && merged.back().first == p.first)
        merged.back().second += p.second;
      else
        merged.push_back(p);
    }
    powers_ = std::move(merged);
  }

  const std::vector<Power>& powers() const { return powers_; }
  bool is_one() const { return powers_.empty(); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& p : powers_) d += p.second;
    return d;
  }

  unsigned exponent(const Var& v) const {
    auto it = std::lower_bound(powers_.begin(), powers_.end(), v,
                               [](const Power& p, const Var& x) { return p.first < x; });
    return (it != powers_.end() && it->first == v) ? it->second : 0;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.powers_.reserve(powers_.size() + o.powers_.size());
    auto a = powers_.begin(), b = o.powers_.begin();
    while (a != powers_.end() || b != o.powers_.end()) {
      if (b == o.powers_.end() || (a != powers_.end() && a->first < b->first)) {
        r.powers_.push_back(*a++);
      } else if (a == powers_.end() || b->first < a->first) {
        r.powers_.push_back(*b++);
      } else {
        r.powers_.emplace_back(a->first, a->second + b->second);
        ++a, ++b;
      }
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    for (const auto& p : powers_)
      if (o.exponent(p.first) < p.second) return false;
    return true;
  }

  /// o / *this, assuming divides(o).
  Monomial cofactor_in(const Monomial& o) const {
    std::vector<Power> r;
    for (const auto& p : o.powers_) {
      unsigned e = p.second - exponent(p.first);
      if (e > 0) r.emplace_back(p.first, e);
    }
    Monomial m;
    m.powers_ = std::move(r);
    return m;
  }

  Monomial without(const Var& v) const {
    Monomial m;
    for (const auto& p : powers_)
      if (p.first != v) m.powers_.push_back(p);
    return m;
  }

  bool operator==(const Monomial& o) const { return powers_ == o.powers_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s;
    for (const auto& [v, e] : powers_) {
      if (!s.empty()) s += "*";
      s += v;
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<Power> powers_;
};

/// Graded lexicographic order, variables ordered by name; true when a > b.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t i = 0;
    for (; i < pa.size() && i < pb.size(); ++i) {
      if (pa[i].first != pb[i].first) return pa[i].first < pb[i].first;
      if (pa[i].second != pb[i].second) return pa[i].second > pb[i].second;
    }
    return i < pa.size() && i == pb.size();
  }
};

/// Multivariate polynomial over the rationals. Terms are kept in descending
/// graded-lex order with no zero coefficients.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  Poly() = default;
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Scalar& c) {            // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial(), c);
  }
  Poly(const Monomial& m, const Scalar& c) {
    if (c != 0) terms_.emplace(m, c);
  }

  static Poly var(const Var& v, unsigned e = 1) { return Poly(Monomial(v, e), Scalar(1)); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  Scalar constant_term() const { return coefficient(Monomial()); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw Error("leading monomial of zero polynomial");
    return terms_.begin()->first;
  }
  const Scalar& leading_coefficient() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
  }

  /// Returns the variable when the polynomial is exactly one variable with coefficient 1.
  std::optional<Var> as_bare_variable() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    if (c != 1 || m.powers().size() != 1 || m.powers()[0].second != 1) return std::nullopt;
    return m.powers()[0].first;
  }

  std::set<Var> variables() const {
    std::set<Var> vs;
    for (const auto& [m, c] : terms_)
      for (const auto& p : m.powers()) vs.insert(p.first);
    return vs;
  }

  bool mentions(const Var& v) const {
    for (const auto& [m, c] : terms_)
      if (m.exponent(v) > 0) return true;
    return false;
  }

  unsigned degree(const Var& v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
  }

  unsigned total_degree() const { return is_zero() ? 0 : terms_.begin()->first.degree(); }

  unsigned lowest_degree() const {
    unsigned d = ~0u;
    for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
    return is_zero() ? 0 : d;
  }

  /// Coefficient of v^k, as a polynomial in the remaining variables.
  Poly coefficient_of(const Var& v, unsigned k) const {
    Poly r;
    for (const auto& [m, c] : terms_)
      if (m.exponent(v) == k) r.terms_.emplace(m.without(v), c);
    return r;
  }

  /// Homogeneous part of total degree d.
  Poly homogeneous_part(unsigned d) const {
    Poly r;
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend Poly operator*(const Poly& a, const Scalar& s) {
    Poly r;
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * s);
    return r;
  }
  friend Poly operator*(const Scalar& s, const Poly& a) { return a * s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Scalar a = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (m.is_one()) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << m.to_string();
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

inline Poly pow(const Poly& p, unsigned e) {
  Poly r(1L), b = p;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

/// Formal partial derivative.
inline Poly diff(const Poly& p, const Var& v) {
  Poly r;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    std::vector<Monomial::Power> pw;
    for (const auto& q : m.powers())
      pw.emplace_back(q.first, q.first == v ? q.second - 1 : q.second);
    r.add_term(Monomial(std::move(pw)), c * Scalar(e));
  }
  return r;
}

/// Simultaneous substitution; unbound variables pass through.
inline Poly substitute(const Poly& p, const std::map<Var, Poly>& bindings) {
  Poly r;
  std::map<std::pair<Var, unsigned>, Poly> cache;
  for (const auto& [m, c] : p.terms()) {
    Poly term(c);
    std::vector<Monomial::Power> kept;
    for (const auto& [v, e] : m.powers()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto ci = cache.find(key);
      if (ci == cache.end()) ci = cache.emplace(key, pow(it->second, e)).first;
      term *= ci->second;
    }
    r += term * Poly(Monomial(std::move(kept)), Scalar(1));
  }
  return r;
}

inline Poly substitute(const Poly& p, const Var& v, const Poly& value) {
  return substitute(p, std::map<Var, Poly>{{v, value}});
}

/// Substitutes rational constants for every listed variable.
inline Poly specialize(const Poly& p, const std::map<Var, Scalar>& values) {
  std::map<Var, Poly> b;
  for (const auto& [v, q] : values) b.emplace(v, Poly(q));
  return substitute(p, b);
}

/// Exact quotient p / d; throws when d does not divide p.
inline Poly exact_divide(Poly p, const Poly& d) {
  if (d.is_zero()) throw Error("division by zero polynomial");
  const Monomial& ld = d.leading_monomial();
  const Scalar& lc = d.leading_coefficient();
  Poly q;
  while (!p.is_zero()) {
    const Monomial& lp = p.leading_monomial();
    if (!ld.divides(lp)) throw Error("inexact polynomial division");
    Poly t(ld.cofactor_in(lp), p.leading_coefficient() / lc);
    q += t;
    p -= t * d;
  }
  return q;
}

/// Leibniz-style homogenized substitution v -> num/den: returns den^deg_v(p) * p(v = num/den).
inline Poly substitute_fraction(const Poly& p, const Var& v, const Poly& num, const Poly& den) {
  unsigned d = p.degree(v);
  Poly r;
  for (unsigned k = 0; k <= d; ++k) {
    Poly c = p.coefficient_of(v, k);
    if (c.is_zero()) continue;
    r += c * pow(num, k) * pow(den, d - k);
  }
  return r;
}

}  // namespace msing
