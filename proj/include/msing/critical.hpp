#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msing/invariants.hpp"
#include "msing/resultant.hpp"
#include "msing/roots.hpp"

namespace msing {

// ---------------------------------------------------------------- links

struct HessianCheck {
  std::vector<Var> vars;
  RationalMatrix gram;  // q(x) = x^T gram x
  Poly quadratic_part;
  bool nondegenerate = false;
};

/// Quadratic part in x of det(I + L(x)) (sk: Pf(J + L(x))) with L the
/// trace-zero parametrization, its Gram matrix and an exact rank verdict.
inline HessianCheck link_hessian_check(MatrixKind kind, std::size_t n) {
  MatrixFamily l = build_L(kind, n);
  PolyMatrix m = l.germ() + PolyMatrix::identity(kind, n);
  Poly d = discriminant_function(m.retagged(kind));
  HessianCheck r;
  r.vars = l.var_names();
  r.quadratic_part = d.homogeneous_part(2);
  std::size_t s = r.vars.size();
  r.gram.assign(s, std::vector<Scalar>(s, Scalar(0)));
  std::map<Var, std::size_t> idx;
  for (std::size_t i = 0; i < s; ++i) idx[r.vars[i]] = i;
  for (const auto& [mono, c] : r.quadratic_part.terms()) {
    const auto& pw = mono.powers();
    if (pw.size() == 1) {
      std::size_t i = idx.at(pw[0].first);
      r.gram[i][i] += c;
    } else {
      std::size_t i = idx.at(pw[0].first), j = idx.at(pw[1].first);
      r.gram[i][j] += c / 2;
      r.gram[j][i] += c / 2;
    }
  }
  r.nondegenerate = rank(r.gram, s) == s;
  return r;
}

// ------------------------------------------------------ boundary reductions

/// Corner function of a (possibly deformed) matrix in boundary normal form.
inline std::optional<Poly> boundary_corner_of(const PolyMatrix& g) {
  MatrixKind kind = g.kind();
  std::size_t n = g.size();
  if (n < 2 || (kind == MatrixKind::sk && n < 4)) return std::nullopt;
  auto [base, coords] = detail::trace_zero_part(kind, n, 3);
  Poly h = kind == MatrixKind::sk ? g(0, 1) - base(0, 1) : g(0, 0) - base(0, 0);
  if (g != base + corner_unit(kind, n, h)) return std::nullopt;
  for (const auto& c : coords)
    if (c != boundary_coordinate(kind, n) && h.mentions(c)) return std::nullopt;
  return h;
}

/// Critical-point reduction of det (Pf) of a boundary normal form. Away from
/// the discriminant the off-diagonal coordinates vanish and the remaining
/// diagonal (pair) coordinates all equal H/(n-1) (sk: H/(k-1)), leaving
/// (H/(n-1))^(n-1) * x with critical equations grad_z H = 0 and
/// H + (n-1) x dH/dx = 0.
struct CriticalReduction {
  Var x;
  std::vector<Var> zs;
  Poly corner;                      // H(x, z)
  Poly function;                    // (H/(n-1))^(n-1) * x
  std::vector<Poly> equations;      // dH/dz_j..., H + (n-1) x dH/dx
  std::map<Var, Poly> substitutions;
};

inline CriticalReduction boundary_reduction(const PolyMatrix& m) {
  auto h = boundary_corner_of(m);
  if (!h) throw InputError("matrix is not in boundary normal form");
  MatrixKind kind = m.kind();
  std::size_t n = m.size();
  long e = kind == MatrixKind::sk ? static_cast<long>(n / 2) - 1 : static_cast<long>(n) - 1;
  CriticalReduction r;
  r.x = boundary_coordinate(kind, n);
  r.corner = *h;
  Poly x = Poly::var(r.x);
  for (const auto& v : h->variables())
    if (v != r.x) r.zs.push_back(v);
  Poly share = *h * Scalar(make_scalar(1, e));
  r.function = pow(share, static_cast<unsigned>(e)) * x;
  for (const auto& z : r.zs) r.equations.push_back(diff(*h, z));
  r.equations.push_back(*h + x * diff(*h, r.x) * Scalar(e));

  auto [base, coords] = detail::trace_zero_part(kind, n, 3);
  for (const auto& c : coords) {
    if (c == r.x) continue;
    bool diagonal = false;
    for (std::size_t i = 3; i <= (kind == MatrixKind::sk ? n / 2 : n); ++i) {
      Var d = kind == MatrixKind::sk ? coordinate_name(2 * i - 1, 2 * i, n) : coordinate_name(i, i, n);
      if (d == c) diagonal = true;
    }
    r.substitutions[c] = diagonal ? share : Poly();
  }
  Poly reduced = substitute(discriminant_function(m), r.substitutions);
  if (reduced != r.function)
    throw IdentityFailure("boundary reduction identity failed: " + reduced.to_string() + " != " +
                          r.function.to_string());
  return r;
}

/// The one-variable reduction for boundary families without z-variables.
inline CriticalReduction reduce_boundary_critical(const MatrixFamily& f, const std::map<Var, Scalar>& lambda) {
  CriticalReduction r = boundary_reduction(f.specialized(lambda));
  for (const auto& v : r.corner.variables())
    if (f.is_param(v)) throw InputError("parameter '" + v + "' is not specialized");
  if (!r.zs.empty()) throw InputError("boundary family has z-variables; the one-variable reduction needs m = 0");
  return r;
}

// ------------------------------------------------- I and II series

inline const CatalogEntry& table1_origin(const MatrixFamily& f) {
  if (!f.origin() || !f.origin()->is_table1()) throw InputError("family " + f.name() + " is not an I or II series family");
  if (f.kind() != MatrixKind::sym) throw InputError("series reductions use the symmetric form, not " + f.name());
  return *f.origin();
}

namespace detail {

// P(x) = x^k + l_{k-1} x^{k-1} + ... + l_0 for the I series
inline Poly series_I_P(unsigned k, const Var& x) {
  Poly p = Poly::var(x, k);
  for (unsigned i = 0; i < k; ++i) p += Poly::var("l" + std::to_string(i)) * Poly::var(x, i);
  return p;
}

// p(w) = m12 and q(w) = m13 - y for the II series
inline std::pair<Poly, Poly> series_II_pq(const MatrixFamily& f) {
  const PolyMatrix& m = f.matrix();
  return {m(0, 1), m(0, 2) - Poly::var("y")};
}

}  // namespace detail

/// Odd function attached to an I or II series family, with the identities behind it
/// checked exactly for symbolic parameters. II: G = b^3 + b q(c^2) - c p(c^2)
/// with det M = -G^2 on y = b^2, z = bc, w = c^2. I: G = a c^2 + a P(a^2) +
/// 2 l_k c, whose critical value in c is psi = (a^2 P(a^2) - l_k^2)/a, and
/// phi(a^2) = -psi^2/4 where phi is det M at its critical y with z = w = 0.
inline Poly odd_function_of(const MatrixFamily& f) {
  const CatalogEntry& o = table1_origin(f);
  if (o.ctor == CatalogEntry::Constructor::IISquare || f.kind() != MatrixKind::sym)
    throw InputError("odd functions are defined for the symmetric I and II series families");
  Poly b = Poly::var("b"), c = Poly::var("c"), a = Poly::var("a");
  if (o.ctor == CatalogEntry::Constructor::II) {
    auto [p, q] = detail::series_II_pq(f);
    std::map<Var, Poly> sub = {{"y", b * b}, {"z", b * c}, {"w", c * c}};
    PolyMatrix ms = f.matrix().map([&](const Poly& e) { return substitute(e, sub); });
    Poly cof = ms(1, 1) * ms(2, 2) - ms(1, 2) * ms(2, 1);
    if (!cof.is_zero()) throw IdentityFailure("entry (1,1) cofactor does not vanish on the rank-one block");
    Poly pc = substitute(p, "w", c * c), qc = substitute(q, "w", c * c);
    Poly g = pow(b, 3) + b * qc - c * pc;
    if (det(ms) != -(g * g)) throw IdentityFailure("det M != -G^2 for " + f.name());
    return g;
  }
  unsigned k = o.k;
  Poly lk = Poly::var("l" + std::to_string(k));
  Poly x = Poly::var("x");
  Poly n_x = lk * lk - x * detail::series_I_P(k, "x");  // N(x) = l_k^2 - x P(x)
  // cleared det at the critical y = N/(2x), z = w = 0: (2x)^2 det = -x N^2
  Poly d0 = substitute(det(f.matrix()), {{"z", Poly()}, {"w", Poly()}});
  Poly cleared = substitute_fraction(d0, "y", n_x, x * Scalar(2));
  if (cleared != -(x * n_x * n_x)) throw IdentityFailure("critical y reduction failed for " + f.name());
  Poly pa = detail::series_I_P(k, "a");
  Poly a2 = a * a;
  Poly psi_num = a2 * substitute(pa, "a", a2) - lk * lk;
  // phi(a^2) = -N(a^2)^2 / (4 a^2) and psi = psi_num / a: 4 phi = -psi^2
  Poly n_a2 = substitute(n_x, "x", a2);
  if (n_a2 * n_a2 != psi_num * psi_num) throw IdentityFailure("phi(a^2) = -psi^2/4 failed for " + f.name());
  Poly g = a * c * c + a * substitute(pa, "a", a2) + lk * c * Scalar(2);
  // critical point c = -l_k / a of G gives psi: a^2 G = a psi_num
  if (substitute_fraction(g, "c", -lk, a) != a * psi_num) throw IdentityFailure("G does not reduce to psi");
  return g;
}

/// Odd function at the undeformed germ.
inline Poly odd_function_at_zero(const MatrixFamily& f) {
  std::map<Var, Scalar> zero;
  for (const auto& p : f.param_names()) zero[p] = 0;
  return specialize(odd_function_of(f), zero);
}

struct CurveCover {
  std::vector<Var> vars;  // a, b, c
  Poly f1, f2;            // with symbolic parameters
};

/// The space curves covering an I or II series family: (2bc + c^2 + P(a^2), ab - l_k)
/// for I, (b^2 - ac + q(c^2), ab - p(c^2)) for II.
inline CurveCover curve_cover(const MatrixFamily& f) {
  const CatalogEntry& o = table1_origin(f);
  Poly a = Poly::var("a"), b = Poly::var("b"), c = Poly::var("c");
  CurveCover cc{{"a", "b", "c"}, Poly(), Poly()};
  if (o.ctor == CatalogEntry::Constructor::I) {
    Poly lk = Poly::var("l" + std::to_string(o.k));
    cc.f1 = b * c * Scalar(2) + c * c + substitute(detail::series_I_P(o.k, "x"), "x", a * a);
    cc.f2 = a * b - lk;
  } else {
    auto [p, q] = detail::series_II_pq(f);
    cc.f1 = b * b - a * c + substitute(q, "w", c * c);
    cc.f2 = a * b - substitute(p, "w", c * c);
  }
  return cc;
}

inline CurveCover curve_cover_at_zero(const MatrixFamily& f) {
  CurveCover cc = curve_cover(f);
  std::map<Var, Scalar> zero;
  for (const auto& p : f.param_names()) zero[p] = 0;
  cc.f1 = specialize(cc.f1, zero);
  cc.f2 = specialize(cc.f2, zero);
  return cc;
}

struct BlowupReport {
  Poly deformation;  // u^3 w + p(w) - u q(w), symbolic parameters
  Poly germ;         // the same at parameters 0
  long milnor = 0;
  long corank = 0;
  std::string type;
  bool has_constant_term = false;
  bool has_linear_term = false;
};

namespace detail {

inline long quadratic_rank(const Poly& q2, const std::vector<Var>& vars) {
  std::size_t s = vars.size();
  RationalMatrix g(s, std::vector<Scalar>(s, Scalar(0)));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      Poly d = diff(diff(q2, vars[i]), vars[j]);
      g[i][j] = d.constant_term();
    }
  return static_cast<long>(rank(g, s));
}

}  // namespace detail

/// Simple-singularity type of a two-variable germ from its corank, its
/// cubic part and its Milnor number.
inline std::string simple_type(const Poly& g, const std::vector<Var>& vars, long mu, long* corank_out = nullptr) {
  long corank = static_cast<long>(vars.size()) - detail::quadratic_rank(g.homogeneous_part(2), vars);
  if (corank_out) *corank_out = corank;
  if (corank == 0) return "A1";
  if (corank == 1) return "A" + std::to_string(mu);
  if (corank == 2 && vars.size() == 2) {
    Poly c3 = g.homogeneous_part(3);
    if (c3.is_zero()) return "non-simple";
    const Var &u = vars[0], &w = vars[1];
    // a binary cubic is a cube exactly when its Hessian vanishes
    Poly hess = diff(diff(c3, u), u) * diff(diff(c3, w), w) - pow(diff(diff(c3, u), w), 2);
    if (hess.is_zero()) return mu >= 6 && mu <= 8 ? "E" + std::to_string(mu) : "non-simple";
    return mu >= 4 ? "D" + std::to_string(mu) : "non-simple";
  }
  return "non-simple";
}

/// u^3 w + p(w) - u q(w) for the II series with its Milnor number and type.
inline BlowupReport blowup_type(const MatrixFamily& f) {
  const CatalogEntry& o = table1_origin(f);
  if (o.ctor != CatalogEntry::Constructor::II) throw InputError("blow-up is defined for II4, II5 and II6");
  auto [p, q] = detail::series_II_pq(f);
  Poly u = Poly::var("u"), w = Poly::var("w");
  BlowupReport r;
  r.deformation = pow(u, 3) * w + p - u * q;
  std::map<Var, Scalar> zero;
  for (const auto& name : f.param_names()) zero[name] = 0;
  r.germ = specialize(r.deformation, zero);
  std::vector<Var> vars = {"u", "w"};
  r.milnor = milnor_number(r.germ, vars);
  r.type = simple_type(r.germ, vars, r.milnor, &r.corank);
  for (const auto& [mono, c] : r.deformation.terms()) {
    const auto& pw = mono.powers();
    if (pw.size() == 1 && pw[0].second == 1 && f.is_param(pw[0].first)) r.has_constant_term = true;
    if (pw.size() == 2 && pw[0].second == 1 && pw[1].second == 1) {
      bool one_param = f.is_param(pw[0].first) != f.is_param(pw[1].first);
      if (one_param) r.has_linear_term = true;
    }
  }
  return r;
}

// --------------------------------------------------------- critical values

struct CriticalValueReport {
  std::vector<Complex> values;  // distinct nonzero critical values
  long distinct_nonzero = 0;
  long critical_points = 0;
  bool zero_value = false;
  bool multiple = false;
  bool exact = false;  // distinctness certified by a squarefree values polynomial
  std::optional<ExactUnivariate> values_polynomial;

  bool degenerate() const { return zero_value || multiple; }
};

namespace detail {

inline const Var& value_var() {
  static const Var t = "#t";
  return t;
}

inline Complex eval_complex(const Poly& p, const std::map<Var, Complex>& at, double* scale = nullptr) {
  Complex s(0);
  double sc = 0;
  for (const auto& [m, c] : p.terms()) {
    Complex t(c.get_d(), 0.0);
    for (const auto& [v, e] : m.powers()) t *= std::pow(at.at(v), static_cast<int>(e));
    s += t;
    sc += std::abs(t);
  }
  if (scale) *scale = sc;
  return s;
}

// A value together with the size of the terms that produced it.
struct ScaledValue {
  Complex value;
  double scale;
};

inline ComplexUnivariate partial_eval(const Poly& p, const Var& v, const Var& fixed, Complex value) {
  std::vector<Complex> c(p.degree(v) + 1, Complex(0));
  for (const auto& [m, q] : p.terms()) {
    Complex t(q.get_d(), 0.0);
    for (const auto& [u, e] : m.powers())
      if (u == fixed) t *= std::pow(value, static_cast<int>(e));
    c[m.exponent(v)] += t;
  }
  return ComplexUnivariate(std::move(c));
}

inline double poly_scale(const ComplexUnivariate& p, Complex z) {
  double s = 0, r = std::abs(z), pw = 1;
  for (const auto& c : p.coeffs()) {
    s += std::abs(c) * pw;
    pw *= r;
  }
  return s;
}

// Common zeros of P(u, v), Q(u, v): roots of res_v(P, Q) in u, then the
// v-roots of whichever of P, Q is nonconstant there, kept when the other
// vanishes to relative accuracy. A repeated root of the resultant is only a
// multiple intersection when fewer distinct points lie over it; two simple
// points sharing a u-coordinate also give one. So `multiple` is set when
// the points found fall short of the resultant degree.
inline std::vector<std::map<Var, Complex>> solve_bivariate(const Poly& p, const Poly& q, const Var& u, const Var& v,
                                                           bool& multiple) {
  Poly res = resultant(p, q, v);
  if (res.is_zero()) throw Error("critical equations share a common factor");
  ExactUnivariate r = to_univariate(res, u);
  std::vector<std::map<Var, Complex>> out;
  if (r.degree() < 1) return out;
  for (const auto& root : roots_with_multiplicity(r)) {
    ComplexUnivariate pv = partial_eval(p, v, u, root.value), qv = partial_eval(q, v, u, root.value);
    const ComplexUnivariate& solve = pv.degree() >= 1 && (qv.degree() < 1 || pv.degree() <= qv.degree()) ? pv : qv;
    const ComplexUnivariate& check = &solve == &pv ? qv : pv;
    if (solve.degree() < 1) continue;
    std::vector<Complex> cands = solve.degree() == 1 ? std::vector<Complex>{-solve[0] / solve[1]}
                                                     : aberth_roots(solve, RootSettings{500, 1e-6});
    std::vector<Complex> kept;
    for (const auto& z : cands) {
      double sc = poly_scale(check, z);
      if (sc != 0 && std::abs(check(z)) > 1e-6 * sc) continue;
      bool dup = std::any_of(kept.begin(), kept.end(),
                             [&](const Complex& k) { return std::abs(k - z) <= 1e-8 * std::max(1.0, std::abs(z)); });
      if (dup) continue;
      kept.push_back(z);
      out.push_back({{u, root.value}, {v, z}});
    }
  }
  if (static_cast<long>(out.size()) < r.degree()) multiple = true;
  return out;
}

// A value counts as zero when it is negligible against its own term scale,
// so small values next to large ones survive.
inline void collect_values(const std::vector<ScaledValue>& scaled, CriticalValueReport& r) {
  std::vector<Complex> distinct;
  for (const auto& [v, sc] : scaled) {
    if (std::abs(v) <= 1e-8 * std::max(sc, 1e-300)) {
      r.zero_value = true;
      continue;
    }
    bool seen = std::any_of(distinct.begin(), distinct.end(),
                            [&](const Complex& d) { return std::abs(d - v) <= 1e-8 * std::max(std::abs(d), 1.0); });
    if (!seen) distinct.push_back(v);
  }
  r.values = distinct;
  r.distinct_nonzero = static_cast<long>(distinct.size());
  r.critical_points = static_cast<long>(scaled.size());
}

// Distinct nonzero roots of an exact values polynomial, with flags.
inline void exact_values(const ExactUnivariate& vals, CriticalValueReport& r) {
  r.values_polynomial = vals;
  r.exact = true;
  if (vals.is_zero()) {
    r.zero_value = true;
    return;
  }
  r.critical_points = vals.degree();
  ExactUnivariate sf = squarefree_part(vals);
  if (sf.degree() != vals.degree()) r.multiple = true;
  if (vals[0] == 0) r.zero_value = true;
  if (sf[0] == 0) {
    // squarefree, so t divides it exactly once
    std::vector<Scalar> c(sf.coeffs().begin() + 1, sf.coeffs().end());
    sf = ExactUnivariate(std::move(c));
  }
  if (sf.degree() >= 1) r.values = aberth_roots(to_complex(sf));
  r.distinct_nonzero = static_cast<long>(r.values.size());
}

inline std::map<Var, Scalar> complete_parameters(const MatrixFamily& f, const std::map<Var, Scalar>& lambda) {
  std::map<Var, Scalar> all;
  for (const auto& p : f.param_names()) all[p] = 0;
  for (const auto& [k, v] : lambda) {
    if (!f.is_param(k)) throw InputError("'" + k + "' is not a parameter of " + f.name());
    all[k] = v;
  }
  return all;
}

}  // namespace detail

/// Nonzero critical values of det (Pf) of the family at rational parameter
/// values, for boundary families with at most one z-variable and for the
/// symmetric I and II series families. Unlisted parameters are set to zero.
inline CriticalValueReport critical_values(const MatrixFamily& f, const std::map<Var, Scalar>& lambda) {
  auto values_at = detail::complete_parameters(f, lambda);
  const Var& t = detail::value_var();
  CriticalValueReport r;
  if (f.origin() && f.origin()->is_table1()) {
    const CatalogEntry& o = *f.origin();
    if (o.ctor == CatalogEntry::Constructor::I) {
      odd_function_of(f);  // checks the reduction identities
      Poly x = Poly::var("x");
      Poly lk = Poly::var("l" + std::to_string(o.k));
      Poly n_x = specialize(lk * lk - x * detail::series_I_P(o.k, "x"), values_at);
      Poly eq = x * diff(n_x, "x") * Scalar(2) - n_x;
      Poly vals = resultant(eq, x * Poly::var(t) * Scalar(4) + n_x * n_x, "x");
      detail::exact_values(to_univariate(vals, t), r);
      return r;
    }
    if (o.ctor == CatalogEntry::Constructor::II) {
      Poly g = specialize(odd_function_of(f), values_at);
      std::vector<detail::ScaledValue> vals;
      for (const auto& pt : detail::solve_bivariate(diff(g, "b"), diff(g, "c"), "c", "b", r.multiple)) {
        double sc = 0;
        Complex gv = detail::eval_complex(g, pt, &sc);
        vals.push_back({-gv * gv, sc * sc});
      }
      detail::collect_values(vals, r);
      if (2 * r.distinct_nonzero < r.critical_points - (r.zero_value ? 1 : 0)) r.multiple = true;
      return r;
    }
    throw InputError("critical values are implemented for the symmetric I and II series families");
  }
  CriticalReduction red = boundary_reduction(f.specialized(values_at));
  if (red.zs.empty()) {
    const Poly& eq = red.equations.back();
    if (eq.degree(red.x) < 1) {
      r.exact = true;
      return r;
    }
    Poly vals = resultant(eq, Poly::var(t) - red.function, red.x);
    detail::exact_values(to_univariate(vals, t), r);
    return r;
  }
  if (red.zs.size() == 1) {
    std::vector<detail::ScaledValue> vals;
    for (const auto& pt : detail::solve_bivariate(red.equations[0], red.equations[1], red.x, red.zs[0], r.multiple)) {
      double sc = 0;
      Complex v = detail::eval_complex(red.function, pt, &sc);
      vals.push_back({v, sc});
    }
    detail::collect_values(vals, r);
    if (r.distinct_nonzero < r.critical_points - (r.zero_value ? 1 : 0)) r.multiple = true;
    return r;
  }
  throw Unsupported("critical values for boundary families with more than one z-variable");
}

// ----------------------------------------------------------- LL indices

struct LLIndexData {
  char type = 'A';  // A, B, C, D, E, F
  long tau = 1;
  long coxeter = 2;
  mpz_class order = 2;
  long alpha = 2;
};

inline mpz_class factorial(long n) {
  mpz_class r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline LLIndexData ll_index_data(char type, long tau) {
  LLIndexData d;
  d.type = type;
  d.tau = tau;
  auto bad = [&] { return InputError("invalid Weyl type " + std::string(1, type) + std::to_string(tau)); };
  switch (type) {
    case 'A':
      if (tau < 1) throw bad();
      d.coxeter = tau + 1;
      d.order = factorial(tau + 1);
      d.alpha = d.coxeter;
      break;
    case 'B':
    case 'C':
      if (tau < 2) throw bad();
      d.coxeter = 2 * tau;
      d.order = factorial(tau) * (mpz_class(1) << tau);
      d.alpha = type == 'B' ? 2 : 2 * tau - 2;
      break;
    case 'D':
      if (tau < 4) throw bad();
      d.coxeter = 2 * tau - 2;
      d.order = factorial(tau) * (mpz_class(1) << (tau - 1));
      d.alpha = d.coxeter;
      break;
    case 'E':
      if (tau == 6) d.order = 51840, d.coxeter = 12;
      else if (tau == 7) d.order = 2903040, d.coxeter = 18;
      else if (tau == 8) d.order = 696729600, d.coxeter = 30;
      else throw bad();
      d.alpha = d.coxeter;
      break;
    case 'F':
      if (tau != 4) throw bad();
      d.coxeter = 12;
      d.order = 1152;
      d.alpha = 6;
      break;
    default: throw bad();
  }
  return d;
}

/// ((n-1) h + alpha)^tau tau! / |W| with n replaced by n/2 for sk.
inline mpz_class ll_index(char type, long tau, long n, MatrixKind kind) {
  if (kind == MatrixKind::sk) {
    if (n % 2 != 0) throw InputError("skew-symmetric size must be even");
    n /= 2;
  }
  if (n < 1) throw InputError("matrix size must be positive");
  LLIndexData d = ll_index_data(type, tau);
  mpz_class base = (n - 1) * d.coxeter + d.alpha;
  mpz_class num;
  mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(tau));
  num *= factorial(tau);
  if (num % d.order != 0) throw Error("index is not an integer");
  return num / d.order;
}

/// Index for the corank-3 I and II series: 2(2tau-1)^tau for I_tau,
/// 2*15^3, 12^5 and 70*21^4 for II4, II5, II6.
inline mpz_class ll_index_table1(const std::string& id) {
  auto power = [](long b, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
    return r;
  };
  if (id == "II4") return 2 * power(15, 3);
  if (id == "II5") return power(12, 5);
  if (id == "II6") return 70 * power(21, 4);
  if (id.size() >= 2 && id[0] == 'I' && id[1] != 'I') {
    long tau = std::stol(id.substr(1));
    if (tau < 2) throw InputError("I_tau needs tau >= 2");
    return 2 * power(2 * tau - 1, static_cast<unsigned long>(tau));
  }
  throw InputError("unknown series id '" + id + "'");
}

/// Degree of the map to critical-value polynomials from weights alone:
/// D^tau tau! / prod w(l_i), D the weighted degree of det (Pf).
inline mpz_class ll_degree_from_weights(const MatrixFamily& f) {
  WeightSystem w = require_weights(f, true);
  auto d = weighted_degree(discriminant_function(f.matrix()), w.all_weights());
  if (!d) throw Error("discriminant function is not quasi-homogeneous");
  long tau = static_cast<long>(f.params().size());
  mpz_class num, den = 1;
  mpz_class base = *d;
  mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(tau));
  num *= factorial(tau);
  for (const auto& [p, x] : w.param_weights) den *= x;
  if (num % den != 0) throw Error("weighted degree is not an integer");
  return num / den;
}

}  // namespace msing
