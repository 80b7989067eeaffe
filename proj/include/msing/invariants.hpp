#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "msing/tangent.hpp"

namespace msing {

inline std::vector<Var> sorted_variables(const std::vector<Poly>& ps) {
  std::set<Var> vs;
  for (const auto& p : ps)
    for (const auto& v : p.variables()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

/// Dimension of O / ideal, graded when the generators share positive
/// weights, otherwise by stabilized truncation.
inline GradedQuotientReport ideal_quotient_dim(const std::vector<Poly>& gens, const std::vector<Var>& vars) {
  auto t = ideal(gens, vars);
  if (auto w = solve_common_weights(gens, vars)) return graded_quotient_dim(t, *w);
  return stabilized_truncated_dim(t);
}

inline GradedQuotientReport milnor_report(const Poly& g, std::vector<Var> vars = {}) {
  if (vars.empty()) vars = sorted_variables({g});
  if (g.constant_term() != 0) throw InputError("milnor_number needs g(0) = 0");
  std::vector<Poly> jac;
  for (const auto& v : vars) jac.push_back(diff(g, v));
  // the Jacobian ideal of a quasi-homogeneous g is homogeneous for g's weights
  auto t = ideal(jac, vars);
  if (auto w = solve_poly_weights(g, vars)) return graded_quotient_dim(t, *w);
  return stabilized_truncated_dim(t);
}

/// Milnor number dim O / <dg/dz_1, ..., dg/dz_m>; throws when infinite.
inline long milnor_number(const Poly& g, std::vector<Var> vars = {}) {
  auto r = milnor_report(g, std::move(vars));
  if (!r.finite) throw Error("g = " + g.to_string() + " has no isolated critical point (Milnor number infinite)");
  return r.total;
}

inline GradedQuotientReport boundary_algebra_report(const Poly& h, const Var& x, long multiplier) {
  if (multiplier < 1) throw InputError("multiplier must be >= 1");
  std::vector<Var> vars = sorted_variables({h});
  if (std::find(vars.begin(), vars.end(), x) == vars.end()) {
    vars.push_back(x);
    std::sort(vars.begin(), vars.end());
  }
  std::vector<Poly> gens;
  for (const auto& v : vars)
    if (v != x) gens.push_back(diff(h, v));
  gens.push_back(h + Poly::var(x) * diff(h, x) * Scalar(multiplier));
  auto t = ideal(gens, vars);
  if (auto w = solve_poly_weights(h, vars)) return graded_quotient_dim(t, *w);
  return stabilized_truncated_dim(t);
}

/// dim O / <dh/dz_j, h + multiplier * x * dh/dx> for a boundary function h(x, z).
inline long boundary_algebra_dim(const Poly& h, const Var& x, long multiplier) {
  auto r = boundary_algebra_report(h, x, multiplier);
  if (!r.finite) throw Error("boundary algebra of h = " + h.to_string() + " is infinite-dimensional");
  return r.total;
}

/// The corner function of a family in boundary normal form: the (1,1) entry
/// (sk: (1,2)) plus the diagonal (pair) coordinates from index 3 on. nullopt
/// when the rest of the germ is not the normal form.
inline std::optional<Poly> boundary_corner_function(const MatrixFamily& f) {
  MatrixKind kind = f.kind();
  std::size_t n = f.size();
  if (n < 2 || (kind == MatrixKind::sk && n < 4)) return std::nullopt;
  PolyMatrix g = f.germ();
  auto [base, coords] = detail::trace_zero_part(kind, n, 3);
  Poly h = kind == MatrixKind::sk ? g(0, 1) - base(0, 1) : g(0, 0) - base(0, 0);
  if (g != base + corner_unit(kind, n, h)) return std::nullopt;
  for (const auto& c : coords)
    if (c != boundary_coordinate(kind, n) && h.mentions(c)) return std::nullopt;
  return h;
}

struct MuDeltaResult {
  long value = 0;
  std::string method;  // "milnor", "boundary" or "tjurina"
};

/// Singular Milnor number, restricted to shapes where its equality with a
/// computable invariant is a theorem: corner g(z) (Milnor number of g),
/// boundary forms (boundary algebra), and the corank-3 I and II series
/// (SL Tjurina number). Anything else is refused.
inline MuDeltaResult mu_delta(const MatrixFamily& f) {
  if (f.origin() && f.origin()->is_table1()) {
    auto r = tjurina(f, Equivalence::SL);
    if (!r.finite) throw Error("Tjurina number of " + f.name() + " is infinite");
    return {r.total, "tjurina"};
  }
  if (auto h = boundary_corner_function(f)) {
    Var x = boundary_coordinate(f.kind(), f.size());
    Poly g = *h + Poly::var(x);
    if (!g.mentions(x)) {
      std::vector<Var> zs = sorted_variables({g});
      return {milnor_number(g, zs), "milnor"};
    }
    long mult = f.kind() == MatrixKind::sk ? static_cast<long>(f.size() / 2) - 1 : static_cast<long>(f.size()) - 1;
    return {boundary_algebra_dim(*h, x, mult), "boundary"};
  }
  throw Unsupported("mu_delta: unsupported shape for " + f.name() +
                    "; mu_Delta = tau_SL is only conjectural for families outside the corner, boundary and "
                    "corank-3 normal forms");
}

/// Milnor number of the curve {f1 = f2 = 0} in C^3:
/// dim O / <f1, 2x2 minors of the Jacobian of (f1, f2)> - mu(f1).
inline long icis_curve_milnor(const Poly& f1, const Poly& f2, std::vector<Var> vars = {}) {
  if (vars.empty()) vars = sorted_variables({f1, f2});
  std::vector<Poly> gens = {f1};
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      gens.push_back(diff(f1, vars[i]) * diff(f2, vars[j]) - diff(f1, vars[j]) * diff(f2, vars[i]));
  GradedQuotientReport r;
  auto t = ideal(gens, vars);
  if (auto w = solve_common_weights({f1, f2}, vars))
    r = graded_quotient_dim(t, *w);
  else
    r = stabilized_truncated_dim(t);
  if (!r.finite) throw Error("curve singularity is not isolated");
  return r.total - milnor_number(f1, vars);
}

}  // namespace msing
