#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msing/family.hpp"
#include "msing/linalg.hpp"

namespace msing {

using WeightMap = std::map<Var, long>;

/// Positive variable weights plus the row/column splitting of entry degrees:
/// deg m_ij = delta[i] + delta_prime[j]. For sym and sk, delta_prime == delta.
struct WeightSystem {
  MatrixKind kind = MatrixKind::sym;
  WeightMap weights;
  WeightMap param_weights;  // empty unless parameters were weighted
  std::vector<long> delta;
  std::vector<long> delta_prime;

  long entry_degree(std::size_t i, std::size_t j) const { return delta[i] + delta_prime[j]; }

  long max_weight() const {
    long w = 1;
    for (const auto& [v, x] : weights) w = std::max(w, x);
    return w;
  }

  WeightMap all_weights() const {
    WeightMap r = weights;
    r.insert(param_weights.begin(), param_weights.end());
    return r;
  }
};

/// Weighted degree of a nonzero quasi-homogeneous polynomial; nullopt if the
/// polynomial is zero, inhomogeneous, or mentions an unweighted variable.
inline std::optional<long> weighted_degree(const Poly& p, const WeightMap& w) {
  std::optional<long> d;
  for (const auto& [m, c] : p.terms()) {
    long s = 0;
    for (const auto& [v, e] : m.powers()) {
      auto it = w.find(v);
      if (it == w.end()) return std::nullopt;
      s += it->second * static_cast<long>(e);
    }
    if (d && *d != s) return std::nullopt;
    d = s;
  }
  return d;
}

inline long monomial_weight(const Monomial& m, const WeightMap& w) {
  long s = 0;
  for (const auto& [v, e] : m.powers()) s += w.at(v) * static_cast<long>(e);
  return s;
}

namespace detail {

inline long to_long(const Scalar& q) {
  if (!is_integer(q)) throw Error("internal: non-integral weight " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw Error("weight too large");
  return q.get_num().get_si();
}

// Solves the weight equations for a matrix over the variable list `vars`.
// Unknown layout: weights of vars, then delta, then delta' (sq only).
inline std::optional<WeightSystem> solve_matrix_weights(const PolyMatrix& m, const std::vector<VarDecl>& vars) {
  std::size_t s = vars.size(), n = m.size();
  bool sq = m.kind() == MatrixKind::sq;
  std::size_t cols = s + n + (sq ? n : 0);
  std::map<Var, std::size_t> index;
  for (std::size_t i = 0; i < s; ++i) index[vars[i].name] = i;
  auto delta_col = [&](std::size_t i) { return s + i; };
  auto delta_prime_col = [&](std::size_t j) { return sq ? s + n + j : s + j; };

  RationalMatrix eqs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!sq && j < i) continue;
      const Poly& e = m(i, j);
      for (const auto& [mono, c] : e.terms()) {
        std::vector<Scalar> row(cols, Scalar(0));
        for (const auto& [v, x] : mono.powers()) {
          auto it = index.find(v);
          if (it == index.end()) throw InputError("weights: undeclared variable '" + v + "'");
          row[it->second] += static_cast<long>(x);
        }
        row[delta_col(i)] -= 1;
        row[delta_prime_col(j)] -= 1;
        eqs.push_back(std::move(row));
      }
    }
  if (sq) {
    std::vector<Scalar> row(cols, Scalar(0));
    row[delta_col(0)] = 1;
    row[delta_prime_col(0)] = -1;
    eqs.push_back(std::move(row));
  }
  // declared weights fix the ratios between weighted variables
  std::optional<std::size_t> ref;
  for (std::size_t i = 0; i < s; ++i) {
    if (!vars[i].weight) continue;
    if (!ref) {
      ref = i;
      continue;
    }
    std::vector<Scalar> row(cols, Scalar(0));
    row[i] = *vars[*ref].weight;
    row[*ref] = -*vars[i].weight;
    eqs.push_back(std::move(row));
  }

  auto basis = nullspace(eqs, cols);
  std::vector<Scalar> sol;
  if (basis.empty()) return std::nullopt;
  if (basis.size() == 1) {
    sol = basis[0];
    int sign = 0;
    for (std::size_t i = 0; i < s; ++i) {
      int sg = sgn(sol[i]);
      if (sg == 0) return std::nullopt;
      if (sign == 0) sign = sg;
      if (sg != sign) return std::nullopt;
    }
    if (sign < 0)
      for (auto& x : sol) x = -x;
  } else {
    // weights as combinations of the basis; require every weight >= 1
    RationalMatrix rows(s, std::vector<Scalar>(basis.size()));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t b = 0; b < basis.size(); ++b) rows[i][b] = basis[b][i];
    auto t = strictly_positive_combination(rows, basis.size());
    if (!t) return std::nullopt;
    sol.assign(cols, Scalar(0));
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t c = 0; c < cols; ++c) sol[c] += (*t)[b] * basis[b][c];
  }
  sol = primitive_integer_vector(std::move(sol));
  if (ref) {
    Scalar f = Scalar(*vars[*ref].weight) / sol[*ref];
    std::vector<Scalar> scaled = sol;
    bool integral = true;
    for (auto& x : scaled) {
      x *= f;
      integral = integral && is_integer(x);
    }
    if (integral) sol = std::move(scaled);
  }

  WeightSystem w;
  w.kind = m.kind();
  for (std::size_t i = 0; i < s; ++i) w.weights[vars[i].name] = to_long(sol[i]);
  for (std::size_t i = 0; i < n; ++i) {
    w.delta.push_back(to_long(sol[delta_col(i)]));
    w.delta_prime.push_back(to_long(sol[delta_prime_col(i)]));
  }
  return w;
}

}  // namespace detail

/// Quasi-homogeneous weights of the germ (parameters set to zero), or of the
/// whole family with weighted parameters when `include_params` is set.
inline std::optional<WeightSystem> solve_weights(const MatrixFamily& f, bool include_params = false) {
  if (!include_params) return detail::solve_matrix_weights(f.germ(), f.vars());
  std::vector<VarDecl> all = f.vars();
  all.insert(all.end(), f.params().begin(), f.params().end());
  auto w = detail::solve_matrix_weights(f.matrix(), all);
  if (!w) return w;
  for (const auto& p : f.params()) {
    w->param_weights[p.name] = w->weights.at(p.name);
    w->weights.erase(p.name);
  }
  return w;
}

/// Like solve_weights but throws when the family is not quasi-homogeneous.
inline WeightSystem require_weights(const MatrixFamily& f, bool include_params = false) {
  auto w = solve_weights(f, include_params);
  if (!w) throw InputError("family " + f.name() + " is not quasi-homogeneous");
  return *w;
}

/// Common positive weights making every polynomial quasi-homogeneous, each
/// with its own degree. Zero polynomials impose nothing.
inline std::optional<WeightMap> solve_common_weights(const std::vector<Poly>& polys, const std::vector<Var>& vars) {
  std::size_t n = polys.size();
  PolyMatrix m(MatrixKind::sq, std::max<std::size_t>(n, 1));
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, polys[i]);
  std::vector<VarDecl> decls;
  for (const auto& v : vars) decls.push_back({v, std::nullopt});
  auto w = detail::solve_matrix_weights(m, decls);
  if (!w) return std::nullopt;
  return w->weights;
}

inline std::optional<WeightMap> solve_poly_weights(const Poly& p, const std::vector<Var>& vars) {
  return solve_common_weights({p}, vars);
}

/// Checks e(M) = D M + M D' with e the weighted Euler field, exactly.
inline bool verify_euler_identity(const PolyMatrix& m, const WeightSystem& w) {
  WeightMap all = w.all_weights();
  std::size_t n = m.size();
  if (w.delta.size() != n || w.delta_prime.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& e = m(i, j);
      Poly euler;
      for (const auto& v : e.variables()) {
        auto it = all.find(v);
        if (it == all.end()) return false;
        euler += Poly::var(v) * diff(e, v) * Scalar(it->second);
      }
      if (euler != e * Scalar(w.entry_degree(i, j))) return false;
    }
  return true;
}

inline bool verify_euler_identity(const MatrixFamily& f, const WeightSystem& w) {
  return verify_euler_identity(w.param_weights.empty() ? f.germ() : f.matrix(), w);
}

}  // namespace msing
