#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "msing/poly.hpp"

namespace msing {

using RationalMatrix = std::vector<std::vector<Scalar>>;

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    Scalar inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      Scalar f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(RationalMatrix a, std::size_t cols) { return rref(a, cols).size(); }

/// Basis of {x : A x = 0}.
inline std::vector<std::vector<Scalar>> nullspace(RationalMatrix a, std::size_t cols) {
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact phase-one simplex (Bland's rule): some t with rows * t >= 1, t free,
/// or nullopt when the system is infeasible.
inline std::optional<std::vector<Scalar>> strictly_positive_combination(const RationalMatrix& rows,
                                                                         std::size_t vars) {
  std::size_t m = rows.size();
  if (m == 0) return std::vector<Scalar>(vars, Scalar(0));
  // columns: t+ (vars), t- (vars), surplus (m), artificial (m), rhs
  std::size_t n_cols = 2 * vars + 2 * m;
  RationalMatrix tab(m, std::vector<Scalar>(n_cols + 1, Scalar(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < vars; ++j) {
      tab[i][j] = rows[i][j];
      tab[i][vars + j] = -rows[i][j];
    }
    tab[i][2 * vars + i] = -1;
    tab[i][2 * vars + m + i] = 1;
    tab[i][n_cols] = 1;
    basis[i] = 2 * vars + m + i;
  }
  // objective: minimize sum of artificials; reduced costs of the phase-one problem
  std::vector<Scalar> cost(n_cols + 1, Scalar(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n_cols; ++j)
      if (j < 2 * vars + m || j == n_cols) cost[j] -= tab[i][j];
  for (int guard = 0; guard < 10000; ++guard) {
    std::size_t enter = n_cols;
    for (std::size_t j = 0; j < n_cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == n_cols) break;
    std::size_t leave = m;
    Scalar best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Scalar ratio = tab[i][n_cols] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded in phase one cannot happen; stop defensively
    Scalar piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Scalar f = tab[i][enter];
      for (std::size_t j = 0; j <= n_cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (cost[enter] != 0) {
      Scalar f = cost[enter];
      for (std::size_t j = 0; j <= n_cols; ++j) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[n_cols] != 0) return std::nullopt;  // artificial sum stays positive
  std::vector<Scalar> t(vars, Scalar(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < vars) t[basis[i]] += tab[i][n_cols];
    else if (basis[i] < 2 * vars) t[basis[i] - vars] -= tab[i][n_cols];
  }
  return t;
}

/// Scales a rational vector to the primitive integer vector in its direction.
inline std::vector<Scalar> primitive_integer_vector(std::vector<Scalar> v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  for (auto& x : v) {
    x *= l;
    g = gcd(g, mpz_class(x.get_num()));
  }
  if (g != 0 && g != 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace msing
