#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "msing/quotient.hpp"

namespace msing {

enum class Equivalence { GL, SL };

inline Equivalence parse_equivalence(std::string_view s) {
  if (s == "gl" || s == "GL") return Equivalence::GL;
  if (s == "sl" || s == "SL") return Equivalence::SL;
  throw InputError("unknown equivalence '" + std::string(s) + "' (expected gl or sl)");
}

/// Independent entries of a kind, row-major: upper triangle with diagonal
/// (sym), strict upper triangle (sk), everything (sq).
inline std::vector<std::pair<std::size_t, std::size_t>> independent_entries(MatrixKind kind, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (kind == MatrixKind::sym && j < i) continue;
      if (kind == MatrixKind::sk && j <= i) continue;
      r.emplace_back(i, j);
    }
  return r;
}

inline std::vector<Poly> flatten(const PolyMatrix& m, MatrixKind kind) {
  std::vector<Poly> v;
  for (auto [i, j] : independent_entries(kind, m.size())) v.push_back(m(i, j));
  return v;
}

namespace detail {

// Constant matrices spanning gl_n or sl_n: all E_jl off the diagonal, and on
// the diagonal E_jj (GL) or E_jj - E_11 for j >= 2 (SL).
inline std::vector<PolyMatrix> lie_algebra_basis(std::size_t n, Equivalence eq) {
  std::vector<PolyMatrix> out;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      PolyMatrix e(MatrixKind::sq, n);
      if (j != l) {
        e.set(j, l, Poly(1L));
      } else if (eq == Equivalence::GL) {
        e.set(j, j, Poly(1L));
      } else {
        if (j == 0) continue;
        e.set(j, j, Poly(1L));
        e.set(0, 0, Poly(-1L));
      }
      out.push_back(std::move(e));
    }
  return out;
}

inline PolyMatrix transpose(const PolyMatrix& a) {
  PolyMatrix t(MatrixKind::sq, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t.set(i, j, a(j, i));
  return t;
}

}  // namespace detail

/// Extended tangent space of a matrix germ: dM/dx_i, plus A M and M B for
/// sq, or A M + M A^T for sym and sk, with A, B ranging over gl_n or sl_n.
/// Shifts are the entry degrees when weights are given.
inline SubmodulePresentation tangent_space(const PolyMatrix& m, const std::vector<Var>& vars, Equivalence eq,
                                           const std::optional<WeightSystem>& w = std::nullopt) {
  MatrixKind kind = m.kind();
  std::size_t n = m.size();
  SubmodulePresentation t;
  t.vars = vars;
  t.rank = independent_entries(kind, n).size();
  if (w)
    for (auto [i, j] : independent_entries(kind, n)) t.shifts.push_back(w->entry_degree(i, j));
  for (const auto& v : vars) t.add(flatten(m.map([&](const Poly& e) { return diff(e, v); }), kind));
  PolyMatrix msq = m.retagged(MatrixKind::sq);
  auto basis = detail::lie_algebra_basis(n, eq);
  if (kind == MatrixKind::sq) {
    for (const auto& a : basis) t.add(flatten(a * msq, kind));
    for (const auto& b : basis) t.add(flatten(msq * b, kind));
  } else {
    for (const auto& a : basis) t.add(flatten(a * msq + msq * detail::transpose(a), kind));
  }
  return t;
}

/// Tangent space of the germ of a family (parameters set to zero).
inline SubmodulePresentation tangent_space(const MatrixFamily& f, Equivalence eq) {
  return tangent_space(f.germ(), f.var_names(), eq, solve_weights(f));
}

/// Tjurina number: certified graded computation when the germ is
/// quasi-homogeneous, otherwise a truncated computation at `order`.
inline GradedQuotientReport tjurina(const MatrixFamily& f, Equivalence eq, std::optional<long> order = std::nullopt) {
  auto w = solve_weights(f);
  if (w) return graded_quotient_dim(tangent_space(f.germ(), f.var_names(), eq, w), w->weights);
  if (!order) throw InputError("family " + f.name() + " is not quasi-homogeneous; supply a truncation order");
  return truncated_quotient_dim(tangent_space(f.germ(), f.var_names(), eq), *order);
}

}  // namespace msing
