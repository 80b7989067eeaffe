#pragma once

#include "msing/poly.hpp"
#include "msing/poly_matrix.hpp"

namespace msing {

/// Sylvester matrix of p and q with respect to v; rows of p first.
inline PolyMatrix sylvester_matrix(const Poly& p, const Poly& q, const Var& v) {
  unsigned m = p.degree(v), l = q.degree(v);
  std::size_t size = m + l;
  PolyMatrix s(MatrixKind::sq, size);
  for (unsigned r = 0; r < l; ++r)
    for (unsigned i = 0; i <= m; ++i) s.set(r, r + (m - i), p.coefficient_of(v, i));
  for (unsigned r = 0; r < m; ++r)
    for (unsigned j = 0; j <= l; ++j) s.set(l + r, r + (l - j), q.coefficient_of(v, j));
  return s;
}

/// Resultant in v: res(p, q) = lc(p)^deg(q) * prod over roots of p of q(root).
inline Poly resultant(const Poly& p, const Poly& q, const Var& v) {
  unsigned m = p.degree(v), l = q.degree(v);
  if (m == 0 && l == 0) throw InputError("resultant: both polynomials have degree 0 in " + v);
  if (p.is_zero() || q.is_zero()) return Poly();
  if (m == 0) return pow(p, l);
  if (l == 0) return pow(q, m);
  return determinant_of_grid(sylvester_matrix(p, q, v));
}

}  // namespace msing
