#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "msing/poly.hpp"

namespace msing {

enum class MatrixKind { sym, sq, sk };

inline std::string_view to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::sym: return "sym";
    case MatrixKind::sq: return "sq";
    case MatrixKind::sk: return "sk";
  }
  return "?";
}

inline MatrixKind parse_kind(std::string_view s) {
  if (s == "sym") return MatrixKind::sym;
  if (s == "sq") return MatrixKind::sq;
  if (s == "sk") return MatrixKind::sk;
  throw InputError("unknown matrix kind '" + std::string(s) + "' (expected sym, sq or sk)");
}

/// n x n grid of polynomials tagged by kind. Setting an entry of a sym or sk
/// matrix also sets its mirror, so the kind invariant always holds.
class PolyMatrix {
 public:
  PolyMatrix(MatrixKind kind, std::size_t n) : kind_(kind), n_(n), cells_(n * n) {
    if (kind == MatrixKind::sk && n % 2 != 0) throw InputError("skew-symmetric matrices need even size");
  }

  static PolyMatrix identity(MatrixKind kind, std::size_t n) {
    PolyMatrix m(kind, n);
    if (kind == MatrixKind::sk) {
      for (std::size_t i = 0; i + 1 < n; i += 2) m.set(i, i + 1, Poly(1L));
    } else {
      for (std::size_t i = 0; i < n; ++i) m.set(i, i, Poly(1L));
    }
    return m;
  }

  MatrixKind kind() const { return kind_; }
  std::size_t size() const { return n_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, Poly p) {
    if (i >= n_ || j >= n_) throw InputError("matrix index out of range");
    switch (kind_) {
      case MatrixKind::sq: cells_[i * n_ + j] = std::move(p); break;
      case MatrixKind::sym:
        cells_[j * n_ + i] = p;
        cells_[i * n_ + j] = std::move(p);
        break;
      case MatrixKind::sk:
        if (i == j) {
          if (!p.is_zero()) throw InputError("skew-symmetric matrix with nonzero diagonal entry");
          return;
        }
        cells_[j * n_ + i] = -p;
        cells_[i * n_ + j] = std::move(p);
        break;
    }
  }

  /// Same entries, different kind tag; checks the target kind's symmetry.
  PolyMatrix retagged(MatrixKind kind) const {
    PolyMatrix m(kind, n_);
    m.cells_ = cells_;
    if (!m.satisfies_kind()) throw InputError("entries do not satisfy the requested kind");
    return m;
  }

  bool satisfies_kind() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (kind_ == MatrixKind::sym && (*this)(i, j) != (*this)(j, i)) return false;
        if (kind_ == MatrixKind::sk && (*this)(i, j) != -(*this)(j, i)) return false;
      }
    return true;
  }

  template <class F>
  PolyMatrix map(F&& f) const {
    PolyMatrix m(kind_, n_);
    for (std::size_t k = 0; k < cells_.size(); ++k) m.cells_[k] = f(cells_[k]);
    return m;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.cells_ == b.cells_;
  }

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw InputError("matrix size mismatch");
    MatrixKind k = a.kind_ == b.kind_ ? a.kind_ : MatrixKind::sq;
    PolyMatrix r(k, a.n_);
    for (std::size_t i = 0; i < a.cells_.size(); ++i) r.cells_[i] = a.cells_[i] + b.cells_[i];
    return r;
  }

  /// Plain matrix product, tagged sq.
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_) throw InputError("matrix size mismatch");
    PolyMatrix r(MatrixKind::sq, a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) {
        Poly s;
        for (std::size_t k = 0; k < a.n_; ++k) s += a(i, k) * b(k, j);
        r.cells_[i * a.n_ + j] = std::move(s);
      }
    return r;
  }

  const std::vector<Poly>& cells() const { return cells_; }

 private:
  MatrixKind kind_;
  std::size_t n_;
  std::vector<Poly> cells_;
};

namespace detail {

inline Poly cofactor_det(const std::vector<Poly>& a, std::size_t n, std::vector<std::size_t>& rows,
                         std::vector<std::size_t>& cols) {
  std::size_t m = rows.size();
  if (m == 0) return Poly(1L);
  if (m == 1) return a[rows[0] * n + cols[0]];
  if (m == 2)
    return a[rows[0] * n + cols[0]] * a[rows[1] * n + cols[1]] -
           a[rows[0] * n + cols[1]] * a[rows[1] * n + cols[0]];
  Poly d;
  std::size_t r0 = rows[0];
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < m; ++c) {
    const Poly& e = a[r0 * n + cols[c]];
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < m; ++k)
      if (k != c) sub_cols.push_back(cols[k]);
    Poly minor = cofactor_det(a, n, sub_rows, sub_cols);
    if (c % 2 == 0)
      d += e * minor;
    else
      d -= e * minor;
  }
  return d;
}

inline Poly bareiss_det(std::vector<Poly> a, std::size_t n) {
  if (n == 0) return Poly(1L);
  bool negate = false;
  Poly prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k].is_zero()) ++p;
      if (p == n) return Poly();
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      negate = !negate;
    }
    const Poly& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        a[i * n + j] = prev.is_constant() ? t * (Scalar(1) / prev.constant_term()) : exact_divide(std::move(t), prev);
      }
      a[i * n + k] = Poly();
    }
    prev = pivot;
  }
  Poly d = a[(n - 1) * n + (n - 1)];
  return negate ? -d : d;
}

inline Poly pfaffian_rec(const std::vector<Poly>& a, std::size_t n, std::vector<std::size_t>& idx) {
  if (idx.empty()) return Poly(1L);
  std::size_t i0 = idx[0];
  Poly r;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const Poly& e = a[i0 * n + idx[j]];
    if (e.is_zero()) continue;
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Poly sub = pfaffian_rec(a, n, rest);
    // first-row expansion; the sign is (-1)^(j+1) for 0-based position j
    if (j % 2 == 1)
      r += e * sub;
    else
      r -= e * sub;
  }
  return r;
}

}  // namespace detail

/// Determinant of the grid regardless of kind tag. Cofactor expansion up to
/// 4x4, fraction-free Bareiss elimination above.
inline Poly determinant_of_grid(const PolyMatrix& m) {
  std::size_t n = m.size();
  if (n <= 4) {
    std::vector<std::size_t> rows(n), cols(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
    return detail::cofactor_det(m.cells(), n, rows, cols);
  }
  return detail::bareiss_det(m.cells(), n);
}

/// Determinant of a sym or sq matrix; skew matrices go through pfaffian().
inline Poly det(const PolyMatrix& m) {
  if (m.kind() == MatrixKind::sk) throw InputError("det of a skew-symmetric family: use pfaffian (det = Pf^2)");
  return determinant_of_grid(m);
}

/// Pfaffian by recursive first-row expansion; Pf(J_2k) = +1.
inline Poly pfaffian(const PolyMatrix& m) {
  if (m.kind() != MatrixKind::sk) throw InputError("pfaffian needs a skew-symmetric matrix");
  if (m.size() % 2 != 0) throw InputError("pfaffian needs even size");
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pfaffian_rec(m.cells(), m.size(), idx);
}

/// det for sym/sq, Pf for sk: the function whose zero set is the discriminant.
inline Poly discriminant_function(const PolyMatrix& m) {
  return m.kind() == MatrixKind::sk ? pfaffian(m) : det(m);
}

}  // namespace msing
