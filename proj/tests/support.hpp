#pragma once

// Seeded generators for the property tests.

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "msing/msing.hpp"

namespace gen {

using msing::Poly;
using msing::Scalar;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Scalar rational(long span = 5, long max_den = 4) {
    return msing::make_scalar(integer(-span, span), integer(1, max_den));
  }

  Scalar nonzero_rational(long span = 5, long max_den = 4) {
    Scalar q;
    do q = rational(span, max_den);
    while (q == 0);
    return q;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(eng_() >> 11) / static_cast<double>(1ULL << 53);
  }

  /// Sparse polynomial with up to `terms` monomials of total degree <= max_deg.
  Poly poly(const std::vector<std::string>& vars, int terms = 4, int max_deg = 3) {
    Poly p;
    for (int t = 0; t < terms; ++t) {
      Poly m = rational();
      int deg = static_cast<int>(integer(0, max_deg));
      for (int d = 0; d < deg; ++d) m *= Poly::var(vars[static_cast<std::size_t>(integer(0, static_cast<long>(vars.size()) - 1))]);
      p += m;
    }
    return p;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// n x n skew-symmetric matrix of random polynomials.
inline msing::PolyMatrix skew_poly_matrix(Rng& r, std::size_t n, const std::vector<std::string>& vars) {
  msing::PolyMatrix m(msing::MatrixKind::sk, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, r.poly(vars, 2, 1));
  return m;
}

inline msing::PolyMatrix constant_matrix(Rng& r, std::size_t n) {
  msing::PolyMatrix m(msing::MatrixKind::sq, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Poly(r.rational()));
  return m;
}

inline msing::ComplexSkewMatrix complex_skew(Rng& r, std::size_t n) {
  msing::ComplexSkewMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.set(i, j, {r.uniform(-1, 1), r.uniform(-1, 1)});
  return a;
}

/// Leibniz determinant of a constant matrix, as an independent oracle.
inline Scalar leibniz_det(const std::vector<std::vector<Scalar>>& a) {
  std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Scalar total = 0;
  do {
    long inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar prod = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) prod *= a[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Number of monomials x^i y^j outside the monomial ideal <x^a, y^b>.
inline long standard_monomials(long a, long b) {
  long count = 0;
  for (long i = 0; i < a + 3; ++i)
    for (long j = 0; j < b + 3; ++j)
      if (i < a && j < b) ++count;
  return count;
}

}  // namespace gen
