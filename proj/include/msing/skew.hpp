#pragma once

#include <cmath>
#include <complex>
#include <istream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "msing/roots.hpp"

namespace msing {

/// Even-size complex skew-symmetric matrix, exactly skew after construction.
class ComplexSkewMatrix {
 public:
  using Grid = std::vector<std::vector<Complex>>;

  explicit ComplexSkewMatrix(std::size_t n) : a_(n, std::vector<Complex>(n, Complex(0))) {
    if (n % 2 != 0) throw InputError("skew-symmetric matrices need even size");
  }

  /// Accepts A with |A + A^T| <= 1e-12 and stores (A - A^T)/2.
  explicit ComplexSkewMatrix(const Grid& a) : ComplexSkewMatrix(a.size()) {
    std::size_t n = a.size();
    for (const auto& row : a)
      if (row.size() != n) throw InputError("matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(a[i][j] + a[j][i]) > 1e-12) throw InputError("matrix is not skew-symmetric");
        a_[i][j] = (a[i][j] - a[j][i]) / 2.0;
      }
  }

  static ComplexSkewMatrix J(std::size_t n, Complex scale = 1.0) {
    ComplexSkewMatrix m(n);
    for (std::size_t i = 0; i + 1 < n; i += 2) m.set(i, i + 1, scale);
    return m;
  }

  std::size_t size() const { return a_.size(); }
  Complex operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const Grid& grid() const { return a_; }

  void set(std::size_t i, std::size_t j, Complex v) {
    if (i == j) {
      if (v != Complex(0)) throw InputError("skew-symmetric diagonal must vanish");
      return;
    }
    a_[i][j] = v;
    a_[j][i] = -v;
  }

  ComplexSkewMatrix operator-(const ComplexSkewMatrix& o) const {
    ComplexSkewMatrix r(size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) r.a_[i][j] = a_[i][j] - o.a_[i][j];
    return r;
  }

  /// P^T A P for the permutation sending basis vector i to perm[i].
  ComplexSkewMatrix permuted(const std::vector<std::size_t>& perm) const {
    ComplexSkewMatrix r(size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) r.a_[i][j] = a_[perm[i]][perm[j]];
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << "size " << size() << "\n";
    for (const auto& row : a_) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) os << ' ';
        os << row[j].real() << (row[j].imag() < 0 ? "-" : "+") << std::abs(row[j].imag()) << 'i';
      }
      os << "\n";
    }
    return os.str();
  }

 private:
  Grid a_;
};

inline Complex sktr(const ComplexSkewMatrix& a) {
  Complex s(0);
  for (std::size_t i = 0; i + 1 < a.size(); i += 2) s += a(i, i + 1);
  return s;
}

/// Pfaffian by skew Gaussian elimination with pivoting (Parlett-Reid);
/// Pf(J) = 1.
inline Complex pfaffian_numeric(const ComplexSkewMatrix& m) {
  auto a = m.grid();
  std::size_t n = a.size();
  Complex pf(1);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t kp = k + 1;
    for (std::size_t i = k + 2; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[kp][k])) kp = i;
    if (kp != k + 1) {
      std::swap(a[k + 1], a[kp]);
      for (auto& row : a) std::swap(row[k + 1], row[kp]);
      pf = -pf;
    }
    if (a[k + 1][k] == Complex(0)) return Complex(0);
    Complex piv = a[k][k + 1];
    pf *= piv;
    if (k + 2 < n) {
      std::vector<Complex> tau(n, Complex(0));
      for (std::size_t j = k + 2; j < n; ++j) tau[j] = a[k][j] / piv;
      for (std::size_t i = k + 2; i < n; ++i)
        for (std::size_t j = k + 2; j < n; ++j) a[i][j] += tau[i] * a[j][k + 1] - a[i][k + 1] * tau[j];
    }
  }
  return pf;
}

/// Determinant by partial-pivot LU, for the Pf^2 = det consistency check.
inline Complex determinant_numeric(std::vector<std::vector<Complex>> a) {
  std::size_t n = a.size();
  Complex d(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (a[p][k] == Complex(0)) return Complex(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      d = -d;
    }
    d *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return d;
}

/// Coefficients (low degree first) of the polynomial through (x_i, y_i).
inline ComplexUnivariate interpolate(const std::vector<double>& x, const std::vector<Complex>& y) {
  std::size_t m = x.size();
  std::vector<Complex> dd = y;
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - j]);
  // expand the Newton form from the innermost term
  std::vector<Complex> c = {dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<Complex> next(c.size() + 1, Complex(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * x[i];
    }
    next[0] += dd[i];
    c = std::move(next);
  }
  return ComplexUnivariate(std::move(c));
}

/// The characteristic polynomial lambda -> Pf(A - lambda J), interpolated
/// from k + 1 Pfaffian evaluations at integer nodes start, ..., start + k.
inline ComplexUnivariate skew_characteristic(const ComplexSkewMatrix& a, double start = 0) {
  std::size_t k = a.size() / 2;
  ComplexSkewMatrix j = ComplexSkewMatrix::J(a.size());
  std::vector<double> x;
  std::vector<Complex> y;
  for (std::size_t i = 0; i <= k; ++i) {
    double node = start + static_cast<double>(i);
    x.push_back(node);
    ComplexSkewMatrix shifted = a;
    for (std::size_t r = 0; r + 1 < a.size(); r += 2) shifted.set(r, r + 1, a(r, r + 1) - node);
    y.push_back(pfaffian_numeric(shifted));
  }
  return interpolate(x, y);
}

/// Roots of Pf(A - lambda J) = 0, polished by Newton steps on direct
/// Pfaffian evaluations.
inline std::vector<Complex> skew_eigenvalues(const ComplexSkewMatrix& a) {
  std::size_t k = a.size() / 2;
  if (k == 0) return {};
  double sign = k % 2 == 0 ? 1.0 : -1.0;
  ComplexUnivariate chi;
  for (double start : {0.0, 0.5, -3.0, 7.25}) {
    chi = skew_characteristic(a, start);
    if (chi.degree() == static_cast<int>(k) && std::abs(chi.leading() - sign) <= 1e-6) break;
  }
  if (chi.degree() != static_cast<int>(k) || std::abs(chi.leading() - sign) > 1e-6)
    throw Error("skew characteristic polynomial interpolation is degenerate");
  // the leading coefficient is exactly (-1)^k
  std::vector<Complex> c = chi.coeffs();
  c.back() = sign;
  chi = ComplexUnivariate(std::move(c));
  std::vector<Complex> roots = aberth_roots(chi, RootSettings{1000, 1e-8});
  // A multiple eigenvalue comes back as a ring of roots of radius about
  // eps^(1/m). Its centre is the simple root of the (m-1)-th derivative;
  // snap the ring there when the lower derivatives vanish too.
  std::vector<std::size_t> group(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) group[i] = i;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[j] - roots[i]) < 1e-3 * (1 + std::abs(roots[i]))) {
        std::size_t from = group[j], to = group[i];
        for (auto& g : group)
          if (g == from) g = to;
      }
  std::vector<bool> done(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::vector<std::size_t> cluster;
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (group[j] == i) cluster.push_back(j);
    if (cluster.size() < 2) continue;
    Complex centre = 0;
    for (auto j : cluster) centre += roots[j];
    centre /= static_cast<double>(cluster.size());
    std::vector<ComplexUnivariate> ds = {chi};
    for (std::size_t m = 1; m < cluster.size() + 1; ++m) ds.push_back(ds.back().derivative());
    const ComplexUnivariate& top = ds[cluster.size() - 1];
    for (int it = 0; it < 5; ++it) {
      Complex slope = ds[cluster.size()](centre);
      if (std::abs(slope) == 0) break;
      centre -= top(centre) / slope;
    }
    bool multiple = true;
    for (std::size_t m = 0; m + 1 < cluster.size(); ++m)
      multiple = multiple && std::abs(ds[m](centre)) <= 1e-8 * detail::evaluation_scale(ds[m], centre);
    if (!multiple) continue;
    for (auto j : cluster) {
      roots[j] = centre;
      done[j] = true;
    }
  }
  ComplexUnivariate dchi = chi.derivative();
  auto direct = [&](Complex lam) {
    ComplexSkewMatrix s = a;
    for (std::size_t r = 0; r + 1 < a.size(); r += 2) s.set(r, r + 1, a(r, r + 1) - lam);
    return pfaffian_numeric(s);
  };
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (done[i]) continue;
    Complex& z = roots[i];
    for (int it = 0; it < 3; ++it) {
      Complex d = dchi(z);
      if (std::abs(d) < 1e-10) break;
      Complex next = z - direct(z) / d;
      if (std::abs(direct(next)) < std::abs(direct(z))) z = next;
      else break;
    }
  }
  return roots;
}

/// Every 2x2 cell is [[z, w], [-conj(w), conj(z)]] and diagonal cells are real.
inline bool is_quaternionic(const ComplexSkewMatrix& a, double tol = 1e-12) {
  std::size_t k = a.size() / 2;
  for (std::size_t bi = 0; bi < k; ++bi)
    for (std::size_t bj = 0; bj < k; ++bj) {
      Complex z = a(2 * bi, 2 * bj), w = a(2 * bi, 2 * bj + 1);
      Complex lw = a(2 * bi + 1, 2 * bj), lz = a(2 * bi + 1, 2 * bj + 1);
      if (std::abs(lw + std::conj(w)) > tol || std::abs(lz - std::conj(z)) > tol) return false;
      if (bi == bj && (std::abs(z.imag()) > tol || std::abs(w.imag()) > tol)) return false;
    }
  return true;
}

namespace detail {

inline Complex unit_box(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double re = u(rng);
  double im = u(rng);
  return {re, im};
}

}  // namespace detail

/// Random quaternionic skew matrix of size 2k: real and imaginary parts of
/// every cell parameter uniform in [-1, 1], diagonal cells real.
inline ComplexSkewMatrix random_quaternionic(std::size_t k, std::mt19937_64& rng) {
  ComplexSkewMatrix m(2 * k);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t bi = 0; bi < k; ++bi) {
    m.set(2 * bi, 2 * bi + 1, u(rng));
    for (std::size_t bj = bi + 1; bj < k; ++bj) {
      Complex z = detail::unit_box(rng), w = detail::unit_box(rng);
      m.set(2 * bi, 2 * bj, z);
      m.set(2 * bi, 2 * bj + 1, w);
      m.set(2 * bi + 1, 2 * bj, -std::conj(w));
      m.set(2 * bi + 1, 2 * bj + 1, std::conj(z));
    }
  }
  return m;
}

/// Random complex skew matrix of size 2k with entries in the unit box.
inline ComplexSkewMatrix random_skew(std::size_t k, std::mt19937_64& rng) {
  ComplexSkewMatrix m(2 * k);
  for (std::size_t i = 0; i < 2 * k; ++i)
    for (std::size_t j = i + 1; j < 2 * k; ++j) m.set(i, j, detail::unit_box(rng));
  return m;
}

struct RealityReport {
  double max_im = 0;
  std::size_t samples = 0;
  std::string worst_matrix;  // serialized in the matrix file format
};

/// Largest |Im| of skew eigenvalues over random quaternionic (or, for the
/// control, unrestricted) matrices of size 2k.
inline RealityReport verify_reality(std::size_t k, std::size_t samples, std::uint64_t seed, bool control = false) {
  if (k < 1 || k > 6) throw InputError("verify_reality needs 1 <= k <= 6");
  if (samples < 1) throw InputError("verify_reality needs at least one sample");
  std::mt19937_64 rng(seed);
  RealityReport r;
  r.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    ComplexSkewMatrix a = control ? random_skew(k, rng) : random_quaternionic(k, rng);
    double worst = 0;
    for (const auto& z : skew_eigenvalues(a)) worst = std::max(worst, std::abs(z.imag()));
    if (worst > r.max_im || s == 0) {
      r.max_im = std::max(r.max_im, worst);
      r.worst_matrix = a.to_string();
    }
  }
  return r;
}

/// Parses "a", "a+bi", "a-bi", "bi", "i", "-i".
inline Complex parse_complex(const std::string& tok) {
  auto number = [&](const std::string& s, bool imag) -> double {
    if (imag && (s.empty() || s == "+")) return 1.0;
    if (imag && s == "-") return -1.0;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InputError("bad complex number '" + tok + "'");
    }
    if (used != s.size()) throw InputError("bad complex number '" + tok + "'");
    return v;
  };
  if (tok.empty()) throw InputError("empty complex number");
  if (tok.back() != 'i') return {number(tok, false), 0.0};
  std::string body = tok.substr(0, tok.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < body.size(); ++i)
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') split = i;
  if (split == std::string::npos) return {0.0, number(body, true)};
  return {number(body.substr(0, split), false), number(body.substr(split), true)};
}

/// Matrix file: "size N" then N rows of N complex entries.
inline ComplexSkewMatrix parse_matrix_file(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) tokens.push_back(t);
  }
  if (tokens.size() < 2 || tokens[0] != "size") throw InputError("matrix file must start with 'size N'");
  std::size_t n = 0;
  try {
    n = std::stoul(tokens[1]);
  } catch (const std::exception&) {
    throw InputError("bad matrix size '" + tokens[1] + "'");
  }
  if (tokens.size() != 2 + n * n) throw InputError("matrix file needs " + std::to_string(n * n) + " entries");
  ComplexSkewMatrix::Grid g(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = parse_complex(tokens[2 + i * n + j]);
  return ComplexSkewMatrix(g);
}

}  // namespace msing
