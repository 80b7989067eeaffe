#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "msing/parse.hpp"
#include "msing/poly_matrix.hpp"

namespace msing {

struct VarDecl {
  Var name;
  std::optional<long> weight;
};

/// Which catalog constructor produced a family, with its arguments.
struct CatalogEntry {
  enum class Constructor { L, A1, DamonPike, Boundary, I, II, IISquare };
  Constructor ctor = Constructor::L;
  MatrixKind kind = MatrixKind::sym;
  std::size_t n = 0;
  unsigned m = 0;      // A1: number of Morse variables
  unsigned k = 0;      // I: I_{k+1}
  unsigned index = 0;  // II: 4, 5 or 6
  Poly h;              // Boundary, DamonPike: corner function

  static std::string compact(const Poly& p) {
    std::string s = p.to_string();
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
  }

  std::string id() const {
    switch (ctor) {
      case Constructor::L: return "L:" + std::string(to_string(kind)) + ":" + std::to_string(n);
      case Constructor::A1:
        return "A1:" + std::string(to_string(kind)) + ":" + std::to_string(n) + ":" + std::to_string(m);
      case Constructor::DamonPike: return "DP:" + std::string(to_string(kind)) + ":" + std::to_string(n) + ":" + compact(h);
      case Constructor::Boundary: return "boundary:" + std::string(to_string(kind)) + ":" + std::to_string(n) + ":" + compact(h);
      case Constructor::I: return "I" + std::to_string(k + 1);
      case Constructor::II: return "II" + std::to_string(index);
      case Constructor::IISquare: return "II" + std::to_string(index) + "sq";
    }
    return "?";
  }

  /// Number of deformation parameters of the I and II series miniversal deformations.
  unsigned table1_tau() const {
    if (ctor == Constructor::I) return k + 1;
    if (ctor == Constructor::II || ctor == Constructor::IISquare) return index;
    return 0;
  }
  bool is_table1() const { return table1_tau() > 0; }
};

/// A polynomial matrix family over source variables and deformation parameters.
class MatrixFamily {
 public:
  MatrixFamily(std::string name, std::vector<VarDecl> vars, std::vector<VarDecl> params, PolyMatrix matrix,
               std::optional<Var> boundary = std::nullopt, std::optional<CatalogEntry> origin = std::nullopt)
      : name_(std::move(name)),
        vars_(std::move(vars)),
        params_(std::move(params)),
        matrix_(std::move(matrix)),
        boundary_(std::move(boundary)),
        origin_(std::move(origin)) {
    validate();
  }

  const std::string& name() const { return name_; }
  MatrixKind kind() const { return matrix_.kind(); }
  std::size_t size() const { return matrix_.size(); }
  const std::vector<VarDecl>& vars() const { return vars_; }
  const std::vector<VarDecl>& params() const { return params_; }
  const PolyMatrix& matrix() const { return matrix_; }
  const std::optional<Var>& boundary() const { return boundary_; }
  const std::optional<CatalogEntry>& origin() const { return origin_; }

  std::vector<Var> var_names() const { return names(vars_); }
  std::vector<Var> param_names() const { return names(params_); }

  /// The matrix with every deformation parameter set to zero.
  PolyMatrix germ() const {
    std::map<Var, Poly> zero;
    for (const auto& p : params_) zero.emplace(p.name, Poly());
    return matrix_.map([&](const Poly& e) { return substitute(e, zero); });
  }

  /// The matrix with the listed parameters specialized; the rest stay symbolic.
  PolyMatrix specialized(const std::map<Var, Scalar>& values) const {
    for (const auto& [v, q] : values)
      if (!is_param(v)) throw InputError("'" + v + "' is not a parameter of " + name_);
    return matrix_.map([&](const Poly& e) { return specialize(e, values); });
  }

  bool is_var(const Var& v) const { return contains(vars_, v); }
  bool is_param(const Var& v) const { return contains(params_, v); }

  MatrixFamily with_matrix(PolyMatrix m, std::string name) const {
    return MatrixFamily(std::move(name), vars_, params_, std::move(m), boundary_, std::nullopt);
  }

 private:
  static std::vector<Var> names(const std::vector<VarDecl>& ds) {
    std::vector<Var> r;
    for (const auto& d : ds) r.push_back(d.name);
    return r;
  }
  static bool contains(const std::vector<VarDecl>& ds, const Var& v) {
    return std::any_of(ds.begin(), ds.end(), [&](const VarDecl& d) { return d.name == v; });
  }

  void validate() const {
    std::set<Var> declared;
    for (const auto* list : {&vars_, &params_})
      for (const auto& d : *list) {
        if (!declared.insert(d.name).second) throw InputError("variable '" + d.name + "' declared twice");
        if (d.weight && *d.weight <= 0) throw InputError("weight of '" + d.name + "' must be positive");
      }
    if (!matrix_.satisfies_kind()) throw InputError("matrix entries do not match kind " + std::string(to_string(kind())));
    for (const auto& e : matrix_.cells())
      for (const auto& v : e.variables())
        if (!declared.count(v)) throw InputError("undeclared variable '" + v + "' in family " + name_);
    if (boundary_ && !is_var(*boundary_)) throw InputError("boundary variable '" + *boundary_ + "' is not a declared variable");
  }

  std::string name_;
  std::vector<VarDecl> vars_;
  std::vector<VarDecl> params_;
  PolyMatrix matrix_;
  std::optional<Var> boundary_;
  std::optional<CatalogEntry> origin_;
};

namespace detail {

inline std::vector<VarDecl> decls(const std::vector<Var>& names) {
  std::vector<VarDecl> r;
  for (const auto& n : names) r.push_back({n, std::nullopt});
  return r;
}

}  // namespace detail

/// Name of the matrix coordinate in row i, column j (1-based).
inline Var coordinate_name(std::size_t i, std::size_t j, std::size_t n) {
  if (n < 10) return "x" + std::to_string(i) + std::to_string(j);
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

/// E_11 for sym/sq, E_12 - E_21 for sk.
inline PolyMatrix corner_unit(MatrixKind kind, std::size_t n, const Poly& coefficient) {
  PolyMatrix m(kind, n);
  if (kind == MatrixKind::sk)
    m.set(0, 1, coefficient);
  else
    m.set(0, 0, coefficient);
  return m;
}

namespace detail {

// Trace-zero (or skew-trace-zero) parametrization. The corner entry is
// -(sum of diagonal, or pair, coordinates with index >= first_free) and the
// remaining coordinates are free. first_free = 2 gives L, 3 the boundary form.
struct Parametrization {
  PolyMatrix matrix;
  std::vector<Var> coordinates;
};

inline Parametrization trace_zero_part(MatrixKind kind, std::size_t n, std::size_t first_free) {
  if (n < 2) throw InputError("matrix families need size >= 2");
  if (kind == MatrixKind::sk && n % 2 != 0) throw InputError("skew-symmetric families need even size");
  PolyMatrix m(kind, n);
  std::vector<Var> coords;
  Poly corner;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = (kind == MatrixKind::sq ? 1 : i); j <= n; ++j) {
      if (kind == MatrixKind::sk && j == i) continue;
      bool is_corner = kind == MatrixKind::sk ? (i == 1 && j == 2) : (i == 1 && j == 1);
      if (is_corner) continue;
      Var v = coordinate_name(i, j, n);
      coords.push_back(v);
      m.set(i - 1, j - 1, Poly::var(v));
      if (kind == MatrixKind::sk) {
        if (j == i + 1 && i % 2 == 1 && (i + 1) / 2 >= first_free) corner -= Poly::var(v);
      } else if (i == j && i >= first_free) {
        corner -= Poly::var(v);
      }
    }
  }
  if (kind == MatrixKind::sk)
    m.set(0, 1, corner);
  else
    m.set(0, 0, corner);
  return {std::move(m), std::move(coords)};
}

inline std::vector<Var> morse_variables(unsigned m) {
  if (m == 1) return {"z"};
  std::vector<Var> r;
  for (unsigned i = 1; i <= m; ++i) r.push_back("z" + std::to_string(i));
  return r;
}

}  // namespace detail

/// The generic hyperplane embedding L with its one-parameter deformation
/// L + l*E11 (sym, sq) or L + l*(E12 - E21) (sk).
inline MatrixFamily build_L(MatrixKind kind, std::size_t n) {
  auto [m, coords] = detail::trace_zero_part(kind, n, 2);
  PolyMatrix full = m + corner_unit(kind, n, Poly::var("l"));
  CatalogEntry origin;
  origin.ctor = CatalogEntry::Constructor::L;
  origin.kind = kind;
  origin.n = n;
  return MatrixFamily(origin.id(), detail::decls(coords), detail::decls({"l"}), std::move(full), std::nullopt, origin);
}

/// Codimension-one family L - (z1^2 + ... + zm^2) * corner, optionally with
/// its miniversal parameter l added to the corner coefficient.
inline MatrixFamily build_A1(MatrixKind kind, std::size_t n, unsigned m, bool with_parameter = false) {
  auto [base, coords] = detail::trace_zero_part(kind, n, 2);
  Poly g;
  auto zs = detail::morse_variables(m);
  for (const auto& z : zs) g -= Poly::var(z, 2);
  std::vector<Var> params;
  if (with_parameter) {
    g += Poly::var("l");
    params.push_back("l");
  }
  coords.insert(coords.end(), zs.begin(), zs.end());
  CatalogEntry origin;
  origin.ctor = CatalogEntry::Constructor::A1;
  origin.kind = kind;
  origin.n = n;
  origin.m = m;
  return MatrixFamily(origin.id(), detail::decls(coords), detail::decls(params),
                      base + corner_unit(kind, n, g), std::nullopt, origin);
}

/// L + g(z) * corner with g a function of fresh variables only.
inline MatrixFamily build_damon_pike(MatrixKind kind, std::size_t n, const Poly& g) {
  auto [base, coords] = detail::trace_zero_part(kind, n, 2);
  std::set<Var> coord_set(coords.begin(), coords.end());
  for (const auto& v : g.variables()) {
    if (coord_set.count(v)) throw InputError("g must not mention the matrix coordinate '" + v + "'");
    coords.push_back(v);
  }
  CatalogEntry origin;
  origin.ctor = CatalogEntry::Constructor::DamonPike;
  origin.kind = kind;
  origin.n = n;
  origin.h = g;
  return MatrixFamily(origin.id(), detail::decls(coords), {}, base + corner_unit(kind, n, g), std::nullopt, origin);
}

/// Coordinate carrying the boundary in the boundary normal form: x22, or x34 for sk.
inline Var boundary_coordinate(MatrixKind kind, std::size_t n) {
  return kind == MatrixKind::sk ? coordinate_name(3, 4, n) : coordinate_name(2, 2, n);
}

/// Boundary normal form: corner -sum_{i>=3} + h(boundary coordinate, z).
/// h may be written in `h_var` (renamed to the boundary coordinate); any of its
/// other variables are z-variables unless listed as parameters.
inline MatrixFamily build_boundary(MatrixKind kind, std::size_t n, Poly h, const Var& h_var = "",
                                   const std::vector<Var>& params = {}) {
  if (kind == MatrixKind::sk && n < 4) throw InputError("skew-symmetric boundary families need size >= 4");
  auto [base, coords] = detail::trace_zero_part(kind, n, 3);
  Var bv = boundary_coordinate(kind, n);
  if (!h_var.empty() && h_var != bv) {
    if (h.mentions(bv)) throw InputError("h mentions both " + h_var + " and " + bv);
    h = substitute(h, h_var, Poly::var(bv));
  }
  std::set<Var> coord_set(coords.begin(), coords.end());
  std::set<Var> param_set(params.begin(), params.end());
  std::vector<Var> zs;
  for (const auto& v : h.variables()) {
    if (v == bv || param_set.count(v)) continue;
    if (coord_set.count(v)) throw InputError("h mentions matrix coordinate '" + v + "' other than the boundary variable");
    zs.push_back(v);
  }
  coords.insert(coords.end(), zs.begin(), zs.end());
  CatalogEntry origin;
  origin.ctor = CatalogEntry::Constructor::Boundary;
  origin.kind = kind;
  origin.n = n;
  origin.h = h;
  return MatrixFamily(origin.id(), detail::decls(coords), detail::decls(params), base + corner_unit(kind, n, h), bv,
                      origin);
}

namespace detail {

inline Poly univariate_in(const Var& v, const std::vector<std::pair<unsigned, Poly>>& terms) {
  Poly r;
  for (const auto& [e, c] : terms) r += c * Poly::var(v, e);
  return r;
}

inline Poly lam(unsigned i) { return Poly::var("l" + std::to_string(i)); }

}  // namespace detail

/// The corank-3 symmetric families with their miniversal deformations.
/// id: "I" (needs k >= 1), "II4", "II5", "II6"; a trailing "sq" adds the
/// generic skew-symmetric family U in u12, u13, u23.
inline MatrixFamily build_table1(const std::string& id, unsigned k = 0) {
  using detail::lam;
  Poly x = Poly::var("x"), y = Poly::var("y"), z = Poly::var("z"), w = Poly::var("w");
  std::string base = id;
  bool square = false;
  if (base.size() > 2 && base.substr(base.size() - 2) == "sq") {
    square = true;
    base = base.substr(0, base.size() - 2);
    if (!base.empty() && base.back() == '-') base.pop_back();
  }
  PolyMatrix m(MatrixKind::sym, 3);
  std::vector<Var> params;
  CatalogEntry origin;
  if (base == "I") {
    if (k < 1) throw InputError("I_{k+1} needs k >= 1");
    Poly p = pow(x, k);
    for (unsigned i = 0; i < k; ++i) p += lam(i) * pow(x, i);
    m.set(0, 0, x);
    m.set(0, 1, lam(k));
    m.set(0, 2, z);
    m.set(1, 1, y + p);
    m.set(1, 2, w);
    m.set(2, 2, y);
    for (unsigned i = 0; i <= k; ++i) params.push_back("l" + std::to_string(i));
    origin.ctor = CatalogEntry::Constructor::I;
    origin.k = k;
  } else if (base == "II4" || base == "II5" || base == "II6") {
    unsigned idx = static_cast<unsigned>(base[2] - '0');
    Poly p, q;
    if (idx == 4) {
      p = w * w + lam(1) * w + lam(0);
      q = lam(3) * w + lam(2);
    } else if (idx == 5) {
      p = lam(2) * w * w + lam(1) * w + lam(0);
      q = w * w + lam(4) * w + lam(3);
    } else {
      p = pow(w, 3) + lam(2) * w * w + lam(1) * w + lam(0);
      q = lam(5) * w * w + lam(4) * w + lam(3);
    }
    m.set(0, 0, x);
    m.set(0, 1, p);
    m.set(0, 2, y + q);
    m.set(1, 1, y);
    m.set(1, 2, z);
    m.set(2, 2, w);
    for (unsigned i = 0; i < idx; ++i) params.push_back("l" + std::to_string(i));
    origin.ctor = CatalogEntry::Constructor::II;
    origin.index = idx;
  } else {
    throw InputError("unknown series family '" + id + "'");
  }
  origin.kind = MatrixKind::sym;
  origin.n = 3;
  std::vector<Var> vars = {"x", "y", "z", "w"};
  if (square) {
    if (origin.ctor != CatalogEntry::Constructor::II && origin.ctor != CatalogEntry::Constructor::I)
      throw InputError("square variant needs an I or II series family");
    PolyMatrix sq(MatrixKind::sq, 3);
    const std::array<std::pair<std::size_t, std::size_t>, 3> slots = {{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) sq.set(i, j, m(i, j));
    for (auto [i, j] : slots) {
      Var uv = "u" + std::to_string(i + 1) + std::to_string(j + 1);
      vars.push_back(uv);
      sq.set(i, j, sq(i, j) + Poly::var(uv));
      sq.set(j, i, sq(j, i) - Poly::var(uv));
    }
    m = std::move(sq);
    if (origin.ctor == CatalogEntry::Constructor::II) origin.ctor = CatalogEntry::Constructor::IISquare;
    origin.kind = MatrixKind::sq;
  }
  std::string name = origin.id();
  if (square && origin.ctor == CatalogEntry::Constructor::I) name += "sq";
  return MatrixFamily(name, detail::decls(vars), detail::decls(params), std::move(m), std::nullopt, origin);
}

/// Block-extends by an identity (sym, sq) or J blocks (sk) up to n_target.
inline MatrixFamily stabilize(const MatrixFamily& f, std::size_t n_target) {
  std::size_t n = f.size();
  if (n_target < n) throw InputError("stabilize: target size smaller than family size");
  if (f.kind() == MatrixKind::sk && (n_target - n) % 2 != 0) throw InputError("stabilize: skew families grow by even sizes");
  if (n_target == n) return f;
  PolyMatrix m(f.kind(), n_target);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (f.kind() == MatrixKind::sym && j < i) continue;
      if (f.kind() == MatrixKind::sk && j <= i) continue;
      m.set(i, j, f.matrix()(i, j));
    }
  if (f.kind() == MatrixKind::sk)
    for (std::size_t i = n; i + 1 < n_target; i += 2) m.set(i, i + 1, Poly(1L));
  else
    for (std::size_t i = n; i < n_target; ++i) m.set(i, i, Poly(1L));
  return MatrixFamily(f.name() + "+stab" + std::to_string(n_target), f.vars(), f.params(), std::move(m), f.boundary(),
                      std::nullopt);
}

}  // namespace msing
