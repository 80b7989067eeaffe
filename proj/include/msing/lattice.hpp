#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "msing/family.hpp"

namespace msing {

enum class CycleTag { plain, short_cycle, long_cycle };

inline std::string_view to_string(CycleTag t) {
  switch (t) {
    case CycleTag::plain: return "plain";
    case CycleTag::short_cycle: return "short";
    case CycleTag::long_cycle: return "long";
  }
  return "?";
}

inline CycleTag parse_tag(std::string_view s) {
  if (s == "short") return CycleTag::short_cycle;
  if (s == "long") return CycleTag::long_cycle;
  if (s == "plain") return CycleTag::plain;
  throw InputError("unknown cycle tag '" + std::string(s) + "'");
}

/// 0 for even s; 2 (short) and 4 (long) for s = 1 mod 4; -2 and -4 for s = 3 mod 4.
inline long self_intersection(CycleTag tag, long s_eff) {
  if (tag == CycleTag::plain) throw InputError("plain cycles have no prescribed self-intersection");
  long r = ((s_eff % 4) + 4) % 4;
  if (r % 2 == 0) return 0;
  long v = tag == CycleTag::short_cycle ? 2 : 4;
  return r == 1 ? v : -v;
}

/// (-1)^(s(s+1)/2)
inline long pl_sign(long s_eff) {
  long t = s_eff * (s_eff + 1) / 2;
  return t % 2 == 0 ? 1 : -1;
}

using IntMatrix = std::vector<std::vector<long>>;

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix r(n, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.empty() ? 0 : a[0].size(), std::vector<long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

/// Vanishing-cycle lattice: Gram matrix of the intersection form, cycle
/// tags and the effective dimension s_eff. The form is symmetric for odd
/// s_eff and skew for even s_eff.
class Lattice {
 public:
  Lattice(IntMatrix gram, std::vector<CycleTag> tags, long s_eff)
      : gram_(std::move(gram)), tags_(std::move(tags)), s_eff_(s_eff) {
    std::size_t r = gram_.size();
    for (const auto& row : gram_)
      if (row.size() != r) throw InputError("Gram matrix is not square");
    if (tags_.size() != r) throw InputError("need one tag per basis cycle");
    long parity = s_eff_ % 2 == 0 ? -1 : 1;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (gram_[i][j] != parity * gram_[j][i])
          throw InputError(std::string("Gram matrix must be ") + (parity == 1 ? "symmetric" : "skew-symmetric") +
                           " for s_eff = " + std::to_string(s_eff_));
    for (std::size_t i = 0; i < r; ++i)
      if (tags_[i] != CycleTag::plain && gram_[i][i] != self_intersection(tags_[i], s_eff_))
        throw InputError("cycle " + std::to_string(i + 1) + " has self-intersection " + std::to_string(gram_[i][i]) +
                         ", expected " + std::to_string(self_intersection(tags_[i], s_eff_)));
  }

  std::size_t rank() const { return gram_.size(); }
  long s_eff() const { return s_eff_; }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<CycleTag>& tags() const { return tags_; }

 private:
  IntMatrix gram_;
  std::vector<CycleTag> tags_;
  long s_eff_;
};

/// Picard-Lefschetz operator of cycle e (0-based) as a matrix whose columns
/// are the images of the basis: c -> c + eps (c.e) e for short (and plain)
/// cycles, c -> c + eps (c.e)/2 e for long ones.
inline IntMatrix pl_operator(const Lattice& l, std::size_t e) {
  if (e >= l.rank()) throw InputError("cycle index out of range");
  long eps = pl_sign(l.s_eff());
  bool is_long = l.tags()[e] == CycleTag::long_cycle;
  IntMatrix p = identity_matrix(l.rank());
  for (std::size_t c = 0; c < l.rank(); ++c) {
    long pairing = l.gram()[c][e];
    if (is_long) {
      if (pairing % 2 != 0)
        throw InputError("non-even pairing with long cycle " + std::to_string(e + 1) + " (cycle " +
                         std::to_string(c + 1) + ")");
      pairing /= 2;
    }
    p[e][c] += eps * pairing;
  }
  return p;
}

inline bool preserves_form(const Lattice& l, const IntMatrix& p) { return transpose(p) * l.gram() * p == l.gram(); }

inline bool is_involution(const IntMatrix& p) { return p * p == identity_matrix(p.size()); }

/// Lattice file: "rank R", "seff S", "gram" followed by R rows, "tags" with R tokens.
inline Lattice parse_lattice_file(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) tokens.push_back(t);
  }
  std::size_t pos = 0;
  auto next = [&]() -> const std::string& {
    if (pos >= tokens.size()) throw InputError("lattice file ends early");
    return tokens[pos++];
  };
  auto integer = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size()) throw InputError("");
      return v;
    } catch (const std::exception&) {
      throw InputError("bad integer '" + s + "' in lattice file");
    }
  };
  long r = -1, s = 0;
  bool have_s = false;
  IntMatrix gram;
  std::vector<CycleTag> tags;
  while (pos < tokens.size()) {
    std::string key = next();
    if (key == "rank") {
      r = integer(next());
      if (r < 1) throw InputError("rank must be positive");
    } else if (key == "seff") {
      s = integer(next());
      have_s = true;
    } else if (key == "gram") {
      if (r < 0) throw InputError("'rank' must precede 'gram'");
      gram.assign(r, std::vector<long>(r));
      for (auto& row : gram)
        for (auto& x : row) x = integer(next());
    } else if (key == "tags") {
      if (r < 0) throw InputError("'rank' must precede 'tags'");
      for (long i = 0; i < r; ++i) tags.push_back(parse_tag(next()));
    } else {
      throw InputError("unknown lattice file keyword '" + key + "'");
    }
  }
  if (r < 0 || !have_s || gram.empty() || tags.empty()) throw InputError("lattice file needs rank, seff, gram and tags");
  return Lattice(std::move(gram), std::move(tags), s);
}

// --------------------------------------------------------- double covers

/// Complete intersection with an involution acting by signs on variables.
struct ICISPresentation {
  std::vector<Var> vars;
  std::vector<Poly> equations;
  std::map<Var, int> involution;  // -1 for variables that change sign

  bool is_involution_invariant() const {
    std::map<Var, Poly> flip;
    for (const auto& [v, s] : involution)
      if (s < 0) flip[v] = -Poly::var(v);
    for (const auto& e : equations)
      if (substitute(e, flip) != e) return false;
    return true;
  }
};

/// a, b, c for n <= 3, otherwise a1, ..., an.
inline std::vector<Var> cover_variables(std::size_t n) {
  std::vector<Var> r;
  for (std::size_t i = 1; i <= n; ++i) r.push_back(n <= 3 ? std::string(1, static_cast<char>('a' + i - 1)) : "a" + std::to_string(i));
  return r;
}

/// Double cover of a symmetric family: m_ij(u) - a_i a_j for i <= j with
/// a -> -a. When reduced, entries that are a bare coordinate are solved for
/// that coordinate and substituted into the remaining equations.
inline ICISPresentation double_cover(const MatrixFamily& f, bool reduced = false) {
  if (f.kind() != MatrixKind::sym) throw InputError("double covers are defined for symmetric families");
  std::size_t n = f.size();
  std::vector<Var> as = cover_variables(n);
  for (const auto& a : as)
    if (f.is_var(a) || f.is_param(a)) throw InputError("cover variable '" + a + "' clashes with a family variable");
  PolyMatrix m = f.germ();
  ICISPresentation r;
  std::vector<std::pair<Poly, Poly>> eqs;  // (entry, a_i a_j)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) eqs.emplace_back(m(i, j), Poly::var(as[i]) * Poly::var(as[j]));
  std::map<Var, Poly> bound;
  std::vector<bool> used(eqs.size(), false);
  if (reduced) {
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      auto v = substitute(eqs[k].first, bound).as_bare_variable();
      if (!v || bound.count(*v) || std::find(as.begin(), as.end(), *v) != as.end()) continue;
      Poly value = eqs[k].second;
      for (auto& [name, p] : bound) p = substitute(p, *v, value);
      bound[*v] = value;
      used[k] = true;
    }
  }
  for (std::size_t k = 0; k < eqs.size(); ++k) {
    if (used[k]) continue;
    Poly e = substitute(eqs[k].first, bound) - eqs[k].second;
    if (!e.is_zero()) r.equations.push_back(e);
  }
  for (const auto& v : f.var_names())
    if (!bound.count(v)) r.vars.push_back(v);
  for (const auto& a : as) {
    r.vars.push_back(a);
    r.involution[a] = -1;
  }
  return r;
}

}  // namespace msing
