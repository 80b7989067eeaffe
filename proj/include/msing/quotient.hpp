#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msing/weights.hpp"

namespace msing {

/// Generators of a submodule of the free module O^N over `vars`. With a
/// grading attached, m * e_c has degree wdeg(m) - shifts[c]; for tangent
/// spaces shifts[c] is the weighted degree of matrix entry c.
struct SubmodulePresentation {
  std::size_t rank = 1;
  std::vector<Var> vars;
  std::vector<std::vector<Poly>> generators;
  std::vector<long> shifts;

  void add(std::vector<Poly> g) {
    if (g.size() != rank) throw InputError("generator length does not match module rank");
    generators.push_back(std::move(g));
  }
};

/// An ideal of O over vars, as a rank-one presentation.
inline SubmodulePresentation ideal(const std::vector<Poly>& gens, std::vector<Var> vars) {
  SubmodulePresentation t;
  t.rank = 1;
  t.vars = std::move(vars);
  t.shifts = {0};
  for (const auto& g : gens) t.add({g});
  return t;
}

struct GradedQuotientReport {
  std::map<long, long> per_degree;  // nonzero slices only
  long total = 0;
  bool finite = false;
  bool certified = false;
  long window = 0;        // length of the zero window that certified the result
  long last_degree = 0;   // last degree examined

  std::string describe() const {
    if (!finite) return "infinite";
    return std::to_string(total) + (certified ? "" : " (uncertified)");
  }
};

namespace detail {

using Exps = std::vector<int>;

struct SparseTerm {
  std::size_t component;
  Exps exps;
  Scalar coeff;
};

inline Exps exponents_of(const Monomial& m, const std::map<Var, std::size_t>& index, std::size_t s) {
  Exps e(s, 0);
  for (const auto& [v, x] : m.powers()) {
    auto it = index.find(v);
    if (it == index.end()) throw InputError("generator mentions '" + v + "' outside the module variables");
    e[it->second] = static_cast<int>(x);
  }
  return e;
}

inline std::vector<std::vector<SparseTerm>> sparse_generators(const SubmodulePresentation& t) {
  std::map<Var, std::size_t> index;
  for (std::size_t i = 0; i < t.vars.size(); ++i) index[t.vars[i]] = i;
  std::vector<std::vector<SparseTerm>> out;
  for (const auto& g : t.generators) {
    std::vector<SparseTerm> terms;
    for (std::size_t c = 0; c < g.size(); ++c)
      for (const auto& [m, q] : g[c].terms()) terms.push_back({c, exponents_of(m, index, t.vars.size()), q});
    if (!terms.empty()) out.push_back(std::move(terms));
  }
  return out;
}

// Incremental row echelon form over Q with sparse rows keyed by column.
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, Scalar>;

  bool insert(Row row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto p = pivots_.find(lead->first);
      if (p == pivots_.end()) {
        Scalar inv = 1 / lead->second;
        for (auto& [c, x] : row) x *= inv;
        pivots_.emplace(lead->first, std::move(row));
        return true;
      }
      Scalar f = lead->second;
      for (const auto& [c, x] : p->second) {
        auto it = row.find(c);
        if (it == row.end()) {
          row.emplace(c, -f * x);
        } else {
          it->second -= f * x;
          if (it->second == 0) row.erase(it);
        }
      }
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, Row> pivots_;
};

// Exponent vectors of all monomials of a given weighted degree.
class MonomialTable {
 public:
  explicit MonomialTable(std::vector<long> weights) : w_(std::move(weights)) {}

  const std::vector<Exps>& of_degree(long d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    std::vector<Exps> out;
    if (d >= 0) {
      Exps cur(w_.size(), 0);
      fill(0, d, cur, out);
    }
    return cache_.emplace(d, std::move(out)).first->second;
  }

 private:
  void fill(std::size_t i, long rest, Exps& cur, std::vector<Exps>& out) {
    if (i == w_.size()) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (long e = 0; e * w_[i] <= rest; ++e) {
      cur[i] = static_cast<int>(e);
      fill(i + 1, rest - e * w_[i], cur, out);
    }
    cur[i] = 0;
  }

  std::vector<long> w_;
  std::map<long, std::vector<Exps>> cache_;
};

inline long exps_weight(const Exps& e, const std::vector<long>& w) {
  long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * w[i];
  return s;
}

inline Exps add_exps(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace detail

/// Allowance above the largest generator degree before a graded computation
/// is declared infinite. MSING_DEGREE_CAP overrides the default.
inline long degree_cap(long max_generator_degree, long w_max) {
  if (const char* env = std::getenv("MSING_DEGREE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 4 * std::max(max_generator_degree, 1L) + 4 * w_max;
}

/// Dimension of O^N / T degree by degree. All generators must be homogeneous
/// for the weights and shifts. Once w_max consecutive degrees past every
/// component's lowest degree have zero quotient, every higher degree is zero
/// too: a monomial element of higher degree is a variable times an element
/// of one of those degrees.
inline GradedQuotientReport graded_quotient_dim(const SubmodulePresentation& t, const WeightMap& weights) {
  std::size_t s = t.vars.size(), n = t.rank;
  std::vector<long> w(s);
  for (std::size_t i = 0; i < s; ++i) {
    auto it = weights.find(t.vars[i]);
    if (it == weights.end()) throw InputError("no weight for variable '" + t.vars[i] + "'");
    if (it->second <= 0) throw InputError("weights must be positive");
    w[i] = it->second;
  }
  std::vector<long> shifts = t.shifts.empty() ? std::vector<long>(n, 0) : t.shifts;
  if (shifts.size() != n) throw InputError("shift count does not match module rank");

  auto gens = detail::sparse_generators(t);
  std::vector<long> gdeg;
  long max_abs_gen = 0;
  for (const auto& g : gens) {
    std::optional<long> d;
    for (const auto& term : g) {
      long x = detail::exps_weight(term.exps, w) - shifts[term.component];
      max_abs_gen = std::max(max_abs_gen, detail::exps_weight(term.exps, w));
      if (d && *d != x) throw InputError("generator is not homogeneous for the given weights");
      d = x;
    }
    gdeg.push_back(*d);
  }

  long w_max = 1;
  for (long x : w) w_max = std::max(w_max, x);
  long lowest = -*std::max_element(shifts.begin(), shifts.end());
  long base_top = -*std::min_element(shifts.begin(), shifts.end());
  long cap = base_top + degree_cap(max_abs_gen, w_max);

  detail::MonomialTable table(w);
  GradedQuotientReport report;
  long zero_run = 0;
  for (long d = lowest; d <= cap; ++d) {
    std::map<std::pair<std::size_t, detail::Exps>, std::size_t> columns;
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& e : table.of_degree(d + shifts[c])) columns.emplace(std::make_pair(c, e), columns.size());
    long dim = static_cast<long>(columns.size());
    if (dim > 0) {
      detail::SparseEchelon ech;
      for (std::size_t g = 0; g < gens.size() && static_cast<long>(ech.rank()) < dim; ++g) {
        if (gdeg[g] > d) continue;
        for (const auto& m : table.of_degree(d - gdeg[g])) {
          detail::SparseEchelon::Row row;
          for (const auto& term : gens[g]) {
            auto col = columns.at({term.component, detail::add_exps(term.exps, m)});
            row[col] += term.coeff;
          }
          for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
          ech.insert(std::move(row));
          if (static_cast<long>(ech.rank()) == dim) break;
        }
      }
      dim -= static_cast<long>(ech.rank());
    }
    report.last_degree = d;
    if (dim > 0) {
      report.per_degree[d] = dim;
      report.total += dim;
      zero_run = 0;
    } else {
      ++zero_run;
    }
    if (zero_run >= w_max && d >= base_top) {
      report.finite = true;
      report.certified = true;
      report.window = w_max;
      return report;
    }
  }
  report.finite = false;
  report.certified = false;
  return report;
}

/// dim O^N / (T + m^order O^N), filtered by total degree. Not certified as
/// the dimension of O^N / T.
inline GradedQuotientReport truncated_quotient_dim(const SubmodulePresentation& t, long order) {
  if (order < 1) throw InputError("truncation order must be >= 1");
  std::size_t s = t.vars.size(), n = t.rank;
  std::vector<long> unit(s, 1);
  detail::MonomialTable table(unit);
  std::map<std::pair<std::size_t, detail::Exps>, std::size_t> columns;
  // columns ordered by degree, so pivots are lowest-degree first
  for (long d = 0; d < order; ++d)
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& e : table.of_degree(d)) columns.emplace(std::make_pair(c, e), columns.size());
  auto gens = detail::sparse_generators(t);
  detail::SparseEchelon ech;
  for (const auto& g : gens)
    for (long d = 0; d < order; ++d)
      for (const auto& m : table.of_degree(d)) {
        detail::SparseEchelon::Row row;
        for (const auto& term : g) {
          auto e = detail::add_exps(term.exps, m);
          auto it = columns.find({term.component, e});
          if (it == columns.end()) continue;
          row[it->second] += term.coeff;
        }
        for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
        if (!row.empty()) ech.insert(std::move(row));
      }
  GradedQuotientReport report;
  report.total = static_cast<long>(columns.size() - ech.rank());
  report.finite = true;
  report.certified = false;
  report.last_degree = order - 1;
  return report;
}

/// Truncated dimensions at increasing orders until two consecutive orders
/// agree. Heuristic, hence uncertified; reports infinite if the cap is hit.
inline GradedQuotientReport stabilized_truncated_dim(const SubmodulePresentation& t, long max_order = 24) {
  GradedQuotientReport prev = truncated_quotient_dim(t, 1);
  for (long k = 2; k <= max_order; ++k) {
    GradedQuotientReport cur = truncated_quotient_dim(t, k);
    if (cur.total == prev.total) return cur;
    prev = cur;
  }
  prev.finite = false;
  return prev;
}

}  // namespace msing
