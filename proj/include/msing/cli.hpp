#pragma once

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "msing/critical.hpp"
#include "msing/family_io.hpp"
#include "msing/invariants.hpp"
#include "msing/lattice.hpp"
#include "msing/skew.hpp"

namespace msing::cli {

enum class Status { ok = 0, check_failed = 1, input_error = 2 };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::check_failed: return "check-failed";
    case Status::input_error: return "input-error";
  }
  return "?";
}

/// Ordered key = value lines. Comment lines (#) are dropped in porcelain mode.
class Report {
 public:
  void add(const std::string& key, const std::string& value) { lines_.push_back({key, value, false}); }
  void add(const std::string& key, long value) { add(key, std::to_string(value)); }
  void note(const std::string& text) { lines_.push_back({"", text, true}); }

  void check(const std::string& id, bool ok, const std::string& computed, const std::string& expected,
             const std::string& anchor = "") {
    if (!anchor.empty()) note(id + ": " + anchor);
    add("check." + id, std::string(ok ? "pass" : "FAIL") + " (computed " + computed + ", expected " + expected + ")");
    ++checks_;
    if (!ok) {
      ++failures_;
      status_ = Status::check_failed;
    }
  }
  void check(const std::string& id, long computed, long expected, const std::string& anchor = "") {
    check(id, computed == expected, std::to_string(computed), std::to_string(expected), anchor);
  }

  void fail_input() { status_ = Status::input_error; }
  Status status() const { return status_; }

  void print(std::ostream& os, bool porcelain) const {
    for (const auto& l : lines_) {
      if (l.comment) {
        if (!porcelain) os << "# " << l.value << '\n';
      } else {
        os << l.key << " = " << l.value << '\n';
      }
    }
    if (checks_ > 0) os << "checks = " << checks_ - failures_ << "/" << checks_ << " passed\n";
    os << "status = " << to_string(status_) << '\n';
  }

 private:
  struct Line {
    std::string key, value;
    bool comment;
  };
  std::vector<Line> lines_;
  long checks_ = 0, failures_ = 0;
  Status status_ = Status::ok;
};

// ------------------------------------------------------------- formatting

inline std::string fmt(double x) {
  if (std::abs(x) < 5e-13) x = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string fmt(Complex z) {
  double re = std::abs(z.real()) < 5e-13 ? 0 : z.real();
  double im = std::abs(z.imag()) < 5e-13 ? 0 : z.imag();
  if (im == 0) return fmt(re);
  std::string s = re == 0 ? "" : fmt(re);
  if (!s.empty() && im > 0) s += "+";
  return s + fmt(im) + "i";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string r;
  for (std::size_t i = 0; i < xs.size(); ++i) r += (i ? sep : "") + xs[i];
  return r;
}

inline std::string join_longs(const std::vector<long>& xs) {
  std::vector<std::string> s;
  for (long x : xs) s.push_back(std::to_string(x));
  return join(s);
}

inline std::string compact(const Poly& p) { return p.to_string(); }

/// Values sorted by rounded real then imaginary part, for stable output.
inline std::vector<Complex> sorted_values(std::vector<Complex> v) {
  auto key = [](Complex z) { return std::make_pair(std::round(z.real() * 1e9), std::round(z.imag() * 1e9)); };
  std::sort(v.begin(), v.end(), [&](Complex a, Complex b) { return key(a) < key(b); });
  return v;
}

inline Scalar parse_scalar(const std::string& text) {
  Poly p = parse_poly(text);
  if (!p.variables().empty()) throw InputError("expected a rational number, got '" + text + "'");
  return p.constant_term();
}

inline std::map<Var, Scalar> parse_bindings(const std::vector<std::string>& items) {
  std::map<Var, Scalar> r;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw InputError("--set expects name=rational, got '" + it + "'");
    std::string name = detail::trim(it.substr(0, eq));
    if (!is_identifier(name)) throw InputError("bad parameter name '" + name + "'");
    if (!r.emplace(name, parse_scalar(it.substr(eq + 1))).second) throw InputError("parameter '" + name + "' set twice");
  }
  return r;
}

/// Random rational with numerator in [-9, 9] \ {0} and denominator in [1, 4].
inline Scalar random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 18) - 9;
  if (num >= 0) ++num;
  long den = static_cast<long>(rng() % 4) + 1;
  return make_scalar(num, den);
}

inline std::map<Var, Scalar> random_parameters(const MatrixFamily& f, std::mt19937_64& rng) {
  std::map<Var, Scalar> r;
  for (const auto& p : f.param_names()) r[p] = random_rational(rng);
  return r;
}

inline std::string describe_bindings(const std::map<Var, Scalar>& b) {
  std::vector<std::string> s;
  for (const auto& [k, v] : b) s.push_back(k + "=" + msing::to_string(v));
  return join(s, ",");
}

// ---------------------------------------------------------------- commands

inline void add_quotient(Report& r, const std::string& key, const GradedQuotientReport& q) {
  r.add(key, q.finite ? std::to_string(q.total) : "infinite");
  r.add(key + ".certified", yes_no(q.certified));
  if (q.finite) {
    std::vector<std::string> parts;
    for (const auto& [d, n] : q.per_degree)
      if (n) parts.push_back(std::to_string(d) + ":" + std::to_string(n));
    if (!parts.empty()) r.add(key + ".per_degree", join(parts));
  }
}

inline void cmd_qh(Report& r, const std::string& file, bool with_params) {
  MatrixFamily f = load_family(file);
  r.add("family", f.name());
  auto w = solve_weights(f, with_params);
  r.add("quasi_homogeneous", yes_no(w.has_value()));
  if (!w) return;
  for (const auto& [v, x] : w->weights) r.add("weight." + v, x);
  for (const auto& [v, x] : w->param_weights) r.add("weight." + v, x);
  r.add("delta", join_longs(w->delta));
  if (f.kind() == MatrixKind::sq) r.add("delta_prime", join_longs(w->delta_prime));
  bool euler = verify_euler_identity(f, *w);
  r.check("euler_identity", euler, euler ? "holds" : "fails", "holds", "e(M) = D M + M D'");
  auto d = weighted_degree(discriminant_function(with_params ? f.matrix() : f.germ()), w->all_weights());
  r.add(f.kind() == MatrixKind::sk ? "pfaffian_degree" : "det_degree", d ? std::to_string(*d) : "none");
}

inline void cmd_tjurina(Report& r, const std::string& file, const std::string& equiv, std::optional<long> order) {
  MatrixFamily f = load_family(file);
  Equivalence eq = parse_equivalence(equiv);
  r.add("family", f.name());
  r.add("equivalence", eq == Equivalence::SL ? "SL" : "GL");
  auto t = tangent_space(f, eq);
  r.add("generators", static_cast<long>(t.generators.size()));
  r.add("rank", static_cast<long>(t.rank));
  add_quotient(r, "tau", tjurina(f, eq, order));
}

inline void cmd_mu_delta(Report& r, const std::string& file) {
  MatrixFamily f = load_family(file);
  r.add("family", f.name());
  auto m = mu_delta(f);
  r.add("mu_delta", m.value);
  r.add("method", m.method);
}

inline std::vector<Var> parse_var_list(const std::string& s) {
  std::vector<Var> r;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    tok = detail::trim(tok);
    if (!is_identifier(tok)) throw InputError("bad variable name '" + tok + "'");
    r.push_back(tok);
  }
  return r;
}

inline void cmd_milnor(Report& r, const std::string& func, const std::string& vars) {
  Poly g = parse_poly(func);
  std::vector<Var> vs = vars.empty() ? sorted_variables({g}) : parse_var_list(vars);
  for (const auto& v : g.variables())
    if (std::find(vs.begin(), vs.end(), v) == vs.end()) throw InputError("variable '" + v + "' not in --vars");
  r.add("function", compact(g));
  r.add("variables", join(vs));
  add_quotient(r, "mu", milnor_report(g, vs));
}

inline void cmd_boundary_mu(Report& r, const std::string& func, long multiplier, const std::string& var) {
  Poly h = parse_poly(func);
  r.add("function", compact(h));
  r.add("boundary_variable", var);
  r.add("multiplier", multiplier);
  add_quotient(r, "dim", boundary_algebra_report(h, var, multiplier));
}

inline void cmd_catalog(Report& r, std::ostream& out, const std::string& action, const std::string& id,
                        std::optional<unsigned> k, std::optional<std::string> h, bool& raw) {
  if (action == "list") {
    auto ids = catalog_ids();
    r.add("count", static_cast<long>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) r.add("id." + std::to_string(i + 1), ids[i]);
    return;
  }
  if (action == "build") {
    if (id.empty()) throw InputError("catalog build needs an ID");
    out << format_family(build_catalog(id, k, h));
    raw = true;
    return;
  }
  throw InputError("catalog action must be 'list' or 'build'");
}

inline void cmd_ll_index(Report& r, const std::string& table1, const std::string& type, long rank, long n,
                         const std::string& kind) {
  if (!table1.empty()) {
    mpz_class idx = ll_index_table1(table1);
    r.add("family", table1);
    r.add("index", idx.get_str());
    MatrixFamily f = build_catalog(table1);
    mpz_class d = ll_degree_from_weights(f);
    r.check("weight_degree", d == idx, d.get_str(), idx.get_str(), "deg = D^tau tau! / prod w(l_i)");
    return;
  }
  if (type.size() != 1) throw InputError("ll-index needs --table1 ID or --type X --rank T --n N --kind K");
  mpz_class idx = ll_index(type[0], rank, n, parse_kind(kind));
  LLIndexData d = ll_index_data(type[0], rank);
  r.add("type", type + std::to_string(rank));
  r.add("coxeter", d.coxeter);
  r.add("alpha", d.alpha);
  r.add("weyl_order", d.order.get_str());
  r.add("index", idx.get_str());
}

inline void cmd_critical_values(Report& r, const std::string& file, const std::vector<std::string>& sets) {
  MatrixFamily f = load_family(file);
  auto lambda = parse_bindings(sets);
  r.add("family", f.name());
  r.add("parameters", describe_bindings(detail::complete_parameters(f, lambda)));
  auto cv = critical_values(f, lambda);
  r.add("critical_points", cv.critical_points);
  r.add("distinct_nonzero", cv.distinct_nonzero);
  r.add("zero_value", yes_no(cv.zero_value));
  r.add("multiple", yes_no(cv.multiple));
  r.add("certified_distinct", yes_no(cv.exact));
  r.add("generic", yes_no(!cv.degenerate()));
  if (cv.values_polynomial) r.add("values_polynomial", compact(from_univariate(*cv.values_polynomial, "t")));
  auto vs = sorted_values(cv.values);
  for (std::size_t i = 0; i < vs.size(); ++i) r.add("value." + std::to_string(i + 1), fmt(vs[i]));
}

inline void cmd_skew_eig(Report& r, const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open '" + file + "'");
  ComplexSkewMatrix a = parse_matrix_file(in);
  r.add("size", static_cast<long>(a.size()));
  r.add("sktr", fmt(sktr(a)));
  r.add("pfaffian", fmt(pfaffian_numeric(a)));
  r.add("quaternionic", yes_no(is_quaternionic(a)));
  auto ev = sorted_values(skew_eigenvalues(a));
  for (std::size_t i = 0; i < ev.size(); ++i) r.add("eigenvalue." + std::to_string(i + 1), fmt(ev[i]));
}

inline void cmd_lift(Report& r, const std::string& file, bool reduce) {
  MatrixFamily f = load_family(file);
  ICISPresentation p = double_cover(f, reduce);
  r.add("family", f.name());
  r.add("variables", join(p.vars));
  std::vector<std::string> odd;
  for (const auto& [v, s] : p.involution)
    if (s < 0) odd.push_back(v);
  r.add("involution_odd", join(odd));
  r.add("equations", static_cast<long>(p.equations.size()));
  for (std::size_t i = 0; i < p.equations.size(); ++i)
    r.add("equation." + std::to_string(i + 1), compact(p.equations[i]) + " = 0");
  bool inv = p.is_involution_invariant();
  r.check("involution_invariant", inv, yes_no(inv), "yes");
}

inline void report_operator(Report& r, const Lattice& l, std::size_t e) {
  IntMatrix p = pl_operator(l, e);
  std::string id = "P" + std::to_string(e + 1);
  for (std::size_t i = 0; i < p.size(); ++i) r.add(id + ".row." + std::to_string(i + 1), join_longs(p[i]));
  bool pf = preserves_form(l, p);
  r.check(id + ".preserves_form", pf, yes_no(pf), "yes", "P^T G P = G");
  r.add(id + ".involution", yes_no(is_involution(p)));
}

inline void cmd_lattice(Report& r, const std::string& file, std::optional<long> reflect) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open '" + file + "'");
  Lattice l = parse_lattice_file(in);
  r.add("rank", static_cast<long>(l.rank()));
  r.add("seff", l.s_eff());
  r.add("sign", pl_sign(l.s_eff()));
  if (reflect) {
    if (*reflect < 1 || static_cast<std::size_t>(*reflect) > l.rank()) throw InputError("--reflect: cycle out of range");
    report_operator(r, l, static_cast<std::size_t>(*reflect - 1));
    return;
  }
  for (std::size_t e = 0; e < l.rank(); ++e) report_operator(r, l, e);
}

// ------------------------------------------------------------ verify suites

inline void verify_family(Report& r, const MatrixFamily& f, const std::string& id) {
  auto w = solve_weights(f);
  bool qh = w && verify_euler_identity(f, *w);
  r.check(id + ".quasi_homogeneous", qh, yes_no(qh), "yes", "positive weights with e(M) = D M + M D'");
  if (!qh) return;
  auto sl = tjurina(f, Equivalence::SL), gl = tjurina(f, Equivalence::GL);
  bool same = sl.finite && gl.finite && sl.total == gl.total;
  auto show = [](const GradedQuotientReport& q) { return q.finite ? std::to_string(q.total) : std::string("infinite"); };
  r.check(id + ".tau_gl_eq_sl", same, show(gl) + "/" + show(sl), "equal and finite",
          "tau_GL = tau_SL for quasi-homogeneous families");
  if (f.origin() && f.origin()->is_table1())
    r.check(id + ".tau_eq_params", sl.total, static_cast<long>(f.params().size()), "tau = number of parameters");
  try {
    auto m = mu_delta(f);
    if (m.method != "tjurina")
      r.check(id + ".mu_delta_eq_tau", m.value, sl.total, "mu_Delta = tau_SL");
  } catch (const Unsupported&) {
  }
}

inline void verify_catalog(Report& r, const std::string& extra) {
  for (const auto& id : catalog_ids()) verify_family(r, build_catalog(id), id);
  if (extra.empty()) return;
  MatrixFamily f = load_family(extra);
  verify_family(r, f, "file." + f.name());
  // a file named after a catalog id must reproduce that build
  std::optional<MatrixFamily> ref;
  try {
    ref = build_catalog(f.name());
  } catch (const InputError&) {
  }
  if (ref) {
    bool eq = ref->matrix() == f.matrix() && ref->var_names() == f.var_names();
    r.check("file." + f.name() + ".matches_catalog", eq, yes_no(eq), "yes");
    auto t = tjurina(f, Equivalence::SL, 12);
    auto t_ref = tjurina(*ref, Equivalence::SL);
    r.check("file." + f.name() + ".tau_matches_catalog", t.finite && t.total == t_ref.total,
            t.finite ? std::to_string(t.total) : "infinite", std::to_string(t_ref.total));
  }
}

inline const std::vector<std::string>& table1_rows() {
  static const std::vector<std::string> rows = {"I2", "I3", "I4", "II4", "II5", "II6"};
  return rows;
}

inline void verify_table1(Report& r, std::uint64_t seed, long samples) {
  std::mt19937_64 rng(seed);
  for (const auto& id : table1_rows()) {
    MatrixFamily f = build_catalog(id);
    long tau = static_cast<long>(f.params().size());
    auto t = tjurina(f, Equivalence::SL);
    r.check(id + ".tau", t.total, tau, "tau_SL = number of miniversal parameters");
    r.check(id + ".tau_square", tjurina(build_catalog(id + "sq"), Equivalence::SL).total, tau,
            "adding the generic skew family keeps tau");
    bool identity = true;
    try {
      odd_function_of(f);
    } catch (const IdentityFailure&) {
      identity = false;
    }
    r.check(id + ".reduction_identity", identity, yes_no(identity), "yes", "det reduces to minus a square");
    r.check(id + ".mu_odd", milnor_number(odd_function_at_zero(f)), 2 * tau, "mu(odd function) = 2 tau");
    auto cc = curve_cover_at_zero(f);
    r.check(id + ".mu_curve", icis_curve_milnor(cc.f1, cc.f2, cc.vars), 2 * tau + 1, "mu(curve) = 2 tau + 1");
    if (id[1] == 'I') {
      auto b = blowup_type(f);
      r.check(id + ".blowup_mu", b.milnor, tau + 1, "blow-up is a deformation of a simple germ of rank tau+1");
      r.add(id + ".blowup_type", b.type);
    }
    mpz_class idx = ll_index_table1(id), d = ll_degree_from_weights(f);
    r.check(id + ".ll_index", d == idx, d.get_str(), idx.get_str(), "index = D^tau tau! / prod w(l_i)");
    long bad = 0, degenerate = 0;
    for (long s = 0; s < samples; ++s) {
      auto cv = critical_values(f, random_parameters(f, rng));
      if (cv.degenerate())
        ++degenerate;
      else if (cv.distinct_nonzero != tau)
        ++bad;
    }
    r.add(id + ".degenerate_samples", degenerate);
    r.check(id + ".generic_critical_values", bad, 0, "tau distinct nonzero critical values");
  }
}

inline void verify_links(Report& r) {
  for (MatrixKind kind : {MatrixKind::sym, MatrixKind::sq, MatrixKind::sk})
    for (std::size_t n = 2; n <= 6; ++n) {
      if (kind == MatrixKind::sk ? (n % 2 != 0 || n < 4) : n > 5) continue;
      auto h = link_hessian_check(kind, n);
      r.check(std::string(to_string(kind)) + std::to_string(n) + ".hessian", h.nondegenerate, yes_no(h.nondegenerate),
              "yes", "quadratic part of the link equation is nondegenerate");
    }
}

inline void verify_pq(Report& r, std::uint64_t seed, long samples) {
  if (samples < 1) throw InputError("--samples must be >= 1");
  double worst = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    auto rep = verify_reality(k, static_cast<std::size_t>(samples), seed + k);
    worst = std::max(worst, rep.max_im);
    r.check("k" + std::to_string(k) + ".reality", rep.max_im <= 1e-8, fmt(rep.max_im), "<= 1e-8",
            "skew eigenvalues of quaternionic matrices are real");
    if (rep.max_im > 1e-8) r.add("k" + std::to_string(k) + ".worst_matrix", rep.worst_matrix);
  }
  auto control = verify_reality(2, static_cast<std::size_t>(samples), seed, true);
  r.check("control", control.max_im > 1e-3, fmt(control.max_im), "> 1e-3", "generic skew matrices are not real");
  r.add("max_im", fmt(worst));
}

inline std::vector<std::pair<std::string, Lattice>> sample_lattices() {
  using T = CycleTag;
  std::vector<std::pair<std::string, Lattice>> r;
  r.emplace_back("s3_pair", Lattice({{-2, 2}, {2, -4}}, {T::short_cycle, T::long_cycle}, 3));
  r.emplace_back("s3_chain", Lattice({{-2, 1, 0}, {1, -2, 2}, {0, 2, -4}},
                                     {T::short_cycle, T::short_cycle, T::long_cycle}, 3));
  r.emplace_back("s5_chain", Lattice({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, 2}, {0, 0, 2, 4}},
                                     {T::short_cycle, T::short_cycle, T::short_cycle, T::long_cycle}, 5));
  r.emplace_back("s4_skew", Lattice({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, {T::short_cycle, T::short_cycle, T::short_cycle}, 4));
  return r;
}

inline void verify_lattice(Report& r) {
  // expected self-intersections by s mod 4: (short, long)
  const long table[4][2] = {{0, 0}, {2, 4}, {0, 0}, {-2, -4}};
  for (long s = 1; s <= 8; ++s) {
    long sh = self_intersection(CycleTag::short_cycle, s), lo = self_intersection(CycleTag::long_cycle, s);
    r.check("self_intersection.s" + std::to_string(s), sh == table[s % 4][0] && lo == table[s % 4][1],
            std::to_string(sh) + "," + std::to_string(lo),
            std::to_string(table[s % 4][0]) + "," + std::to_string(table[s % 4][1]));
  }
  for (const auto& [name, l] : sample_lattices())
    for (std::size_t e = 0; e < l.rank(); ++e) {
      IntMatrix p = pl_operator(l, e);
      std::string id = name + ".P" + std::to_string(e + 1);
      bool pf = preserves_form(l, p);
      r.check(id + ".preserves_form", pf, yes_no(pf), "yes", "P^T G P = G");
      if (l.s_eff() % 2 != 0) {
        bool inv = is_involution(p);
        r.check(id + ".involution", inv, yes_no(inv), "yes");
      }
    }
  PolyMatrix m(MatrixKind::sym, 2);
  m.set(0, 0, parse_poly("-x+z^3-z"));
  m.set(0, 1, parse_poly("y"));
  m.set(1, 1, parse_poly("x"));
  MatrixFamily xa2("XA2", detail::decls({"x", "y", "z"}), {}, m);
  auto cover = double_cover(xa2, true);
  Poly expected = parse_poly("z^3 - z - a^2 - b^2");
  bool ok = cover.equations.size() == 1 && (cover.equations[0] == expected || cover.equations[0] == -expected);
  r.check("double_cover.XA2", ok, cover.equations.empty() ? "none" : compact(cover.equations[0]), compact(expected));
}

// --------------------------------------------------------------------- run

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Matrix singularity invariants"};
  app.name("msing");
  app.require_subcommand(1);
  app.fallthrough();
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "Stable output: key = value lines only");

  std::string file, func, var = "x", equiv = "sl", action, id, table1, type, kind = "sym", suite, extra_family, h_opt,
                           vars;
  std::optional<long> order, reflect;
  long multiplier = 0, rank = 0, n = 0, samples = 100;
  std::uint64_t seed = 1;
  std::optional<unsigned> k;
  bool with_params = false, reduce = false;
  std::vector<std::string> sets;

  auto* qh = app.add_subcommand("qh", "Quasi-homogeneous weights of a family");
  qh->add_option("FILE", file, "Family file or catalog id")->required();
  qh->add_flag("--params", with_params, "Weight the deformation parameters too");

  auto* tj = app.add_subcommand("tjurina", "Tjurina number");
  tj->add_option("FILE", file)->required();
  tj->add_option("--equiv", equiv, "sl or gl")->check(CLI::IsMember({"sl", "gl", "SL", "GL"}));
  tj->add_option("--order", order, "Truncation order for non-quasi-homogeneous families");

  auto* md = app.add_subcommand("mu-delta", "Singular Milnor number");
  md->add_option("FILE", file)->required();

  auto* mi = app.add_subcommand("milnor", "Milnor number of a function");
  mi->add_option("FUNC", func)->required();
  mi->add_option("--vars", vars, "Comma-separated variable list");

  auto* bm = app.add_subcommand("boundary-mu", "Dimension of the boundary algebra");
  bm->add_option("FUNC", func)->required();
  bm->add_option("--multiplier", multiplier)->required();
  bm->add_option("--var", var, "Boundary variable");

  auto* cat = app.add_subcommand("catalog", "List or build catalog families");
  cat->add_option("ACTION", action, "list or build")->required();
  cat->add_option("ID", id);
  cat->add_option("--k", k);
  cat->add_option("--func", h_opt, "Corner function for DP and boundary ids");

  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("SUITE", suite)->required()->check(CLI::IsMember({"catalog", "table1", "links", "pq", "lattice"}));
  ve->add_option("--seed", seed);
  ve->add_option("--samples", samples);
  ve->add_option("--family", extra_family, "Extra family file checked by the catalog suite");

  auto* ll = app.add_subcommand("ll-index", "Lyashko-Looijenga covering index");
  ll->add_option("--table1", table1);
  ll->add_option("--type", type);
  ll->add_option("--rank", rank);
  ll->add_option("--n", n);
  ll->add_option("--kind", kind);

  auto* cv = app.add_subcommand("critical-values", "Nonzero critical values of det or Pf");
  cv->add_option("FILE", file)->required();
  cv->add_option("--set", sets, "name=rational, repeatable");

  auto* se = app.add_subcommand("skew-eig", "Skew eigenvalues of a complex skew matrix");
  se->add_option("MATFILE", file)->required();

  auto* li = app.add_subcommand("lift", "Double cover of a symmetric family");
  li->add_option("FILE", file)->required();
  li->add_flag("--reduce", reduce);

  auto* la = app.add_subcommand("lattice", "Picard-Lefschetz operators");
  la->add_option("LATFILE", file)->required();
  la->add_option("--reflect", reflect, "1-based cycle index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return static_cast<int>(Status::input_error);
  }

  Report r;
  bool raw = false;
  try {
    if (*qh)
      cmd_qh(r, file, with_params);
    else if (*tj)
      cmd_tjurina(r, file, equiv, order);
    else if (*md)
      cmd_mu_delta(r, file);
    else if (*mi)
      cmd_milnor(r, func, vars);
    else if (*bm)
      cmd_boundary_mu(r, func, multiplier, var);
    else if (*cat)
      cmd_catalog(r, out, action, id, k, h_opt.empty() ? std::nullopt : std::optional<std::string>(h_opt), raw);
    else if (*ve) {
      r.add("suite", suite);
      if (suite == "catalog")
        verify_catalog(r, extra_family);
      else if (suite == "table1")
        verify_table1(r, seed, samples);
      else if (suite == "links")
        verify_links(r);
      else if (suite == "pq")
        verify_pq(r, seed, samples);
      else
        verify_lattice(r);
    } else if (*ll)
      cmd_ll_index(r, table1, type, rank, n, kind);
    else if (*cv)
      cmd_critical_values(r, file, sets);
    else if (*se)
      cmd_skew_eig(r, file);
    else if (*li)
      cmd_lift(r, file, reduce);
    else if (*la)
      cmd_lattice(r, file, reflect);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(Status::input_error);
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return static_cast<int>(Status::input_error);
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return static_cast<int>(Status::check_failed);
  }
  if (raw) return 0;
  r.print(out, porcelain);
  return static_cast<int>(r.status());
}

}  // namespace msing::cli
