#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "msing/family.hpp"
#include "msing/parse.hpp"

namespace msing {

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InputError("bad " + what + " '" + s + "'");
  return v;
}

inline VarDecl parse_decl(const std::string& tok) {
  auto colon = tok.find(':');
  VarDecl d{tok.substr(0, colon), std::nullopt};
  if (!is_identifier(d.name)) throw InputError("bad variable name '" + d.name + "'");
  if (colon != std::string::npos) {
    long w = parse_long(tok.substr(colon + 1), "weight");
    if (w <= 0) throw InputError("weight of '" + d.name + "' must be positive");
    d.weight = w;
  }
  return d;
}

}  // namespace detail

/// Reads a family definition. `source` prefixes error messages.
inline MatrixFamily parse_family(std::istream& in, const std::string& source = "<input>") {
  std::optional<std::string> name;
  std::optional<MatrixKind> kind;
  std::optional<long> size;
  std::optional<std::vector<VarDecl>> vars, params;
  std::optional<Var> boundary;
  struct Entry {
    std::size_t line;
    long i, j;
    Poly value;
  };
  std::vector<Entry> entries;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto fail = [&](const std::string& msg) -> InputError {
      return InputError(source + ":" + std::to_string(line_no) + ": " + msg);
    };
    auto hash = raw.find('#');
    std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest = detail::trim(line.substr(key.size()));
    auto once = [&](bool seen) {
      if (seen) throw fail("repeated '" + key + "' line");
    };
    try {
      if (key == "family") {
        once(name.has_value());
        if (rest.empty()) throw fail("family needs a name");
        name = rest;
      } else if (key == "kind") {
        once(kind.has_value());
        kind = parse_kind(rest);
      } else if (key == "size") {
        once(size.has_value());
        size = detail::parse_long(rest, "size");
        if (*size < 1) throw fail("size must be positive");
      } else if (key == "vars" || key == "params") {
        auto& slot = key == "vars" ? vars : params;
        once(slot.has_value());
        slot.emplace();
        std::string tok;
        while (ls >> tok) slot->push_back(detail::parse_decl(tok));
      } else if (key == "boundary") {
        once(boundary.has_value());
        if (!is_identifier(rest)) throw fail("bad boundary variable '" + rest + "'");
        boundary = rest;
      } else if (key == "entry") {
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw fail("entry needs 'I J : EXPR'");
        std::istringstream idx(rest.substr(0, colon));
        std::string si, sj, extra;
        if (!(idx >> si >> sj) || (idx >> extra)) throw fail("entry needs two indices");
        Entry e{line_no, detail::parse_long(si, "row index"), detail::parse_long(sj, "column index"),
                parse_poly(rest.substr(colon + 1))};
        entries.push_back(std::move(e));
      } else {
        throw fail("unknown keyword '" + key + "'");
      }
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (msg.rfind(source + ":", 0) == 0) throw;
      throw fail(msg);
    }
  }
  if (!name) throw InputError(source + ": missing 'family' line");
  if (!kind) throw InputError(source + ": missing 'kind' line");
  if (!size) throw InputError(source + ": missing 'size' line");
  std::size_t n = static_cast<std::size_t>(*size);
  if (*kind == MatrixKind::sk && n % 2 != 0) throw InputError(source + ": skew-symmetric size must be even");

  PolyMatrix m(*kind, n);
  std::map<std::pair<long, long>, std::size_t> seen;
  for (const auto& e : entries) {
    auto fail = [&](const std::string& msg) {
      return InputError(source + ":" + std::to_string(e.line) + ": " + msg);
    };
    if (e.i < 1 || e.j < 1 || e.i > *size || e.j > *size) throw fail("entry index out of range");
    if (*kind == MatrixKind::sym && e.j < e.i) throw fail("symmetric entries need J >= I");
    if (*kind == MatrixKind::sk && e.j <= e.i) throw fail("skew-symmetric entries need J > I");
    auto [it, fresh] = seen.emplace(std::make_pair(e.i, e.j), e.line);
    if (!fresh) throw fail("duplicate entry " + std::to_string(e.i) + " " + std::to_string(e.j) + " (first on line " +
                           std::to_string(it->second) + ")");
    m.set(static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.j - 1), e.value);
  }
  try {
    return MatrixFamily(*name, vars.value_or(std::vector<VarDecl>{}), params.value_or(std::vector<VarDecl>{}),
                        std::move(m), boundary);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline MatrixFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_family(in, path);
}

inline std::string format_family(const MatrixFamily& f) {
  std::ostringstream os;
  auto decls = [&](const char* key, const std::vector<VarDecl>& ds) {
    if (ds.empty()) return;
    os << key;
    for (const auto& d : ds) {
      os << ' ' << d.name;
      if (d.weight) os << ':' << *d.weight;
    }
    os << '\n';
  };
  os << "family " << f.name() << '\n' << "kind " << to_string(f.kind()) << '\n' << "size " << f.size() << '\n';
  decls("vars", f.vars());
  decls("params", f.params());
  if (f.boundary()) os << "boundary " << *f.boundary() << '\n';
  std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (f.kind() == MatrixKind::sym && j < i) continue;
      if (f.kind() == MatrixKind::sk && j <= i) continue;
      const Poly& e = f.matrix()(i, j);
      if (!e.is_zero()) os << "entry " << i + 1 << ' ' << j + 1 << " : " << e.to_string() << '\n';
    }
  return os.str();
}

// ----------------------------------------------------------------- catalog

/// Catalog ids:
///   L:KIND:N, A1:KIND:N:M, DP:KIND:N:G, boundary:KIND:N:H,
///   I<k+1> (or I with k), II4, II5, II6, and the square variants with a
///   trailing "sq". H is written in x (or the boundary coordinate) and z's.
inline MatrixFamily build_catalog(const std::string& id, std::optional<unsigned> k = std::nullopt,
                                  std::optional<std::string> h = std::nullopt) {
  std::vector<std::string> parts;
  {
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      auto c = id.find(':', start);
      if (c == std::string::npos) break;
      parts.push_back(id.substr(start, c - start));
      start = c + 1;
    }
    parts.push_back(id.substr(start));
  }
  auto size_of = [&](const std::string& s) {
    long n = detail::parse_long(s, "size");
    if (n < 1) throw InputError("size must be positive");
    return static_cast<std::size_t>(n);
  };
  const std::string& head = parts[0];
  if (head == "L") {
    if (parts.size() != 3) throw InputError("expected L:KIND:N");
    return build_L(parse_kind(parts[1]), size_of(parts[2]));
  }
  if (head == "A1") {
    if (parts.size() != 4) throw InputError("expected A1:KIND:N:M");
    long m = detail::parse_long(parts[3], "Morse variable count");
    if (m < 0) throw InputError("Morse variable count must be >= 0");
    return build_A1(parse_kind(parts[1]), size_of(parts[2]), static_cast<unsigned>(m));
  }
  if (head == "DP" || head == "boundary") {
    if (parts.size() < 3) throw InputError("expected " + head + ":KIND:N:FUNCTION");
    std::string text = parts.size() == 4 ? parts[3] : h.value_or("");
    if (text.empty()) throw InputError(head + " needs a function (append :FUNCTION or pass --func)");
    MatrixKind kind = parse_kind(parts[1]);
    std::size_t n = size_of(parts[2]);
    Poly g = parse_poly(text);
    if (head == "DP") return build_damon_pike(kind, n, g);
    Var bv = boundary_coordinate(kind, n);
    return build_boundary(kind, n, g, g.mentions(bv) ? "" : "x");
  }
  std::string base = id;
  std::string suffix;
  if (base.size() > 2 && base.substr(base.size() - 2) == "sq") {
    suffix = "sq";
    base.resize(base.size() - 2);
  }
  if (base == "II4" || base == "II5" || base == "II6") return build_table1(base + suffix);
  if (base == "I") {
    if (!k) throw InputError("I needs --k");
    return build_table1("I" + suffix, *k);
  }
  if (base.size() > 1 && base[0] == 'I' && base[1] != 'I') {
    long t = detail::parse_long(base.substr(1), "index");
    if (t < 2) throw InputError("I_tau needs tau >= 2");
    return build_table1("I" + suffix, static_cast<unsigned>(t - 1));
  }
  throw InputError("unknown catalog id '" + id + "'");
}

/// The catalog used by `catalog list` and the catalog verification suite.
inline std::vector<std::string> catalog_ids() {
  return {"L:sym:2",          "L:sym:3",          "L:sym:4",         "L:sq:2",           "L:sq:3",
          "L:sk:4",           "L:sk:6",           "A1:sym:2:1",      "A1:sym:3:2",       "A1:sq:2:1",
          "A1:sk:4:1",        "A1:sq:2:2",        "A1:sk:4:0",       "DP:sym:2:z^2",     "DP:sym:2:z^3",
          "DP:sym:2:z1^3+z2^4", "DP:sym:3:z^2",   "DP:sym:3:z^3",    "DP:sym:3:z1^3+z2^4", "DP:sq:2:z^3",
          "DP:sk:4:z^3",      "boundary:sym:3:x^2", "boundary:sym:3:x^3", "boundary:sym:3:x+z^3",
          "boundary:sym:3:x*z+z^3", "boundary:sym:3:x^2+z^3", "boundary:sym:2:x^2", "boundary:sq:3:x^2",
          "boundary:sk:6:x^2", "I2",              "I3",              "I4",               "II4",
          "II5",              "II6",              "I2sq",            "I3sq",             "II4sq",
          "II5sq",            "II6sq"};
}

/// Attaches the series origin when the matrix, variables and parameters
/// agree syntactically with a catalog build. Other families are returned as is.
inline MatrixFamily recognize_catalog(const MatrixFamily& f) {
  if (f.origin() || f.size() != 3 || f.kind() == MatrixKind::sk) return f;
  std::vector<std::string> ids = {"II4", "II5", "II6"};
  for (int t = 2; t <= 8; ++t) ids.push_back("I" + std::to_string(t));
  for (auto id : ids) {
    if (f.kind() == MatrixKind::sq) id += "sq";
    MatrixFamily c = build_catalog(id);
    if (c.matrix() == f.matrix() && c.var_names() == f.var_names() && c.param_names() == f.param_names())
      return MatrixFamily(f.name(), f.vars(), f.params(), f.matrix(), f.boundary(), c.origin());
  }
  return f;
}

/// FILE argument of the CLI: a path to a family file, or a catalog id.
inline MatrixFamily load_family(const std::string& arg) {
  std::ifstream probe(arg);
  if (probe) return recognize_catalog(parse_family(probe, arg));
  try {
    return build_catalog(arg);
  } catch (const InputError& e) {
    throw InputError("'" + arg + "' is neither a readable family file nor a catalog id (" + e.what() + ")");
  }
}

}  // namespace msing
