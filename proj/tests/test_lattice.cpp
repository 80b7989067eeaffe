#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace msing;

namespace {

Lattice load(const std::string& name) {
  std::ifstream in(std::string(std::getenv("MSING_SAMPLES")) + "/" + name);
  if (!in) throw std::runtime_error("missing sample " + name);
  return parse_lattice_file(in);
}

// Random lattice for odd s_eff with the prescribed diagonal; long cycles pair evenly with everything.
Lattice random_odd_lattice(gen::Rng& r, long s_eff) {
  std::size_t n = static_cast<std::size_t>(r.integer(1, 6));
  std::vector<CycleTag> tags;
  for (std::size_t i = 0; i < n; ++i) tags.push_back(r.integer(0, 2) == 0 ? CycleTag::long_cycle : CycleTag::short_cycle);
  IntMatrix g(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = self_intersection(tags[i], s_eff);
    for (std::size_t j = i + 1; j < n; ++j) {
      long v = r.integer(-3, 3);
      if (tags[i] == CycleTag::long_cycle || tags[j] == CycleTag::long_cycle) v *= 2;
      g[i][j] = g[j][i] = v;
    }
  }
  return Lattice(g, tags, s_eff);
}

// Even s_eff: skew form, zero diagonal.
Lattice random_even_lattice(gen::Rng& r, long s_eff) {
  std::size_t n = static_cast<std::size_t>(r.integer(2, 6));
  IntMatrix g(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      g[i][j] = 2 * r.integer(-2, 2);
      g[j][i] = -g[i][j];
    }
  return Lattice(g, std::vector<CycleTag>(n, CycleTag::short_cycle), s_eff);
}

long sign_by_enumeration(long s) {
  // (-1)^(1 + 2 + ... + s)
  long sign = 1;
  for (long i = 1; i <= s; ++i)
    if (i % 2) sign = -sign;
  return sign;
}

long form(const IntMatrix& g, const std::vector<long>& u, const std::vector<long>& v) {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * g[i][j] * v[j];
  return s;
}

}  // namespace

TEST(SelfIntersection, Table) {
  EXPECT_EQ(self_intersection(CycleTag::short_cycle, 4), 0);
  EXPECT_EQ(self_intersection(CycleTag::long_cycle, 4), 0);
  EXPECT_EQ(self_intersection(CycleTag::short_cycle, 5), 2);
  EXPECT_EQ(self_intersection(CycleTag::long_cycle, 5), 4);
  EXPECT_EQ(self_intersection(CycleTag::short_cycle, 3), -2);
  EXPECT_EQ(self_intersection(CycleTag::long_cycle, 3), -4);
  EXPECT_THROW(self_intersection(CycleTag::plain, 3), InputError);
}

TEST(SelfIntersection, AllResidues) {
  for (long s = 1; s <= 40; ++s) {
    long expect_short = s % 2 == 0 ? 0 : (s % 4 == 1 ? 2 : -2);
    EXPECT_EQ(self_intersection(CycleTag::short_cycle, s), expect_short) << s;
    EXPECT_EQ(self_intersection(CycleTag::long_cycle, s), 2 * expect_short) << s;
  }
}

TEST(PLOperator, SignAgreesWithEnumeration) {
  for (long s = 0; s <= 30; ++s) EXPECT_EQ(pl_sign(s), sign_by_enumeration(s)) << s;
}

TEST(PLOperator, Examples) {
  // s_eff = 3: short e, c.e = 1 sends c to c + e
  Lattice a({{-2, 1}, {1, -2}}, {CycleTag::short_cycle, CycleTag::short_cycle}, 3);
  auto p = pl_operator(a, 1);
  EXPECT_EQ(p[0][0], 1);
  EXPECT_EQ(p[1][0], 1);
  // long e with c.e = 2 also sends c to c + e
  Lattice b({{-2, 2}, {2, -4}}, {CycleTag::short_cycle, CycleTag::long_cycle}, 3);
  auto q = pl_operator(b, 1);
  EXPECT_EQ(q[0][0], 1);
  EXPECT_EQ(q[1][0], 1);
  // every pairing with e zero (e.e included, so s_eff even): identity
  Lattice c({{0, 0}, {0, 0}}, {CycleTag::short_cycle, CycleTag::short_cycle}, 4);
  EXPECT_EQ(pl_operator(c, 0), identity_matrix(2));
  // for odd s_eff, a cycle orthogonal to the others still reflects itself
  Lattice d({{-2, 0}, {0, -2}}, {CycleTag::short_cycle, CycleTag::short_cycle}, 3);
  IntMatrix flip = {{-1, 0}, {0, 1}};
  EXPECT_EQ(pl_operator(d, 0), flip);
  // e itself goes to -e
  EXPECT_EQ(pl_operator(a, 1)[1][1], -1);
}

TEST(PLOperator, ColumnsMatchReflectionFormula) {
  gen::Rng r(101);
  for (long s : {3L, 5L, 7L}) {
    for (int t = 0; t < 20; ++t) {
      auto l = random_odd_lattice(r, s);
      for (std::size_t e = 0; e < l.rank(); ++e) {
        auto p = pl_operator(l, e);
        for (std::size_t c = 0; c < l.rank(); ++c) {
          long pairing = l.gram()[c][e];
          if (l.tags()[e] == CycleTag::long_cycle) pairing /= 2;
          for (std::size_t i = 0; i < l.rank(); ++i) {
            long expected = (i == c ? 1 : 0) + (i == e ? sign_by_enumeration(s) * pairing : 0);
            EXPECT_EQ(p[i][c], expected);
          }
        }
      }
    }
  }
}

TEST(PLOperator, PreservesFormAndIsInvolutionForOddSeff) {
  gen::Rng r(103);
  for (long s : {1L, 3L, 5L, 7L, 9L}) {
    for (int t = 0; t < 30; ++t) {
      auto l = random_odd_lattice(r, s);
      for (std::size_t e = 0; e < l.rank(); ++e) {
        auto p = pl_operator(l, e);
        EXPECT_TRUE(preserves_form(l, p)) << s;
        EXPECT_TRUE(is_involution(p)) << s;
      }
    }
  }
}

TEST(PLOperator, PreservesPairingOfArbitraryVectors) {
  gen::Rng r(107);
  for (int t = 0; t < 30; ++t) {
    auto l = random_odd_lattice(r, 5);
    std::size_t e = static_cast<std::size_t>(r.integer(0, static_cast<long>(l.rank()) - 1));
    auto p = pl_operator(l, e);
    std::vector<long> u(l.rank()), v(l.rank());
    for (auto& x : u) x = r.integer(-5, 5);
    for (auto& x : v) x = r.integer(-5, 5);
    auto apply = [&](const std::vector<long>& w) {
      std::vector<long> out(w.size(), 0);
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) out[i] += p[i][j] * w[j];
      return out;
    };
    EXPECT_EQ(form(l.gram(), apply(u), apply(v)), form(l.gram(), u, v));
  }
}

TEST(PLOperator, EvenSeffTransvectionsPreserveSkewForm) {
  gen::Rng r(109);
  for (long s : {2L, 4L, 6L})
    for (int t = 0; t < 20; ++t) {
      auto l = random_even_lattice(r, s);
      for (std::size_t e = 0; e < l.rank(); ++e) EXPECT_TRUE(preserves_form(l, pl_operator(l, e)));
    }
}

TEST(PLOperator, OddPairingWithLongCycleIsAnError) {
  auto l = load("odd_long.lat");
  EXPECT_NO_THROW(pl_operator(l, 0));
  try {
    pl_operator(l, 1);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("non-even pairing with long cycle"), std::string::npos);
  }
  EXPECT_THROW(pl_operator(l, 2), InputError);
}

TEST(Lattice, Validation) {
  EXPECT_THROW(Lattice({{-2, 1}, {2, -2}}, {CycleTag::short_cycle, CycleTag::short_cycle}, 3), InputError);
  EXPECT_THROW(Lattice({{-2}}, {CycleTag::long_cycle}, 3), InputError);
  EXPECT_THROW(Lattice({{0, 1}, {1, 0}}, {CycleTag::short_cycle, CycleTag::short_cycle}, 4), InputError);
  EXPECT_THROW(Lattice({{-2}}, {}, 3), InputError);
  EXPECT_NO_THROW(Lattice({{7}}, {CycleTag::plain}, 3));
}

TEST(LatticeFile, ChainSample) {
  auto l = load("chain_s3.lat");
  EXPECT_EQ(l.rank(), 3u);
  EXPECT_EQ(l.s_eff(), 3);
  EXPECT_EQ(l.tags()[2], CycleTag::long_cycle);
  for (std::size_t e = 0; e < 3; ++e) {
    auto p = pl_operator(l, e);
    EXPECT_TRUE(preserves_form(l, p));
    EXPECT_TRUE(is_involution(p));
  }
}

TEST(LatticeFile, Errors) {
  auto parse = [](const char* s) {
    std::istringstream in(s);
    return parse_lattice_file(in);
  };
  EXPECT_THROW(parse("rank 1\nseff 3\ngram\n-2\n"), InputError);
  EXPECT_THROW(parse("rank 1\nseff 3\ngram\n-2\ntags medium\n"), InputError);
  EXPECT_THROW(parse("rank 2\nseff 3\ngram\n-2 1\n1\ntags short short\n"), InputError);
  EXPECT_THROW(parse("gram\n-2\nrank 1\nseff 3\ntags short\n"), InputError);
  EXPECT_THROW(parse("rank 1\nseff 3\ngram\nx\ntags short\n"), InputError);
  EXPECT_THROW(parse("rank 1\nseff 3\nwhat 2\n"), InputError);
  EXPECT_NO_THROW(parse("rank 1 # comment\nseff 3\ngram\n-2\ntags short\n"));
}

TEST(DoubleCover, XA2Reduced) {
  auto f = read_family_file(std::string(std::getenv("MSING_SAMPLES")) + "/xa2.fam");
  auto c = double_cover(f, true);
  ASSERT_EQ(c.equations.size(), 1u);
  Poly expected = parse_poly("z^3 - z - a^2 - b^2");
  EXPECT_TRUE(c.equations[0] == expected || c.equations[0] == -expected) << c.equations[0].to_string();
  std::vector<Var> vars = {"z", "a", "b"};
  EXPECT_EQ(c.vars, vars);
  EXPECT_TRUE(c.is_involution_invariant());
}

TEST(DoubleCover, BoundaryLift) {
  // [[h(x, z), y], [y, x]] lifts to h(b^2, z) - a^2
  for (const char* h : {"x^2 + z^3", "x + z^4", "x^3 - x*z + z^2"}) {
    Poly hp = parse_poly(h);
    PolyMatrix m(MatrixKind::sym, 2);
    m.set(0, 0, hp);
    m.set(0, 1, Poly::var("y"));
    m.set(1, 1, Poly::var("x"));
    MatrixFamily f("lift", {{"x", std::nullopt}, {"y", std::nullopt}, {"z", std::nullopt}}, {}, m);
    auto c = double_cover(f, true);
    ASSERT_EQ(c.equations.size(), 1u) << h;
    Poly expected = substitute(hp, "x", parse_poly("b^2")) - parse_poly("a^2");
    EXPECT_TRUE(c.equations[0] == expected || c.equations[0] == -expected) << h << ": " << c.equations[0].to_string();
  }
}

TEST(DoubleCover, UnreducedShape) {
  auto f = build_L(MatrixKind::sym, 3);
  auto c = double_cover(f);
  EXPECT_EQ(c.equations.size(), 6u);
  EXPECT_EQ(c.vars.size(), f.var_names().size() + 3);
  EXPECT_TRUE(c.is_involution_invariant());
  for (const auto& e : c.equations) {
    // each equation is m_ij - a_i a_j: the a-part is a single quadratic monomial
    long quad = 0;
    for (const auto& [mono, coef] : e.terms()) {
      long adeg = 0;
      for (const Var v : {"a", "b", "c"}) adeg += static_cast<long>(mono.exponent(v));
      if (adeg > 0) {
        EXPECT_EQ(adeg, 2);
        EXPECT_EQ(coef, Scalar(-1));
        ++quad;
      }
    }
    EXPECT_EQ(quad, 1);
  }
}

TEST(DoubleCover, InvolutionInvariantOnCatalog) {
  for (const char* id : {"I2", "I4", "II5", "A1:sym:3:2", "boundary:sym:3:x^2+z^3"}) {
    auto f = build_catalog(id);
    EXPECT_TRUE(double_cover(f).is_involution_invariant()) << id;
    EXPECT_TRUE(double_cover(f, true).is_involution_invariant()) << id;
  }
}

TEST(DoubleCover, RejectsNonSymmetric) {
  EXPECT_THROW(double_cover(build_L(MatrixKind::sq, 2)), InputError);
  EXPECT_THROW(double_cover(build_L(MatrixKind::sk, 4)), InputError);
}
