#include <gtest/gtest.h>

#include <cstdlib>

#include "support.hpp"

using namespace msing;

namespace {

Poly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST(Graded, Examples) {
  auto r = graded_quotient_dim(ideal({P("x^2")}, {"x"}), {{"x", 1}});
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.total, 2);
  std::map<long, long> dims = {{0, 1}, {1, 1}};
  EXPECT_EQ(r.per_degree, dims);

  auto j = graded_quotient_dim(ideal({P("3*z1^2"), P("4*z2^3")}, {"z1", "z2"}), {{"z1", 4}, {"z2", 3}});
  EXPECT_EQ(j.total, 6);

  SubmodulePresentation t;
  t.rank = 2;
  t.vars = {"x"};
  t.shifts = {0, 0};
  t.add({P("x"), Poly()});
  t.add({Poly(), P("x")});
  EXPECT_EQ(graded_quotient_dim(t, {{"x", 1}}).total, 2);
}

TEST(Graded, RejectsInhomogeneousGenerators) {
  EXPECT_THROW(graded_quotient_dim(ideal({P("x^2 + x^3")}, {"x"}), {{"x", 1}}), InputError);
  EXPECT_THROW(graded_quotient_dim(ideal({P("x")}, {"x"}), {{"x", 0}}), InputError);
}

TEST(Graded, InfiniteQuotientIsNotCertified) {
  auto r = graded_quotient_dim(ideal({P("x*y")}, {"x", "y"}), {{"x", 1}, {"y", 1}});
  EXPECT_FALSE(r.finite);
  EXPECT_FALSE(r.certified);
  EXPECT_EQ(r.describe(), "infinite");
}

TEST(Graded, TotalIsSumOfSlices) {
  gen::Rng r(47);
  for (int t = 0; t < 20; ++t) {
    long a = r.integer(2, 6), b = r.integer(2, 6);
    auto rep = graded_quotient_dim(ideal({Poly::var("x", a), Poly::var("y", b), P("x*y")}, {"x", "y"}),
                                   {{"x", 1}, {"y", 1}});
    long s = 0;
    for (auto [d, n] : rep.per_degree) {
      EXPECT_GT(n, 0);
      s += n;
    }
    EXPECT_EQ(rep.total, s);
    EXPECT_EQ(rep.total, a + b - 1);
  }
}

TEST(Graded, DegreeCapFromEnvironment) {
  Poly g = P("z1^3 + z2^4");
  ASSERT_EQ(setenv("MSING_DEGREE_CAP", "1", 1), 0);
  auto capped = milnor_report(g);
  unsetenv("MSING_DEGREE_CAP");
  EXPECT_FALSE(capped.finite);
  auto full = milnor_report(g);
  EXPECT_TRUE(full.certified);
  EXPECT_EQ(full.total, 6);
}

TEST(Truncated, Examples) {
  auto r = truncated_quotient_dim(ideal({P("x^2")}, {"x"}), 5);
  EXPECT_EQ(r.total, 2);
  EXPECT_FALSE(r.certified);
  EXPECT_EQ(truncated_quotient_dim(ideal({P("x^2 + x^3")}, {"x"}), 10).total, 2);
  EXPECT_EQ(truncated_quotient_dim(ideal({}, {"x"}), 2).total, 2);
  EXPECT_THROW(truncated_quotient_dim(ideal({}, {"x"}), 0), InputError);
}

TEST(Truncated, MonotoneInOrder) {
  gen::Rng r(53);
  for (int t = 0; t < 10; ++t) {
    auto gens = std::vector<Poly>{r.poly({"x", "y"}, 3, 4), r.poly({"x", "y"}, 3, 4)};
    auto id = ideal(gens, {"x", "y"});
    long prev = 0;
    for (long k = 1; k <= 7; ++k) {
      long cur = truncated_quotient_dim(id, k).total;
      EXPECT_GE(cur, prev);
      prev = cur;
    }
  }
}

TEST(CrossCheck, CertifiedEqualsTruncatedOnCatalog) {
  const char* ids[] = {"L:sym:2",   "L:sq:2",      "A1:sym:2:1", "A1:sq:2:1", "A1:sym:3:1",
                       "DP:sym:2:z^3", "boundary:sym:2:x^2", "boundary:sym:3:x^2+z^3", "I2", "II4"};
  for (const char* id : ids) {
    auto f = build_catalog(id);
    auto w = require_weights(f);
    auto t = tangent_space(f.germ(), f.var_names(), Equivalence::SL, w);
    auto cert = graded_quotient_dim(t, w.weights);
    ASSERT_TRUE(cert.certified) << id;
    long top = cert.per_degree.empty() ? 0 : cert.per_degree.rbegin()->first;
    long max_shift = *std::max_element(t.shifts.begin(), t.shifts.end());
    long order = std::max(1L, top + max_shift + 1);
    EXPECT_EQ(truncated_quotient_dim(t, order).total, cert.total) << id;
  }
}

TEST(Milnor, Examples) {
  EXPECT_EQ(milnor_number(P("z1^2 + z2^2")), 1);
  EXPECT_EQ(milnor_number(P("z^3")), 2);
  EXPECT_EQ(milnor_number(P("b^3 + c^5")), 8);
  EXPECT_EQ(milnor_number(P("z1^2")), 1);
  EXPECT_THROW(milnor_number(P("z1^2"), {"z1", "z2"}), Error);
  EXPECT_THROW(milnor_number(P("1 + z^2")), InputError);
}

TEST(Milnor, NondegenerateQuadraticFormsHaveMilnorNumberOne) {
  gen::Rng r(59);
  for (int t = 0; t < 15; ++t) {
    long s = r.integer(1, 5);
    std::vector<Var> vars;
    for (long i = 0; i < s; ++i) vars.push_back("v" + std::to_string(i));
    // q = sum c_i l_i^2 with l_i = v_i + (random multiple of v_{i+1}): triangular, hence nondegenerate
    Poly q;
    for (long i = 0; i < s; ++i) {
      Poly l = Poly::var(vars[static_cast<std::size_t>(i)]);
      if (i + 1 < s) l += Poly::var(vars[static_cast<std::size_t>(i + 1)]) * r.rational();
      q += l * l * r.nonzero_rational();
    }
    EXPECT_EQ(milnor_number(q, vars), 1) << q.to_string();
  }
}

TEST(Milnor, BrieskornPhamAgainstMonomialCount) {
  for (long a = 2; a <= 5; ++a)
    for (long b = 2; b <= 5; ++b) {
      Poly g = Poly::var("x", static_cast<unsigned>(a)) + Poly::var("y", static_cast<unsigned>(b));
      long expected = gen::standard_monomials(a - 1, b - 1);
      EXPECT_EQ(milnor_number(g), expected) << a << "," << b;
      EXPECT_EQ(milnor_number(g), (a - 1) * (b - 1));
    }
}

TEST(Milnor, NonQuasiHomogeneousFallsBackToTruncation) {
  auto r = milnor_report(P("x^3 + y^4 + x^2*y^2"));
  EXPECT_TRUE(r.finite);
  EXPECT_FALSE(r.certified);
  // x^3 + x^2 y^2 + y^4 is right-equivalent to E6 (semi-quasi-homogeneous with principal part x^3 + y^4)
  EXPECT_EQ(r.total, 6);
}

TEST(BoundaryAlgebra, Examples) {
  EXPECT_EQ(boundary_algebra_dim(P("x^2"), "x", 2), 2);
  EXPECT_EQ(boundary_algebra_dim(P("x + z^3"), "x", 2), 2);
  EXPECT_EQ(boundary_algebra_dim(P("x^2 + z^3"), "x", 2), 4);
  EXPECT_THROW(boundary_algebra_dim(P("x^2"), "x", 0), InputError);
}

TEST(BoundaryAlgebra, PurePowerDependsOnlyOnOrder) {
  for (unsigned p = 1; p <= 6; ++p)
    for (long m = 1; m <= 4; ++m) EXPECT_EQ(boundary_algebra_dim(Poly::var("x", p), "x", m), p);
}

TEST(BoundaryAlgebra, BoundaryVariableNeedNotAppear) {
  EXPECT_THROW(boundary_algebra_dim(P("z^3"), "x", 2), Error);
}

TEST(MuDelta, Examples) {
  auto a = mu_delta(build_A1(MatrixKind::sym, 3, 2));
  EXPECT_EQ(a.value, 1);
  auto dp = mu_delta(build_damon_pike(MatrixKind::sym, 3, P("z^3")));
  EXPECT_EQ(dp.value, 2);
  EXPECT_EQ(dp.method, "milnor");
  auto ii5 = mu_delta(build_table1("II5"));
  EXPECT_EQ(ii5.value, 5);
  EXPECT_EQ(ii5.method, "tjurina");
  auto f4 = mu_delta(build_boundary(MatrixKind::sym, 3, P("x22^2 + z^3")));
  EXPECT_EQ(f4.value, 4);
  EXPECT_EQ(f4.method, "boundary");
}

TEST(MuDelta, EqualsTjurinaOnCatalog) {
  for (const auto& id : catalog_ids()) {
    auto f = build_catalog(id);
    auto tau = tjurina(f, Equivalence::SL);
    ASSERT_TRUE(tau.finite) << id;
    EXPECT_EQ(mu_delta(f).value, tau.total) << id;
  }
}

TEST(MuDelta, RefusesOtherShapes) {
  PolyMatrix m(MatrixKind::sym, 2);
  m.set(0, 0, P("x^2"));
  m.set(0, 1, P("y"));
  m.set(1, 1, P("x^3"));
  MatrixFamily f("odd", {{"x", std::nullopt}, {"y", std::nullopt}}, {}, m);
  EXPECT_THROW(mu_delta(f), Unsupported);
}

TEST(MuDelta, BoundaryMultiplierForSkew) {
  // sk n = 6 has k = 3 and multiplier k - 1 = 2, the same algebra as sym n = 3
  auto f = build_boundary(MatrixKind::sk, 6, P("x34^2 + z^3"));
  EXPECT_EQ(mu_delta(f).value, boundary_algebra_dim(P("x^2 + z^3"), "x", 2));
}

TEST(Curves, Examples) {
  EXPECT_EQ(icis_curve_milnor(P("a^2 + b^2 + c^2"), P("c")), 1);
  EXPECT_EQ(icis_curve_milnor(P("c^2 + 2*b*c + a^2"), P("a*b")), 5);
  EXPECT_EQ(icis_curve_milnor(P("b^2 - a*c"), P("a*b - c^4")), 9);
}

TEST(Curves, SSeriesFromCovers) {
  for (unsigned k = 1; k <= 3; ++k) {
    auto f = build_table1("I", k);
    auto cc = curve_cover_at_zero(f);
    long mu = icis_curve_milnor(cc.f1, cc.f2, cc.vars);
    EXPECT_EQ(mu, static_cast<long>(2 * k + 3));
    EXPECT_EQ(mu, 2 * tjurina(f, Equivalence::SL).total + 1);
  }
}

TEST(Curves, IISeriesFromCovers) {
  for (const char* id : {"II4", "II5", "II6"}) {
    auto f = build_table1(id);
    auto cc = curve_cover_at_zero(f);
    EXPECT_EQ(icis_curve_milnor(cc.f1, cc.f2, cc.vars), 2 * tjurina(f, Equivalence::SL).total + 1) << id;
  }
}
