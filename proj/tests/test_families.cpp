#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "support.hpp"

using namespace msing;

namespace {

Poly P(const char* s) { return parse_poly(s); }

MatrixFamily parse(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in, "test");
}

long sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

std::vector<MatrixFamily> catalog() {
  std::vector<MatrixFamily> r;
  for (const auto& id : catalog_ids()) r.push_back(build_catalog(id));
  return r;
}

}  // namespace

TEST(BuildL, Examples) {
  auto s = build_L(MatrixKind::sym, 2).germ();
  EXPECT_EQ(s(0, 0), P("-x22"));
  EXPECT_EQ(s(0, 1), P("x12"));
  EXPECT_EQ(s(1, 0), P("x12"));
  EXPECT_EQ(s(1, 1), P("x22"));

  auto q = build_L(MatrixKind::sq, 2).germ();
  EXPECT_EQ(q(0, 1), P("x12"));
  EXPECT_EQ(q(1, 0), P("x21"));
  EXPECT_EQ(q(0, 0), P("-x22"));

  auto f = build_L(MatrixKind::sk, 4);
  EXPECT_EQ(f.germ()(0, 1), P("-x34"));
  EXPECT_EQ(f.germ()(1, 0), P("x34"));
  std::vector<Var> expected = {"x13", "x14", "x23", "x24", "x34"};
  EXPECT_EQ(f.var_names(), expected);
}

TEST(BuildL, CoordinateCountIsNMinusOne) {
  for (std::size_t n = 2; n <= 5; ++n) {
    EXPECT_EQ(build_L(MatrixKind::sym, n).vars().size(), n * (n + 1) / 2 - 1);
    EXPECT_EQ(build_L(MatrixKind::sq, n).vars().size(), n * n - 1);
  }
  for (std::size_t n : {2u, 4u, 6u}) EXPECT_EQ(build_L(MatrixKind::sk, n).vars().size(), n * (n - 1) / 2 - 1);
}

TEST(BuildL, InvalidSizes) {
  EXPECT_THROW(build_L(MatrixKind::sym, 1), InputError);
  EXPECT_THROW(build_L(MatrixKind::sk, 3), InputError);
}

TEST(BuildA1, Examples) {
  EXPECT_EQ(build_A1(MatrixKind::sym, 2, 1).germ()(0, 0), P("-x22 - z^2"));
  EXPECT_EQ(build_A1(MatrixKind::sk, 4, 0).germ()(0, 1), P("-x34"));
  EXPECT_EQ(build_A1(MatrixKind::sq, 2, 2).germ()(0, 0), P("-x22 - z1^2 - z2^2"));
  auto with = build_A1(MatrixKind::sym, 2, 1, true);
  ASSERT_EQ(with.params().size(), 1u);
  EXPECT_EQ(with.matrix()(0, 0), P("-x22 - z^2 + l"));
  EXPECT_EQ(with.germ()(0, 0), P("-x22 - z^2"));
}

TEST(BuildBoundary, Examples) {
  auto b2 = build_boundary(MatrixKind::sym, 2, P("x22^2"));
  EXPECT_EQ(b2.germ()(0, 0), P("x22^2"));
  EXPECT_EQ(b2.germ()(1, 1), P("x22"));
  EXPECT_EQ(b2.boundary(), std::optional<Var>("x22"));

  auto b3 = build_boundary(MatrixKind::sym, 3, P("x22 + z^3"));
  EXPECT_EQ(b3.germ()(0, 0), P("-x33 + x22 + z^3"));

  auto b6 = build_boundary(MatrixKind::sk, 6, P("x34^2"));
  EXPECT_EQ(b6.germ()(0, 1), P("-x56 + x34^2"));
  EXPECT_EQ(b6.germ()(2, 3), P("x34"));

  // h written in x is renamed onto the boundary coordinate
  EXPECT_EQ(build_boundary(MatrixKind::sym, 3, P("x^2 + z^3"), "x").germ()(0, 0), P("-x33 + x22^2 + z^3"));
}

TEST(BuildBoundary, RejectsOtherCoordinates) {
  EXPECT_THROW(build_boundary(MatrixKind::sym, 3, P("x23")), InputError);
}

TEST(BuildDamonPike, CornerFunction) {
  auto f = build_damon_pike(MatrixKind::sym, 2, P("z1^2 + z2^3"));
  EXPECT_EQ(f.germ()(0, 0), P("-x22 + z1^2 + z2^3"));
  EXPECT_THROW(build_damon_pike(MatrixKind::sym, 2, P("x22^2")), InputError);
}

TEST(BuildTable1, Examples) {
  auto i2 = build_table1("I", 1);
  const auto& m = i2.matrix();
  EXPECT_EQ(m(0, 0), P("x"));
  EXPECT_EQ(m(0, 1), P("l1"));
  EXPECT_EQ(m(0, 2), P("z"));
  EXPECT_EQ(m(1, 1), P("y + x + l0"));
  EXPECT_EQ(m(1, 2), P("w"));
  EXPECT_EQ(m(2, 2), P("y"));

  auto ii4 = build_table1("II4").matrix();
  EXPECT_EQ(ii4(0, 0), P("x"));
  EXPECT_EQ(ii4(0, 1), P("w^2 + l1*w + l0"));
  EXPECT_EQ(ii4(0, 2), P("y + l3*w + l2"));
  EXPECT_EQ(ii4(1, 1), P("y"));
  EXPECT_EQ(ii4(1, 2), P("z"));
  EXPECT_EQ(ii4(2, 2), P("w"));

  auto sq = build_table1("II4sq").matrix();
  EXPECT_EQ(sq.kind(), MatrixKind::sq);
  EXPECT_EQ(sq(0, 1), P("w^2 + l1*w + l0 + u12"));
  EXPECT_EQ(sq(1, 0), P("w^2 + l1*w + l0 - u12"));
  EXPECT_EQ(sq(2, 1), P("z - u23"));

  EXPECT_THROW(build_table1("I", 0), InputError);
  EXPECT_THROW(build_table1("II7"), InputError);
}

TEST(BuildTable1, ParameterCounts) {
  for (unsigned k = 1; k <= 7; ++k) EXPECT_EQ(build_table1("I", k).params().size(), k + 1);
  for (unsigned i = 4; i <= 6; ++i) {
    EXPECT_EQ(build_table1("II" + std::to_string(i)).params().size(), i);
    EXPECT_EQ(build_table1("II" + std::to_string(i) + "sq").params().size(), i);
  }
}

TEST(Weights, Examples) {
  auto w = require_weights(build_table1("I", 1));
  for (const auto& v : {"x", "y", "z", "w"}) EXPECT_EQ(w.weights.at(v), w.weights.at("x"));
  EXPECT_EQ(w.delta[0], w.delta[1]);
  EXPECT_EQ(w.delta[1], w.delta[2]);
  EXPECT_EQ(2 * w.delta[0], w.weights.at("x"));

  auto a = require_weights(build_A1(MatrixKind::sym, 2, 1));
  EXPECT_EQ(a.weights.at("x22"), 2);
  EXPECT_EQ(a.weights.at("x12"), 2);
  EXPECT_EQ(a.weights.at("z"), 1);

  EXPECT_FALSE(solve_weights(read_family_file(std::string(std::getenv("MSING_SAMPLES")) + "/non_qh.fam")).has_value());
}

TEST(Weights, SquareSplittingFixedByFirstEntries) {
  auto w = require_weights(build_L(MatrixKind::sq, 3));
  EXPECT_EQ(w.delta[0], w.delta_prime[0]);
}

TEST(Weights, IncludingParameters) {
  auto f = build_table1("II6");
  auto w = require_weights(f, true);
  EXPECT_EQ(w.param_weights.size(), 6u);
  for (const auto& [v, x] : w.param_weights) EXPECT_GT(x, 0) << v;
  EXPECT_TRUE(verify_euler_identity(f.matrix(), w));
}

TEST(Euler, Examples) {
  auto a = build_A1(MatrixKind::sym, 2, 0);
  auto w = require_weights(a);
  EXPECT_TRUE(verify_euler_identity(a, w));
  auto i2 = build_table1("I", 1);
  auto wi = require_weights(i2);
  EXPECT_TRUE(verify_euler_identity(i2, wi));
  wi.weights["x"] += 1;
  EXPECT_FALSE(verify_euler_identity(i2, wi));
  auto wd = require_weights(i2);
  wd.delta[0] += 1;
  EXPECT_FALSE(verify_euler_identity(i2, wd));
}

TEST(Catalog, EveryFamilyIsQuasiHomogeneous) {
  for (const auto& f : catalog()) {
    auto w = solve_weights(f);
    ASSERT_TRUE(w.has_value()) << f.name();
    EXPECT_TRUE(verify_euler_identity(f, *w)) << f.name();
    for (const auto& [v, x] : w->weights) EXPECT_GT(x, 0) << f.name() << " " << v;
  }
}

TEST(Catalog, DiscriminantDegreeMatchesSplitting) {
  for (const auto& f : catalog()) {
    auto w = require_weights(f);
    Poly d = discriminant_function(f.germ());
    auto deg = weighted_degree(d, w.weights);
    ASSERT_TRUE(deg.has_value()) << f.name();
    long expected = f.kind() == MatrixKind::sk ? sum(w.delta) : sum(w.delta) + sum(w.delta_prime);
    EXPECT_EQ(*deg, expected) << f.name();
    // direct degree: the leading monomial's weight
    EXPECT_EQ(monomial_weight(d.leading_monomial(), w.weights), expected) << f.name();
  }
}

TEST(Catalog, WeightsAreMinimalIntegers) {
  for (const auto& f : catalog()) {
    auto w = require_weights(f);
    long g = 0;
    for (const auto& [v, x] : w.weights) g = std::gcd(g, x);
    for (long d : w.delta) g = std::gcd(g, d);
    for (long d : w.delta_prime) g = std::gcd(g, d);
    EXPECT_EQ(g, 1) << f.name();
  }
}

TEST(Catalog, ScalingPreservesEulerIdentity) {
  // property: scaling every weight by c > 1 breaks minimality but keeps the Euler identity
  gen::Rng r(41);
  for (const auto& f : catalog()) {
    auto w = require_weights(f);
    long c = r.integer(2, 5);
    for (auto& [v, x] : w.weights) x *= c;
    for (auto& d : w.delta) d *= c;
    for (auto& d : w.delta_prime) d *= c;
    EXPECT_TRUE(verify_euler_identity(f, w)) << f.name();
  }
}

TEST(Stabilize, Examples) {
  auto s = build_A1(MatrixKind::sym, 2, 1);
  auto s3 = stabilize(s, 3);
  EXPECT_EQ(s3.germ()(2, 2), Poly(1L));
  EXPECT_EQ(s3.germ()(0, 2), Poly());
  EXPECT_EQ(det(s3.germ()), det(s.germ()));

  auto k = build_L(MatrixKind::sk, 2);
  auto k4 = stabilize(k, 4);
  EXPECT_EQ(k4.germ()(2, 3), Poly(1L));
  EXPECT_EQ(k4.germ()(3, 2), Poly(-1L));
  EXPECT_EQ(pfaffian(k4.germ()), pfaffian(k.germ()));

  EXPECT_EQ(stabilize(s, 2).germ(), s.germ());
  EXPECT_THROW(stabilize(s, 1), InputError);
  EXPECT_THROW(stabilize(k, 3), InputError);
}

TEST(Stabilize, PreservesDiscriminantAcrossCatalog) {
  for (const auto& f : catalog()) {
    if (f.size() > 4) continue;
    auto g = stabilize(f, f.size() + 2);
    EXPECT_EQ(discriminant_function(g.germ()), discriminant_function(f.germ())) << f.name();
  }
}

TEST(FamilyFile, ParsesSample) {
  auto f = read_family_file(std::string(std::getenv("MSING_SAMPLES")) + "/a1_sym2.fam");
  EXPECT_EQ(f.name(), "A1sym2");
  EXPECT_EQ(f.kind(), MatrixKind::sym);
  EXPECT_EQ(f.matrix()(1, 0), P("x12"));
  EXPECT_EQ(f.param_names(), std::vector<Var>{"l"});
}

TEST(FamilyFile, WeightsAndBoundary) {
  auto f = parse("family t\nkind sym\nsize 2\nvars a:2 b:1\nboundary a\nentry 1 1 : b^2\nentry 2 2 : a\n");
  EXPECT_EQ(f.vars()[0].weight, std::optional<long>(2));
  EXPECT_EQ(f.vars()[1].weight, std::optional<long>(1));
  EXPECT_EQ(f.boundary(), std::optional<Var>("a"));
  EXPECT_EQ(f.matrix()(0, 1), Poly());
}

TEST(FamilyFile, Errors) {
  const std::string head = "family t\nkind sym\nsize 2\nvars x y\n";
  EXPECT_THROW(parse(head + "entry 1 1 : x + q\n"), InputError);        // undeclared
  EXPECT_THROW(parse(head + "entry 2 1 : x\n"), InputError);            // sym needs J >= I
  EXPECT_THROW(parse(head + "entry 1 1 : x\nentry 1 1 : y\n"), InputError);  // duplicate
  EXPECT_THROW(parse(head + "entry 1 3 : x\n"), InputError);            // out of range
  EXPECT_THROW(parse(head + "colour red\n"), InputError);
  EXPECT_THROW(parse("family t\nkind sk\nsize 2\nvars x\nentry 1 1 : x\n"), InputError);
  EXPECT_THROW(parse("family t\nkind sk\nsize 3\nvars x\n"), InputError);
  EXPECT_THROW(parse("family t\nkind diag\nsize 2\n"), InputError);
  EXPECT_THROW(parse("kind sym\nsize 2\n"), InputError);
  try {
    parse(head + "\n\nentry 1 1 : 2x\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("test:7"), std::string::npos) << e.what();
  }
}

TEST(FamilyFile, RoundTripOverCatalog) {
  for (const auto& f : catalog()) {
    auto g = parse(format_family(f));
    EXPECT_EQ(g.matrix(), f.matrix()) << f.name();
    EXPECT_EQ(g.var_names(), f.var_names()) << f.name();
    EXPECT_EQ(g.param_names(), f.param_names()) << f.name();
    EXPECT_EQ(g.boundary(), f.boundary()) << f.name();
    EXPECT_EQ(format_family(g), format_family(f)) << f.name();
  }
}

TEST(FamilyFile, RecognizesTable1) {
  auto f = read_family_file(std::string(std::getenv("MSING_SAMPLES")) + "/ii4.fam");
  auto g = recognize_catalog(f);
  ASSERT_TRUE(g.origin().has_value());
  EXPECT_EQ(g.origin()->id(), "II4");
  auto bad = recognize_catalog(read_family_file(std::string(std::getenv("MSING_SAMPLES")) + "/ii4_corrupted.fam"));
  EXPECT_FALSE(bad.origin().has_value());
}

TEST(CatalogIds, RoundTrip) {
  for (const auto& id : catalog_ids()) {
    auto f = build_catalog(id);
    auto g = build_catalog(f.name());
    EXPECT_EQ(g.name(), f.name()) << id;
    EXPECT_EQ(g.matrix(), f.matrix()) << id;
  }
  EXPECT_THROW(build_catalog("XYZ"), InputError);
  EXPECT_THROW(build_catalog("L:sym:1"), InputError);
}
