#include <gtest/gtest.h>

#include <sstream>

#include "msing/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
  bool has(const std::string& line) const { return ("\n" + out).find("\n" + line + "\n") != std::string::npos; }
};

std::string sample(const std::string& name) { return std::string(std::getenv("MSING_SAMPLES")) + "/" + name; }

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "msing");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = msing::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, LLIndexTable1) {
  auto r = run({"ll-index", "--table1", "II4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.has("index = 6750")) << r.out;
  EXPECT_TRUE(r.has("status = ok"));
}

TEST(Cli, LLIndexByType) {
  auto r = run({"ll-index", "--type", "A", "--rank", "1", "--n", "2", "--kind", "sym"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.has("index = 2")) << r.out;
}

TEST(Cli, VerifyPq) {
  auto r = run({"verify", "pq", "--seed", "1", "--samples", "100"});
  EXPECT_EQ(r.code, 0);
  auto pos = r.out.find("max_im = ");
  ASSERT_NE(pos, std::string::npos);
  double v = std::stod(r.out.substr(pos + 9));
  EXPECT_LE(v, 1e-8);
}

TEST(Cli, UndeclaredVariableIsInputError) {
  auto r = run({"tjurina", sample("undeclared.fam")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("undeclared"), std::string::npos);
}

TEST(Cli, MissingFileIsInputError) { EXPECT_EQ(run({"qh", sample("nope.fam")}).code, 2); }

TEST(Cli, UnknownCommandPrintsUsage) {
  auto r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "everything"}).code, 2);
}

TEST(Cli, VerifyCatalogPassesAndCatchesCorruption) {
  auto ok = run({"verify", "catalog", "--family", sample("ii4.fam")});
  EXPECT_EQ(ok.code, 0) << ok.out;
  auto bad = run({"verify", "catalog", "--family", sample("ii4_corrupted.fam")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(bad.has("status = check-failed"));
  EXPECT_NE(bad.out.find("= FAIL"), std::string::npos);
}

TEST(Cli, OtherSuitesPass) {
  for (const char* s : {"links", "lattice"}) {
    auto r = run({"verify", s});
    EXPECT_EQ(r.code, 0) << s << "\n" << r.out;
  }
  auto t = run({"verify", "table1", "--seed", "3", "--samples", "5"});
  EXPECT_EQ(t.code, 0) << t.out;
}

TEST(Cli, Tjurina) {
  auto r = run({"tjurina", sample("ii4.fam"), "--equiv", "gl"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.has("tau = 4"));
  EXPECT_TRUE(r.has("equivalence = GL"));
  EXPECT_TRUE(run({"tjurina", "I3"}).has("tau = 3"));
  EXPECT_EQ(run({"tjurina", sample("ii4.fam"), "--equiv", "o"}).code, 2);
}

TEST(Cli, MuDeltaMilnorBoundary) {
  auto f4 = run({"mu-delta", sample("f4_boundary.fam")});
  EXPECT_EQ(f4.code, 0) << f4.err;
  EXPECT_TRUE(f4.has("mu_delta = 4")) << f4.out;
  EXPECT_TRUE(run({"milnor", "z1^3 + z2^4"}).has("mu = 6"));
  EXPECT_TRUE(run({"boundary-mu", "x^2 + z^3", "--multiplier", "2"}).has("dim = 4"));
  EXPECT_EQ(run({"milnor", "z1^2 +"}).code, 2);
}

TEST(Cli, QuasiHomogeneity) {
  auto a = run({"qh", sample("a1_sym2.fam")});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(a.has("quasi_homogeneous = yes")) << a.out;
  auto n = run({"qh", sample("non_qh.fam")});
  EXPECT_EQ(n.code, 0);
  EXPECT_TRUE(n.has("quasi_homogeneous = no")) << n.out;
}

TEST(Cli, CatalogListAndBuild) {
  auto l = run({"catalog", "list"});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("II6"), std::string::npos);
  auto b = run({"catalog", "build", "I", "--k", "2"});
  EXPECT_EQ(b.code, 0);
  std::istringstream in(b.out);
  auto f = msing::parse_family(in, "built");
  EXPECT_EQ(f.params().size(), 3u);
  EXPECT_EQ(run({"catalog", "build", "XX9"}).code, 2);
}

TEST(Cli, CriticalValues) {
  auto r = run({"critical-values", "I2", "--set", "l0=1", "--set", "l1=2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.has("distinct_nonzero = 2")) << r.out;
  EXPECT_TRUE(r.has("generic = yes")) << r.out;
  EXPECT_EQ(run({"critical-values", "I2", "--set", "q=1"}).code, 2);
  EXPECT_EQ(run({"critical-values", "I2", "--set", "l2=3"}).code, 2);
  EXPECT_EQ(run({"critical-values", "I2", "--set", "l0"}).code, 2);
}

TEST(Cli, SkewEigenvalues) {
  auto r = run({"skew-eig", sample("blocks.mat")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pfaffian = 6"), std::string::npos) << r.out;
}

TEST(Cli, LiftAndLattice) {
  auto l = run({"lift", sample("xa2.fam"), "--reduce"});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("equations = 1"), std::string::npos) << l.out;
  auto p = run({"lattice", sample("chain_s3.lat"), "--reflect", "3"});
  EXPECT_EQ(p.code, 0) << p.out;
  auto bad = run({"lattice", sample("odd_long.lat"), "--reflect", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("non-even pairing with long cycle"), std::string::npos);
}

TEST(Cli, PorcelainDropsAnchors) {
  auto plain = run({"ll-index", "--table1", "II5"});
  auto porc = run({"--porcelain", "ll-index", "--table1", "II5"});
  EXPECT_NE(plain.out.find("\n# "), std::string::npos);
  EXPECT_EQ(porc.out.find('#'), std::string::npos);
  std::istringstream in(porc.out);
  std::string line;
  while (std::getline(in, line)) EXPECT_NE(line.find(" = "), std::string::npos) << line;
}

TEST(Cli, ReportsAreByteIdentical) {
  std::vector<std::vector<std::string>> cmds = {
      {"verify", "pq", "--seed", "7", "--samples", "20"},
      {"verify", "table1", "--seed", "2", "--samples", "3"},
      {"tjurina", sample("ii4.fam")},
      {"critical-values", "II4", "--set", "l0=1/3", "--set", "l1=-2"},
  };
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << c[0];
  }
}
