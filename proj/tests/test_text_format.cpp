#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "hhorn/text_format.hpp"

using namespace hhorn;
namespace ht = hhorn::testing;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(TextFormat, HypergraphWithoutVarsUsesFirstAppearance) {
  auto h = text::parse_hypergraph("b a\n# comment\n\nc\n");
  EXPECT_EQ(h.ground(), GroundSet({"b", "a", "c"}));
  EXPECT_EQ(h.size(), 2u);
  EXPECT_TRUE(h.contains(VarSet{0, 1}));
}

TEST(TextFormat, HypergraphEmptyEdgeAndVars) {
  auto h = text::parse_hypergraph("vars: x y z\n{}\nz\n");
  EXPECT_EQ(h.ground().size(), 3u);
  EXPECT_TRUE(h.contains(VarSet{}));
  EXPECT_TRUE(h.contains(VarSet{2}));
}

TEST(TextFormat, CnfClauses) {
  auto phi = text::parse_cnf("vars: a b c\na b -> c\n-> a\n");
  ASSERT_EQ(phi.size(), 2u);
  EXPECT_EQ(phi.clauses()[0].body, (VarSet{0, 1}));
  EXPECT_EQ(phi.clauses()[0].head, 2);
  EXPECT_TRUE(phi.clauses()[1].body.empty());
  EXPECT_EQ(text::format_clause(phi.ground(), phi.clauses()[1]), "-> a");
}

TEST(TextFormat, ParseErrorsCarryLineNumbers) {
  try {
    text::parse_cnf("a -> b\nc d\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(text::parse_cnf("a -> b c\n"), ParseError);
  EXPECT_THROW(text::parse_cnf("a -> a\n"), ParseError);
  EXPECT_THROW(text::parse_cnf("a -> b -> c\n"), ParseError);
  EXPECT_THROW(text::parse_cnf("vars: a b\na -> q\n"), ParseError);
  EXPECT_THROW(text::parse_hypergraph("a\nvars: a\n"), ParseError);
  EXPECT_THROW(text::parse_hypergraph("a,b\n"), ParseError);
}

TEST(TextFormat, Sets) {
  GroundSet g({"a", "b", "c"});
  EXPECT_EQ(text::parse_set(g, "a, c"), (VarSet{0, 2}));
  EXPECT_EQ(text::parse_set(g, ""), VarSet{});
  EXPECT_EQ(text::parse_set(g, "  "), VarSet{});
  EXPECT_THROW(text::parse_set(g, "a,,b"), ParseError);
  EXPECT_THROW(text::parse_set(g, "d"), ParseError);
  EXPECT_EQ(text::format_set(g, VarSet{}), "{}");
  EXPECT_EQ(text::format_set(g, VarSet{2, 0}), "a c");
}

TEST(TextFormat, RandomRoundTrip) {
  ht::Rng rng(81);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = ht::uniform(rng, 1, 8);
    auto h = ht::random_hypergraph(rng, n, ht::uniform(rng, 0, 6));
    EXPECT_EQ(text::parse_hypergraph(text::format_hypergraph(h)), h);
    auto phi = ht::random_cnf(rng, n, ht::uniform(rng, 0, 8), 3);
    EXPECT_EQ(text::parse_cnf(text::format_cnf(phi)), phi);
  }
}

TEST(TextFormat, FixturesRoundTrip) {
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(HHORN_FIXTURE_DIR)) {
    const auto path = entry.path();
    const auto body = slurp(path);
    if (path.extension() == ".hg") {
      auto h = text::parse_hypergraph(body);
      EXPECT_EQ(text::parse_hypergraph(text::format_hypergraph(h)), h) << path;
      ++checked;
    } else if (path.extension() == ".cnf") {
      auto phi = text::parse_cnf(body);
      EXPECT_EQ(text::parse_cnf(text::format_cnf(phi)), phi) << path;
      ++checked;
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(TextFormat, FixturesMatchBuilders) {
  const std::string dir = HHORN_FIXTURE_DIR;
  ht::CoverFamilies ex;
  EXPECT_EQ(text::parse_hypergraph(slurp(dir + "/cover8_h.hg")), ex.h());
  EXPECT_EQ(text::parse_hypergraph(slurp(dir + "/cover8_hprime.hg")), ex.h_prime());
  EXPECT_EQ(text::parse_hypergraph(slurp(dir + "/selfdual5.hg")), ht::self_dual_five());
  EXPECT_EQ(text::parse_hypergraph(slurp(dir + "/keys_bipartite.hg")), ht::bipartite_keys());
  EXPECT_TRUE(cnf_equivalent(text::parse_cnf(slurp(dir + "/cover8.cnf")), circular_cnf(ex.h())));
  auto eq_cnf = text::parse_cnf(slurp(dir + "/eq.cnf"));
  auto eq_hg = text::parse_hypergraph(slurp(dir + "/eq.hg"));
  EXPECT_TRUE(cnf_equivalent(eq_cnf, circular_cnf(eq_hg)));
}
