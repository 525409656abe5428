#include "coxfsa/experiments.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "coxfsa/errors.hpp"
#include "coxfsa/tits.hpp"
#include "test_support.hpp"

namespace coxfsa {
namespace {

using coxfsa::testing::load;

// Divergence recomputed from words with the rewriting oracle.
std::size_t oracle_divergence(TitsOracle& oracle, const Word& v, const Word& vp, FtMode mode,
                              Generator s) {
  std::size_t best = 0;
  for (std::size_t i = 1; i <= std::max(v.size(), vp.size()); ++i) {
    Word w = v.prefix(i).reversed();
    if (mode == FtMode::kLeft) w.push_back(s);
    w.append(vp.prefix(i));
    best = std::max(best, oracle.length(w));
  }
  return best;
}

TEST(KConstantTest, Examples) {
  EXPECT_EQ(k_constant(*load("inf_dihedral")), 1u);
  EXPECT_EQ(k_constant(*load("a1")), 1u);
  EXPECT_EQ(k_constant(*load("triangle244")), 4u);
  EXPECT_EQ(k_constant(*load("triangle333")), 3u);
  EXPECT_EQ(k_constant(*load("a3tilde")), 6u);
  EXPECT_EQ(k_constant(*load("h3")), 15u);
}

TEST(FtPairTest, Examples) {
  auto sys = load("triangle244");
  const Element id = sys->identity(), s = sys->generator(0);
  EXPECT_EQ(ft_pair_divergence(id, s, FtMode::kRight, 0), 1u);
  EXPECT_EQ(ft_pair_divergence(id, s, FtMode::kLeft, 0), 0u);
  const Element str = element_of(*sys, sys->parse_word("str"));
  const std::size_t d = ft_pair_divergence(str, str.times(0), FtMode::kRight, 0);
  EXPECT_LE(d, 20u);
  EXPECT_EQ(d, 1u);  // regression value
  EXPECT_THROW(ft_pair_divergence(s, id, FtMode::kRight, 0), PreconditionError);
  EXPECT_THROW(ft_pair_divergence(id, sys->generator(1), FtMode::kRight, 0), PreconditionError);
}

TEST(FtPairTest, MatchesRewritingOracle) {
  for (const auto& name : {"triangle244", "triangle333", "a3tilde"}) {
    auto sys = load(name);
    TitsOracle oracle(sys->matrix(), 24);
    for (const auto& g : ball(*sys, 5)) {
      const Word v = canonical_word(g);
      for (Generator s = 0; s < sys->rank(); ++s) {
        if (!g.has_right_descent(s)) {
          const Word vp = canonical_word(g.times(s));
          EXPECT_EQ(ft_pair_divergence(g, g.times(s), FtMode::kRight, s),
                    oracle_divergence(oracle, v, vp, FtMode::kRight, s));
          // Swapping the words gives the inverse elements.
          EXPECT_EQ(word_pair_divergence(*sys, v, vp, FtMode::kRight, s),
                    word_pair_divergence(*sys, vp, v, FtMode::kRight, s));
        }
        if (!g.has_left_descent(s)) {
          const Word vp = canonical_word(g.left_times(s));
          EXPECT_EQ(ft_pair_divergence(g, g.left_times(s), FtMode::kLeft, s),
                    oracle_divergence(oracle, v, vp, FtMode::kLeft, s));
        }
      }
    }
  }
}

TEST(WitnessTest, TieBreak) {
  std::optional<Witness> best;
  merge_witness(best, Witness{Word{1}, 0, 3});
  merge_witness(best, Witness{Word{0, 1}, 2, 3});
  EXPECT_EQ(best->g, (Word{0, 1}));
  merge_witness(best, Witness{Word{0, 1}, 1, 3});
  EXPECT_EQ(best->s, 1u);
  merge_witness(best, Witness{Word{2}, 0, 4});
  EXPECT_EQ(best->value, 4u);
  merge_witness(best, Witness{Word{}, 0, 2});
  EXPECT_EQ(best->g, Word{2});
}

TEST(FtScanTest, Triangle244WithinBound) {
  auto sys = load("triangle244");
  const auto r = ft_scan(*sys, 6);
  EXPECT_TRUE(r.two_dimensional);
  EXPECT_EQ(r.k, 4u);
  EXPECT_LE(r.max_ii, 20u);
  EXPECT_TRUE(r.bound_holds());
  EXPECT_GT(r.max_ii, 0u);
  EXPECT_GT(r.max_iii, 0u);
  ASSERT_TRUE(r.witness_ii.has_value());
  EXPECT_EQ(r.witness_ii->value, r.max_ii);
}

TEST(FtScanTest, ThreadsGiveIdenticalReports) {
  auto sys = load("triangle333");
  ScanOptions one, three;
  three.threads = 3;
  const auto a = ft_scan(*sys, 5, one), b = ft_scan(*sys, 5, three);
  EXPECT_EQ(a.pairs, b.pairs);
  EXPECT_EQ(a.max_ii, b.max_ii);
  EXPECT_EQ(a.max_iii, b.max_iii);
  EXPECT_EQ(a.witness_ii->g, b.witness_ii->g);
  EXPECT_EQ(a.witness_ii->s, b.witness_ii->s);
  EXPECT_EQ(a.witness_iii->g, b.witness_iii->g);
}

TEST(FtScanTest, AllWordsAtLeastCanonical) {
  auto sys = load("triangle244");
  ScanOptions all;
  all.all_words = true;
  const auto a = ft_scan(*sys, 4);
  const auto b = ft_scan(*sys, 4, all);
  EXPECT_GE(b.max_ii, a.max_ii);
  EXPECT_GE(b.max_iii, a.max_iii);
  EXPECT_EQ(a.pairs, b.pairs);
  all.word_cap = 1;
  EXPECT_THROW(ft_scan(*sys, 4, all), ResourceError);
}

TEST(DivergenceTest, SmallRadii) {
  auto dih = load("inf_dihedral");
  const auto rows = divergence_scan(*dih, {0, 1, 5});
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) EXPECT_EQ(row.max, 1u);
  // t then s: the canonical word of ts = st starts with s.
  auto triangle244 = load("triangle244");
  const auto f = divergence_scan(*triangle244, {0, 1});
  EXPECT_EQ(f[0].max, 1u);
  EXPECT_EQ(f[1].max, 2u);
  EXPECT_THROW(divergence_scan(*triangle244, {3, 3}), PreconditionError);
  EXPECT_TRUE(divergence_scan(*triangle244, {}).empty());
}

TEST(DivergenceTest, Triangle244Bounded) {
  auto sys = load("triangle244");
  const auto rows = divergence_scan(*sys, {6, 8, 10});
  EXPECT_EQ(rows[0].max, rows[1].max);
  EXPECT_EQ(rows[1].max, rows[2].max);
  EXPECT_LE(rows[2].max, 20u);
}

TEST(DivergenceTest, AgreesWithFtScan) {
  auto sys = load("a3tilde");
  const auto rows = divergence_scan(*sys, {5});
  EXPECT_EQ(rows[0].max, ft_scan(*sys, 5).max_ii);
}

TEST(PropMainScanTest, Examples) {
  auto sys = load("triangle244");
  const auto zero = prop_main_scan(*sys, 0);
  EXPECT_EQ(zero.failures, 0u);
  EXPECT_GT(zero.checked, 0u);
  const auto r = prop_main_scan(*sys, 4);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_FALSE(r.first_failure.has_value());
  ScanOptions two;
  two.threads = 2;
  EXPECT_EQ(prop_main_scan(*sys, 4, two).checked, r.checked);
  EXPECT_THROW(prop_main_scan(*load("a3tilde"), 1), PreconditionError);
}

TEST(TsvTest, Layout) {
  auto sys = load("triangle244");
  std::ostringstream os;
  write_ft_tsv(*sys, {ft_scan(*sys, 2)}, os);
  std::istringstream lines(os.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "radius\tK\tmax_ii\tmax_iii\twitness_g_nf\twitness_s");
  EXPECT_EQ(row.rfind("2\t4\t", 0), 0u);
  std::ostringstream d;
  write_divergence_tsv(*sys, divergence_scan(*sys, {1}), d);
  EXPECT_EQ(d.str().rfind("radius\tmax_divergence\twitness_g_nf\twitness_s\n1\t2\t", 0), 0u);
}

}  // namespace
}  // namespace coxfsa
