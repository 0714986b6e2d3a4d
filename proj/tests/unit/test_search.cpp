#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "rsd/error.hpp"
#include "rsd/oracle.hpp"
#include "rsd/search.hpp"

using namespace rsd;
using proptest::Gen;

namespace {

struct Toy {
  Population population;
  std::vector<Proposition> props;
};

Toy random_toy(Gen& g, std::size_t max_props = 10, bool balanced = true) {
  for (;;) {
    const std::size_t n = 2 * g.between(5, 30);
    const proptest::AttrShape shape{g.between(2, 4), g.between(2, 4)};
    Population p = proptest::random_population(g, n, balanced, proptest::TargetShape::ties, shape);
    auto props = generate_propositions(p);
    if (props.size() <= max_props) return {std::move(p), std::move(props)};
  }
}

std::vector<double> f_values(const std::vector<ResultEntry>& r) {
  std::vector<double> v;
  for (const auto& e : r) v.push_back(e.scores.f);
  return v;
}

void expect_same_values(const std::vector<ResultEntry>& a, const std::vector<ResultEntry>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(proptest::near(a[i].scores.f, b[i].scores.f)) << i;
}

}  // namespace

TEST(Search, MatchesExhaustiveEnumeration) {
  Gen g(103);
  for (int round = 0; round < 40; ++round) {
    const Toy t = random_toy(g);
    SearchConfig c;
    c.weight = proptest::random_weight(g);
    c.k = g.between(1, 6);
    c.max_depth = static_cast<int>(g.between(1, 3));
    for (EstimatorKind kind : {EstimatorKind::naive, EstimatorKind::brig, EstimatorKind::rawr}) {
      c.estimator = kind;
      const SearchResult r = mine_topk(t.population, t.props, c);
      const auto expect = brute_force_topk(t.population, t.props, c.weight, c.k, c.max_depth);
      expect_same_values(r.results, expect);
      EXPECT_FALSE(r.stats.budget_exhausted);
      EXPECT_EQ(r.stats.nodes_generated, r.stats.nodes_expanded + r.stats.nodes_pruned);
    }
  }
}

TEST(Search, ZeroWeightTopOneMaximisesImpact) {
  Gen g(107);
  for (int round = 0; round < 20; ++round) {
    const Toy t = random_toy(g, 10);
    SearchConfig c;
    c.weight = 0.0;
    c.k = 1;
    c.max_depth = 2;
    const SearchResult r = mine_topk(t.population, t.props, c);
    double best = 0.0;
    for (std::uint32_t i = 0; i < t.props.size(); ++i) {
      best = std::max(best, impact(extension(Selector({i}), t.population, t.props)));
      for (std::uint32_t j = i + 1; j < t.props.size(); ++j)
        best = std::max(best, impact(extension(Selector({i, j}), t.population, t.props)));
    }
    ASSERT_FALSE(r.results.empty());
    EXPECT_TRUE(proptest::near(r.results[0].scores.f, best));
  }
}

TEST(Search, EstimatorsAgreeAndRawrExpandsLess) {
  Gen g(109);
  for (int round = 0; round < 20; ++round) {
    const Toy t = random_toy(g, 14);
    SearchConfig c;
    c.weight = 0.5;
    c.k = 3;
    c.estimator = EstimatorKind::brig;
    const SearchResult brig = mine_topk(t.population, t.props, c);
    c.estimator = EstimatorKind::rawr;
    const SearchResult rawr = mine_topk(t.population, t.props, c);
    c.estimator = EstimatorKind::naive;
    const SearchResult naive = mine_topk(t.population, t.props, c);
    expect_same_values(brig.results, rawr.results);
    expect_same_values(naive.results, rawr.results);
    EXPECT_LE(rawr.stats.nodes_expanded, brig.stats.nodes_expanded);
  }
}

TEST(Search, ResultsAreSoundAndOrdered) {
  Gen g(113);
  const Toy t = random_toy(g, 12);
  SearchConfig c;
  c.k = 8;
  const SearchResult r = mine_topk(t.population, t.props, c);
  ASSERT_LE(r.results.size(), 8u);
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const auto& e = r.results[i];
    EXPECT_FALSE(e.selector.is_root());
    const SubgroupView v = extension(e.selector, t.population, t.props);
    EXPECT_EQ(e.scores.f, controlled_impact(v, c.weight));
    EXPECT_EQ(e.size, v.size());
    EXPECT_EQ(e.m1 + e.m2, e.size);
    EXPECT_EQ(e.descriptor, describe(e.selector, t.props));
    if (i > 0) {
      EXPECT_TRUE(result_before(r.results[i - 1], e));
    }
  }
}

TEST(Search, AlphaGuarantee) {
  Gen g(127);
  for (int round = 0; round < 20; ++round) {
    const Toy t = random_toy(g, 14);
    SearchConfig c;
    c.k = 1;
    const double exact = mine_topk(t.population, t.props, c).results.at(0).scores.f;
    for (double alpha : {0.3, 0.5, 0.8}) {
      c.alpha = alpha;
      const SearchResult r = mine_topk(t.population, t.props, c);
      ASSERT_FALSE(r.results.empty());
      EXPECT_GE(r.results[0].scores.f, alpha * exact);
    }
  }
}

TEST(Search, BudgetIsReported) {
  Gen g(131);
  const Toy t = random_toy(g, 14);
  SearchConfig c;
  c.node_budget = 2;
  c.estimator = EstimatorKind::brig;
  const SearchResult r = mine_topk(t.population, t.props, c);
  EXPECT_TRUE(r.stats.budget_exhausted);
  EXPECT_EQ(r.stats.nodes_expanded, 2u);
}

TEST(Search, ConfigErrors) {
  Gen g(137);
  const Toy t = random_toy(g);
  auto code = [&](SearchConfig c) {
    try {
      mine_topk(t.population, t.props, c);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidConfig;
  };
  SearchConfig c;
  c.weight = 1.0;
  EXPECT_EQ(code(c), Errc::WeightOutOfRange);
  c = {};
  c.alpha = 0.0;
  EXPECT_EQ(code(c), Errc::AlphaOutOfRange);
  c = {};
  c.alpha = 1.5;
  EXPECT_EQ(code(c), Errc::AlphaOutOfRange);

  const Toy u = random_toy(g, 10, false);
  SearchConfig r;
  EXPECT_THROW(mine_topk(u.population, u.props, r), Error);
  r.estimator = EstimatorKind::naive;
  EXPECT_NO_THROW(mine_topk(u.population, u.props, r));
}

TEST(Search, ParallelKernelsGiveSameRun) {
  Gen g(139);
  const Toy t = random_toy(g, 14);
  SearchConfig c;
  const SearchResult a = mine_topk(t.population, t.props, c);
  c.exec = Exec::parallel;
  const SearchResult b = mine_topk(t.population, t.props, c);
  EXPECT_EQ(f_values(a.results), f_values(b.results));
  EXPECT_EQ(a.stats.nodes_expanded, b.stats.nodes_expanded);
  EXPECT_EQ(a.stats.fccs_evals, b.stats.fccs_evals);
}

TEST(ResultEntry, JsonKeys) {
  nlohmann::json j = ResultEntry{};
  for (const char* k : {"descriptor", "coverage", "tendency", "covcent", "repr", "f", "m1", "m2", "size"})
    EXPECT_TRUE(j.contains(k)) << k;
}
