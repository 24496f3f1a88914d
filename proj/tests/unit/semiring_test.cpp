#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "adtpf/semiring.hpp"
#include "models.hpp"
#include "oracle.hpp"

using namespace adtpf;
using namespace adtpf::testing;

namespace {

const Domain kCost{DomainKind::MinCost};
const Domain kProb{DomainKind::Probability};

std::vector<ValuePair> pts(const ParetoFront& f) { return f.pairs(); }

Value draw(std::mt19937_64& rng, const Domain& d) {
  if (d.kind() == DomainKind::Probability) return static_cast<Value>(rng() % 17) / 16.0;
  return rng() % 10 == 0 ? kInfinity : static_cast<Value>(rng() % 50);
}

}  // namespace

TEST(Domain, BuiltinTable) {
  const std::vector<std::string> names{"min_cost", "min_time_seq", "min_time_par", "min_skill",
                                       "probability"};
  ASSERT_EQ(builtin_domain_names().size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    EXPECT_EQ(builtin_domain_names()[i], names[i]);
    EXPECT_EQ(builtin_domain(names[i]).name(), names[i]);
  }
  EXPECT_THROW(builtin_domain("max_damage"), std::invalid_argument);
  EXPECT_FALSE(find_builtin_domain("").has_value());

  EXPECT_EQ(kCost.combine(3, 4), 7);
  EXPECT_EQ(kCost.best(3, 4), 3);
  EXPECT_EQ(kProb.combine(0.5, 0.5), 0.25);
  EXPECT_EQ(kProb.best(0.5, 0.2), 0.5);
  EXPECT_EQ(builtin_domain("min_time_par").combine(3, 4), 4);
  EXPECT_EQ(builtin_domain("min_skill").combine(3, 9), 9);
  EXPECT_EQ(builtin_domain("min_time_seq").combine(3, 4), 7);

  EXPECT_EQ(kCost.identity(), 0);
  EXPECT_EQ(kCost.top(), kInfinity);
  EXPECT_EQ(kProb.identity(), 1);
  EXPECT_EQ(kProb.top(), 0);
}

TEST(Domain, Membership) {
  EXPECT_TRUE(kCost.contains(0));
  EXPECT_TRUE(kCost.contains(kInfinity));
  EXPECT_FALSE(kCost.contains(-1));
  EXPECT_TRUE(kProb.contains(0.25));
  EXPECT_FALSE(kProb.contains(1.5));
  EXPECT_FALSE(kProb.contains(std::nan("")));
}

TEST(Domain, SemiringLawsOnRandomValues) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k) {
    const Domain d{static_cast<DomainKind>(k)};
    for (int i = 0; i < 2000; ++i) {
      const Value x = draw(rng, d), y = draw(rng, d), z = draw(rng, d);
      EXPECT_EQ(d.combine(x, y), d.combine(y, x)) << d.name();
      EXPECT_EQ(d.combine(d.combine(x, y), z), d.combine(x, d.combine(y, z))) << d.name();
      EXPECT_EQ(d.combine(x, d.identity()), x) << d.name();
      if (d.le(x, y)) EXPECT_TRUE(d.le(d.combine(x, z), d.combine(y, z))) << d.name();
      EXPECT_TRUE(d.le(d.identity(), x)) << d.name();
      EXPECT_TRUE(d.le(x, d.top())) << d.name();
      EXPECT_EQ(d.best(x, d.top()), x) << d.name();
      EXPECT_TRUE(d.le(x, y) || d.le(y, x)) << d.name();
    }
  }
}

TEST(MetricValue, Folds) {
  const std::vector<Value> beta{5, 10};
  EXPECT_EQ(metric_value(kCost, beta, BitVector::from_string("11")), 15);
  EXPECT_EQ(metric_value(kCost, beta, BitVector::from_string("00")), 0);
  const std::vector<Value> skill{3, 7};
  EXPECT_EQ(metric_value(builtin_domain("min_skill"), skill, BitVector::from_string("11")), 7);
  const std::vector<Value> p{0.5, 0.25};
  EXPECT_EQ(metric_value(kProb, p, BitVector::from_string("00")), 1);
  EXPECT_EQ(metric_value(kProb, p, BitVector::from_string("11")), 0.125);
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominates({5, 20}, {10, 10}, kMinCost));
  EXPECT_TRUE(dominates({5, 20}, {5, 5}, kMinCost));
  EXPECT_TRUE(dominates({5, 20}, {5, 20}, kMinCost));
  EXPECT_FALSE(dominates({10, 10}, {5, 20}, kMinCost));
  const DomainPair prob{kCost, kProb};
  EXPECT_TRUE(dominates({1, 0.25}, {2, 0.5}, prob));
  EXPECT_FALSE(dominates({1, 0.5}, {2, 0.25}, prob));
}

TEST(ParetoMin, Examples) {
  EXPECT_EQ(pts(pareto_min({{10, 10}, {5, 20}, {5, 5}}, kMinCost)),
            (std::vector<ValuePair>{{5, 20}}));
  EXPECT_EQ(pts(pareto_min({{0, 5}, {8, 5}, {4, 10}, {12, kInfinity}}, kMinCost)),
            (std::vector<ValuePair>{{0, 5}, {4, 10}, {12, kInfinity}}));
  EXPECT_TRUE(pareto_min({}, kMinCost).empty());
  EXPECT_EQ(pts(pareto_min({{3, 3}}, kMinCost)), (std::vector<ValuePair>{{3, 3}}));
  EXPECT_EQ(pts(pareto_min({{3, 3}, {3, 3}}, kMinCost)), (std::vector<ValuePair>{{3, 3}}));
}

TEST(ParetoMin, SortsInDefenderOrder) {
  const DomainPair prob{kProb, kCost};
  EXPECT_EQ(pts(pareto_min({{0.5, 3}, {1, 1}, {0.25, 9}}, prob)),
            (std::vector<ValuePair>{{1, 1}, {0.5, 3}, {0.25, 9}}));
}

TEST(ParetoMin, MatchesBruteForceAndIsAnAntichain) {
  std::mt19937_64 rng(5);
  const auto pairs = all_domain_pairs();
  for (int i = 0; i < 3000; ++i) {
    const DomainPair& doms = pairs[i % pairs.size()];
    const auto xs = random_points(rng, doms, 30);
    const ParetoFront f = pareto_min(xs, doms);
    ASSERT_EQ(f.pairs(), brute_min(xs, doms));
    for (const auto& p : f) {
      EXPECT_NE(std::find(xs.begin(), xs.end(), p), xs.end());
      for (const auto& q : f)
        if (!(p == q)) EXPECT_FALSE(dominates(p, q, doms));
    }
    for (std::size_t k = 1; k < f.size(); ++k) {
      EXPECT_TRUE(doms.defender.lt(f[k - 1].defender, f[k].defender));
      EXPECT_TRUE(doms.attacker.lt(f[k - 1].attacker, f[k].attacker));
    }
    EXPECT_EQ(pareto_min(f.pairs(), doms), f);
  }
}

TEST(CombineFronts, Examples) {
  const ParetoFront d1 = pareto_min({{0, 0}, {4, kInfinity}}, kMinCost);
  const ParetoFront a1 = pareto_min({{0, 5}}, kMinCost);
  const ParetoFront i1 = combine_fronts(d1, a1, AttackerOp::Combine, kMinCost);
  EXPECT_EQ(pts(i1), (std::vector<ValuePair>{{0, 5}, {4, kInfinity}}));
  const ParetoFront i2 = pareto_min({{0, 10}, {8, kInfinity}}, kMinCost);
  EXPECT_EQ(pts(combine_fronts(i1, i2, AttackerOp::Best, kMinCost)),
            (std::vector<ValuePair>{{0, 5}, {4, 10}, {12, kInfinity}}));
}

TEST(CombineFronts, IdentityPairIsNeutral) {
  std::mt19937_64 rng(9);
  for (const auto& doms : all_domain_pairs()) {
    const ParetoFront unit = pareto_min({{doms.defender.identity(), doms.attacker.identity()}}, doms);
    for (int i = 0; i < 40; ++i) {
      const auto xs = random_points(rng, doms);
      EXPECT_EQ(combine_fronts(pareto_min(xs, doms), unit, AttackerOp::Combine, doms),
                pareto_min(xs, doms));
    }
  }
}

TEST(CombineFronts, PruningFirstDoesNotChangeTheResult) {
  std::mt19937_64 rng(21);
  const auto pairs = all_domain_pairs();
  for (int i = 0; i < 500; ++i) {
    const DomainPair& doms = pairs[i % pairs.size()];
    const auto xs = random_points(rng, doms), ys = random_points(rng, doms);
    for (AttackerOp op : {AttackerOp::Combine, AttackerOp::Best}) {
      const auto full = brute_min(pairwise_image(xs, ys, op, doms), doms);
      const auto xf = pareto_min(xs, doms);
      EXPECT_EQ(brute_min(pairwise_image(xf.pairs(), ys, op, doms), doms), full);
    }
  }
}
