#include <gtest/gtest.h>

#include <random>

#include "adtpf/bdd.hpp"
#include "adtpf/errors.hpp"
#include "adtpf/io.hpp"
#include "adtpf/naive.hpp"
#include "models.hpp"
#include "oracle.hpp"
#include "search.hpp"

using namespace adtpf;
using namespace adtpf::testing;

namespace {

using Ids = std::vector<std::string>;

BitVector bits(std::uint64_t mask, std::size_t n) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, (mask >> i) & 1u);
  return v;
}

struct Compiled {
  BddManager mgr;
  BddRef root;
};

Compiled compile_default(const Aadt& a) {
  BddManager mgr(default_defense_first_order(a.adt()));
  const BddRef root = compile(mgr, a.adt());
  return {std::move(mgr), root};
}

}  // namespace

TEST(VarOrder, DefaultIsDefensesThenAttacks) {
  EXPECT_EQ(default_defense_first_order(or_of_inhibitions().adt()).ids(), (Ids{"d1", "d2", "a1", "a2"}));
  EXPECT_EQ(default_defense_first_order(single_attack().adt()).ids(), (Ids{"a1"}));
  EXPECT_TRUE(default_defense_first_order(nested_inhibition().adt()).is_defense_first());
}

TEST(VarOrder, Rejections) {
  const Aadt ex = or_of_inhibitions();
  const Adt& adt = ex.adt();
  const Ids attack_early{"a1", "d1", "d2", "a2"};
  EXPECT_THROW(VarOrder::defense_first(adt, attack_early), OrderError);
  EXPECT_THROW(VarOrder::defense_first(adt, Ids{"d1", "d2", "a1"}), OrderError);
  EXPECT_THROW(VarOrder::defense_first(adt, Ids{"d1", "d2", "a1", "a1"}), OrderError);
  EXPECT_THROW(VarOrder::defense_first(adt, Ids{"d1", "d2", "a1", "i1"}), OrderError);
  EXPECT_THROW(VarOrder::defense_first(adt, Ids{"d1", "d2", "a1", "zz"}), OrderError);
  const VarOrder loose = VarOrder::unchecked(adt, attack_early);
  EXPECT_FALSE(loose.is_defense_first());
  EXPECT_EQ(loose.level_of("d1"), 1u);
  EXPECT_THROW(VarOrder::unchecked(adt, Ids{"a1"}), OrderError);
}

TEST(Compile, SingleAttackLeafHasThreeNodes) {
  const Aadt a = single_attack();
  auto c = compile_default(a);
  EXPECT_EQ(c.mgr.reachable_count(c.root), 3u);
  EXPECT_EQ(c.mgr.low(c.root), kBddFalse);
  EXPECT_EQ(c.mgr.high(c.root), kBddTrue);
}

TEST(Compile, ManagerRules) {
  BddManager mgr(default_defense_first_order(or_of_inhibitions().adt()));
  EXPECT_EQ(mgr.make(0, kBddTrue, kBddTrue), kBddTrue);
  const BddRef x = mgr.variable(2);
  EXPECT_EQ(mgr.variable(2), x);
  EXPECT_EQ(mgr.apply_and(x, mgr.negate(x)), kBddFalse);
  EXPECT_EQ(mgr.apply_or(x, mgr.negate(x)), kBddTrue);
  EXPECT_EQ(mgr.negate(mgr.negate(x)), x);
  const BddRef y = mgr.variable(3);
  EXPECT_EQ(mgr.apply_and(x, y), mgr.apply_and(y, x));
}

TEST(Compile, OrOfInhibitionsAgreesWithStructureFunction) {
  const Aadt a = or_of_inhibitions();
  auto c = compile_default(a);
  for (std::uint64_t d = 0; d < 4; ++d)
    for (std::uint64_t al = 0; al < 4; ++al)
      EXPECT_EQ(bdd_eval(c.mgr, c.root, bits(d, 2), bits(al, 2)),
                eval_structure(a.adt(), bits(d, 2), bits(al, 2), a.adt().root()));
  EXPECT_FALSE(bdd_eval(c.mgr, c.root, BitVector::from_string("11"), BitVector::from_string("11")));
  EXPECT_TRUE(bdd_eval(c.mgr, kBddTrue, bits(0, 2), bits(0, 2)));
}

TEST(Compile, ReducedOrderedAndFaithfulOnRandomModels) {
  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.shape = seed % 2 ? Shape::Dag : Shape::Tree;
    cfg.node_count = 8 + seed % 30;
    const Aadt a = random_aadt(cfg);
    auto c = compile_default(a);
    EXPECT_TRUE(check_structure(c.mgr, c.root).empty());
    const RecursiveEvaluator oracle(a.adt());
    const auto nd = a.defenses().size(), na = a.attacks().size();
    const bool exhaustive = nd + na <= 14;
    const std::uint64_t rounds = exhaustive ? (1ull << (nd + na)) : 3000;
    for (std::uint64_t k = 0; k < rounds; ++k) {
      const std::uint64_t d = exhaustive ? k & ((1ull << nd) - 1) : rng() & ((1ull << nd) - 1);
      const std::uint64_t al = exhaustive ? k >> nd : rng() & ((1ull << na) - 1);
      ASSERT_EQ(bdd_eval(c.mgr, c.root, bits(d, nd), bits(al, na)), oracle.eval(d, al)) << seed;
    }
  }
}

TEST(Compile, EquivalentModelsShareTheRoot) {
  Adt left;
  {
    const auto d1 = left.add_basic("d1", Actor::Defender);
    const auto a1 = left.add_basic("a1", Actor::Attacker);
    const auto a2 = left.add_basic("a2", Actor::Attacker);
    const auto both = left.add_gate("both", GateKind::And, Actor::Attacker, {a1, a2});
    left.set_root(left.add_inh("r", Actor::Attacker, d1, both));
  }
  Adt right;
  {
    const auto a2 = right.add_basic("a2", Actor::Attacker);
    const auto d1 = right.add_basic("d1", Actor::Defender);
    const auto a1 = right.add_basic("a1", Actor::Attacker);
    const auto i2 = right.add_inh("i2", Actor::Attacker, d1, a2);
    const auto i1 = right.add_gate("one", GateKind::Or, Actor::Attacker, {a1});
    right.set_root(right.add_gate("r", GateKind::And, Actor::Attacker, {i1, i2}));
  }
  ASSERT_TRUE(validate(left).empty());
  ASSERT_TRUE(validate(right).empty());
  BddManager mgr(VarOrder::defense_first(left, Ids{"d1", "a1", "a2"}));
  const BddRef r1 = compile(mgr, left);
  const BddRef r2 = compile(mgr, right);
  EXPECT_EQ(r1, r2);
}

TEST(Compile, StructureCheckAcceptsManagerOutput) {
  BddManager mgr(default_defense_first_order(or_of_inhibitions().adt()));
  const BddRef x = mgr.variable(1);
  EXPECT_TRUE(check_structure(mgr, x).empty());
  EXPECT_TRUE(check_structure(mgr, kBddTrue).empty());
}

TEST(BddBu, NodeLevelExamples) {
  const Aadt single = single_attack();
  auto c = compile_default(single);
  EXPECT_EQ(bdd_bu(single, c.mgr, c.root).pairs(), (std::vector<ValuePair>{{0, 5}}));

  const Aadt ex = or_of_inhibitions();
  BddManager mgr(default_defense_first_order(ex.adt()));
  const BddRef u = mgr.variable(2);  // a1 = 5
  const BddRef v = mgr.variable(3);  // a2 = 10
  const BddRef w = mgr.make(0, u, v);  // d1 = 4
  EXPECT_EQ(bdd_bu(ex, mgr, w).pairs(), (std::vector<ValuePair>{{0, 5}, {4, 10}}));
  EXPECT_EQ(bdd_bu(ex, mgr, kBddFalse).pairs(), (std::vector<ValuePair>{{0, kInfinity}}));
  EXPECT_EQ(bdd_bu(ex, mgr, kBddTrue).pairs(), (std::vector<ValuePair>{{0, 0}}));
}

TEST(BddBu, TerminalFrontsSwapForDefenderRoots) {
  const Aadt fam = exponential_family(1);
  BddManager mgr(default_defense_first_order(fam.adt()));
  EXPECT_EQ(bdd_bu(fam, mgr, kBddFalse).pairs(), (std::vector<ValuePair>{{0, 0}}));
  EXPECT_EQ(bdd_bu(fam, mgr, kBddTrue).pairs(), (std::vector<ValuePair>{{0, kInfinity}}));
}

TEST(BddBu, Fixtures) {
  auto run = [](const Aadt& a) {
    auto c = compile_default(a);
    return bdd_bu(a, c.mgr, c.root).pairs();
  };
  EXPECT_EQ(run(or_of_inhibitions()), (std::vector<ValuePair>{{0, 5}, {4, 10}, {12, kInfinity}}));
  EXPECT_EQ(run(nested_inhibition()), (std::vector<ValuePair>{{0, 10}, {15, 15}}));
  EXPECT_EQ(run(exponential_family(4)).size(), 16u);
}

TEST(BddBu, MatchesOracleOnRandomDags) {
  const auto pairs = all_domain_pairs();
  int roots[2] = {0, 0};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto& doms = pairs[seed % pairs.size()];
    const Aadt a = small_instance(seed * 3 + 2, Shape::Dag, doms.defender.kind(), doms.attacker.kind());
    ++roots[a.root_actor() == Actor::Attacker];
    auto c = compile_default(a);
    ASSERT_EQ(bdd_bu(a, c.mgr, c.root).pairs(), brute_front(a)) << "seed " << seed;
  }
  EXPECT_GT(roots[0], 0);
  EXPECT_GT(roots[1], 0);
}

TEST(BddBu, MemoizationDoesNotChangeResults) {
  BddBuOptions plain;
  plain.memoize = false;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Aadt a = small_instance(seed, Shape::Dag, DomainKind::MinCost, DomainKind::Probability);
    auto c = compile_default(a);
    EXPECT_EQ(bdd_bu(a, c.mgr, c.root, plain), bdd_bu(a, c.mgr, c.root));
  }
}

TEST(BddBu, AlternativeDefenseFirstOrdersAgree) {
  const Aadt ex = or_of_inhibitions();
  BddManager mgr(VarOrder::defense_first(ex.adt(), Ids{"d2", "d1", "a2", "a1"}));
  const BddRef root = compile(mgr, ex.adt());
  EXPECT_EQ(bdd_bu(ex, mgr, root), naive_pareto(ex));
}

TEST(OrderNecessity, SearchFindsThePinnedCounterexample) {
  const auto found = search_order_counterexample(1000);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(to_json(found->model), read_file(ADTPF_FIXTURE_DIR "/attack_first_counterexample.json"));
  EXPECT_EQ(found->order, parse_order_file(read_file(ADTPF_FIXTURE_DIR "/attack_first_counterexample.order")));
}

TEST(OrderNecessity, PinnedFixtureBreaksUncheckedAndIsRejected) {
  const Aadt a = to_aadt(parse_adt_json(read_file(ADTPF_FIXTURE_DIR "/attack_first_counterexample.json")));
  const auto order = parse_order_file(read_file(ADTPF_FIXTURE_DIR "/attack_first_counterexample.order"));
  EXPECT_TRUE(order_breaks_bdd_bu(a, order));
  EXPECT_THROW(VarOrder::defense_first(a.adt(), order), OrderError);
  BddManager mgr(VarOrder::unchecked(a.adt(), order));
  const BddRef root = compile(mgr, a.adt());
  EXPECT_THROW(bdd_bu(a, mgr, root), OrderError);
}

TEST(Dot, SingleAttackLeaf) {
  const Aadt a = single_attack();
  auto c = compile_default(a);
  EXPECT_EQ(to_dot(c.mgr, c.root),
            "digraph bdd {\n"
            "  n0 [label=\"0\", shape=box];\n"
            "  n1 [label=\"1\", shape=box];\n"
            "  n2 [label=\"a1\", shape=circle];\n"
            "  n2 -> n0 [style=dashed];\n"
            "  n2 -> n1 [style=solid];\n"
            "}\n");
}
