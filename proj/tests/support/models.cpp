#include "models.hpp"

namespace adtpf::testing {

namespace {

struct Builder {
  Adt adt;
  std::vector<Value> costs;

  NodeIndex bs(const std::string& id, Actor actor, Value cost) {
    const NodeIndex v = adt.add_basic(id, actor);
    grow(v);
    costs[v] = cost;
    return v;
  }
  NodeIndex gate(const std::string& id, GateKind kind, Actor actor, std::vector<NodeIndex> kids) {
    const NodeIndex v = adt.add_gate(id, kind, actor, std::move(kids));
    grow(v);
    return v;
  }
  NodeIndex inh(const std::string& id, Actor actor, NodeIndex trigger, NodeIndex inhibited) {
    const NodeIndex v = adt.add_inh(id, actor, trigger, inhibited);
    grow(v);
    return v;
  }
  void grow(NodeIndex v) {
    if (costs.size() <= v) costs.resize(v + 1, 0.0);
  }
  Aadt finish(const std::string& name, NodeIndex root, const DomainPair& doms = kMinCost) {
    adt.set_name(name);
    adt.set_root(root);
    return Aadt(std::move(adt), doms, std::move(costs));
  }
};

constexpr Actor A = Actor::Attacker;
constexpr Actor D = Actor::Defender;

}  // namespace

Aadt or_of_inhibitions() {
  Builder b;
  const auto d1 = b.bs("d1", D, 4), a1 = b.bs("a1", A, 5);
  const auto d2 = b.bs("d2", D, 8), a2 = b.bs("a2", A, 10);
  const auto i1 = b.inh("i1", A, d1, a1), i2 = b.inh("i2", A, d2, a2);
  return b.finish("or-of-inhibitions", b.gate("root", GateKind::Or, A, {i1, i2}));
}

Aadt nested_inhibition() {
  Builder b;
  const auto d1 = b.bs("d1", D, 5), d2 = b.bs("d2", D, 10);
  const auto a1 = b.bs("a1", A, 5), a2 = b.bs("a2", A, 10), a3 = b.bs("a3", A, 20);
  const auto both = b.gate("both", GateKind::And, D, {d1, d2});
  const auto inner = b.inh("inner", D, a1, both);
  const auto outer = b.inh("outer", A, inner, a2);
  return b.finish("nested-inhibition", b.gate("root", GateKind::Or, A, {outer, a3}));
}

Aadt exponential_family(unsigned n) {
  Builder b;
  std::vector<NodeIndex> gates;
  for (unsigned i = 1; i <= n; ++i) {
    const Value w = static_cast<Value>(std::uint64_t{1} << (i - 1));
    const auto d = b.bs("d" + std::to_string(i), D, w);
    const auto a = b.bs("a" + std::to_string(i), A, w);
    gates.push_back(b.inh("g" + std::to_string(i), D, a, d));
  }
  return b.finish("exponential-" + std::to_string(n), b.gate("root", GateKind::Or, D, gates));
}

Aadt single_attack() {
  Builder b;
  return b.finish("single-attack", b.bs("a1", A, 5));
}

std::vector<DomainPair> all_domain_pairs() {
  std::vector<DomainPair> out;
  for (int d = 0; d < 5; ++d)
    for (int a = 0; a < 5; ++a)
      out.push_back({Domain{static_cast<DomainKind>(d)}, Domain{static_cast<DomainKind>(a)}});
  return out;
}

Aadt small_instance(std::uint64_t seed, Shape shape, DomainKind def, DomainKind att,
                    std::size_t max_steps) {
  std::mt19937_64 pick(seed);
  for (;;) {
    GenConfig cfg;
    cfg.seed = pick();
    cfg.shape = shape;
    cfg.node_count = 1 + static_cast<std::uint32_t>(pick() % 22);
    cfg.defender_domain = def;
    cfg.attacker_domain = att;
    if (shape == Shape::Dag) cfg.dag_share_prob = 0.5;
    Aadt a = random_aadt(cfg);
    if (a.defenses().size() + a.attacks().size() <= max_steps) return a;
  }
}

namespace {

Value random_value(std::mt19937_64& rng, const Domain& dom) {
  if (rng() % 8 == 0) return dom.top();
  if (rng() % 8 == 0) return dom.identity();
  if (dom.kind() == DomainKind::Probability) return static_cast<Value>(1 + rng() % 16) / 16.0;
  return static_cast<Value>(rng() % 12);
}

}  // namespace

std::vector<ValuePair> random_points(std::mt19937_64& rng, const DomainPair& doms,
                                     std::size_t max_size) {
  std::vector<ValuePair> out(rng() % (max_size + 1));
  for (auto& p : out) p = {random_value(rng, doms.defender), random_value(rng, doms.attacker)};
  return out;
}

}  // namespace adtpf::testing
