#include "adtpf/generator.hpp"

#include <algorithm>
#include <stdexcept>

namespace adtpf {

std::string_view to_string(Shape shape) {
  return shape == Shape::Tree ? "tree" : "dag";
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % range);
}

double Rng::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

void check_config(const GenConfig& cfg) {
  auto prob_ok = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (cfg.node_count < 1) throw std::invalid_argument("node count must be positive");
  if (cfg.max_children < 2) throw std::invalid_argument("max children must be at least 2");
  if (!prob_ok(cfg.dag_share_prob) || !prob_ok(cfg.inh_prob))
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  if (cfg.cost_min > cfg.cost_max || cfg.cost_min < 0)
    throw std::invalid_argument("cost range must be a non-empty range of non-negative integers");
}

namespace {

class Generator {
 public:
  explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  Aadt run() {
    adt_.set_name("random-" + std::string(to_string(cfg_.shape)) + "-n" +
                  std::to_string(cfg_.node_count) + "-s" + std::to_string(cfg_.seed));
    const Actor root_actor = rng_.chance(0.5) ? Actor::Attacker : Actor::Defender;
    const NodeIndex root = grow(root_actor, cfg_.node_count);
    adt_.set_root(root);
    return Aadt(std::move(adt_), DomainPair{Domain{cfg_.defender_domain}, Domain{cfg_.attacker_domain}},
                std::move(costs_));
  }

 private:
  NodeIndex grow(Actor actor, std::uint32_t budget) {
    if (budget == 1) return basic(actor);

    if (budget >= 3 && rng_.chance(cfg_.inh_prob)) {
      const NodeIndex gate = add("g", GateKind::Inh, actor);
      const auto rest = budget - 1;
      const auto trigger_size = static_cast<std::uint32_t>(rng_.uniform(1, rest - 1));
      const NodeIndex trigger = grow(opponent(actor), trigger_size);
      const NodeIndex inhibited = grow(actor, rest - trigger_size);
      adt_.set_children(gate, {trigger, inhibited});
      return gate;
    }

    const GateKind kind = rng_.chance(0.5) ? GateKind::And : GateKind::Or;
    const NodeIndex gate = add("g", kind, actor);
    const std::uint32_t rest = budget - 1;
    const auto k = budget == 2 ? 1u
                               : static_cast<std::uint32_t>(rng_.uniform(
                                     2, std::min<std::uint32_t>(cfg_.max_children, rest)));
    std::vector<NodeIndex> children;
    for (std::uint32_t part : split(rest, k)) children.push_back(grow(actor, part));

    if (cfg_.shape == Shape::Dag && rng_.chance(cfg_.dag_share_prob)) {
      std::vector<NodeIndex> candidates;
      for (NodeIndex b : basics_[actor == Actor::Defender])
        if (std::find(children.begin(), children.end(), b) == children.end())
          candidates.push_back(b);
      if (!candidates.empty())
        children.push_back(candidates[static_cast<std::size_t>(
            rng_.uniform(0, static_cast<std::int64_t>(candidates.size()) - 1))]);
    }
    adt_.set_children(gate, std::move(children));
    return gate;
  }

  // Uniform composition of n into k positive parts.
  std::vector<std::uint32_t> split(std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> cuts;
    while (cuts.size() + 1 < k) {
      const auto c = static_cast<std::uint32_t>(rng_.uniform(1, n - 1));
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::uint32_t> parts;
    std::uint32_t prev = 0;
    for (auto c : cuts) {
      parts.push_back(c - prev);
      prev = c;
    }
    parts.push_back(n - prev);
    return parts;
  }

  NodeIndex basic(Actor actor) {
    const bool defender = actor == Actor::Defender;
    const NodeIndex v = add(defender ? "d" : "a", GateKind::BasicStep, actor);
    const Domain dom{defender ? cfg_.defender_domain : cfg_.attacker_domain};
    if (dom.kind() == DomainKind::Probability)
      costs_[v] = static_cast<Value>(rng_.uniform(1, 16)) / 16.0;
    else
      costs_[v] = static_cast<Value>(rng_.uniform(cfg_.cost_min, cfg_.cost_max));
    basics_[defender].push_back(v);
    return v;
  }

  NodeIndex add(const char* prefix, GateKind kind, Actor actor) {
    auto& counter = counters_[prefix[0] == 'g' ? 0 : prefix[0] == 'a' ? 1 : 2];
    const NodeIndex v = adt_.add_node(prefix + std::to_string(++counter), kind, actor);
    costs_.push_back(0.0);
    return v;
  }

  const GenConfig& cfg_;
  Rng rng_;
  Adt adt_;
  std::vector<Value> costs_;
  std::vector<NodeIndex> basics_[2];
  std::uint32_t counters_[3] = {0, 0, 0};
};

}  // namespace

Aadt random_aadt(const GenConfig& cfg) {
  check_config(cfg);
  return Generator(cfg).run();
}

}  // namespace adtpf
