#include "adtpf/bottom_up.hpp"

#include <stdexcept>
#include <utility>

#include "adtpf/errors.hpp"

namespace adtpf {

GateOps gate_operators(GateKind kind, Actor actor) {
  const bool attacker = actor == Actor::Attacker;
  switch (kind) {
    case GateKind::And:
      return {attacker ? AttackerOp::Combine : AttackerOp::Best};
    case GateKind::Or:
      return {attacker ? AttackerOp::Best : AttackerOp::Combine};
    case GateKind::Inh:
      return {attacker ? AttackerOp::Combine : AttackerOp::Best};
    case GateKind::BasicStep:
      break;
  }
  throw std::invalid_argument("basic steps have no gate operators");
}

namespace {

// Post-order of the sub-tree at v; throws if any node is reached twice.
std::vector<NodeIndex> tree_post_order(const Adt& adt, NodeIndex v) {
  std::vector<NodeIndex> order;
  std::vector<bool> seen(adt.size(), false);
  std::vector<std::pair<NodeIndex, std::size_t>> stack{{v, 0}};
  seen[v] = true;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    const auto& kids = adt.node(u).children;
    if (next < kids.size()) {
      const NodeIndex c = kids[next++];
      if (seen[c]) throw NotATreeError(adt.node(c).id);
      seen[c] = true;
      stack.emplace_back(c, 0);
      continue;
    }
    order.push_back(u);
    stack.pop_back();
  }
  return order;
}

}  // namespace

ParetoFront bu_pareto(const Aadt& aadt, NodeIndex v, const BottomUpOptions& opts) {
  const Adt& adt = aadt.adt();
  if (v >= adt.size()) throw std::out_of_range("unknown node index");
  const DomainPair& doms = aadt.domains();

  std::vector<ParetoFront> fronts(adt.size());
  for (NodeIndex u : tree_post_order(adt, v)) {
    opts.deadline.check();
    const AdtNode& node = adt.node(u);
    if (node.is_basic()) {
      if (node.actor == Actor::Attacker) {
        fronts[u] = pareto_min({{doms.defender.identity(), aadt.cost(u)}}, doms);
      } else {
        fronts[u] = pareto_min({{doms.defender.identity(), doms.attacker.identity()},
                                {aadt.cost(u), doms.attacker.top()}},
                               doms);
      }
      continue;
    }

    const AttackerOp op = gate_operators(node.kind, node.actor).attacker;
    if (opts.prune_each_step) {
      ParetoFront acc = std::move(fronts[node.children.front()]);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        acc = combine_fronts(acc, fronts[node.children[i]], op, doms);
        fronts[node.children[i]] = {};
      }
      fronts[u] = std::move(acc);
    } else {
      std::vector<ValuePair> product = fronts[node.children.front()].pairs();
      for (std::size_t i = 1; i < node.children.size(); ++i)
        product = pairwise_image(product, fronts[node.children[i]].pairs(), op, doms);
      fronts[u] = pareto_min(std::move(product), doms);
      for (NodeIndex c : node.children) fronts[c] = {};
    }
  }
  return std::move(fronts[v]);
}

}  // namespace adtpf
