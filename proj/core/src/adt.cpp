#include "adtpf/adt.hpp"

#include <stdexcept>
#include <utility>

namespace adtpf {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::BasicStep: return "BS";
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Inh: return "INH";
  }
  return "?";
}

std::string_view to_string(Actor actor) {
  return actor == Actor::Attacker ? "A" : "D";
}

std::optional<GateKind> parse_gate_kind(std::string_view text) {
  if (text == "BS") return GateKind::BasicStep;
  if (text == "AND") return GateKind::And;
  if (text == "OR") return GateKind::Or;
  if (text == "INH") return GateKind::Inh;
  return std::nullopt;
}

std::optional<Actor> parse_actor(std::string_view text) {
  if (text == "A") return Actor::Attacker;
  if (text == "D") return Actor::Defender;
  return std::nullopt;
}

NodeIndex Adt::add_node(std::string id, GateKind kind, Actor actor) {
  const auto index = static_cast<NodeIndex>(nodes_.size());
  auto [it, inserted] = by_id_.emplace(id, index);
  if (!inserted) throw std::invalid_argument("duplicate node id '" + id + "'");
  nodes_.push_back(AdtNode{std::move(id), kind, actor, {}});
  return index;
}

void Adt::set_children(NodeIndex node, std::vector<NodeIndex> children) {
  nodes_.at(node).children = std::move(children);
}

NodeIndex Adt::add_basic(std::string id, Actor actor) {
  return add_node(std::move(id), GateKind::BasicStep, actor);
}

NodeIndex Adt::add_gate(std::string id, GateKind kind, Actor actor,
                        std::vector<NodeIndex> children) {
  const NodeIndex i = add_node(std::move(id), kind, actor);
  set_children(i, std::move(children));
  return i;
}

NodeIndex Adt::add_inh(std::string id, Actor actor, NodeIndex trigger,
                       NodeIndex inhibited) {
  return add_gate(std::move(id), GateKind::Inh, actor, {trigger, inhibited});
}

std::optional<NodeIndex> Adt::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

NodeIndex Adt::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw std::out_of_range("unknown node id '" + std::string(id) + "'");
}

std::vector<std::uint32_t> Adt::parent_counts() const {
  std::vector<std::uint32_t> counts(nodes_.size(), 0);
  for (const auto& n : nodes_)
    for (NodeIndex c : n.children)
      if (c < counts.size()) ++counts[c];
  return counts;
}

std::vector<Violation> validate(const Adt& adt) {
  std::vector<Violation> out;
  const auto n = adt.size();
  auto report = [&](const std::string& node, std::string msg) {
    out.push_back(Violation{node, std::move(msg)});
  };

  if (n == 0) {
    report("", "ADT has no nodes");
    return out;
  }

  bool edges_ok = true;
  for (const auto& node : adt.nodes()) {
    for (NodeIndex c : node.children)
      if (c >= n) {
        report(node.id, "child index out of range");
        edges_ok = false;
      }
  }
  if (!edges_ok) return out;

  for (const auto& node : adt.nodes()) {
    if (node.is_basic()) {
      if (!node.children.empty())
        report(node.id, "basic step must be a leaf but has children");
      continue;
    }
    if (node.children.empty()) {
      report(node.id, std::string(to_string(node.kind)) +
                          " gate must have at least one child");
      continue;
    }
    for (std::size_t i = 0; i < node.children.size(); ++i)
      for (std::size_t j = i + 1; j < node.children.size(); ++j)
        if (node.children[i] == node.children[j])
          report(node.id, "lists child '" + adt.node(node.children[i]).id +
                              "' more than once");

    if (node.kind == GateKind::Inh) {
      if (node.children.size() != 2) {
        report(node.id, "INH gate needs exactly two inputs (trigger, inhibited)");
        continue;
      }
      const auto& trig = adt.node(node.trigger());
      const auto& inh = adt.node(node.inhibited());
      if (trig.actor == inh.actor) {
        report(node.id,
               "well-formedness: INH inputs must belong to opposite actors, "
               "but trigger '" + trig.id + "' and inhibited '" + inh.id +
                   "' are both " + std::string(to_string(trig.actor)));
      } else if (inh.actor != node.actor) {
        report(node.id, "well-formedness: inhibited input '" + inh.id +
                            "' must belong to the gate's actor " +
                            std::string(to_string(node.actor)));
      }
    } else {
      for (NodeIndex c : node.children) {
        const auto& child = adt.node(c);
        if (child.actor != node.actor)
          report(node.id, "well-formedness: " +
                              std::string(to_string(node.kind)) +
                              " child '" + child.id +
                              "' must share the gate's actor " +
                              std::string(to_string(node.actor)));
      }
    }
  }

  const NodeIndex root = adt.root();
  if (root >= n) {
    report("", "root index out of range");
    return out;
  }
  const auto parents = adt.parent_counts();
  if (parents[root] != 0)
    report(adt.node(root).id, "root has incoming edges");

  // Cycle detection: iterative DFS with white/grey/black colouring.
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(n, kWhite);
  std::vector<std::pair<NodeIndex, std::size_t>> stack;
  for (NodeIndex start = 0; start < n; ++start) {
    if (colour[start] != kWhite) continue;
    stack.emplace_back(start, 0);
    colour[start] = kGrey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& kids = adt.node(v).children;
      if (next < kids.size()) {
        const NodeIndex c = kids[next++];
        if (colour[c] == kGrey) {
          report(adt.node(c).id, "lies on a cycle");
        } else if (colour[c] == kWhite) {
          colour[c] = kGrey;
          stack.emplace_back(c, 0);
        }
      } else {
        colour[v] = kBlack;
        stack.pop_back();
      }
    }
  }

  std::vector<bool> seen(n, false);
  std::vector<NodeIndex> todo{root};
  seen[root] = true;
  while (!todo.empty()) {
    const NodeIndex v = todo.back();
    todo.pop_back();
    for (NodeIndex c : adt.node(v).children)
      if (!seen[c]) {
        seen[c] = true;
        todo.push_back(c);
      }
  }
  for (NodeIndex v = 0; v < n; ++v)
    if (!seen[v]) report(adt.node(v).id, "not reachable from the root");

  return out;
}

bool is_tree(const Adt& adt) {
  const auto parents = adt.parent_counts();
  for (NodeIndex v = 0; v < parents.size(); ++v) {
    if (v == adt.root()) continue;
    if (parents[v] != 1) return false;
  }
  return true;
}

BasicSteps basic_steps(const Adt& adt) {
  BasicSteps out;
  if (adt.size() == 0) return out;
  std::vector<bool> seen(adt.size(), false);
  std::vector<NodeIndex> stack{adt.root()};
  while (!stack.empty()) {
    const NodeIndex v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    const auto& node = adt.node(v);
    if (node.is_basic()) {
      (node.actor == Actor::Defender ? out.defenses : out.attacks).push_back(v);
      continue;
    }
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
      if (!seen[*it]) stack.push_back(*it);
  }
  return out;
}

StructureEvaluator::StructureEvaluator(const Adt& adt)
    : values_(adt.size(), 0), root_(adt.root()) {
  const auto steps = basic_steps(adt);
  defense_count_ = steps.defenses.size();
  attack_count_ = steps.attacks.size();
  std::vector<std::uint32_t> bit(adt.size(), 0);
  for (std::size_t i = 0; i < steps.defenses.size(); ++i)
    bit[steps.defenses[i]] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < steps.attacks.size(); ++i)
    bit[steps.attacks[i]] = static_cast<std::uint32_t>(i);

  // Post-order over the reachable part so children precede parents.
  std::vector<bool> done(adt.size(), false);
  std::vector<std::pair<NodeIndex, std::size_t>> stack{{adt.root(), 0}};
  std::vector<bool> open(adt.size(), false);
  open[adt.root()] = true;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& node = adt.node(v);
    if (next < node.children.size()) {
      const NodeIndex c = node.children[next++];
      if (!done[c] && !open[c]) {
        open[c] = true;
        stack.emplace_back(c, 0);
      }
      continue;
    }
    Step s{v, node.kind, node.actor, 0, 0};
    if (node.is_basic()) {
      s.first_child = bit[v];
    } else {
      s.first_child = static_cast<std::uint32_t>(child_pool_.size());
      s.child_count = static_cast<std::uint32_t>(node.children.size());
      child_pool_.insert(child_pool_.end(), node.children.begin(),
                         node.children.end());
    }
    program_.push_back(s);
    done[v] = true;
    stack.pop_back();
  }
}

void StructureEvaluator::evaluate(const DefenseVector& delta,
                                  const AttackVector& alpha) {
  for (const Step& s : program_) {
    bool result = false;
    switch (s.kind) {
      case GateKind::BasicStep:
        result = s.actor == Actor::Defender ? delta.test(s.first_child)
                                            : alpha.test(s.first_child);
        break;
      case GateKind::And: {
        result = true;
        for (std::uint32_t i = 0; i < s.child_count && result; ++i)
          result = values_[child_pool_[s.first_child + i]] != 0;
        break;
      }
      case GateKind::Or: {
        for (std::uint32_t i = 0; i < s.child_count && !result; ++i)
          result = values_[child_pool_[s.first_child + i]] != 0;
        break;
      }
      case GateKind::Inh: {
        const bool trig = values_[child_pool_[s.first_child]] != 0;
        const bool inh = values_[child_pool_[s.first_child + 1]] != 0;
        result = inh && !trig;
        break;
      }
    }
    values_[s.node] = result ? 1 : 0;
  }
}

bool eval_structure(const Adt& adt, const DefenseVector& delta,
                    const AttackVector& alpha, NodeIndex v) {
  if (v >= adt.size()) throw std::out_of_range("unknown node index");
  StructureEvaluator eval(adt);
  if (delta.size() != eval.defense_count() || alpha.size() != eval.attack_count())
    throw std::invalid_argument("vector length does not match basic steps");
  eval.evaluate(delta, alpha);
  return eval.value(v);
}

bool eval_structure(const Adt& adt, const DefenseVector& delta,
                    const AttackVector& alpha, std::string_view v) {
  return eval_structure(adt, delta, alpha, adt.index_of(v));
}

}  // namespace adtpf
