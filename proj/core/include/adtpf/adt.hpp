#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adtpf/bit_vector.hpp"

namespace adtpf {

using NodeIndex = std::uint32_t;

enum class GateKind { BasicStep, And, Or, Inh };
enum class Actor { Attacker, Defender };

constexpr Actor opponent(Actor a) noexcept {
  return a == Actor::Attacker ? Actor::Defender : Actor::Attacker;
}

std::string_view to_string(GateKind kind);
std::string_view to_string(Actor actor);
std::optional<GateKind> parse_gate_kind(std::string_view text);
std::optional<Actor> parse_actor(std::string_view text);

/// One vertex of an attack-defense tree. INH gates keep their two inputs in
/// `children` as {trigger, inhibited}: the gate is true when the inhibited
/// input holds and the trigger does not.
struct AdtNode {
  std::string id;
  GateKind kind = GateKind::BasicStep;
  Actor actor = Actor::Attacker;
  std::vector<NodeIndex> children;

  bool is_basic() const noexcept { return kind == GateKind::BasicStep; }
  NodeIndex trigger() const { return children.at(0); }
  NodeIndex inhibited() const { return children.at(1); }
};

/// A rooted graph of gates and basic steps. Construction does not enforce
/// well-formedness; run validate() before handing the graph to an analysis.
/// Immutable after construction in practice, so concurrent reads are safe.
class Adt {
 public:
  Adt() = default;

  /// Adds a node without children. Throws std::invalid_argument on a
  /// duplicate id.
  NodeIndex add_node(std::string id, GateKind kind, Actor actor);
  void set_children(NodeIndex node, std::vector<NodeIndex> children);

  NodeIndex add_basic(std::string id, Actor actor);
  NodeIndex add_gate(std::string id, GateKind kind, Actor actor,
                     std::vector<NodeIndex> children);
  NodeIndex add_inh(std::string id, Actor actor, NodeIndex trigger,
                    NodeIndex inhibited);

  void set_root(NodeIndex root) { root_ = root; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::string& name() const noexcept { return name_; }
  NodeIndex root() const noexcept { return root_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const AdtNode& node(NodeIndex i) const { return nodes_.at(i); }
  const std::vector<AdtNode>& nodes() const noexcept { return nodes_; }

  std::optional<NodeIndex> find(std::string_view id) const;
  /// Like find(), but throws std::out_of_range for unknown ids.
  NodeIndex index_of(std::string_view id) const;

  /// Number of incoming edges per node.
  std::vector<std::uint32_t> parent_counts() const;

 private:
  std::string name_;
  NodeIndex root_ = 0;
  std::vector<AdtNode> nodes_;
  std::unordered_map<std::string, NodeIndex> by_id_;
};

struct Violation {
  std::string node;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every well-formedness rule and returns one entry per broken rule.
/// An empty result means the graph is a valid ADT.
std::vector<Violation> validate(const Adt& adt);

/// True iff every non-root node has exactly one parent.
bool is_tree(const Adt& adt);

/// Basic steps of each actor in canonical order: first visit of a
/// depth-first walk from the root that follows child-list order.
struct BasicSteps {
  std::vector<NodeIndex> defenses;
  std::vector<NodeIndex> attacks;
};
BasicSteps basic_steps(const Adt& adt);

/// Evaluates the structure function for whole (defense, attack) vectors.
/// Every reachable node is computed once per call in children-first order,
/// so shared sub-DAGs are not re-evaluated. One instance per thread.
class StructureEvaluator {
 public:
  explicit StructureEvaluator(const Adt& adt);

  void evaluate(const DefenseVector& delta, const AttackVector& alpha);

  bool value(NodeIndex v) const { return values_.at(v) != 0; }
  bool root_value() const { return values_[root_] != 0; }

  std::size_t defense_count() const noexcept { return defense_count_; }
  std::size_t attack_count() const noexcept { return attack_count_; }

 private:
  struct Step {
    NodeIndex node;
    GateKind kind;
    Actor actor;
    std::uint32_t first_child;  // offset into child_pool_, or bit position for basic steps
    std::uint32_t child_count;
  };
  std::vector<Step> program_;
  std::vector<NodeIndex> child_pool_;
  std::vector<std::uint8_t> values_;
  NodeIndex root_ = 0;
  std::size_t defense_count_ = 0;
  std::size_t attack_count_ = 0;
};

/// Structure-function value at node v. Throws std::out_of_range for an
/// unknown node.
bool eval_structure(const Adt& adt, const DefenseVector& delta,
                    const AttackVector& alpha, NodeIndex v);
bool eval_structure(const Adt& adt, const DefenseVector& delta,
                    const AttackVector& alpha, std::string_view v);

}  // namespace adtpf
