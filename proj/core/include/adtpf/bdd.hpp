#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adtpf/aadt.hpp"
#include "adtpf/adt.hpp"
#include "adtpf/deadline.hpp"
#include "adtpf/semiring.hpp"

namespace adtpf {

struct BddVariable {
  std::string id;
  Actor actor;
  /// Position of the step in its actor's canonical basic-step list.
  std::uint32_t position;
};

/// A permutation of an ADT's basic steps; a variable's index is its level
/// in the diagram (lower levels sit closer to the root).
class VarOrder {
 public:
  /// Checks that `ids` lists every basic step of `adt` exactly once and that
  /// all defenses precede all attacks. Throws OrderError otherwise.
  static VarOrder defense_first(const Adt& adt, std::span<const std::string> ids);

  /// Same coverage checks, but accepts any interleaving of actors. Only
  /// meant for experiments on why defense-first ordering matters.
  static VarOrder unchecked(const Adt& adt, std::span<const std::string> ids);

  std::size_t size() const noexcept { return vars_.size(); }
  const BddVariable& variable(std::uint32_t level) const { return vars_.at(level); }
  std::optional<std::uint32_t> level_of(std::string_view id) const;
  bool is_defense_first() const noexcept;

  std::vector<std::string> ids() const;

 private:
  VarOrder() = default;
  static VarOrder build(const Adt& adt, std::span<const std::string> ids);

  std::vector<BddVariable> vars_;
  std::unordered_map<std::string, std::uint32_t> level_;
};

/// All defenses in canonical order, then all attacks in canonical order.
VarOrder default_defense_first_order(const Adt& adt);

/// Handle to a node inside one BddManager.
struct BddRef {
  std::uint32_t index;
  friend bool operator==(BddRef, BddRef) = default;
};

inline constexpr BddRef kBddFalse{0};
inline constexpr BddRef kBddTrue{1};

/// Hash-consed store of ROBDD nodes over a fixed variable order.
///
/// Nodes are appended and never freed; the unique table guarantees that no
/// two nodes share (level, low, high) and make() never creates a node with
/// low == high, so every function has exactly one node. Single writer;
/// read-only use after construction is thread-safe.
class BddManager {
 public:
  explicit BddManager(VarOrder order);

  const VarOrder& order() const noexcept { return order_; }

  static constexpr std::uint32_t kTerminalLevel = UINT32_MAX;

  bool is_terminal(BddRef f) const noexcept { return f.index < 2; }
  std::uint32_t level(BddRef f) const { return nodes_[f.index].level; }
  BddRef low(BddRef f) const { return nodes_[f.index].low; }
  BddRef high(BddRef f) const { return nodes_[f.index].high; }

  /// Total number of nodes created, terminals included.
  std::size_t size() const noexcept { return nodes_.size(); }

  BddRef make(std::uint32_t level, BddRef low, BddRef high);
  BddRef variable(std::uint32_t level) { return make(level, kBddFalse, kBddTrue); }

  BddRef apply_and(BddRef f, BddRef g);
  BddRef apply_or(BddRef f, BddRef g);
  BddRef negate(BddRef f);

  /// Nodes reachable from root, terminals included.
  std::size_t reachable_count(BddRef root) const;
  /// Reachable node refs sorted by creation index.
  std::vector<BddRef> reachable(BddRef root) const;

 private:
  enum class Op : std::uint8_t { And, Or };
  BddRef apply(Op op, BddRef f, BddRef g);

  struct Node {
    std::uint32_t level;
    BddRef low;
    BddRef high;
  };
  struct Key {
    std::uint32_t level, low, high;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = k.level;
      h = h * 0x9E3779B97F4A7C15ull ^ k.low;
      h = h * 0x9E3779B97F4A7C15ull ^ k.high;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  VarOrder order_;
  std::vector<Node> nodes_;
  std::unordered_map<Key, BddRef, KeyHash> unique_;
  std::unordered_map<std::uint64_t, BddRef> and_cache_;
  std::unordered_map<std::uint64_t, BddRef> or_cache_;
  std::unordered_map<std::uint32_t, BddRef> not_cache_;
};

/// Builds the diagram of the structure function at the ADT root. Every
/// basic step must appear in the manager's order and vice versa
/// (OrderError otherwise). Shared ADT nodes are compiled once.
BddRef compile(BddManager& mgr, const Adt& adt, const Deadline& deadline = {});

/// Follows low/high edges according to the input bits.
bool bdd_eval(const BddManager& mgr, BddRef f, const DefenseVector& delta,
              const AttackVector& alpha);

/// Structural audit of the diagram below root: duplicate (level, low, high)
/// triples, nodes with low == high, edges that do not increase the level,
/// and reachable nodes other than root without a parent. Empty = clean.
std::vector<std::string> check_structure(const BddManager& mgr, BddRef root);

struct BddBuOptions {
  /// Reject orders that are not defense-first, and attack-labelled nodes
  /// whose child fronts are not single pairs with the defender identity.
  /// Disabling it reads the first pair of each child front instead, which
  /// is only correct for defense-first orders.
  bool check_defense_first = true;
  bool memoize = true;
  Deadline deadline;
};

/// Pareto front of the model computed on its decision diagram, one front
/// per diagram node. Throws OrderError if the check above fails.
ParetoFront bdd_bu(const Aadt& aadt, const BddManager& mgr, BddRef root,
                   const BddBuOptions& opts = {});

/// Graphviz rendering: boxes for terminals, variable ids on inner nodes,
/// dashed low edges and solid high edges; node names follow creation order.
std::string to_dot(const BddManager& mgr, BddRef root);

}  // namespace adtpf
