#pragma once

#include "adtpf/aadt.hpp"
#include "adtpf/deadline.hpp"
#include "adtpf/semiring.hpp"

namespace adtpf {

/// How a gate merges its children's fronts. Defender values are always
/// combined with the defender product; only the attacker side varies.
struct GateOps {
  AttackerOp attacker;

  friend bool operator==(const GateOps&, const GateOps&) = default;
};

/// Operator table for gates, keyed on gate kind and owning actor:
///
///   AND/A, OR/D, INH/A -> attacker product
///   AND/D, OR/A, INH/D -> attacker best (min under the attacker order)
///
/// Throws std::invalid_argument for basic steps.
GateOps gate_operators(GateKind kind, Actor actor);

struct BottomUpOptions {
  /// Reduce to a front after every pairwise merge (left fold). When false,
  /// each gate forms the full product of its children's fronts and reduces
  /// once.
  bool prune_each_step = true;
  Deadline deadline;
};

/// Pareto front of the sub-tree rooted at v, computed leaves-first.
/// Throws NotATreeError if a node below v is reachable along two paths.
ParetoFront bu_pareto(const Aadt& aadt, NodeIndex v, const BottomUpOptions& opts = {});
inline ParetoFront bu_pareto(const Aadt& aadt, const BottomUpOptions& opts = {}) {
  return bu_pareto(aadt, aadt.adt().root(), opts);
}

}  // namespace adtpf
