#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "adtpf/aadt.hpp"
#include "adtpf/semiring.hpp"

namespace adtpf {

enum class Shape { Tree, Dag };

std::string_view to_string(Shape shape);

/// Parameters of the random model generator.
struct GenConfig {
  std::uint32_t node_count = 25;
  std::uint64_t seed = 0;
  Shape shape = Shape::Tree;
  /// Upper bound on the children drawn for an AND/OR gate (>= 2).
  std::uint32_t max_children = 3;
  /// DAG mode: chance that an AND/OR gate also takes an existing basic step
  /// of its actor as an extra child.
  double dag_share_prob = 0.15;
  /// Chance that a gate position with room for three nodes becomes INH.
  double inh_prob = 0.2;
  /// Inclusive range of integer basic-step values for cost-like domains.
  std::int64_t cost_min = 1;
  std::int64_t cost_max = 100;
  DomainKind defender_domain = DomainKind::MinCost;
  DomainKind attacker_domain = DomainKind::MinCost;
};

/// Throws std::invalid_argument when a field is out of range.
void check_config(const GenConfig& cfg);

/// Portable pseudo-random source: the 64-bit Mersenne Twister
/// (std::mt19937_64, whose output sequence the C++ standard fixes) with
/// explicit integer mapping, so a seed yields the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Draws a random valid model with exactly cfg.node_count nodes.
///
/// Each sub-tree is grown from a node budget. One node becomes a basic
/// step; two become an AND/OR gate with a single child; larger budgets
/// become an INH gate with probability inh_prob (trigger of the opposite
/// actor, inhibited of the gate's actor) or else an AND/OR gate (uniform)
/// with a uniform number of children in [2, max_children]. The remaining
/// budget is split uniformly at random over the children. The root actor is
/// a fair coin. Basic-step values are uniform integers in
/// [cost_min, cost_max] for cost-like domains and k/16 with k uniform in
/// [1, 16] for the probability domain, so products stay exact.
Aadt random_aadt(const GenConfig& cfg);

}  // namespace adtpf
