#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "adtpf/aadt.hpp"
#include "adtpf/deadline.hpp"
#include "adtpf/semiring.hpp"

namespace adtpf {

/// Limits for the brute-force enumerator.
struct EnumerationOptions {
  /// Largest |D| + |A| accepted without `force`.
  std::size_t cap = 26;
  bool force = false;
  Deadline deadline;
};

/// The attacker's reply to a fixed defense. An empty `attack` means no
/// attack vector succeeds; `value` is then the attacker domain's top.
struct Response {
  std::optional<AttackVector> attack;
  Value value;

  bool no_attack() const noexcept { return !attack.has_value(); }
};

struct FeasibleEvent {
  DefenseVector defense;
  Response response;
};

/// Whether an attack succeeds under the root's actor: the root must become
/// true for an attacker root and false for a defender root.
bool attack_succeeds(const Aadt& aadt, bool root_value) noexcept;

/// Cheapest successful attack against `delta`, found by enumerating every
/// attack vector. Ties go to the lexicographically smallest vector.
/// Throws CapExceededError or TimeoutError.
Response optimal_response(const Aadt& aadt, const DefenseVector& delta,
                          const EnumerationOptions& opts = {});

/// One event per defense vector, in binary counting order of the vector.
std::vector<FeasibleEvent> feasible_events(const Aadt& aadt,
                                           const EnumerationOptions& opts = {});

/// Front of the metric values of all feasible events.
ParetoFront naive_pareto(const Aadt& aadt, const EnumerationOptions& opts = {});

}  // namespace adtpf
