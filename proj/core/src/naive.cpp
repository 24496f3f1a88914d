#include "adtpf/naive.hpp"

#include <string>

#include "adtpf/errors.hpp"

namespace adtpf {

namespace {

void check_cap(const Aadt& aadt, const EnumerationOptions& opts) {
  const std::size_t steps = aadt.defenses().size() + aadt.attacks().size();
  if (steps > opts.cap && !opts.force)
    throw CapExceededError("brute-force enumeration over " + std::to_string(steps) +
                           " basic steps exceeds the cap of " +
                           std::to_string(opts.cap));
}

// Assumes the evaluator was built for aadt and the cap was checked.
Response best_response(const Aadt& aadt, StructureEvaluator& eval,
                       const DefenseVector& delta, const Deadline& deadline) {
  const Domain& dom = aadt.attacker_domain();
  Response best{std::nullopt, dom.top()};
  AttackVector alpha(aadt.attacks().size());
  do {
    deadline.poll();
    eval.evaluate(delta, alpha);
    if (!attack_succeeds(aadt, eval.root_value())) continue;
    const Value v = aadt.attack_metric(alpha);
    if (!best.attack || dom.lt(v, best.value) ||
        (v == best.value && alpha.lex_less(*best.attack))) {
      best.attack = alpha;
      best.value = v;
    }
  } while (alpha.increment());
  return best;
}

}  // namespace

bool attack_succeeds(const Aadt& aadt, bool root_value) noexcept {
  return aadt.root_actor() == Actor::Attacker ? root_value : !root_value;
}

Response optimal_response(const Aadt& aadt, const DefenseVector& delta,
                          const EnumerationOptions& opts) {
  check_cap(aadt, opts);
  if (delta.size() != aadt.defenses().size())
    throw std::invalid_argument("defense vector length does not match the model");
  StructureEvaluator eval(aadt.adt());
  return best_response(aadt, eval, delta, opts.deadline);
}

std::vector<FeasibleEvent> feasible_events(const Aadt& aadt,
                                           const EnumerationOptions& opts) {
  check_cap(aadt, opts);
  StructureEvaluator eval(aadt.adt());
  std::vector<FeasibleEvent> events;
  DefenseVector delta(aadt.defenses().size());
  do {
    events.push_back({delta, best_response(aadt, eval, delta, opts.deadline)});
  } while (delta.increment());
  return events;
}

ParetoFront naive_pareto(const Aadt& aadt, const EnumerationOptions& opts) {
  check_cap(aadt, opts);
  StructureEvaluator eval(aadt.adt());
  std::vector<ValuePair> points;
  DefenseVector delta(aadt.defenses().size());
  do {
    const Response r = best_response(aadt, eval, delta, opts.deadline);
    points.push_back({aadt.defense_metric(delta), r.value});
  } while (delta.increment());
  return pareto_min(std::move(points), aadt.domains());
}

}  // namespace adtpf
