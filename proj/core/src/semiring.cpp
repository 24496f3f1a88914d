#include "adtpf/semiring.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace adtpf {

namespace {

constexpr std::array<std::string_view, 5> kNames = {
    "min_cost", "min_time_seq", "min_time_par", "min_skill", "probability"};
constexpr std::array<DomainKind, 5> kKinds = {
    DomainKind::MinCost, DomainKind::MinTimeSequential,
    DomainKind::MinTimeParallel, DomainKind::MinSkill, DomainKind::Probability};

}  // namespace

std::string_view Domain::name() const noexcept {
  for (std::size_t i = 0; i < kKinds.size(); ++i)
    if (kKinds[i] == kind_) return kNames[i];
  return "?";
}

bool Domain::contains(Value v) const noexcept {
  if (std::isnan(v)) return false;
  if (kind_ == DomainKind::Probability) return v >= 0.0 && v <= 1.0;
  return v >= 0.0;
}

std::span<const std::string_view> builtin_domain_names() { return kNames; }

std::optional<Domain> find_builtin_domain(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return Domain{kKinds[i]};
  return std::nullopt;
}

Domain builtin_domain(std::string_view name) {
  if (auto d = find_builtin_domain(name)) return *d;
  throw std::invalid_argument("unknown attribute domain '" + std::string(name) + "'");
}

Value metric_value(const Domain& domain, std::span<const Value> beta,
                   const BitVector& vec) {
  Value acc = domain.identity();
  for (std::size_t i = 0; i < vec.size(); ++i)
    if (vec.test(i)) acc = domain.combine(acc, beta[i]);
  return acc;
}

bool dominates(const ValuePair& p, const ValuePair& q, const DomainPair& doms) {
  return doms.defender.le(p.defender, q.defender) &&
         doms.attacker.le(q.attacker, p.attacker);
}

ParetoFront pareto_min(std::vector<ValuePair> points, const DomainPair& doms) {
  const Domain& d = doms.defender;
  const Domain& a = doms.attacker;
  // Cheapest defense first; among equal defender values the pair that is
  // hardest for the attacker comes first and shadows the rest.
  std::sort(points.begin(), points.end(), [&](const ValuePair& x, const ValuePair& y) {
    if (x.defender != y.defender) return d.lt(x.defender, y.defender);
    return a.lt(y.attacker, x.attacker);
  });
  std::vector<ValuePair> kept;
  for (const ValuePair& p : points) {
    if (kept.empty() || a.lt(kept.back().attacker, p.attacker)) kept.push_back(p);
  }
  return ParetoFront(std::move(kept));
}

std::vector<ValuePair> pairwise_image(std::span<const ValuePair> xs,
                                      std::span<const ValuePair> ys,
                                      AttackerOp op, const DomainPair& doms) {
  std::vector<ValuePair> out;
  out.reserve(xs.size() * ys.size());
  for (const ValuePair& x : xs)
    for (const ValuePair& y : ys) {
      const Value att = op == AttackerOp::Combine
                            ? doms.attacker.combine(x.attacker, y.attacker)
                            : doms.attacker.best(x.attacker, y.attacker);
      out.push_back({doms.defender.combine(x.defender, y.defender), att});
    }
  return out;
}

ParetoFront combine_fronts(const ParetoFront& xs, const ParetoFront& ys,
                           AttackerOp op, const DomainPair& doms) {
  return pareto_min(pairwise_image(xs.pairs(), ys.pairs(), op, doms), doms);
}

}  // namespace adtpf
