#pragma once

#include <span>
#include <vector>

#include "adtpf/adt.hpp"
#include "adtpf/semiring.hpp"

namespace adtpf {

/// An ADT together with defender/attacker attribute domains and the value of
/// every basic step. Construction validates the ADT and the values, so any
/// Aadt instance is safe to analyse.
class Aadt {
 public:
  /// `costs` is indexed by node; entries for gates are ignored.
  /// Throws ValidationError when the ADT is malformed or a basic-step value
  /// lies outside its actor's domain.
  Aadt(Adt adt, DomainPair domains, std::vector<Value> costs);

  const Adt& adt() const noexcept { return adt_; }
  const DomainPair& domains() const noexcept { return domains_; }
  const Domain& defender_domain() const noexcept { return domains_.defender; }
  const Domain& attacker_domain() const noexcept { return domains_.attacker; }

  /// Basic steps in canonical order.
  std::span<const NodeIndex> defenses() const noexcept { return steps_.defenses; }
  std::span<const NodeIndex> attacks() const noexcept { return steps_.attacks; }

  /// Values aligned with defenses() / attacks().
  std::span<const Value> defense_values() const noexcept { return beta_defense_; }
  std::span<const Value> attack_values() const noexcept { return beta_attack_; }

  /// Value of a basic step by node index (NaN for gates).
  Value cost(NodeIndex v) const { return costs_.at(v); }
  const std::vector<Value>& costs() const noexcept { return costs_; }

  Actor root_actor() const { return adt_.node(adt_.root()).actor; }

  Value defense_metric(const DefenseVector& delta) const {
    return metric_value(domains_.defender, beta_defense_, delta);
  }
  Value attack_metric(const AttackVector& alpha) const {
    return metric_value(domains_.attacker, beta_attack_, alpha);
  }

 private:
  Adt adt_;
  DomainPair domains_;
  std::vector<Value> costs_;
  BasicSteps steps_;
  std::vector<Value> beta_defense_;
  std::vector<Value> beta_attack_;
};

}  // namespace adtpf
