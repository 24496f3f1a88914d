#include "adtpf/aadt.hpp"

#include <cmath>
#include <limits>

#include "adtpf/errors.hpp"

namespace adtpf {

Aadt::Aadt(Adt adt, DomainPair domains, std::vector<Value> costs)
    : adt_(std::move(adt)), domains_(domains), costs_(std::move(costs)) {
  const auto violations = validate(adt_);
  if (!violations.empty()) {
    std::string msg = "invalid ADT:";
    for (const auto& v : violations) msg += "\n  " + v.node + ": " + v.message;
    throw ValidationError(msg);
  }
  if (costs_.size() != adt_.size())
    throw ValidationError("cost table length does not match node count");

  steps_ = basic_steps(adt_);
  for (NodeIndex v = 0; v < adt_.size(); ++v) {
    const auto& node = adt_.node(v);
    if (!node.is_basic()) {
      costs_[v] = std::numeric_limits<Value>::quiet_NaN();
      continue;
    }
    const Domain& dom = node.actor == Actor::Defender ? domains_.defender
                                                      : domains_.attacker;
    if (!dom.contains(costs_[v]))
      throw ValidationError("value of '" + node.id + "' lies outside domain " +
                            std::string(dom.name()));
  }
  beta_defense_.reserve(steps_.defenses.size());
  for (NodeIndex v : steps_.defenses) beta_defense_.push_back(costs_[v]);
  beta_attack_.reserve(steps_.attacks.size());
  for (NodeIndex v : steps_.attacks) beta_attack_.push_back(costs_[v]);
}

}  // namespace adtpf
