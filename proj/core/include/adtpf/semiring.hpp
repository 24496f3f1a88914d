#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adtpf/bit_vector.hpp"

namespace adtpf {

/// Attribute values are doubles; cost-like domains use +inf as their top.
using Value = double;

inline constexpr Value kInfinity = std::numeric_limits<Value>::infinity();

enum class DomainKind { MinCost, MinTimeSequential, MinTimeParallel, MinSkill, Probability };

/// A linearly ordered unital semiring attribute domain.
///
/// `combine` is the semiring product, `identity()` its unit, and the order
/// `le` ranks values from most to least preferred by the actor owning the
/// domain. The selection operator `best` is never stored: it is always the
/// minimum under `le`, and `top()` is its unit (the maximal element).
///
/// | name          | values  | combine | identity | top | order |
/// |---------------|---------|---------|----------|-----|-------|
/// | min_cost      | [0,inf] | +       | 0        | inf | <=    |
/// | min_time_seq  | [0,inf] | +       | 0        | inf | <=    |
/// | min_time_par  | [0,inf] | max     | 0        | inf | <=    |
/// | min_skill     | [0,inf] | max     | 0        | inf | <=    |
/// | probability   | [0,1]   | *       | 1        | 0   | >=    |
class Domain {
 public:
  explicit Domain(DomainKind kind) : kind_(kind) {}

  DomainKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;

  Value combine(Value x, Value y) const noexcept {
    switch (kind_) {
      case DomainKind::MinCost:
      case DomainKind::MinTimeSequential: return x + y;
      case DomainKind::MinTimeParallel:
      case DomainKind::MinSkill: return x < y ? y : x;
      case DomainKind::Probability: return x * y;
    }
    return x;
  }

  /// x precedes-or-equals y in the domain's order.
  bool le(Value x, Value y) const noexcept {
    return kind_ == DomainKind::Probability ? x >= y : x <= y;
  }
  bool lt(Value x, Value y) const noexcept { return le(x, y) && x != y; }

  Value best(Value x, Value y) const noexcept { return le(x, y) ? x : y; }

  Value identity() const noexcept {
    return kind_ == DomainKind::Probability ? 1.0 : 0.0;
  }
  Value top() const noexcept {
    return kind_ == DomainKind::Probability ? 0.0 : kInfinity;
  }

  /// Whether v is an element of the value set.
  bool contains(Value v) const noexcept;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  DomainKind kind_;
};

/// Names accepted by builtin_domain(), in a fixed order.
std::span<const std::string_view> builtin_domain_names();

/// Looks up a domain by name; throws std::invalid_argument for unknown names.
Domain builtin_domain(std::string_view name);
std::optional<Domain> find_builtin_domain(std::string_view name);

/// Semiring product of beta over the set bits of vec; identity() when no bit
/// is set. beta is indexed like vec.
Value metric_value(const Domain& domain, std::span<const Value> beta,
                   const BitVector& vec);

/// A (defender value, attacker value) pair.
struct ValuePair {
  Value defender;
  Value attacker;

  friend bool operator==(const ValuePair&, const ValuePair&) = default;
};

/// The two domains an analysis runs over.
struct DomainPair {
  Domain defender;
  Domain attacker;
};

/// p dominates q: p is no more expensive for the defender and no easier for
/// the attacker. Reflexive.
bool dominates(const ValuePair& p, const ValuePair& q, const DomainPair& doms);

/// Mutually non-dominated value pairs, sorted strictly ascending in the
/// defender order (and hence strictly descending in attacker preference).
/// Only pareto_min() and friends create non-empty fronts.
class ParetoFront {
 public:
  ParetoFront() = default;

  const std::vector<ValuePair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }
  const ValuePair& operator[](std::size_t i) const { return pairs_[i]; }

  friend bool operator==(const ParetoFront&, const ParetoFront&) = default;

 private:
  friend ParetoFront pareto_min(std::vector<ValuePair> points, const DomainPair& doms);
  explicit ParetoFront(std::vector<ValuePair> sorted) : pairs_(std::move(sorted)) {}

  std::vector<ValuePair> pairs_;
};

/// The set of minimal elements under dominance, after removing duplicates.
ParetoFront pareto_min(std::vector<ValuePair> points, const DomainPair& doms);

/// Which attacker operator a gate applies when merging child fronts.
enum class AttackerOp { Combine, Best };

/// Pairwise image of X x X' under (x, y), (x', y') -> (x (*)D x', y op y'),
/// unreduced. Defender values always use the product.
std::vector<ValuePair> pairwise_image(std::span<const ValuePair> xs,
                                      std::span<const ValuePair> ys,
                                      AttackerOp op, const DomainPair& doms);
/// pareto_min of pairwise_image.
ParetoFront combine_fronts(const ParetoFront& xs, const ParetoFront& ys,
                           AttackerOp op, const DomainPair& doms);

}  // namespace adtpf
