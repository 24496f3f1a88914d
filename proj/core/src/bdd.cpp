#include "adtpf/bdd.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "adtpf/errors.hpp"

namespace adtpf {

VarOrder VarOrder::build(const Adt& adt, std::span<const std::string> ids) {
  const BasicSteps steps = basic_steps(adt);
  std::unordered_map<std::string, BddVariable> known;
  for (std::size_t i = 0; i < steps.defenses.size(); ++i) {
    const auto& n = adt.node(steps.defenses[i]);
    known.emplace(n.id, BddVariable{n.id, n.actor, static_cast<std::uint32_t>(i)});
  }
  for (std::size_t i = 0; i < steps.attacks.size(); ++i) {
    const auto& n = adt.node(steps.attacks[i]);
    known.emplace(n.id, BddVariable{n.id, n.actor, static_cast<std::uint32_t>(i)});
  }

  VarOrder order;
  for (const auto& id : ids) {
    auto it = known.find(id);
    if (it == known.end())
      throw OrderError("variable order names '" + id + "', which is not a basic step");
    if (!order.level_.emplace(id, static_cast<std::uint32_t>(order.vars_.size())).second)
      throw OrderError("variable order lists '" + id + "' twice");
    order.vars_.push_back(it->second);
  }
  if (order.vars_.size() != known.size()) {
    for (const auto& [id, var] : known)
      if (!order.level_.count(id))
        throw OrderError("variable order is missing basic step '" + id + "'");
  }
  return order;
}

VarOrder VarOrder::defense_first(const Adt& adt, std::span<const std::string> ids) {
  VarOrder order = build(adt, ids);
  if (!order.is_defense_first()) {
    for (std::size_t i = 0; i + 1 < order.vars_.size(); ++i)
      if (order.vars_[i].actor == Actor::Attacker &&
          order.vars_[i + 1].actor == Actor::Defender)
        throw OrderError("variable order is not defense-first: attack '" +
                         order.vars_[i].id + "' precedes defense '" +
                         order.vars_[i + 1].id + "'");
  }
  return order;
}

VarOrder VarOrder::unchecked(const Adt& adt, std::span<const std::string> ids) {
  return build(adt, ids);
}

std::optional<std::uint32_t> VarOrder::level_of(std::string_view id) const {
  auto it = level_.find(std::string(id));
  if (it == level_.end()) return std::nullopt;
  return it->second;
}

bool VarOrder::is_defense_first() const noexcept {
  bool seen_attack = false;
  for (const auto& v : vars_) {
    if (v.actor == Actor::Attacker)
      seen_attack = true;
    else if (seen_attack)
      return false;
  }
  return true;
}

std::vector<std::string> VarOrder::ids() const {
  std::vector<std::string> out;
  out.reserve(vars_.size());
  for (const auto& v : vars_) out.push_back(v.id);
  return out;
}

VarOrder default_defense_first_order(const Adt& adt) {
  const BasicSteps steps = basic_steps(adt);
  std::vector<std::string> ids;
  for (NodeIndex v : steps.defenses) ids.push_back(adt.node(v).id);
  for (NodeIndex v : steps.attacks) ids.push_back(adt.node(v).id);
  return VarOrder::defense_first(adt, ids);
}

BddManager::BddManager(VarOrder order) : order_(std::move(order)) {
  nodes_.push_back({kTerminalLevel, kBddFalse, kBddFalse});
  nodes_.push_back({kTerminalLevel, kBddTrue, kBddTrue});
}

BddRef BddManager::make(std::uint32_t level, BddRef low, BddRef high) {
  if (low == high) return low;
  const Key key{level, low.index, high.index};
  auto it = unique_.find(key);
  if (it != unique_.end()) return it->second;
  const BddRef ref{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back({level, low, high});
  unique_.emplace(key, ref);
  return ref;
}

BddRef BddManager::apply(Op op, BddRef f, BddRef g) {
  if (op == Op::And) {
    if (f == kBddFalse || g == kBddFalse) return kBddFalse;
    if (f == kBddTrue) return g;
    if (g == kBddTrue) return f;
  } else {
    if (f == kBddTrue || g == kBddTrue) return kBddTrue;
    if (f == kBddFalse) return g;
    if (g == kBddFalse) return f;
  }
  if (f == g) return f;
  if (g.index < f.index) std::swap(f, g);

  auto& cache = op == Op::And ? and_cache_ : or_cache_;
  const std::uint64_t key = (std::uint64_t{f.index} << 32) | g.index;
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const std::uint32_t lf = level(f);
  const std::uint32_t lg = level(g);
  const std::uint32_t top = std::min(lf, lg);
  const BddRef f0 = lf == top ? low(f) : f;
  const BddRef f1 = lf == top ? high(f) : f;
  const BddRef g0 = lg == top ? low(g) : g;
  const BddRef g1 = lg == top ? high(g) : g;
  const BddRef lo = apply(op, f0, g0);
  const BddRef hi = apply(op, f1, g1);
  const BddRef r = make(top, lo, hi);
  cache.emplace(key, r);
  return r;
}

BddRef BddManager::apply_and(BddRef f, BddRef g) { return apply(Op::And, f, g); }
BddRef BddManager::apply_or(BddRef f, BddRef g) { return apply(Op::Or, f, g); }

BddRef BddManager::negate(BddRef f) {
  if (f == kBddFalse) return kBddTrue;
  if (f == kBddTrue) return kBddFalse;
  if (auto it = not_cache_.find(f.index); it != not_cache_.end()) return it->second;
  const BddRef lo = negate(low(f));
  const BddRef hi = negate(high(f));
  const BddRef r = make(level(f), lo, hi);
  not_cache_.emplace(f.index, r);
  return r;
}

std::vector<BddRef> BddManager::reachable(BddRef root) const {
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<BddRef> todo{root};
  seen[root.index] = true;
  std::vector<BddRef> out;
  while (!todo.empty()) {
    const BddRef f = todo.back();
    todo.pop_back();
    out.push_back(f);
    if (is_terminal(f)) continue;
    for (BddRef c : {low(f), high(f)})
      if (!seen[c.index]) {
        seen[c.index] = true;
        todo.push_back(c);
      }
  }
  std::sort(out.begin(), out.end(),
            [](BddRef a, BddRef b) { return a.index < b.index; });
  return out;
}

std::size_t BddManager::reachable_count(BddRef root) const {
  return reachable(root).size();
}

BddRef compile(BddManager& mgr, const Adt& adt, const Deadline& deadline) {
  const BasicSteps steps = basic_steps(adt);
  if (steps.defenses.size() + steps.attacks.size() != mgr.order().size())
    throw OrderError("variable order does not match the model's basic steps");

  std::vector<std::optional<BddRef>> memo(adt.size());
  std::vector<std::pair<NodeIndex, std::size_t>> stack{{adt.root(), 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const AdtNode& node = adt.node(v);
    if (next < node.children.size()) {
      const NodeIndex c = node.children[next++];
      if (!memo[c]) stack.emplace_back(c, 0);
      continue;
    }
    deadline.check();
    BddRef r = kBddFalse;
    switch (node.kind) {
      case GateKind::BasicStep: {
        const auto lvl = mgr.order().level_of(node.id);
        if (!lvl) throw OrderError("basic step '" + node.id + "' is missing from the variable order");
        r = mgr.variable(*lvl);
        break;
      }
      case GateKind::And:
        r = kBddTrue;
        for (NodeIndex c : node.children) r = mgr.apply_and(r, *memo[c]);
        break;
      case GateKind::Or:
        r = kBddFalse;
        for (NodeIndex c : node.children) r = mgr.apply_or(r, *memo[c]);
        break;
      case GateKind::Inh:
        r = mgr.apply_and(*memo[node.inhibited()], mgr.negate(*memo[node.trigger()]));
        break;
    }
    memo[v] = r;
    stack.pop_back();
  }
  return *memo[adt.root()];
}

bool bdd_eval(const BddManager& mgr, BddRef f, const DefenseVector& delta,
              const AttackVector& alpha) {
  while (!mgr.is_terminal(f)) {
    const BddVariable& var = mgr.order().variable(mgr.level(f));
    const bool bit = var.actor == Actor::Defender ? delta.test(var.position)
                                                  : alpha.test(var.position);
    f = bit ? mgr.high(f) : mgr.low(f);
  }
  return f == kBddTrue;
}

std::vector<std::string> check_structure(const BddManager& mgr, BddRef root) {
  std::vector<std::string> problems;
  const auto nodes = mgr.reachable(root);
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> triples;
  std::set<std::uint32_t> has_parent;
  for (BddRef f : nodes) {
    if (mgr.is_terminal(f)) continue;
    const std::string name = "node " + std::to_string(f.index);
    if (mgr.low(f) == mgr.high(f)) problems.push_back(name + " has identical low and high children");
    if (!triples.emplace(mgr.level(f), mgr.low(f).index, mgr.high(f).index).second)
      problems.push_back(name + " duplicates another node's (label, low, high)");
    for (BddRef c : {mgr.low(f), mgr.high(f)}) {
      has_parent.insert(c.index);
      if (!mgr.is_terminal(c) && mgr.level(c) <= mgr.level(f))
        problems.push_back(name + " has an edge that does not respect the variable order");
    }
  }
  for (BddRef f : nodes)
    if (f != root && !has_parent.count(f.index))
      problems.push_back("node " + std::to_string(f.index) + " is a second root");
  if (has_parent.count(root.index)) problems.push_back("root has a parent");
  return problems;
}

namespace {

class BddPareto {
 public:
  BddPareto(const Aadt& aadt, const BddManager& mgr, const BddBuOptions& opts)
      : aadt_(aadt), mgr_(mgr), opts_(opts), doms_(aadt.domains()) {
    for (std::uint32_t l = 0; l < mgr.order().size(); ++l) {
      const BddVariable& var = mgr.order().variable(l);
      const NodeIndex v = aadt.adt().index_of(var.id);
      values_.push_back(aadt.cost(v));
    }
    const bool attacker_root = aadt.root_actor() == Actor::Attacker;
    const ValuePair lose{doms_.defender.identity(), doms_.attacker.top()};
    const ValuePair win{doms_.defender.identity(), doms_.attacker.identity()};
    false_front_ = pareto_min({attacker_root ? lose : win}, doms_);
    true_front_ = pareto_min({attacker_root ? win : lose}, doms_);
    if (opts.memoize) memo_.resize(mgr.size());
  }

  ParetoFront run(BddRef w) {
    opts_.deadline.poll();
    if (w == kBddFalse) return false_front_;
    if (w == kBddTrue) return true_front_;
    if (opts_.memoize && memo_[w.index]) return *memo_[w.index];

    const std::uint32_t lvl = mgr_.level(w);
    const BddVariable& var = mgr_.order().variable(lvl);
    const Value beta = values_[lvl];
    ParetoFront lo = run(mgr_.low(w));
    ParetoFront hi = run(mgr_.high(w));

    ParetoFront result;
    if (var.actor == Actor::Attacker) {
      const Value u0 = attacker_value(lo, var);
      const Value u1 = attacker_value(hi, var);
      const Value a = doms_.attacker.best(u0, doms_.attacker.combine(beta, u1));
      result = pareto_min({{doms_.defender.identity(), a}}, doms_);
    } else {
      std::vector<ValuePair> points = lo.pairs();
      points.reserve(lo.size() + hi.size());
      for (const ValuePair& p : hi)
        points.push_back({doms_.defender.combine(beta, p.defender), p.attacker});
      result = pareto_min(std::move(points), doms_);
    }
    if (opts_.memoize) memo_[w.index] = result;
    return result;
  }

 private:
  Value attacker_value(const ParetoFront& front, const BddVariable& var) const {
    if (opts_.check_defense_first &&
        (front.size() != 1 || front[0].defender != doms_.defender.identity()))
      throw OrderError("attack variable '" + var.id +
                       "' sits above a defense choice; the variable order must "
                       "be defense-first");
    return front[0].attacker;
  }

  const Aadt& aadt_;
  const BddManager& mgr_;
  const BddBuOptions& opts_;
  const DomainPair& doms_;
  std::vector<Value> values_;
  ParetoFront false_front_;
  ParetoFront true_front_;
  std::vector<std::optional<ParetoFront>> memo_;
};

}  // namespace

ParetoFront bdd_bu(const Aadt& aadt, const BddManager& mgr, BddRef root,
                   const BddBuOptions& opts) {
  if (opts.check_defense_first && !mgr.order().is_defense_first())
    throw OrderError("variable order is not defense-first");
  return BddPareto(aadt, mgr, opts).run(root);
}

std::string to_dot(const BddManager& mgr, BddRef root) {
  std::ostringstream out;
  out << "digraph bdd {\n";
  const auto nodes = mgr.reachable(root);
  for (BddRef f : nodes) {
    if (mgr.is_terminal(f))
      out << "  n" << f.index << " [label=\"" << (f == kBddTrue ? 1 : 0)
          << "\", shape=box];\n";
    else
      out << "  n" << f.index << " [label=\"" << mgr.order().variable(mgr.level(f)).id
          << "\", shape=circle];\n";
  }
  for (BddRef f : nodes) {
    if (mgr.is_terminal(f)) continue;
    out << "  n" << f.index << " -> n" << mgr.low(f).index << " [style=dashed];\n";
    out << "  n" << f.index << " -> n" << mgr.high(f).index << " [style=solid];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace adtpf
