#include "adtpf/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "adtpf/errors.hpp"

namespace adtpf {

namespace {

using nlohmann::json;

void require_only(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ParseError(where + ": unknown field '" + it.key() + "'");
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(where + ": missing required field '" + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key,
                           const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string())
    throw ParseError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

Domain parse_domain(const json& obj, const char* key) {
  const std::string name = require_string(obj, key, "domains");
  if (auto d = find_builtin_domain(name)) return *d;
  throw ParseError("domains: unknown attribute domain '" + name + "'");
}

}  // namespace

AdtDocument parse_adt_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("top level must be a JSON object");
  require_only(root, {"name", "root", "nodes", "domains"}, "model");

  AdtDocument doc;
  doc.adt.set_name(require_string(root, "name", "model"));
  const std::string root_id = require_string(root, "root", "model");

  const json& domains = require(root, "domains", "model");
  if (!domains.is_object()) throw ParseError("model: 'domains' must be an object");
  require_only(domains, {"attacker", "defender"}, "domains");
  doc.attacker_domain = parse_domain(domains, "attacker");
  doc.defender_domain = parse_domain(domains, "defender");

  const json& nodes = require(root, "nodes", "model");
  if (!nodes.is_array()) throw ParseError("model: 'nodes' must be an array");

  // First pass creates every node so children may be forward references.
  struct Pending {
    std::vector<std::string> children;
    GateKind kind;
  };
  std::vector<Pending> pending;
  for (const json& n : nodes) {
    if (!n.is_object()) throw ParseError("nodes: every entry must be an object");
    require_only(n, {"id", "kind", "actor", "children", "trigger", "inhibited", "cost"},
                 "node");
    const std::string id = require_string(n, "id", "node");
    const std::string where = "node '" + id + "'";
    const auto kind = parse_gate_kind(require_string(n, "kind", where));
    if (!kind) throw ParseError(where + ": kind must be BS, AND, OR or INH");
    const auto actor = parse_actor(require_string(n, "actor", where));
    if (!actor) throw ParseError(where + ": actor must be A or D");

    const bool has_children = n.contains("children");
    const bool has_trigger = n.contains("trigger");
    const bool has_inhibited = n.contains("inhibited");
    const bool has_cost = n.contains("cost");

    Pending p{{}, *kind};
    if (*kind == GateKind::Inh) {
      if (!has_trigger) throw ParseError(where + ": INH node requires 'trigger'");
      if (!has_inhibited) throw ParseError(where + ": INH node requires 'inhibited'");
      if (has_children) throw ParseError(where + ": INH node takes 'trigger'/'inhibited', not 'children'");
      p.children = {require_string(n, "trigger", where),
                    require_string(n, "inhibited", where)};
    } else {
      if (has_trigger || has_inhibited)
        throw ParseError(where + ": only INH nodes may have 'trigger'/'inhibited'");
      if (*kind != GateKind::BasicStep && !has_children)
        throw ParseError(where + ": " + std::string(to_string(*kind)) +
                         " node requires 'children'");
      if (has_children) {
        const json& kids = n["children"];
        if (!kids.is_array()) throw ParseError(where + ": 'children' must be an array");
        for (const json& k : kids) {
          if (!k.is_string()) throw ParseError(where + ": child ids must be strings");
          p.children.push_back(k.get<std::string>());
        }
      }
    }

    std::optional<Value> cost;
    if (*kind == GateKind::BasicStep) {
      if (!has_cost) throw ParseError(where + ": basic step requires 'cost'");
      const json& c = n["cost"];
      if (!c.is_number()) throw ParseError(where + ": 'cost' must be a number");
      cost = c.get<double>();
    } else if (has_cost) {
      throw ParseError(where + ": only basic steps carry 'cost'");
    }

    try {
      doc.adt.add_node(id, *kind, *actor);
    } catch (const std::invalid_argument&) {
      throw ParseError("duplicate node id '" + id + "'");
    }
    doc.costs.push_back(cost);
    pending.push_back(std::move(p));
  }

  for (NodeIndex i = 0; i < pending.size(); ++i) {
    std::vector<NodeIndex> kids;
    for (const auto& c : pending[i].children) {
      auto idx = doc.adt.find(c);
      if (!idx)
        throw ParseError("node '" + doc.adt.node(i).id + "': unknown child '" + c + "'");
      kids.push_back(*idx);
    }
    doc.adt.set_children(i, std::move(kids));
  }

  auto r = doc.adt.find(root_id);
  if (!r) throw ParseError("model: root '" + root_id + "' is not a node");
  doc.adt.set_root(*r);
  return doc;
}

Aadt to_aadt(const AdtDocument& doc) {
  std::vector<Value> costs(doc.costs.size(), 0.0);
  for (std::size_t i = 0; i < costs.size(); ++i)
    if (doc.costs[i]) costs[i] = *doc.costs[i];
  return Aadt(doc.adt, DomainPair{doc.defender_domain, doc.attacker_domain},
              std::move(costs));
}

namespace {

json value_to_json(Value v) {
  if (!std::isfinite(v))
    throw std::invalid_argument("non-finite values cannot be written as JSON numbers");
  if (v == std::floor(v) && std::fabs(v) < 9007199254740992.0)
    return json(static_cast<std::int64_t>(v));
  return json(v);
}

std::string serialize(const Adt& adt, const Domain& def, const Domain& att,
                      const std::vector<std::optional<Value>>& costs) {
  nlohmann::ordered_json out;
  out["name"] = adt.name();
  out["root"] = adt.node(adt.root()).id;
  auto nodes = nlohmann::ordered_json::array();
  for (NodeIndex i = 0; i < adt.size(); ++i) {
    const auto& n = adt.node(i);
    nlohmann::ordered_json j;
    j["id"] = n.id;
    j["kind"] = std::string(to_string(n.kind));
    j["actor"] = std::string(to_string(n.actor));
    if (n.kind == GateKind::Inh && n.children.size() == 2) {
      j["trigger"] = adt.node(n.trigger()).id;
      j["inhibited"] = adt.node(n.inhibited()).id;
    } else if (!n.is_basic() || !n.children.empty()) {
      auto kids = nlohmann::ordered_json::array();
      for (NodeIndex c : n.children) kids.push_back(adt.node(c).id);
      j["children"] = std::move(kids);
    }
    if (n.is_basic() && i < costs.size() && costs[i])
      j["cost"] = value_to_json(*costs[i]);
    nodes.push_back(std::move(j));
  }
  out["nodes"] = std::move(nodes);
  out["domains"]["attacker"] = std::string(att.name());
  out["domains"]["defender"] = std::string(def.name());
  return out.dump(2) + "\n";
}

}  // namespace

std::string to_json(const Aadt& aadt) {
  std::vector<std::optional<Value>> costs(aadt.adt().size());
  for (NodeIndex i = 0; i < aadt.adt().size(); ++i)
    if (aadt.adt().node(i).is_basic()) costs[i] = aadt.cost(i);
  return serialize(aadt.adt(), aadt.defender_domain(), aadt.attacker_domain(), costs);
}

std::string to_json(const AdtDocument& doc) {
  return serialize(doc.adt, doc.defender_domain, doc.attacker_domain, doc.costs);
}

std::string format_value(Value v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string front_to_csv(const ParetoFront& front) {
  std::string out = "defender,attacker\n";
  for (const auto& p : front)
    out += format_value(p.defender) + "," + format_value(p.attacker) + "\n";
  return out;
}

std::string front_to_json(const ParetoFront& front) {
  auto num = [](Value v) { return std::isinf(v) ? std::string("null") : format_value(v); };
  std::string out = "[";
  for (std::size_t i = 0; i < front.size(); ++i) {
    if (i) out += ",";
    out += "[" + num(front[i].defender) + "," + num(front[i].attacker) + "]";
  }
  return out + "]\n";
}

std::vector<std::string> parse_order_file(std::string_view text) {
  std::vector<std::string> ids;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    ids.push_back(line.substr(first, last - first + 1));
  }
  return ids;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

}  // namespace adtpf
