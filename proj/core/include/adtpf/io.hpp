#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adtpf/aadt.hpp"
#include "adtpf/adt.hpp"
#include "adtpf/semiring.hpp"

namespace adtpf {

/// A parsed model file. The graph is kept even when it breaks
/// well-formedness rules so that callers can report every violation.
struct AdtDocument {
  Adt adt;
  Domain defender_domain{DomainKind::MinCost};
  Domain attacker_domain{DomainKind::MinCost};
  std::vector<std::optional<Value>> costs;  // indexed by node
};

/// Parses the JSON model format:
///
///     {"name": str, "root": str,
///      "nodes": [{"id": str, "kind": "BS"|"AND"|"OR"|"INH", "actor": "A"|"D",
///                 "children": [str]?, "trigger": str?, "inhibited": str?,
///                 "cost": number?}],
///      "domains": {"attacker": str, "defender": str}}
///
/// Throws ParseError for syntax errors, unknown or missing fields, duplicate
/// ids and dangling references.
AdtDocument parse_adt_json(std::string_view text);

/// Validates a document and builds the analysable model (ValidationError).
Aadt to_aadt(const AdtDocument& doc);

/// Serialises a model back to the JSON format. Output is deterministic:
/// nodes appear in index order and keys in a fixed order.
std::string to_json(const Aadt& aadt);
std::string to_json(const AdtDocument& doc);

/// Shortest round-trip decimal; +inf becomes "inf".
std::string format_value(Value v);

/// `defender,attacker` header plus one row per pair in front order.
std::string front_to_csv(const ParetoFront& front);
/// `[[d,a],...]` with infinity rendered as null.
std::string front_to_json(const ParetoFront& front);

/// One basic-step id per line; blank lines are skipped.
std::vector<std::string> parse_order_file(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace adtpf
