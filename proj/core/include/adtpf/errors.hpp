#pragma once

#include <stdexcept>
#include <string>

namespace adtpf {

/// Malformed input file: bad JSON, unknown fields, missing required fields.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ADT that breaks a well-formedness rule was handed to an analysis.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bottom-up analysis reached a node with more than one parent.
class NotATreeError : public std::runtime_error {
 public:
  NotATreeError(const std::string& shared_node)
      : std::runtime_error("node '" + shared_node +
                           "' has more than one parent; the bottom-up "
                           "algorithm only handles tree-shaped ADTs"),
        node_(shared_node) {}

  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

/// A BDD variable order that is not a defense-first permutation of the
/// basic steps, or a BDD whose attack-labelled nodes see defender choices.
class OrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Brute-force enumeration would exceed the configured basic-step cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cooperative deadline passed while an analysis was running.
class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("analysis deadline exceeded") {}
};

}  // namespace adtpf
