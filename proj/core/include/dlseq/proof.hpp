#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlseq/calculus.hpp"

namespace dlseq {

/// A derivation node. A node without a rule is an open leaf.
struct ProofNode {
  Sequent conclusion;
  std::optional<std::string> rule;
  Binding binding;
  std::vector<ProofNode> children;

  bool is_open() const { return !rule; }
  /// 0 for a leaf, otherwise 1 + the tallest child.
  std::size_t height() const;
  std::size_t size() const;
  bool closed() const;
};

/// Rule names in pre-order.
std::vector<std::string> rule_sequence(const ProofNode& t);

/// One `rule: sequent` line per node, children indented by two spaces.
std::string proof_text(const ProofNode& t);
/// {conclusion, rule, bindings, children}.
std::string proof_json(const ProofNode& t, int indent = 2);

/// The node for `rule` at `binding` over `conclusion`, with every premise as
/// an open leaf. Eigen parameters must already be bound. Throws RuleError.
ProofNode expand(const Calculus& c, const Sequent& conclusion, const std::string& rule,
                 const Binding& binding);

struct CheckResult {
  bool valid = true;
  std::string message;
  /// Child indices from the root to the offending node.
  std::vector<std::size_t> path;
  std::string offending;  // conclusion of that node

  explicit operator bool() const { return valid; }
};

/// Every node must instantiate a schema of `c`: principal formulae present,
/// eigen individuals distinct and absent from the conclusion, premises equal
/// to the children's conclusions. Open leaves are violations.
CheckResult check_proof(const ProofNode& t, const Calculus& c);

}  // namespace dlseq
