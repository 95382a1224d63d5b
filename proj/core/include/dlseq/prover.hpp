#pragma once

#include <map>
#include <optional>
#include <string>

#include "dlseq/calculus.hpp"
#include "dlseq/proof.hpp"

namespace dlseq {

struct Budget {
  /// Bottom-up rule applications over the whole search.
  std::size_t steps = 10000;
  /// Formula count of any one sequent on a branch.
  std::size_t branch_formulas = 2000;
  /// Applications along one branch.
  std::size_t depth = 10000;
};

struct SearchStats {
  std::size_t steps = 0;
  std::size_t branches = 0;
  std::size_t max_branch_size = 0;
  /// How often each schema had its turn in the cyclic order.
  std::map<std::string, std::size_t> scheduled;
};

enum class Verdict { proved, saturated, budget_exhausted };
std::string to_string(Verdict v);

struct SearchOutcome {
  Verdict verdict = Verdict::budget_exhausted;
  /// Closed when proved; otherwise the partial tree with open leaves.
  ProofNode tree;
  /// The saturated branch, for Verdict::saturated.
  std::optional<BranchState> branch;
  SearchStats stats;
};

/// Depth-first backward search. Before each step the top sequent is checked
/// for a closing instance; otherwise the schemas take turns in cyclic order,
/// one application per turn. A branch where a full cycle applies nothing is
/// saturated. Throws ProfileViolation when the root leaves the profile.
SearchOutcome prove(const Sequent& root, const Calculus& c, const Budget& budget = {});

/// True when no schema has a non-redundant application on the branch and
/// no closing instance fits its top sequent.
bool is_saturated(const BranchState& b, const Calculus& c);

}  // namespace dlseq
