#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dlseq/calculus.hpp"
#include "dlseq/proof.hpp"

namespace dlseq {

class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proof of `context` with `x` added to both sides, by induction on the
/// weight of `x`. Throws TransformError when a needed rule is not in `c`.
ProofNode derive_identity(const Calculus& c, const Formula& x, const Sequent& context = {});

enum class TransformKind { weaken_left, weaken_right, contract_left, contract_right, substitute };

struct TransformPayload {
  /// Formulae to add (weakening) or to remove one copy of (contraction).
  std::vector<Formula> formulas;
  /// from, to
  std::optional<std::pair<Individual, Individual>> substitution;
};

/// A proof of the transformed conclusion, no taller than `t`. `t` must check.
ProofNode transform(const Calculus& c, TransformKind kind, const ProofNode& t,
                    const TransformPayload& payload);

/// Adds formulae to every node; eigen individuals that would be captured are
/// renamed below the node that introduces them.
ProofNode weaken(const Calculus& c, const ProofNode& t, const SequentChange& added);
/// Replaces every occurrence of `from` by `to`, renaming clashing eigens.
ProofNode substitute(const Calculus& c, const ProofNode& t, const Individual& from,
                     const Individual& to);
/// Removes one of at least two copies of `f` on `side`.
ProofNode contract(const Calculus& c, const ProofNode& t, Side side, const Formula& f);

/// A proof of premise `premise` of `rule` applied to the conclusion of `t`
/// at `binding`, no taller than `t`. Unbound eigen parameters receive fresh
/// individuals; without a binding the first instance over the conclusion is
/// used. Throws TransformError when the conclusion does not match or when
/// the derivation uses the principal formula in a way inversion cannot
/// follow.
ProofNode invert(const Calculus& c, const std::string& rule, std::size_t premise,
                 const ProofNode& t, std::optional<Binding> binding = std::nullopt);

/// Schema instance a checked node was built from.
RuleInstance node_instance(const Calculus& c, const ProofNode& n);

}  // namespace dlseq
