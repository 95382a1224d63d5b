#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dlseq/calculus.hpp"
#include "dlseq/definitions.hpp"
#include "dlseq/syntax.hpp"

namespace dlseq {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Element = std::size_t;
using Pair = std::pair<Element, Element>;

/// Finite structure over elements 0..domain_size-1. Only atomic concepts and
/// role names are stored; everything else is computed.
struct Interpretation {
  std::size_t domain_size = 1;
  std::map<std::string, std::set<Element>> concepts;
  std::map<std::string, std::set<Pair>> roles;
  std::map<Individual, Element> individuals;

  std::vector<Element> domain() const;
  /// Throws EvaluationError for an unmapped individual.
  Element element(const Individual& a) const;
  std::set<Element> extension(const Concept& c) const;
  std::set<Pair> extension(const Role& r) const;
  bool holds(const Role& r, Element x, Element y) const;

  /// {domain, concepts, roles, individuals}.
  std::string json(int indent = 2) const;
  bool operator==(const Interpretation&) const = default;
};

struct SatisfactionReport {
  Formula formula;
  bool holds = false;
  /// Element, pair or assignment explaining an existential-shaped verdict.
  std::optional<std::string> witness;
};

/// Throws EvaluationError for unmapped individuals or an RRA without a
/// definition. Built-in relations are checked directly.
SatisfactionReport satisfies(const Interpretation& i, const Formula& f,
                             const DefinitionRegistry& defs = DefinitionRegistry());
/// RRA evaluated through its definition's first-order sentence only.
SatisfactionReport satisfies_by_definition(const Interpretation& i, const Formula& f,
                                           const DefinitionRegistry& defs);
/// All antecedent formulae true implies some consequent formula true.
bool satisfies_sequent(const Interpretation& i, const Sequent& s,
                       const DefinitionRegistry& defs = DefinitionRegistry());

/// The quotient model of a branch: elements are the classes of the branch's
/// individuals under the equalities in theta; a named role or atomic concept
/// holds exactly where theta asserts it of some representatives.
/// Throws ExtractionError when the equalities are not an equivalence.
Interpretation extract_model(const BranchState& b);
/// As above, first checking that the branch is saturated under `c`.
Interpretation extract_model(const BranchState& b, const Calculus& c);

}  // namespace dlseq
