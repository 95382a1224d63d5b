#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlseq/syntax.hpp"

namespace dlseq {

class DefinitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// r(x,y) over a role parameter, or x = y.
struct DefinitionAtom {
  enum class Kind { role, equality };
  Kind kind = Kind::role;
  std::string role;  // a parameter name of the definition
  std::string x, y;

  std::string text() const;
  bool operator==(const DefinitionAtom&) const = default;
  auto operator<=>(const DefinitionAtom&) const = default;
};

/// Rel(r1..rl) <-> forall vars (F1 & ... & Fn -> G1 | ... | Gk).
struct DescriptiveDefinition {
  std::string name;
  std::vector<std::string> roles;
  std::vector<std::string> vars;
  std::vector<DefinitionAtom> antecedent;
  std::vector<DefinitionAtom> consequent;

  /// Throws DefinitionError when an atom uses an unknown role or variable,
  /// or a variable occurs in no atom.
  void validate() const;
  std::string text() const;

  /// The atoms for a concrete RRA under an assignment of the bound variables.
  std::vector<Formula> instantiate(const std::vector<DefinitionAtom>& atoms,
                                   const std::vector<std::string>& actual_roles,
                                   const std::map<std::string, Individual>& assignment) const;
};

/// Transitivity, reflexivity, irreflexivity, asymmetry, disjointness and
/// functionality.
const std::vector<DescriptiveDefinition>& builtin_definitions();

class DefinitionRegistry {
 public:
  /// Registry preloaded with the built-in definitions.
  DefinitionRegistry();
  static DefinitionRegistry empty();

  /// Adds or replaces a definition after validating it.
  void add(DescriptiveDefinition d);
  bool contains(const std::string& name) const { return defs_.count(name) > 0; }
  const DescriptiveDefinition& at(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  struct Empty {};
  explicit DefinitionRegistry(Empty) {}
  std::map<std::string, DescriptiveDefinition> defs_;
};

class WeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned weight(const Concept& c);
/// Throws WeightError for an RRA without a registered definition.
unsigned weight(const Formula& f, const DefinitionRegistry& defs);

}  // namespace dlseq
