#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dlseq/definitions.hpp"
#include "dlseq/profile.hpp"
#include "dlseq/syntax.hpp"

namespace dlseq {

class RuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using BindingValue =
    std::variant<Individual, Concept, Role, Formula, unsigned, std::vector<Individual>>;

/// Values for a schema's metavariables, keyed by metavariable name.
using Binding = std::map<std::string, BindingValue>;

std::string value_text(const BindingValue& v);
/// Stable text of a binding; used as the match key for redundancy marks.
std::string binding_key(const Binding& b);

template <typename T>
const T& binding_get(const Binding& b, const std::string& key) {
  auto it = b.find(key);
  if (it == b.end()) throw RuleError("binding lacks " + key);
  if (const T* v = std::get_if<T>(&it->second)) return *v;
  throw RuleError("binding value for " + key + " has the wrong sort");
}

/// A rule schema instantiated at a binding: what the conclusion must contain,
/// what every premise loses, and what each premise gains.
struct RuleInstance {
  std::string rule;
  Binding binding;
  SequentChange required;
  SequentChange removed;
  std::vector<SequentChange> added;
  std::vector<Individual> eigens;

  std::size_t premise_count() const { return added.size(); }
  /// Premise i of this instance over the given conclusion.
  Sequent premise(const Sequent& conclusion, std::size_t i) const;
  std::vector<Sequent> premises(const Sequent& conclusion) const;
  /// Multiset containment of `required` in `conclusion`.
  bool fits(const Sequent& conclusion) const;
};

enum class RuleKind { initial, unary, binary, nary };

/// Precomputed lookups over a top sequent, shared by all enumerators.
struct BranchView {
  explicit BranchView(const Sequent& top);

  const Sequent& top;
  std::set<Formula> left, right;
  std::vector<Individual> individuals;  // sorted by the linear order
  std::vector<Formula> left_roles;      // role assertions on the left
  std::vector<Formula> left_equalities;

  bool has_left(const Formula& f) const { return left.count(f) > 0; }
  bool has_right(const Formula& f) const { return right.count(f) > 0; }
};

/// Descriptive-definition data attached to compiled schemas.
struct DdrInfo {
  DescriptiveDefinition definition;  // after variable identification
  std::string base_name;             // the definition name
  bool left = true;
  std::map<std::string, std::string> identification;  // var -> representative
};

struct RuleSchema {
  std::string name;
  RuleKind kind = RuleKind::unary;
  /// Metavariables that must receive fresh individuals.
  std::vector<std::string> eigen_params;
  /// Premise count when independent of the binding.
  std::optional<std::size_t> fixed_premises;
  /// Rules with no principal formula in the conclusion.
  bool generator = false;
  /// Some instances have no premises and close a branch.
  bool can_close = false;
  /// Premises keep every principal formula; inversion is weakening.
  bool retains_principal = false;
  /// Profile group that contributed the rule.
  std::string family;
  /// Conclusion over premises, in the concrete syntax, for display.
  std::string display;
  std::optional<DdrInfo> ddr;

  /// Candidate bindings over a top sequent, eigen parameters left unbound,
  /// ordered by the linear order on individuals.
  std::function<std::vector<Binding>(const BranchView&)> enumerate;
  /// Throws RuleError when the binding does not fit the schema's shape.
  std::function<RuleInstance(const Binding&)> instantiate;
  /// When set, eigen parameters are lists of this many fresh individuals.
  std::function<std::size_t(const Binding&, const std::string&)> eigen_width;
  /// Optional: the branch already satisfies what the rule would establish.
  std::function<bool(const Binding&, const BranchView&)> satisfied;

  /// Fills eigen parameters from `next`, advancing it.
  void bind_eigens(Binding& b, std::uint32_t& next) const;
};

using SchemaPtr = std::shared_ptr<const RuleSchema>;

class Calculus {
 public:
  Calculus(LanguageProfile profile, DefinitionRegistry defs, std::vector<SchemaPtr> schemas);

  const LanguageProfile& profile() const { return profile_; }
  const DefinitionRegistry& definitions() const { return defs_; }
  /// All schemas in cyclic order.
  const std::vector<SchemaPtr>& schemas() const { return schemas_; }
  const RuleSchema* find(const std::string& name) const;
  std::vector<std::string> names() const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }

  /// Same schemas, new cyclic order; names missing from `order` keep their
  /// relative order after the listed ones. Unknown names throw RuleError.
  Calculus reordered(const std::vector<std::string>& order) const;

 private:
  LanguageProfile profile_;
  DefinitionRegistry defs_;
  std::vector<SchemaPtr> schemas_;
  std::map<std::string, std::size_t> index_;
};

/// The eighteen rules of the base calculus, in display order.
std::vector<SchemaPtr> alc_rules();
/// Rules contributed by the profile flags beyond the base calculus.
std::vector<SchemaPtr> extension_rules(const LanguageProfile& profile);

/// Left and right rule for a descriptive definition.
std::pair<SchemaPtr, SchemaPtr> compile_ddr(const DescriptiveDefinition& d);
/// The left schema together with its contracted variants, one per variable
/// identification that merges two principal atoms.
std::vector<SchemaPtr> close_under_contraction(const SchemaPtr& left);

/// Throws RuleError when an enabled definition is missing.
Calculus assemble_calculus(const LanguageProfile& profile,
                           const DefinitionRegistry& defs = DefinitionRegistry());

/// Per-branch search state.
struct BranchState {
  Sequent top;
  std::set<Formula> theta, omega;
  std::set<std::string> marks;  // schema name + match key
  std::uint32_t next_eigen = 1;

  explicit BranchState(Sequent root);
  /// Moves to a premise, widening theta/omega.
  void advance(Sequent premise);
};

struct Application {
  const RuleSchema* schema = nullptr;
  Binding binding;
  RuleInstance instance;
  std::vector<Sequent> premises;
  std::string mark;
};

/// Non-redundant applications of one schema to the branch top.
std::vector<Application> enumerate_applications(const Calculus& c, const BranchState& b,
                                                const RuleSchema& schema,
                                                std::size_t limit = SIZE_MAX);
/// Zero-premise instances over the top sequent (initial configurations).
std::optional<Application> find_closing(const Calculus& c, const Sequent& top);

}  // namespace dlseq
