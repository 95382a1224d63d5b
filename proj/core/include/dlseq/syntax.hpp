#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlseq {

/// Raised when a term is built in violation of the language's structural
/// rules (bad chain, inverse of a non-named role, zone mismatch, ...).
class SyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An individual name. Eigen individuals are spelled `_eN` and ordered after
/// every user individual by their creation index N.
class Individual {
 public:
  Individual() = default;
  explicit Individual(std::string name) : name_(std::move(name)) {}

  static Individual eigen(std::uint32_t index);

  const std::string& name() const { return name_; }
  bool is_eigen() const;
  /// Creation index of an eigen individual, 0 for user individuals.
  std::uint32_t eigen_index() const;

  bool operator==(const Individual& other) const { return name_ == other.name_; }
  /// The linear order used by proof search: user names lexicographically,
  /// then eigen individuals by creation index.
  std::strong_ordering operator<=>(const Individual& other) const;

 private:
  std::string name_;
};

class Role {
 public:
  enum class Kind { named, inverse, universal, chain };

  static Role named(std::string name);
  /// `inv r`; only named roles may be inverted.
  static Role inverse(std::string name);
  static Role universal();
  /// Flattens nested chains; a single part collapses to that part.
  static Role chain(std::vector<Role> parts);

  Kind kind() const { return kind_; }
  /// Role name for named and inverse roles; "U" for the universal role.
  const std::string& name() const { return name_; }
  const std::vector<Role>& parts() const { return parts_; }
  bool is_chain() const { return kind_ == Kind::chain; }
  std::size_t length() const { return is_chain() ? parts_.size() : 1; }

  /// For a chain r1;...;rn, the prefix r1;...;r(n-1) (a plain role when n = 2).
  Role prefix() const;
  /// For a chain, its last element.
  const Role& last() const;

  std::string text() const;

  bool operator==(const Role& other) const;
  std::strong_ordering operator<=>(const Role& other) const;

 private:
  Kind kind_ = Kind::named;
  std::string name_;
  std::vector<Role> parts_;
};

/// Complex concept; immutable and cheaply copyable. Equality and ordering
/// are structural (via the canonical printed form).
class Concept {
 public:
  enum class Kind {
    atomic,
    top,
    bottom,
    negation,
    disjunction,
    conjunction,
    exists,
    forall,
    nominal,
    at_most,
    at_least,
    self
  };

  static Concept atomic(std::string name);
  static Concept top();
  static Concept bottom();
  static Concept negation(Concept operand);
  static Concept disjunction(Concept lhs, Concept rhs);
  static Concept conjunction(Concept lhs, Concept rhs);
  static Concept exists(Role role, Concept filler);
  static Concept forall(Role role, Concept filler);
  static Concept nominal(Individual individual);
  static Concept at_most(unsigned bound, Role role, Concept filler);
  static Concept at_least(unsigned bound, Role role, Concept filler);
  static Concept self(Role role);

  Kind kind() const;
  const std::string& name() const;
  /// Operand of a negation, left operand of a binary connective, or the
  /// filler of a role restriction.
  const Concept& first() const;
  const Concept& second() const;
  const Role& role() const;
  const Individual& individual() const;
  unsigned bound() const;
  /// Counting restriction whose filler is top.
  bool is_unqualified() const;

  const std::string& text() const;

  bool operator==(const Concept& other) const { return text() == other.text(); }
  std::strong_ordering operator<=>(const Concept& other) const {
    return text() <=> other.text();
  }

  struct Node;

 private:
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Internal formula `a : P`, or one of the external formula shapes.
class Formula {
 public:
  enum class Kind {
    concept_assertion,
    gci,
    role_assertion,
    negated_role,
    cria,
    rra,
    equality,
    inequality
  };

  static Formula assertion(Individual a, Concept c);
  static Formula gci(Concept lhs, Concept rhs);
  static Formula role_assertion(Role role, Individual a, Individual b);
  static Formula negated_role(std::string role, Individual a, Individual b);
  /// r1;...;rn sub r, n >= 1.
  static Formula cria(std::vector<Role> chain, std::string target);
  static Formula rra(std::string relation, std::vector<std::string> roles);
  static Formula equality(Individual a, Individual b);
  static Formula inequality(Individual a, Individual b);

  Kind kind() const;
  bool is_internal() const { return kind() == Kind::concept_assertion; }
  bool is_external() const { return !is_internal(); }

  /// Subject of an assertion, or first individual of a binary atom.
  const Individual& first() const;
  const Individual& second() const;
  /// Asserted concept, or left side of a GCI.
  const Concept& concept_of() const;
  const Concept& rhs() const;
  /// Role of a (negated) role assertion.
  const Role& role() const;
  /// Left-hand chain of a role inclusion.
  const std::vector<Role>& chain() const;
  /// Target role of a role inclusion, or the relation name of an RRA.
  const std::string& name() const;
  /// Role arguments of an RRA.
  const std::vector<std::string>& arguments() const;

  const std::string& text() const;

  bool operator==(const Formula& other) const { return text() == other.text(); }
  std::strong_ordering operator<=>(const Formula& other) const {
    return text() <=> other.text();
  }

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Side { left, right };

/// Four-zone sequent  efAnte, ifAnte |- ifCons, efCons.  Zones are ordered
/// collections compared as multisets.
class Sequent {
 public:
  Sequent() = default;

  /// Routes `f` into the IF or EF zone of the given side.
  void add(Side side, const Formula& f);
  void add_all(Side side, const std::vector<Formula>& fs);
  /// Removes one copy; returns false when absent.
  bool remove(Side side, const Formula& f);

  std::size_t count(Side side, const Formula& f) const;
  bool contains(Side side, const Formula& f) const { return count(side, f) > 0; }

  const std::vector<Formula>& ef_ante() const { return ef_ante_; }
  const std::vector<Formula>& if_ante() const { return if_ante_; }
  const std::vector<Formula>& if_cons() const { return if_cons_; }
  const std::vector<Formula>& ef_cons() const { return ef_cons_; }
  /// Both zones of a side, EFs first.
  std::vector<Formula> side(Side side) const;
  std::size_t size() const;

  bool operator==(const Sequent& other) const;

  std::string text() const;

 private:
  std::vector<Formula> ef_ante_, if_ante_, if_cons_, ef_cons_;
};

struct SequentChange {
  std::vector<Formula> left;
  std::vector<Formula> right;
  bool empty() const { return left.empty() && right.empty(); }
};

// Substitution of `to` for every occurrence of `from`.
Role substitute(const Role& r, const Individual& from, const Individual& to);
Concept substitute(const Concept& c, const Individual& from, const Individual& to);
Formula substitute(const Formula& f, const Individual& from, const Individual& to);
Sequent substitute(const Sequent& s, const Individual& from, const Individual& to);
std::vector<Formula> substitute(const std::vector<Formula>& fs, const Individual& from,
                                const Individual& to);

std::set<Individual> free_individuals(const Concept& c);
std::set<Individual> free_individuals(const Formula& f);
std::set<Individual> free_individuals(const Sequent& s);

/// Smallest eigen index not used by any individual in `s`.
std::uint32_t next_eigen_index(const Sequent& s);

/// Atomic concept names and role names occurring anywhere in a formula.
void collect_vocabulary(const Formula& f, std::set<std::string>& concepts,
                        std::set<std::string>& roles);

std::string to_string(Side side);

}  // namespace dlseq
