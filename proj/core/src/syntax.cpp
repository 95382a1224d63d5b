#include "dlseq/syntax.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace dlseq {

namespace {

constexpr std::string_view kEigenPrefix = "_e";

bool is_builtin_sugar(const std::string& name) {
  static const std::set<std::string> sugar = {"Trans", "Refl", "Irr", "Asy", "Disj", "Funct"};
  return sugar.count(name) > 0;
}

}  // namespace

// ---------------------------------------------------------------- Individual

Individual Individual::eigen(std::uint32_t index) {
  return Individual(std::string(kEigenPrefix) + std::to_string(index));
}

bool Individual::is_eigen() const {
  if (name_.size() <= kEigenPrefix.size() || name_.compare(0, 2, kEigenPrefix) != 0) return false;
  return std::all_of(name_.begin() + 2, name_.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::uint32_t Individual::eigen_index() const {
  if (!is_eigen()) return 0;
  std::uint32_t value = 0;
  auto* begin = name_.data() + kEigenPrefix.size();
  auto [ptr, ec] = std::from_chars(begin, name_.data() + name_.size(), value);
  if (ec != std::errc{}) return 0;
  return value;
}

std::strong_ordering Individual::operator<=>(const Individual& other) const {
  bool e1 = is_eigen(), e2 = other.is_eigen();
  if (e1 != e2) return e1 ? std::strong_ordering::greater : std::strong_ordering::less;
  if (e1) {
    if (auto c = eigen_index() <=> other.eigen_index(); c != 0) return c;
  }
  return name_ <=> other.name_;
}

// ---------------------------------------------------------------------- Role

Role Role::named(std::string name) {
  if (name.empty()) throw SyntaxError("empty role name");
  if (name == "U") return universal();
  Role r;
  r.kind_ = Kind::named;
  r.name_ = std::move(name);
  return r;
}

Role Role::inverse(std::string name) {
  if (name == "U") throw SyntaxError("the universal role cannot be inverted");
  Role r = named(std::move(name));
  r.kind_ = Kind::inverse;
  return r;
}

Role Role::universal() {
  Role r;
  r.kind_ = Kind::universal;
  r.name_ = "U";
  return r;
}

Role Role::chain(std::vector<Role> parts) {
  std::vector<Role> flat;
  for (auto& p : parts) {
    if (p.is_chain()) {
      flat.insert(flat.end(), p.parts_.begin(), p.parts_.end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) throw SyntaxError("empty role chain");
  if (flat.size() == 1) return flat.front();
  Role r;
  r.kind_ = Kind::chain;
  r.parts_ = std::move(flat);
  return r;
}

Role Role::prefix() const {
  if (!is_chain()) throw SyntaxError("prefix of a non-chain role");
  return chain(std::vector<Role>(parts_.begin(), parts_.end() - 1));
}

const Role& Role::last() const {
  if (!is_chain()) throw SyntaxError("last element of a non-chain role");
  return parts_.back();
}

std::string Role::text() const {
  switch (kind_) {
    case Kind::named:
    case Kind::universal:
      return name_;
    case Kind::inverse:
      return "inv " + name_;
    case Kind::chain: {
      std::string out;
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ';';
        out += parts_[i].text();
      }
      return out;
    }
  }
  return {};
}

bool Role::operator==(const Role& other) const {
  return kind_ == other.kind_ && name_ == other.name_ && parts_ == other.parts_;
}

std::strong_ordering Role::operator<=>(const Role& other) const {
  return text() <=> other.text();
}

// ------------------------------------------------------------------- Concept

struct Concept::Node {
  Kind kind;
  std::string name;
  std::vector<Concept> children;
  std::optional<Role> role;
  Individual individual;
  unsigned bound = 0;
  std::string text;
};

namespace {

std::string concept_text(Concept::Kind kind, const std::string& name,
                         const std::vector<Concept>& children, const std::optional<Role>& role,
                         const Individual& ind, unsigned bound) {
  using K = Concept::Kind;
  switch (kind) {
    case K::atomic:
      return name;
    case K::top:
      return "top";
    case K::bottom:
      return "bot";
    case K::negation:
      return "not " + children[0].text();
    case K::disjunction:
      return "(" + children[0].text() + " or " + children[1].text() + ")";
    case K::conjunction:
      return "(" + children[0].text() + " and " + children[1].text() + ")";
    case K::exists:
      return "some " + role->text() + " " + children[0].text();
    case K::forall:
      return "all " + role->text() + " " + children[0].text();
    case K::nominal:
      return "{" + ind.name() + "}";
    case K::at_most:
      return "atmost " + std::to_string(bound) + " " + role->text() + " " + children[0].text();
    case K::at_least:
      return "atleast " + std::to_string(bound) + " " + role->text() + " " + children[0].text();
    case K::self:
      return "self " + role->text();
  }
  return {};
}

void require_concept_role(const Role& r) {
  if (r.is_chain()) throw SyntaxError("role chains cannot occur inside concepts: " + r.text());
}

}  // namespace

#define DLSEQ_MAKE_CONCEPT(kind_, name_, children_, role_, ind_, bound_)                       \
  do {                                                                                       \
    auto n = std::make_shared<Node>();                                                       \
    n->kind = kind_;                                                                         \
    n->name = name_;                                                                         \
    n->children = children_;                                                                 \
    n->role = role_;                                                                         \
    n->individual = ind_;                                                                    \
    n->bound = bound_;                                                                       \
    n->text = concept_text(n->kind, n->name, n->children, n->role, n->individual, n->bound); \
    return Concept(std::move(n));                                                            \
  } while (0)

Concept Concept::atomic(std::string name) {
  if (name.empty()) throw SyntaxError("empty concept name");
  DLSEQ_MAKE_CONCEPT(Kind::atomic, name, {}, std::nullopt, Individual{}, 0);
}
Concept Concept::top() { DLSEQ_MAKE_CONCEPT(Kind::top, "", {}, std::nullopt, Individual{}, 0); }
Concept Concept::bottom() {
  DLSEQ_MAKE_CONCEPT(Kind::bottom, "", {}, std::nullopt, Individual{}, 0);
}
Concept Concept::negation(Concept operand) {
  DLSEQ_MAKE_CONCEPT(Kind::negation, "", {operand}, std::nullopt, Individual{}, 0);
}
Concept Concept::disjunction(Concept lhs, Concept rhs) {
  DLSEQ_MAKE_CONCEPT(Kind::disjunction, "", (std::vector<Concept>{lhs, rhs}), std::nullopt,
                     Individual{}, 0);
}
Concept Concept::conjunction(Concept lhs, Concept rhs) {
  DLSEQ_MAKE_CONCEPT(Kind::conjunction, "", (std::vector<Concept>{lhs, rhs}), std::nullopt,
                     Individual{}, 0);
}
Concept Concept::exists(Role role, Concept filler) {
  require_concept_role(role);
  DLSEQ_MAKE_CONCEPT(Kind::exists, "", {filler}, role, Individual{}, 0);
}
Concept Concept::forall(Role role, Concept filler) {
  require_concept_role(role);
  DLSEQ_MAKE_CONCEPT(Kind::forall, "", {filler}, role, Individual{}, 0);
}
Concept Concept::nominal(Individual individual) {
  DLSEQ_MAKE_CONCEPT(Kind::nominal, "", {}, std::nullopt, individual, 0);
}
Concept Concept::at_most(unsigned bound, Role role, Concept filler) {
  require_concept_role(role);
  DLSEQ_MAKE_CONCEPT(Kind::at_most, "", {filler}, role, Individual{}, bound);
}
Concept Concept::at_least(unsigned bound, Role role, Concept filler) {
  require_concept_role(role);
  DLSEQ_MAKE_CONCEPT(Kind::at_least, "", {filler}, role, Individual{}, bound);
}
Concept Concept::self(Role role) {
  require_concept_role(role);
  DLSEQ_MAKE_CONCEPT(Kind::self, "", {}, role, Individual{}, 0);
}

#undef DLSEQ_MAKE_CONCEPT

Concept::Kind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const Concept& Concept::first() const {
  if (node_->children.empty()) throw SyntaxError("concept has no operand: " + text());
  return node_->children[0];
}
const Concept& Concept::second() const {
  if (node_->children.size() < 2) throw SyntaxError("concept has no second operand: " + text());
  return node_->children[1];
}
const Role& Concept::role() const {
  if (!node_->role) throw SyntaxError("concept has no role: " + text());
  return *node_->role;
}
const Individual& Concept::individual() const { return node_->individual; }
unsigned Concept::bound() const { return node_->bound; }
bool Concept::is_unqualified() const {
  return (kind() == Kind::at_most || kind() == Kind::at_least) && first().kind() == Kind::top;
}
const std::string& Concept::text() const { return node_->text; }

// ------------------------------------------------------------------- Formula

struct Formula::Node {
  Kind kind;
  Individual a, b;
  std::optional<Concept> c, d;
  std::optional<Role> role;
  std::vector<Role> chain;
  std::string name;
  std::vector<std::string> args;
  std::string text;
};

namespace {

std::string formula_text(const Formula::Kind kind, const Individual& a, const Individual& b,
                         const std::optional<Concept>& c, const std::optional<Concept>& d,
                         const std::optional<Role>& role, const std::vector<Role>& chain,
                         const std::string& name, const std::vector<std::string>& args) {
  using K = Formula::Kind;
  switch (kind) {
    case K::concept_assertion:
      return a.name() + ":" + c->text();
    case K::gci:
      return c->text() + " sub " + d->text();
    case K::role_assertion:
      return role->text() + "(" + a.name() + "," + b.name() + ")";
    case K::negated_role:
      return "not " + role->text() + "(" + a.name() + "," + b.name() + ")";
    case K::cria:
      return Role::chain(chain).text() + " sub " + name;
    case K::rra: {
      std::string out = is_builtin_sugar(name) ? name : "Rel[" + name + "]";
      out += "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ",";
        out += args[i];
      }
      return out + ")";
    }
    case K::equality:
      return a.name() + " = " + b.name();
    case K::inequality:
      return a.name() + " != " + b.name();
  }
  return {};
}

std::shared_ptr<Formula::Node> finish(std::shared_ptr<Formula::Node> n) {
  n->text = formula_text(n->kind, n->a, n->b, n->c, n->d, n->role, n->chain, n->name, n->args);
  return n;
}

void require_individual(const Individual& a) {
  if (a.name().empty()) throw SyntaxError("empty individual name");
}

}  // namespace

Formula Formula::assertion(Individual a, Concept c) {
  require_individual(a);
  auto n = std::make_shared<Node>();
  n->kind = Kind::concept_assertion;
  n->a = std::move(a);
  n->c = std::move(c);
  return Formula(finish(std::move(n)));
}

Formula Formula::gci(Concept lhs, Concept rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::gci;
  n->c = std::move(lhs);
  n->d = std::move(rhs);
  return Formula(finish(std::move(n)));
}

Formula Formula::role_assertion(Role role, Individual a, Individual b) {
  require_individual(a);
  require_individual(b);
  auto n = std::make_shared<Node>();
  n->kind = Kind::role_assertion;
  n->role = std::move(role);
  n->a = std::move(a);
  n->b = std::move(b);
  return Formula(finish(std::move(n)));
}

Formula Formula::negated_role(std::string role, Individual a, Individual b) {
  require_individual(a);
  require_individual(b);
  auto n = std::make_shared<Node>();
  n->kind = Kind::negated_role;
  n->role = Role::named(std::move(role));
  if (n->role->kind() != Role::Kind::named)
    throw SyntaxError("negated role assertions take a named role");
  n->a = std::move(a);
  n->b = std::move(b);
  return Formula(finish(std::move(n)));
}

Formula Formula::cria(std::vector<Role> chain, std::string target) {
  if (chain.empty()) throw SyntaxError("role inclusion with an empty chain");
  std::vector<Role> flat = Role::chain(chain).is_chain() ? Role::chain(chain).parts()
                                                          : std::vector<Role>{Role::chain(chain)};
  for (const auto& r : flat) {
    if (r.kind() == Role::Kind::universal)
      throw SyntaxError("the universal role cannot occur in a role inclusion");
  }
  Role t = Role::named(target);
  if (t.kind() != Role::Kind::named) throw SyntaxError("role inclusion target must be named");
  auto n = std::make_shared<Node>();
  n->kind = Kind::cria;
  n->chain = std::move(flat);
  n->name = std::move(target);
  return Formula(finish(std::move(n)));
}

Formula Formula::rra(std::string relation, std::vector<std::string> roles) {
  if (relation.empty()) throw SyntaxError("empty relation name");
  for (const auto& r : roles) {
    if (Role::named(r).kind() != Role::Kind::named)
      throw SyntaxError("relation arguments must be named roles");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::rra;
  n->name = std::move(relation);
  n->args = std::move(roles);
  return Formula(finish(std::move(n)));
}

Formula Formula::equality(Individual a, Individual b) {
  require_individual(a);
  require_individual(b);
  auto n = std::make_shared<Node>();
  n->kind = Kind::equality;
  n->a = std::move(a);
  n->b = std::move(b);
  return Formula(finish(std::move(n)));
}

Formula Formula::inequality(Individual a, Individual b) {
  require_individual(a);
  require_individual(b);
  auto n = std::make_shared<Node>();
  n->kind = Kind::inequality;
  n->a = std::move(a);
  n->b = std::move(b);
  return Formula(finish(std::move(n)));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Individual& Formula::first() const { return node_->a; }
const Individual& Formula::second() const { return node_->b; }
const Concept& Formula::concept_of() const {
  if (!node_->c) throw SyntaxError("formula has no concept: " + text());
  return *node_->c;
}
const Concept& Formula::rhs() const {
  if (!node_->d) throw SyntaxError("formula has no right-hand concept: " + text());
  return *node_->d;
}
const Role& Formula::role() const {
  if (!node_->role) throw SyntaxError("formula has no role: " + text());
  return *node_->role;
}
const std::vector<Role>& Formula::chain() const { return node_->chain; }
const std::string& Formula::name() const { return node_->name; }
const std::vector<std::string>& Formula::arguments() const { return node_->args; }
const std::string& Formula::text() const { return node_->text; }

// ------------------------------------------------------------------- Sequent

void Sequent::add(Side side, const Formula& f) {
  if (side == Side::left) {
    (f.is_internal() ? if_ante_ : ef_ante_).push_back(f);
  } else {
    (f.is_internal() ? if_cons_ : ef_cons_).push_back(f);
  }
}

void Sequent::add_all(Side side, const std::vector<Formula>& fs) {
  for (const auto& f : fs) add(side, f);
}

bool Sequent::remove(Side side, const Formula& f) {
  auto& zone = side == Side::left ? (f.is_internal() ? if_ante_ : ef_ante_)
                                  : (f.is_internal() ? if_cons_ : ef_cons_);
  auto it = std::find(zone.begin(), zone.end(), f);
  if (it == zone.end()) return false;
  zone.erase(it);
  return true;
}

std::size_t Sequent::count(Side side, const Formula& f) const {
  const auto& zone = side == Side::left ? (f.is_internal() ? if_ante_ : ef_ante_)
                                        : (f.is_internal() ? if_cons_ : ef_cons_);
  return static_cast<std::size_t>(std::count(zone.begin(), zone.end(), f));
}

std::vector<Formula> Sequent::side(Side side) const {
  std::vector<Formula> out;
  if (side == Side::left) {
    out = ef_ante_;
    out.insert(out.end(), if_ante_.begin(), if_ante_.end());
  } else {
    out = ef_cons_;
    out.insert(out.end(), if_cons_.begin(), if_cons_.end());
  }
  return out;
}

std::size_t Sequent::size() const {
  return ef_ante_.size() + if_ante_.size() + if_cons_.size() + ef_cons_.size();
}

namespace {

bool same_multiset(std::vector<Formula> a, std::vector<Formula> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string join(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::string out;
  bool first = true;
  for (const auto* zone : {&a, &b}) {
    for (const auto& f : *zone) {
      if (!first) out += ", ";
      out += f.text();
      first = false;
    }
  }
  return out;
}

}  // namespace

bool Sequent::operator==(const Sequent& other) const {
  return same_multiset(ef_ante_, other.ef_ante_) && same_multiset(if_ante_, other.if_ante_) &&
         same_multiset(if_cons_, other.if_cons_) && same_multiset(ef_cons_, other.ef_cons_);
}

std::string Sequent::text() const {
  std::string lhs = join(ef_ante_, if_ante_);
  std::string rhs = join(if_cons_, ef_cons_);
  std::string out;
  if (!lhs.empty()) out = lhs + " ";
  out += "|-";
  if (!rhs.empty()) out += " " + rhs;
  return out;
}

// -------------------------------------------------------------- substitution

namespace {

Individual rename(const Individual& x, const Individual& from, const Individual& to) {
  return x == from ? to : x;
}

}  // namespace

Role substitute(const Role& r, const Individual&, const Individual&) { return r; }

Concept substitute(const Concept& c, const Individual& from, const Individual& to) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::atomic:
    case K::top:
    case K::bottom:
    case K::self:
      return c;
    case K::negation:
      return Concept::negation(substitute(c.first(), from, to));
    case K::disjunction:
      return Concept::disjunction(substitute(c.first(), from, to),
                                  substitute(c.second(), from, to));
    case K::conjunction:
      return Concept::conjunction(substitute(c.first(), from, to),
                                  substitute(c.second(), from, to));
    case K::exists:
      return Concept::exists(c.role(), substitute(c.first(), from, to));
    case K::forall:
      return Concept::forall(c.role(), substitute(c.first(), from, to));
    case K::nominal:
      return c.individual() == from ? Concept::nominal(to) : c;
    case K::at_most:
      return Concept::at_most(c.bound(), c.role(), substitute(c.first(), from, to));
    case K::at_least:
      return Concept::at_least(c.bound(), c.role(), substitute(c.first(), from, to));
  }
  return c;
}

Formula substitute(const Formula& f, const Individual& from, const Individual& to) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::concept_assertion:
      return Formula::assertion(rename(f.first(), from, to), substitute(f.concept_of(), from, to));
    case K::gci:
      return Formula::gci(substitute(f.concept_of(), from, to), substitute(f.rhs(), from, to));
    case K::role_assertion:
      return Formula::role_assertion(f.role(), rename(f.first(), from, to),
                                     rename(f.second(), from, to));
    case K::negated_role:
      return Formula::negated_role(f.role().name(), rename(f.first(), from, to),
                                   rename(f.second(), from, to));
    case K::cria:
    case K::rra:
      return f;
    case K::equality:
      return Formula::equality(rename(f.first(), from, to), rename(f.second(), from, to));
    case K::inequality:
      return Formula::inequality(rename(f.first(), from, to), rename(f.second(), from, to));
  }
  return f;
}

std::vector<Formula> substitute(const std::vector<Formula>& fs, const Individual& from,
                                const Individual& to) {
  std::vector<Formula> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(substitute(f, from, to));
  return out;
}

Sequent substitute(const Sequent& s, const Individual& from, const Individual& to) {
  Sequent out;
  for (const auto& f : s.side(Side::left)) out.add(Side::left, substitute(f, from, to));
  for (const auto& f : s.side(Side::right)) out.add(Side::right, substitute(f, from, to));
  return out;
}

// ------------------------------------------------------------ free individuals

namespace {

void collect(const Concept& c, std::set<Individual>& out) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::nominal:
      out.insert(c.individual());
      break;
    case K::negation:
    case K::exists:
    case K::forall:
    case K::at_most:
    case K::at_least:
      collect(c.first(), out);
      break;
    case K::disjunction:
    case K::conjunction:
      collect(c.first(), out);
      collect(c.second(), out);
      break;
    default:
      break;
  }
}

void collect(const Formula& f, std::set<Individual>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::concept_assertion:
      out.insert(f.first());
      collect(f.concept_of(), out);
      break;
    case K::gci:
      collect(f.concept_of(), out);
      collect(f.rhs(), out);
      break;
    case K::role_assertion:
    case K::negated_role:
    case K::equality:
    case K::inequality:
      out.insert(f.first());
      out.insert(f.second());
      break;
    case K::cria:
    case K::rra:
      break;
  }
}

void collect_roles(const Role& r, std::set<std::string>& roles) {
  if (r.is_chain()) {
    for (const auto& p : r.parts()) collect_roles(p, roles);
  } else if (r.kind() != Role::Kind::universal) {
    roles.insert(r.name());
  }
}

void collect_vocab(const Concept& c, std::set<std::string>& concepts,
                   std::set<std::string>& roles) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::atomic:
      concepts.insert(c.name());
      break;
    case K::negation:
      collect_vocab(c.first(), concepts, roles);
      break;
    case K::disjunction:
    case K::conjunction:
      collect_vocab(c.first(), concepts, roles);
      collect_vocab(c.second(), concepts, roles);
      break;
    case K::exists:
    case K::forall:
    case K::at_most:
    case K::at_least:
      collect_roles(c.role(), roles);
      collect_vocab(c.first(), concepts, roles);
      break;
    case K::self:
      collect_roles(c.role(), roles);
      break;
    default:
      break;
  }
}

}  // namespace

std::set<Individual> free_individuals(const Concept& c) {
  std::set<Individual> out;
  collect(c, out);
  return out;
}

std::set<Individual> free_individuals(const Formula& f) {
  std::set<Individual> out;
  collect(f, out);
  return out;
}

std::set<Individual> free_individuals(const Sequent& s) {
  std::set<Individual> out;
  for (const auto* zone : {&s.ef_ante(), &s.if_ante(), &s.if_cons(), &s.ef_cons()})
    for (const auto& f : *zone) collect(f, out);
  return out;
}

std::uint32_t next_eigen_index(const Sequent& s) {
  std::uint32_t next = 1;
  for (const auto& i : free_individuals(s))
    if (i.is_eigen()) next = std::max(next, i.eigen_index() + 1);
  return next;
}

void collect_vocabulary(const Formula& f, std::set<std::string>& concepts,
                        std::set<std::string>& roles) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::concept_assertion:
      collect_vocab(f.concept_of(), concepts, roles);
      break;
    case K::gci:
      collect_vocab(f.concept_of(), concepts, roles);
      collect_vocab(f.rhs(), concepts, roles);
      break;
    case K::role_assertion:
    case K::negated_role:
      collect_roles(f.role(), roles);
      break;
    case K::cria:
      for (const auto& r : f.chain()) collect_roles(r, roles);
      roles.insert(f.name());
      break;
    case K::rra:
      for (const auto& r : f.arguments()) roles.insert(r);
      break;
    default:
      break;
  }
}

std::string to_string(Side side) { return side == Side::left ? "left" : "right"; }

}  // namespace dlseq
