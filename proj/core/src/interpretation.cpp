#include "dlseq/interpretation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dlseq/prover.hpp"
#include "json.hpp"

namespace dlseq {

std::vector<Element> Interpretation::domain() const {
  std::vector<Element> out(domain_size);
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

Element Interpretation::element(const Individual& a) const {
  auto it = individuals.find(a);
  if (it == individuals.end()) throw EvaluationError("individual " + a.name() + " is not mapped");
  return it->second;
}

std::set<Pair> Interpretation::extension(const Role& r) const {
  std::set<Pair> out;
  switch (r.kind()) {
    case Role::Kind::named: {
      auto it = roles.find(r.name());
      if (it != roles.end()) out = it->second;
      break;
    }
    case Role::Kind::inverse: {
      auto it = roles.find(r.name());
      if (it != roles.end())
        for (const auto& [x, y] : it->second) out.insert({y, x});
      break;
    }
    case Role::Kind::universal:
      for (Element x = 0; x < domain_size; ++x)
        for (Element y = 0; y < domain_size; ++y) out.insert({x, y});
      break;
    case Role::Kind::chain: {
      out = extension(r.parts().front());
      for (std::size_t i = 1; i < r.parts().size(); ++i) {
        auto step = extension(r.parts()[i]);
        std::set<Pair> next;
        for (const auto& [x, y] : out)
          for (const auto& [y2, z] : step)
            if (y == y2) next.insert({x, z});
        out = std::move(next);
      }
      break;
    }
  }
  return out;
}

bool Interpretation::holds(const Role& r, Element x, Element y) const {
  return extension(r).count({x, y}) > 0;
}

namespace {

std::size_t count_successors(const std::set<Pair>& r, Element x, const std::set<Element>& filler) {
  std::size_t n = 0;
  for (const auto& [a, b] : r)
    if (a == x && filler.count(b)) ++n;
  return n;
}

}  // namespace

std::set<Element> Interpretation::extension(const Concept& c) const {
  using K = Concept::Kind;
  std::set<Element> out;
  auto all = [&] {
    for (Element x = 0; x < domain_size; ++x) out.insert(x);
  };
  switch (c.kind()) {
    case K::atomic: {
      auto it = concepts.find(c.name());
      if (it != concepts.end()) out = it->second;
      break;
    }
    case K::top:
      all();
      break;
    case K::bottom:
      break;
    case K::negation: {
      auto inner = extension(c.first());
      for (Element x = 0; x < domain_size; ++x)
        if (!inner.count(x)) out.insert(x);
      break;
    }
    case K::disjunction:
    case K::conjunction: {
      auto l = extension(c.first());
      auto r = extension(c.second());
      for (Element x = 0; x < domain_size; ++x) {
        bool in = c.kind() == K::disjunction ? (l.count(x) || r.count(x)) : (l.count(x) && r.count(x));
        if (in) out.insert(x);
      }
      break;
    }
    case K::exists:
    case K::forall: {
      auto r = extension(c.role());
      auto p = extension(c.first());
      for (Element x = 0; x < domain_size; ++x) {
        bool some = false, every = true;
        for (Element y = 0; y < domain_size; ++y) {
          if (!r.count({x, y})) continue;
          if (p.count(y))
            some = true;
          else
            every = false;
        }
        if (c.kind() == K::exists ? some : every) out.insert(x);
      }
      break;
    }
    case K::nominal:
      out.insert(element(c.individual()));
      break;
    case K::at_most:
    case K::at_least: {
      auto r = extension(c.role());
      auto p = extension(c.first());
      for (Element x = 0; x < domain_size; ++x) {
        auto n = count_successors(r, x, p);
        if (c.kind() == K::at_most ? n <= c.bound() : n >= c.bound()) out.insert(x);
      }
      break;
    }
    case K::self: {
      auto r = extension(c.role());
      for (Element x = 0; x < domain_size; ++x)
        if (r.count({x, x})) out.insert(x);
      break;
    }
  }
  return out;
}

std::string Interpretation::json(int indent) const {
  nlohmann::json j;
  j["domain"] = domain();
  j["concepts"] = nlohmann::json::object();
  for (const auto& [name, ext] : concepts) j["concepts"][name] = std::vector<Element>(ext.begin(), ext.end());
  j["roles"] = nlohmann::json::object();
  for (const auto& [name, ext] : roles) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [x, y] : ext) pairs.push_back({x, y});
    j["roles"][name] = pairs;
  }
  j["individuals"] = nlohmann::json::object();
  for (const auto& [a, x] : individuals) j["individuals"][a.name()] = x;
  return j.dump(indent);
}

namespace {

std::string pair_text(Element x, Element y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

SatisfactionReport report(const Formula& f, bool holds, std::optional<std::string> w = {}) {
  return SatisfactionReport{f, holds, std::move(w)};
}

const DescriptiveDefinition* builtin(const std::string& name) {
  for (const auto& d : builtin_definitions())
    if (d.name == name) return &d;
  return nullptr;
}

std::set<Pair> named_ext(const Interpretation& i, const std::string& r) {
  return i.extension(Role::named(r));
}

SatisfactionReport builtin_property(const Interpretation& i, const Formula& f) {
  const std::string& name = f.name();
  const auto& args = f.arguments();
  auto r = named_ext(i, args.at(0));
  if (name == "Trans") {
    for (const auto& [x, y] : r)
      for (const auto& [y2, z] : r)
        if (y == y2 && !r.count({x, z})) return report(f, false, pair_text(x, z));
    return report(f, true);
  }
  if (name == "Refl") {
    for (Element x = 0; x < i.domain_size; ++x)
      if (!r.count({x, x})) return report(f, false, std::to_string(x));
    return report(f, true);
  }
  if (name == "Irr") {
    for (Element x = 0; x < i.domain_size; ++x)
      if (r.count({x, x})) return report(f, false, std::to_string(x));
    return report(f, true);
  }
  if (name == "Asy") {
    for (const auto& [x, y] : r)
      if (r.count({y, x})) return report(f, false, pair_text(x, y));
    return report(f, true);
  }
  if (name == "Disj") {
    auto s = named_ext(i, args.at(1));
    for (const auto& p : r)
      if (s.count(p)) return report(f, false, pair_text(p.first, p.second));
    return report(f, true);
  }
  if (name == "Funct") {
    for (const auto& [x, y] : r)
      for (const auto& [x2, z] : r)
        if (x == x2 && y != z) return report(f, false, pair_text(y, z));
    return report(f, true);
  }
  throw EvaluationError("no built-in property " + name);
}

bool atom_holds(const Interpretation& i, const DefinitionAtom& a,
                const std::map<std::string, std::string>& roles,
                const std::map<std::string, Element>& env) {
  Element x = env.at(a.x), y = env.at(a.y);
  if (a.kind == DefinitionAtom::Kind::equality) return x == y;
  return i.holds(Role::named(roles.at(a.role)), x, y);
}

SatisfactionReport by_definition(const Interpretation& i, const Formula& f,
                                 const DescriptiveDefinition& d) {
  if (f.arguments().size() != d.roles.size())
    throw EvaluationError(f.name() + " expects " + std::to_string(d.roles.size()) + " roles");
  std::map<std::string, std::string> roles;
  for (std::size_t k = 0; k < d.roles.size(); ++k) roles[d.roles[k]] = f.arguments()[k];
  std::map<std::string, Element> env;
  std::optional<std::string> failure;
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (failure) return;
    if (k == d.vars.size()) {
      bool ante = std::all_of(d.antecedent.begin(), d.antecedent.end(),
                              [&](const auto& a) { return atom_holds(i, a, roles, env); });
      bool cons = std::any_of(d.consequent.begin(), d.consequent.end(),
                              [&](const auto& a) { return atom_holds(i, a, roles, env); });
      if (ante && !cons) {
        std::string w;
        for (const auto& v : d.vars) w += (w.empty() ? "" : ", ") + v + "=" + std::to_string(env[v]);
        failure = w;
      }
      return;
    }
    for (Element x = 0; x < i.domain_size && !failure; ++x) {
      env[d.vars[k]] = x;
      assign(k + 1);
    }
  };
  assign(0);
  return report(f, !failure, failure);
}

}  // namespace

SatisfactionReport satisfies_by_definition(const Interpretation& i, const Formula& f,
                                           const DefinitionRegistry& defs) {
  if (f.kind() != Formula::Kind::rra) throw EvaluationError(f.text() + " is not an RRA");
  if (defs.contains(f.name())) return by_definition(i, f, defs.at(f.name()));
  if (const auto* b = builtin(f.name())) return by_definition(i, f, *b);
  throw EvaluationError("no definition for " + f.name());
}

SatisfactionReport satisfies(const Interpretation& i, const Formula& f,
                             const DefinitionRegistry& defs) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::concept_assertion: {
      Element x = i.element(f.first());
      const Concept& c = f.concept_of();
      bool holds = i.extension(c).count(x) > 0;
      if (c.kind() == Concept::Kind::exists || c.kind() == Concept::Kind::forall) {
        auto r = i.extension(c.role());
        auto p = i.extension(c.first());
        for (Element y = 0; y < i.domain_size; ++y) {
          if (!r.count({x, y})) continue;
          if (c.kind() == Concept::Kind::exists && holds && p.count(y))
            return report(f, true, std::to_string(y));
          if (c.kind() == Concept::Kind::forall && !holds && !p.count(y))
            return report(f, false, std::to_string(y));
        }
      }
      return report(f, holds);
    }
    case K::gci: {
      auto lhs = i.extension(f.concept_of());
      auto rhs = i.extension(f.rhs());
      for (Element x : lhs)
        if (!rhs.count(x)) return report(f, false, std::to_string(x));
      return report(f, true);
    }
    case K::role_assertion: {
      Element x = i.element(f.first()), y = i.element(f.second());
      bool holds = i.holds(f.role(), x, y);
      if (holds && f.role().is_chain()) {
        auto prefix = i.extension(f.role().prefix());
        for (Element z = 0; z < i.domain_size; ++z)
          if (prefix.count({x, z}) && i.holds(f.role().last(), z, y))
            return report(f, true, std::to_string(z));
      }
      return report(f, holds);
    }
    case K::negated_role:
      return report(f, !i.holds(f.role(), i.element(f.first()), i.element(f.second())));
    case K::cria: {
      auto lhs = i.extension(Role::chain(f.chain()));
      auto rhs = named_ext(i, f.name());
      for (const auto& p : lhs)
        if (!rhs.count(p)) return report(f, false, pair_text(p.first, p.second));
      return report(f, true);
    }
    case K::rra: {
      const auto* b = builtin(f.name());
      bool custom = defs.contains(f.name()) && !(b && defs.at(f.name()).text() == b->text());
      if (custom) return by_definition(i, f, defs.at(f.name()));
      if (b) return builtin_property(i, f);
      throw EvaluationError("no definition for " + f.name());
    }
    case K::equality:
      return report(f, i.element(f.first()) == i.element(f.second()));
    case K::inequality:
      return report(f, i.element(f.first()) != i.element(f.second()));
  }
  throw EvaluationError("unknown formula kind");
}

bool satisfies_sequent(const Interpretation& i, const Sequent& s, const DefinitionRegistry& defs) {
  for (const auto& f : s.side(Side::left))
    if (!satisfies(i, f, defs).holds) return true;
  for (const auto& f : s.side(Side::right))
    if (satisfies(i, f, defs).holds) return true;
  return false;
}

Interpretation extract_model(const BranchState& b) {
  std::set<Individual> inds;
  std::set<std::string> concept_names, role_names;
  auto scan = [&](const Formula& f) {
    auto xs = free_individuals(f);
    inds.insert(xs.begin(), xs.end());
    collect_vocabulary(f, concept_names, role_names);
  };
  for (const auto& f : b.theta) scan(f);
  for (const auto& f : b.omega) scan(f);
  {
    auto xs = free_individuals(b.top);
    inds.insert(xs.begin(), xs.end());
  }

  std::set<std::pair<Individual, Individual>> eq;
  for (const auto& f : b.theta)
    if (f.kind() == Formula::Kind::equality) eq.insert({f.first(), f.second()});
  if (!eq.empty()) {
    for (const auto& a : inds)
      if (!eq.count({a, a})) throw ExtractionError("not reflexive: " + a.name() + " = " + a.name() + " missing");
    for (const auto& [x, y] : eq)
      for (const auto& [x2, z] : eq)
        if (x == x2 && !eq.count({y, z}))
          throw ExtractionError("not euclidean: " + y.name() + " = " + z.name() + " missing");
  }

  Interpretation out;
  std::vector<Individual> order(inds.begin(), inds.end());
  Element next = 0;
  for (const auto& a : order) {
    if (out.individuals.count(a)) continue;
    for (const auto& c : order)
      if (c == a || eq.count({a, c})) out.individuals[c] = next;
    ++next;
  }
  out.domain_size = std::max<std::size_t>(next, 1);
  for (const auto& n : concept_names) out.concepts[n];
  for (const auto& n : role_names) out.roles[n];
  for (const auto& f : b.theta) {
    if (f.is_internal() && f.concept_of().kind() == Concept::Kind::atomic)
      out.concepts[f.concept_of().name()].insert(out.individuals.at(f.first()));
    if (f.kind() == Formula::Kind::role_assertion && f.role().kind() == Role::Kind::named)
      out.roles[f.role().name()].insert({out.individuals.at(f.first()), out.individuals.at(f.second())});
  }
  return out;
}

Interpretation extract_model(const BranchState& b, const Calculus& c) {
  if (!is_saturated(b, c)) throw ExtractionError("branch is not saturated");
  return extract_model(b);
}

}  // namespace dlseq
