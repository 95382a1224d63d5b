#include "dlseq/definitions.hpp"

#include <algorithm>
#include <set>

namespace dlseq {

std::string DefinitionAtom::text() const {
  if (kind == Kind::equality) return x + " = " + y;
  return role + "(" + x + "," + y + ")";
}

void DescriptiveDefinition::validate() const {
  if (name.empty()) throw DefinitionError("definition without a name");
  std::set<std::string> role_set(roles.begin(), roles.end());
  std::set<std::string> var_set(vars.begin(), vars.end());
  if (role_set.size() != roles.size())
    throw DefinitionError(name + ": repeated role parameter");
  if (var_set.size() != vars.size()) throw DefinitionError(name + ": repeated bound variable");
  std::set<std::string> used;
  for (const auto* atoms : {&antecedent, &consequent}) {
    for (const auto& a : *atoms) {
      if (a.kind == DefinitionAtom::Kind::role && !role_set.count(a.role))
        throw DefinitionError(name + ": atom " + a.text() + " uses an undeclared role");
      for (const auto& v : {a.x, a.y}) {
        if (!var_set.count(v))
          throw DefinitionError(name + ": atom " + a.text() + " uses an unbound variable " + v);
        used.insert(v);
      }
    }
  }
  for (const auto& v : vars) {
    if (!used.count(v)) throw DefinitionError(name + ": variable " + v + " occurs in no atom");
  }
}

std::string DescriptiveDefinition::text() const {
  std::string out = "def " + name + "(";
  for (std::size_t i = 0; i < roles.size(); ++i) out += (i ? "," : "") + roles[i];
  out += "): forall";
  for (const auto& v : vars) out += " " + v;
  out += " . ";
  if (antecedent.empty()) out += "true";
  for (std::size_t i = 0; i < antecedent.size(); ++i)
    out += (i ? " & " : "") + antecedent[i].text();
  out += " -> ";
  if (consequent.empty()) out += "false";
  for (std::size_t i = 0; i < consequent.size(); ++i)
    out += (i ? " | " : "") + consequent[i].text();
  return out;
}

std::vector<Formula> DescriptiveDefinition::instantiate(
    const std::vector<DefinitionAtom>& atoms, const std::vector<std::string>& actual_roles,
    const std::map<std::string, Individual>& assignment) const {
  if (actual_roles.size() != roles.size())
    throw DefinitionError(name + " expects " + std::to_string(roles.size()) + " roles");
  std::vector<Formula> out;
  for (const auto& a : atoms) {
    const Individual& x = assignment.at(a.x);
    const Individual& y = assignment.at(a.y);
    if (a.kind == DefinitionAtom::Kind::equality) {
      out.push_back(Formula::equality(x, y));
    } else {
      auto pos = std::find(roles.begin(), roles.end(), a.role) - roles.begin();
      out.push_back(Formula::role_assertion(Role::named(actual_roles[pos]), x, y));
    }
  }
  return out;
}

namespace {

DefinitionAtom role_atom(std::string r, std::string x, std::string y) {
  return {DefinitionAtom::Kind::role, std::move(r), std::move(x), std::move(y)};
}

DefinitionAtom eq_atom(std::string x, std::string y) {
  return {DefinitionAtom::Kind::equality, "", std::move(x), std::move(y)};
}

}  // namespace

const std::vector<DescriptiveDefinition>& builtin_definitions() {
  static const std::vector<DescriptiveDefinition> defs = {
      {"Trans", {"r"}, {"a", "b", "c"},
       {role_atom("r", "a", "b"), role_atom("r", "b", "c")}, {role_atom("r", "a", "c")}},
      {"Refl", {"r"}, {"a"}, {}, {role_atom("r", "a", "a")}},
      {"Irr", {"r"}, {"a"}, {role_atom("r", "a", "a")}, {}},
      {"Asy", {"r"}, {"a", "b"}, {role_atom("r", "a", "b"), role_atom("r", "b", "a")}, {}},
      {"Disj", {"r", "s"}, {"a", "b"}, {role_atom("r", "a", "b"), role_atom("s", "a", "b")}, {}},
      {"Funct", {"r"}, {"a", "b", "c"},
       {role_atom("r", "a", "b"), role_atom("r", "a", "c")}, {eq_atom("b", "c")}},
  };
  return defs;
}

DefinitionRegistry::DefinitionRegistry() {
  for (const auto& d : builtin_definitions()) add(d);
}

DefinitionRegistry DefinitionRegistry::empty() { return DefinitionRegistry(Empty{}); }

void DefinitionRegistry::add(DescriptiveDefinition d) {
  d.validate();
  defs_[d.name] = std::move(d);
}

const DescriptiveDefinition& DefinitionRegistry::at(const std::string& name) const {
  auto it = defs_.find(name);
  if (it == defs_.end()) throw DefinitionError("undefined relation " + name);
  return it->second;
}

std::vector<std::string> DefinitionRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [n, _] : defs_) out.push_back(n);
  return out;
}

}  // namespace dlseq
