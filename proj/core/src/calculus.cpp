#include <algorithm>
#include <functional>

#include "rule_kit.hpp"

namespace dlseq {

using namespace kit;

namespace {

constexpr const char* kRelation = "RRA";

std::map<std::string, Individual> assignment_of(const DescriptiveDefinition& d, const Binding& b) {
  std::map<std::string, Individual> out;
  for (const auto& v : d.vars) out.emplace(v, ind(b, v.c_str()));
  return out;
}

const Formula& relation_of(const Binding& b, const DescriptiveDefinition& d,
                           const std::string& base, const std::string& rule) {
  const Formula& f = form(b, kRelation);
  if (f.kind() != Formula::Kind::rra || f.name() != base)
    throw RuleError(rule + ": expected a " + base + " assertion, got " + f.text());
  if (f.arguments().size() != d.roles.size())
    throw RuleError(rule + ": " + base + " takes " + std::to_string(d.roles.size()) + " roles");
  return f;
}

/// All assignments of the definition's variables that send each antecedent
/// atom to a left atom; variables left free range over the individuals.
std::vector<std::map<std::string, Individual>> match_antecedent(const DescriptiveDefinition& d,
                                                                const Formula& rra,
                                                                const BranchView& v) {
  std::vector<std::map<std::string, Individual>> out;
  std::map<std::string, Individual> cur;
  const std::size_t cap = 4096;

  auto bind = [&](const std::string& var, const Individual& x, auto&& k) {
    auto it = cur.find(var);
    if (it != cur.end()) {
      if (it->second == x) k();
      return;
    }
    cur.emplace(var, x);
    k();
    cur.erase(var);
  };

  std::function<void(std::size_t)> free_vars;
  free_vars = [&](std::size_t i) {
    if (out.size() >= cap) return;
    if (i == d.vars.size()) {
      out.push_back(cur);
      return;
    }
    if (cur.count(d.vars[i])) return free_vars(i + 1);
    for (const auto& x : v.individuals) bind(d.vars[i], x, [&] { free_vars(i + 1); });
  };

  std::function<void(std::size_t)> atoms;
  atoms = [&](std::size_t i) {
    if (out.size() >= cap) return;
    if (i == d.antecedent.size()) return free_vars(0);
    const DefinitionAtom& a = d.antecedent[i];
    const std::vector<Formula>* pool = &v.left_equalities;
    std::optional<Role> wanted;
    if (a.kind == DefinitionAtom::Kind::role) {
      pool = &v.left_roles;
      auto pos = std::find(d.roles.begin(), d.roles.end(), a.role) - d.roles.begin();
      wanted = Role::named(rra.arguments()[pos]);
    }
    for (const auto& f : *pool) {
      if (wanted && f.role() != *wanted) continue;
      bind(a.x, f.first(), [&] { bind(a.y, f.second(), [&] { atoms(i + 1); }); });
    }
  };
  atoms(0);
  return out;
}

std::string ddr_display(const DescriptiveDefinition& d, bool left) {
  auto list = [](const std::vector<DefinitionAtom>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].text();
    return s;
  };
  std::string rel = d.name + "(..)";
  if (left) {
    std::string prem;
    for (const auto& g : d.consequent)
      prem += (prem.empty() ? "" : "    ") + std::string("G, ") + rel + ", F, " + g.text() + " |- D";
    return prem + " / G, " + rel + ", " + list(d.antecedent) + " |- D";
  }
  return "G, " + list(d.antecedent) + " |- " + list(d.consequent) + ", D / G |- " + rel +
         ", D   (variables fresh)";
}

SchemaPtr ddr_left(const std::string& name, DdrInfo info) {
  RuleSchema s;
  s.name = name;
  std::size_t k = info.definition.consequent.size();
  s.kind = k == 0 ? RuleKind::initial : k == 1 ? RuleKind::unary : k == 2 ? RuleKind::binary : RuleKind::nary;
  s.fixed_premises = k;
  s.can_close = info.definition.consequent.empty();
  s.retains_principal = true;
  s.family = "ddr";
  s.display = ddr_display(info.definition, true);
  const DescriptiveDefinition d = info.definition;
  const std::string base_name = info.base_name;
  s.ddr = std::move(info);
  s.enumerate = [d, base_name](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& f : v.left) {
      if (f.kind() != Formula::Kind::rra || f.name() != base_name ||
          f.arguments().size() != d.roles.size())
        continue;
      for (const auto& m : match_antecedent(d, f, v)) {
        Binding b{{kRelation, f}};
        for (const auto& [var, x] : m) b[var] = x;
        out.push_back(std::move(b));
      }
    }
    return out;
  };
  s.instantiate = [d, base_name, name](const Binding& b) {
    const Formula& f = relation_of(b, d, base_name, name);
    auto m = assignment_of(d, b);
    auto i = start(name, b);
    i.required.left.push_back(f);
    for (const auto& a : d.instantiate(d.antecedent, f.arguments(), m)) i.required.left.push_back(a);
    for (const auto& g : d.instantiate(d.consequent, f.arguments(), m)) i.added.push_back({{g}, {}});
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr ddr_right(const std::string& name, DdrInfo info) {
  RuleSchema s;
  s.name = name;
  s.kind = RuleKind::unary;
  s.family = "ddr";
  s.display = ddr_display(info.definition, false);
  s.eigen_params = info.definition.vars;
  const DescriptiveDefinition d = info.definition;
  const std::string base_name = info.base_name;
  s.ddr = std::move(info);
  s.enumerate = [base_name](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& f : v.right)
      if (f.kind() == Formula::Kind::rra && f.name() == base_name)
        out.push_back({{kRelation, f}});
    return out;
  };
  s.instantiate = [d, base_name, name](const Binding& b) {
    const Formula& f = relation_of(b, d, base_name, name);
    auto m = assignment_of(d, b);
    auto i = start(name, b);
    i.required.right = {f};
    i.removed.right = {f};
    i.added = {{d.instantiate(d.antecedent, f.arguments(), m),
                d.instantiate(d.consequent, f.arguments(), m)}};
    for (const auto& v : d.vars) i.eigens.push_back(m.at(v));
    return i;
  };
  return finish(std::move(s));
}

/// Every partition of `vars`, as a map from variable to the first variable
/// of its block.
void partitions(const std::vector<std::string>& vars, std::size_t i,
                std::map<std::string, std::string>& cur, std::vector<std::string>& reps,
                std::vector<std::map<std::string, std::string>>& out) {
  if (i == vars.size()) {
    out.push_back(cur);
    return;
  }
  for (std::size_t r = 0; r < reps.size(); ++r) {
    cur[vars[i]] = reps[r];
    partitions(vars, i + 1, cur, reps, out);
  }
  cur[vars[i]] = vars[i];
  reps.push_back(vars[i]);
  partitions(vars, i + 1, cur, reps, out);
  reps.pop_back();
  cur.erase(vars[i]);
}

DefinitionAtom rename(DefinitionAtom a, const std::map<std::string, std::string>& m) {
  a.x = m.at(a.x);
  a.y = m.at(a.y);
  return a;
}

}  // namespace

std::pair<SchemaPtr, SchemaPtr> compile_ddr(const DescriptiveDefinition& d) {
  try {
    d.validate();
  } catch (const DefinitionError& e) {
    throw RuleError(e.what());
  }
  DdrInfo left{d, d.name, true, {}};
  DdrInfo right{d, d.name, false, {}};
  return {ddr_left(d.name + "_l", std::move(left)), ddr_right(d.name + "_r", std::move(right))};
}

std::vector<SchemaPtr> close_under_contraction(const SchemaPtr& left) {
  if (!left || !left->ddr || !left->ddr->left)
    throw RuleError("close_under_contraction expects a compiled left definition rule");
  const DescriptiveDefinition& d = left->ddr->definition;
  std::vector<SchemaPtr> out{left};
  std::vector<std::map<std::string, std::string>> all;
  std::map<std::string, std::string> cur;
  std::vector<std::string> reps;
  partitions(d.vars, 0, cur, reps, all);
  for (const auto& m : all) {
    std::vector<DefinitionAtom> merged;
    for (const auto& a : d.antecedent) merged.push_back(rename(a, m));
    bool collides = false;
    for (std::size_t i = 0; i < merged.size() && !collides; ++i)
      for (std::size_t j = i + 1; j < merged.size(); ++j)
        if (merged[i] == merged[j] && !(d.antecedent[i] == d.antecedent[j])) collides = true;
    if (!collides) continue;

    DescriptiveDefinition v = d;
    v.vars.clear();
    for (const auto& x : d.vars)
      if (m.at(x) == x) v.vars.push_back(x);
    v.antecedent.clear();
    for (const auto& a : merged)
      if (std::find(v.antecedent.begin(), v.antecedent.end(), a) == v.antecedent.end())
        v.antecedent.push_back(a);
    v.consequent.clear();
    for (const auto& a : d.consequent) v.consequent.push_back(rename(a, m));

    std::string suffix;
    std::map<std::string, std::string> ident;
    for (const auto& x : d.vars) {
      if (m.at(x) == x) continue;
      suffix += (suffix.empty() ? "" : ",") + x + ":=" + m.at(x);
      ident[x] = m.at(x);
    }
    DdrInfo info{v, left->ddr->base_name, true, ident};
    out.push_back(ddr_left(left->name + "[" + suffix + "]", std::move(info)));
  }
  return out;
}

Calculus assemble_calculus(const LanguageProfile& profile, const DefinitionRegistry& defs) {
  LanguageProfile p = profile.normalized();
  for (const auto& name : p.ddr_names) {
    if (!defs.contains(name)) continue;
    const auto& d = defs.at(name);
    for (const auto* atoms : {&d.antecedent, &d.consequent})
      for (const auto& a : *atoms)
        if (a.kind == DefinitionAtom::Kind::equality) p.with(Feature::equality);
  }
  p = p.normalized();
  std::vector<SchemaPtr> all = alc_rules();
  for (auto& s : extension_rules(p)) all.push_back(std::move(s));
  for (const auto& name : p.ddr_names) {
    if (!defs.contains(name)) throw RuleError("no definition registered for " + name);
    auto [l, r] = compile_ddr(defs.at(name));
    for (auto& s : close_under_contraction(l)) all.push_back(std::move(s));
    all.push_back(std::move(r));
  }
  auto tier = [](const SchemaPtr& s) {
    if (s->generator) return 2;
    return s->eigen_params.empty() ? 0 : 1;
  };
  std::stable_sort(all.begin(), all.end(),
                   [&](const SchemaPtr& x, const SchemaPtr& y) { return tier(x) < tier(y); });
  return Calculus(p, defs, std::move(all));
}

namespace {

bool already_present(const SequentChange& add, const BranchView& v) {
  return std::all_of(add.left.begin(), add.left.end(), [&](const Formula& f) { return v.has_left(f); }) &&
         std::all_of(add.right.begin(), add.right.end(),
                     [&](const Formula& f) { return v.has_right(f); });
}

}  // namespace

std::vector<Application> enumerate_applications(const Calculus&, const BranchState& b,
                                                const RuleSchema& schema, std::size_t limit) {
  std::vector<Application> out;
  BranchView view(b.top);
  for (auto binding : schema.enumerate(view)) {
    if (out.size() >= limit) break;
    if (schema.satisfied && schema.satisfied(binding, view)) continue;
    std::string mark = schema.name + "|" + binding_key(binding);
    if (b.marks.count(mark)) continue;
    std::uint32_t next = b.next_eigen;
    schema.bind_eigens(binding, next);
    RuleInstance inst;
    try {
      inst = schema.instantiate(binding);
    } catch (const RuleError&) {
      continue;
    }
    if (!inst.fits(b.top)) continue;
    if (std::any_of(inst.added.begin(), inst.added.end(),
                    [&](const SequentChange& a) { return already_present(a, view); }))
      continue;
    Application app;
    app.schema = &schema;
    app.binding = std::move(binding);
    app.premises = inst.premises(b.top);
    app.instance = std::move(inst);
    app.mark = std::move(mark);
    out.push_back(std::move(app));
  }
  return out;
}

std::optional<Application> find_closing(const Calculus& c, const Sequent& top) {
  BranchView view(top);
  for (const auto& schema : c.schemas()) {
    if (!schema->can_close) continue;
    for (auto& binding : schema->enumerate(view)) {
      if (!schema->eigen_params.empty()) continue;
      RuleInstance inst;
      try {
        inst = schema->instantiate(binding);
      } catch (const RuleError&) {
        continue;
      }
      if (inst.premise_count() != 0 || !inst.fits(top)) continue;
      Application app;
      app.schema = schema.get();
      app.binding = binding;
      app.instance = std::move(inst);
      app.mark = schema->name + "|" + binding_key(binding);
      return app;
    }
  }
  return std::nullopt;
}

}  // namespace dlseq
