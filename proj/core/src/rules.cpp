#include <algorithm>

#include "dlseq/calculus.hpp"

namespace dlseq {

std::string value_text(const BindingValue& v) {
  struct Visitor {
    std::string operator()(const Individual& x) const { return x.name(); }
    std::string operator()(const Concept& x) const { return x.text(); }
    std::string operator()(const Role& x) const { return x.text(); }
    std::string operator()(const Formula& x) const { return x.text(); }
    std::string operator()(unsigned x) const { return std::to_string(x); }
    std::string operator()(const std::vector<Individual>& xs) const {
      std::string out = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].name();
      return out + "]";
    }
  };
  return std::visit(Visitor{}, v);
}

std::string binding_key(const Binding& b) {
  std::string out;
  for (const auto& [k, v] : b) {
    if (!out.empty()) out += "; ";
    out += k + "=" + value_text(v);
  }
  return out;
}

Sequent RuleInstance::premise(const Sequent& conclusion, std::size_t i) const {
  Sequent s = conclusion;
  for (const auto& f : removed.left) s.remove(Side::left, f);
  for (const auto& f : removed.right) s.remove(Side::right, f);
  s.add_all(Side::left, added.at(i).left);
  s.add_all(Side::right, added.at(i).right);
  return s;
}

std::vector<Sequent> RuleInstance::premises(const Sequent& conclusion) const {
  std::vector<Sequent> out;
  for (std::size_t i = 0; i < added.size(); ++i) out.push_back(premise(conclusion, i));
  return out;
}

namespace {

bool contains_multiset(const std::vector<Formula>& zone_a, const std::vector<Formula>& zone_b,
                       const std::vector<Formula>& wanted) {
  std::map<Formula, int> need;
  for (const auto& f : wanted) ++need[f];
  for (const auto* zone : {&zone_a, &zone_b})
    for (const auto& f : *zone) {
      auto it = need.find(f);
      if (it != need.end()) --it->second;
    }
  return std::all_of(need.begin(), need.end(), [](const auto& kv) { return kv.second <= 0; });
}

}  // namespace

bool RuleInstance::fits(const Sequent& c) const {
  return contains_multiset(c.ef_ante(), c.if_ante(), required.left) &&
         contains_multiset(c.ef_cons(), c.if_cons(), required.right);
}

BranchView::BranchView(const Sequent& s) : top(s) {
  for (const auto& f : s.side(Side::left)) {
    left.insert(f);
    if (f.kind() == Formula::Kind::role_assertion) left_roles.push_back(f);
    if (f.kind() == Formula::Kind::equality) left_equalities.push_back(f);
  }
  for (const auto& f : s.side(Side::right)) right.insert(f);
  auto inds = free_individuals(s);
  individuals.assign(inds.begin(), inds.end());
  std::sort(left_roles.begin(), left_roles.end());
  left_roles.erase(std::unique(left_roles.begin(), left_roles.end()), left_roles.end());
  std::sort(left_equalities.begin(), left_equalities.end());
  left_equalities.erase(std::unique(left_equalities.begin(), left_equalities.end()),
                        left_equalities.end());
}

void RuleSchema::bind_eigens(Binding& b, std::uint32_t& next) const {
  for (const auto& p : eigen_params) {
    if (eigen_width) {
      std::vector<Individual> xs;
      for (std::size_t i = 0, n = eigen_width(b, p); i < n; ++i)
        xs.push_back(Individual::eigen(next++));
      b[p] = xs;
    } else {
      b[p] = Individual::eigen(next++);
    }
  }
}

Calculus::Calculus(LanguageProfile profile, DefinitionRegistry defs,
                   std::vector<SchemaPtr> schemas)
    : profile_(std::move(profile)), defs_(std::move(defs)), schemas_(std::move(schemas)) {
  for (std::size_t i = 0; i < schemas_.size(); ++i) {
    if (!index_.emplace(schemas_[i]->name, i).second)
      throw RuleError("duplicate schema name " + schemas_[i]->name);
  }
}

const RuleSchema* Calculus::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : schemas_[it->second].get();
}

std::vector<std::string> Calculus::names() const {
  std::vector<std::string> out;
  for (const auto& s : schemas_) out.push_back(s->name);
  return out;
}

Calculus Calculus::reordered(const std::vector<std::string>& order) const {
  std::vector<SchemaPtr> out;
  std::set<std::string> seen;
  for (const auto& n : order) {
    auto it = index_.find(n);
    if (it == index_.end()) throw RuleError("unknown schema in order: " + n);
    if (seen.insert(n).second) out.push_back(schemas_[it->second]);
  }
  for (const auto& s : schemas_)
    if (!seen.count(s->name)) out.push_back(s);
  return Calculus(profile_, defs_, std::move(out));
}

BranchState::BranchState(Sequent root) : top(std::move(root)) {
  for (const auto& f : top.side(Side::left)) theta.insert(f);
  for (const auto& f : top.side(Side::right)) omega.insert(f);
  next_eigen = next_eigen_index(top);
}

void BranchState::advance(Sequent premise) {
  top = std::move(premise);
  for (const auto& f : top.side(Side::left)) theta.insert(f);
  for (const auto& f : top.side(Side::right)) omega.insert(f);
  next_eigen = std::max(next_eigen, next_eigen_index(top));
}

}  // namespace dlseq
