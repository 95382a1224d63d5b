#include "generators.hpp"

namespace dlseq::testing {

Generator::Generator(LanguageProfile profile, std::uint64_t seed, Shape shape)
    : profile_(std::move(profile)), shape_(shape), rng_(seed) {}

Individual Generator::individual() {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  return Individual(names[pick(std::min<std::size_t>(shape_.individuals, 6))]);
}

Role Generator::role(bool allow_universal) {
  if (allow_universal && profile_.has(Feature::universalRole) && coin(0.15)) return Role::universal();
  if (profile_.has(Feature::inverses) && coin(0.3)) return Role::inverse(role_name());
  return Role::named(role_name());
}

Concept Generator::concept_expr(unsigned depth) {
  std::vector<int> kinds{0, 0, 0, 1, 2};
  if (depth > 0) kinds.insert(kinds.end(), {3, 4, 4, 5, 5, 6, 6, 7, 7});
  if (profile_.has(Feature::nominals)) kinds.push_back(8);
  if (depth > 0 && profile_.has(Feature::qualifiedCounting)) kinds.insert(kinds.end(), {9, 10});
  if (profile_.has(Feature::unqualifiedCounting)) kinds.insert(kinds.end(), {11, 12});
  if (profile_.has(Feature::selfConcept)) kinds.push_back(13);
  auto sub = [&] { return concept_expr(depth - 1); };
  auto bound = [&] { return static_cast<unsigned>(pick(3)); };
  switch (kinds[pick(kinds.size())]) {
    case 0: return Concept::atomic("C" + std::to_string(pick(shape_.concepts)));
    case 1: return Concept::top();
    case 2: return Concept::bottom();
    case 3: return Concept::negation(sub());
    case 4: return Concept::conjunction(sub(), sub());
    case 5: return Concept::disjunction(sub(), sub());
    case 6: return Concept::exists(role(), sub());
    case 7: return Concept::forall(role(), sub());
    case 8: return Concept::nominal(individual());
    case 9: return Concept::at_most(bound(), role(false), sub());
    case 10: return Concept::at_least(bound(), role(false), sub());
    case 11: return Concept::at_most(bound(), role(false), Concept::top());
    case 12: return Concept::at_least(bound(), role(false), Concept::top());
    default: return Concept::self(role(false));
  }
}

Formula Generator::formula(unsigned depth) {
  std::vector<int> kinds{0, 0, 0, 0, 1, 2};
  if (profile_.has(Feature::equality)) kinds.push_back(3);
  if (profile_.has(Feature::inequality)) kinds.push_back(4);
  if (profile_.has(Feature::negatedRoles)) kinds.push_back(5);
  switch (kinds[pick(kinds.size())]) {
    case 0: return Formula::assertion(individual(), concept_expr(depth));
    case 1: return Formula::gci(concept_expr(depth), concept_expr(depth));
    case 2: {
      Role r = role();
      if (profile_.has(Feature::compose) && coin(0.25)) r = Role::chain({Role::named(role_name()), role(false)});
      return Formula::role_assertion(r, individual(), individual());
    }
    case 3: return Formula::equality(individual(), individual());
    case 4: return Formula::inequality(individual(), individual());
    default: return Formula::negated_role(role_name(), individual(), individual());
  }
}

Formula Generator::any_formula(unsigned depth) {
  bool ria = profile_.has(Feature::rias) || profile_.has(Feature::crias);
  if (ria && coin(0.1)) {
    std::vector<Role> chain{Role::named(role_name())};
    if (profile_.has(Feature::crias) && coin()) chain.push_back(Role::named(role_name()));
    return Formula::cria(chain, role_name());
  }
  if (!profile_.ddr_names.empty() && coin(0.1)) {
    std::vector<std::string> names(profile_.ddr_names.begin(), profile_.ddr_names.end());
    std::string n = names[pick(names.size())];
    std::vector<std::string> roles{role_name()};
    if (n == "Disj") roles.push_back(role_name());
    return Formula::rra(n, roles);
  }
  return formula(depth);
}

Sequent Generator::sequent() {
  Sequent s;
  std::size_t left = pick(shape_.max_left + 1), right = pick(shape_.max_right + 1);
  if (left + right == 0) right = 1;
  for (std::size_t i = 0; i < left; ++i) s.add(Side::left, any_formula(shape_.depth));
  for (std::size_t i = 0; i < right; ++i) s.add(Side::right, any_formula(shape_.depth));
  return s;
}

std::vector<LanguageProfile> rotation_profiles() {
  auto p = [](std::initializer_list<Feature> fs, std::initializer_list<const char*> ddrs = {}) {
    LanguageProfile out;
    out.with(Feature::gciSplit);
    for (Feature f : fs) out.with(f);
    for (const char* d : ddrs) out.with_ddr(d);
    return out.normalized();
  };
  return {
      p({}),
      p({Feature::inverses}),
      p({Feature::nominals}),
      p({Feature::qualifiedCounting}),
      p({Feature::unqualifiedCounting}),
      p({Feature::compose, Feature::crias}),
      p({Feature::equality, Feature::inequality, Feature::negatedRoles}),
      p({Feature::universalRole, Feature::selfConcept}),
      p({Feature::rias}, {"Trans", "Asy", "Irr", "Refl", "Disj", "Funct"}),
      p({Feature::inverses, Feature::nominals, Feature::qualifiedCounting}),
  };
}

}  // namespace dlseq::testing
