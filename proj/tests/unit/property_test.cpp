#include "doctest.h"
#include "dlseq/interpretation.hpp"
#include "dlseq/meta.hpp"
#include "dlseq/oracle.hpp"
#include "dlseq/parser.hpp"
#include "dlseq/prover.hpp"
#include "generators.hpp"

using namespace dlseq;

namespace {

Budget small_budget() {
  Budget b;
  b.steps = 800;
  b.branch_formulas = 200;
  b.depth = 200;
  return b;
}

struct Sample {
  std::size_t profile;
  Sequent root;
  SearchOutcome out;
};

std::vector<Sample> sample(std::size_t n, std::uint64_t seed,
                           const std::vector<LanguageProfile>& profiles, const std::vector<Calculus>& calculi) {
  std::vector<Sample> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = i % profiles.size();
    testing::Generator g(profiles[p], seed + i);
    Sequent s = g.sequent();
    out.push_back({p, s, prove(s, calculi[p], small_budget())});
  }
  return out;
}

struct Fixture {
  std::vector<LanguageProfile> profiles = testing::rotation_profiles();
  std::vector<Calculus> calculi;
  std::vector<Sample> samples;
  Fixture() {
    for (const auto& p : profiles) calculi.push_back(assemble_calculus(p));
    samples = sample(120, 424242, profiles, calculi);
  }
};

const Fixture& fixture() {
  static Fixture f;
  return f;
}

}  // namespace

TEST_CASE("printed sequents parse back to themselves") {
  for (const auto& p : testing::rotation_profiles()) {
    testing::Generator g(p, 99);
    ParseOptions o;
    o.profile = p;
    for (int i = 0; i < 20; ++i) {
      Sequent s = g.sequent();
      CAPTURE(s.text());
      CHECK(parse_sequent(s.text(), o) == s);
    }
  }
}

TEST_CASE("proved outcomes check and conclude the root") {
  const auto& fx = fixture();
  for (const auto& x : fx.samples) {
    if (x.out.verdict != Verdict::proved) continue;
    CAPTURE(x.root.text());
    CHECK(check_proof(x.out.tree, fx.calculi[x.profile]));
    CHECK(x.out.tree.conclusion == x.root);
  }
}

TEST_CASE("proved sequents have no small countermodel") {
  const auto& fx = fixture();
  for (const auto& x : fx.samples) {
    if (x.out.verdict != Verdict::proved) continue;
    CAPTURE(x.root.text());
    CHECK_FALSE(find_countermodel(x.root, 2).has_value());
  }
}

TEST_CASE("saturated branches are closed under the rules and falsify the root") {
  const auto& fx = fixture();
  for (const auto& x : fx.samples) {
    if (x.out.verdict != Verdict::saturated) continue;
    CAPTURE(x.root.text());
    const Calculus& c = fx.calculi[x.profile];
    REQUIRE(x.out.branch);
    CHECK(is_saturated(*x.out.branch, c));
    CHECK_FALSE(find_closing(c, x.out.branch->top).has_value());
    Interpretation m = extract_model(*x.out.branch, c);
    CHECK_FALSE(satisfies_sequent(m, x.root));
  }
}

TEST_CASE("structural transforms preserve checking and height") {
  const auto& fx = fixture();
  int used = 0;
  for (const auto& x : fx.samples) {
    if (x.out.verdict != Verdict::proved || used == 25) continue;
    ++used;
    const Calculus& c = fx.calculi[x.profile];
    const ProofNode& t = x.out.tree;
    CAPTURE(x.root.text());
    testing::Generator g(fx.profiles[x.profile], used);
    ProofNode w = weaken(c, t, SequentChange{{g.formula(1)}, {g.formula(1)}});
    CHECK(check_proof(w, c));
    CHECK(w.height() <= t.height());
    for (const auto& f : x.root.side(Side::right)) {
      ProofNode doubled = weaken(c, t, SequentChange{{}, {f}});
      ProofNode r = contract(c, doubled, Side::right, f);
      CHECK(check_proof(r, c));
      CHECK(r.conclusion == x.root);
      CHECK(r.height() <= doubled.height());
    }
    Individual from = g.individual(), to = g.individual();
    ProofNode s = substitute(c, t, from, to);
    CHECK(check_proof(s, c));
    CHECK(s.conclusion == substitute(x.root, from, to));
  }
  CHECK(used > 0);
}

TEST_CASE("identity derivations check for random formulae") {
  LanguageProfile p = full_profile();
  DefinitionRegistry defs;
  for (const auto& n : defs.names()) p.with_ddr(n);
  Calculus c = assemble_calculus(p, defs);
  testing::Generator g(p, 17);
  for (int i = 0; i < 60; ++i) {
    Formula f = g.any_formula(2);
    CAPTURE(f.text());
    CHECK(check_proof(derive_identity(c, f), c));
  }
}

TEST_CASE("the two countermodel finders agree on tiny inputs") {
  testing::Shape shape;
  shape.individuals = 2;
  shape.concepts = 2;
  shape.roles = 1;
  shape.depth = 1;
  testing::Generator g(LanguageProfile{}, 5, shape);
  for (int i = 0; i < 25; ++i) {
    Sequent s = g.sequent();
    CAPTURE(s.text());
    auto x = find_countermodel(s, 2), y = find_countermodel_reversed(s, 2);
    REQUIRE(x.has_value() == y.has_value());
    if (x) CHECK_FALSE(satisfies_sequent(*x, s));
  }
}
