#include <set>

#include "doctest.h"
#include "dlseq/parser.hpp"
#include "dlseq/proof.hpp"

using namespace dlseq;

namespace {
Formula f(const std::string& t) { return parse_sequent("|- " + t).side(Side::right).at(0); }
}  // namespace

TEST_CASE("the base profile assembles exactly the eighteen rules") {
  Calculus c = assemble_calculus(LanguageProfile{});
  auto names = c.names();
  std::set<std::string> got(names.begin(), names.end());
  CHECK(got == std::set<std::string>{"id_C", "id_R", "bot_l", "bot_r", "top_l", "top_r", "not_l", "not_r", "or_l",
                                     "or_r", "and_l", "and_r", "sub_l", "sub_r", "some_l", "some_r", "all_l",
                                     "all_r"});
}

TEST_CASE("cyclic order puts eigen rules and generators last") {
  Calculus c = assemble_calculus(full_profile());
  int tier = 0;
  for (const auto& s : c.schemas()) {
    int t = s->generator ? 2 : s->eigen_params.empty() ? 0 : 1;
    CHECK(t >= tier);
    tier = t;
  }
  std::set<std::string> unique;
  for (const auto& n : c.names()) CHECK(unique.insert(n).second);
}

TEST_CASE("profile flags contribute their rule families") {
  LanguageProfile p;
  p.with(Feature::nominals);
  Calculus c = assemble_calculus(p);
  CHECK(c.contains("nom_l1"));
  CHECK(c.contains("eq_r"));
  CHECK_FALSE(c.contains("inv_l"));
  CHECK_THROWS_AS(assemble_calculus(LanguageProfile{}.with_ddr("Nope")), RuleError);
}

TEST_CASE("instances report required, removed and added formulae") {
  Calculus c = assemble_calculus(LanguageProfile{});
  const RuleSchema* s = c.find("or_l");
  REQUIRE(s);
  RuleInstance inst = s->instantiate({{"a", Individual("a")}, {"P", parse_concept("C")}, {"Q", parse_concept("D")}});
  CHECK(inst.premise_count() == 2);
  CHECK(inst.removed.left == std::vector<Formula>{f("a:(C or D)")});
  CHECK_FALSE(inst.fits(parse_sequent("a:C |-")));
  CHECK(inst.fits(parse_sequent("a:(C or D) |-")));
  CHECK_THROWS_AS(s->instantiate({{"a", Individual("a")}}), RuleError);
}

TEST_CASE("expand rejects bindings whose principal is absent") {
  Calculus c = assemble_calculus(LanguageProfile{});
  CHECK_THROWS_AS(expand(c, parse_sequent("|- a:C"), "and_r",
                         {{"a", Individual("a")}, {"P", parse_concept("C")}, {"Q", parse_concept("D")}}),
                  RuleError);
}

TEST_CASE("definition rules and their contracted variants") {
  DefinitionRegistry defs;
  auto [left, right] = compile_ddr(defs.at("Trans"));
  CHECK(left->name == "Trans_l");
  CHECK(left->fixed_premises == std::size_t{1});
  CHECK(right->eigen_params.size() == 3);
  auto irr = compile_ddr(defs.at("Irr"));
  CHECK(irr.first->kind == RuleKind::initial);
  CHECK(irr.first->can_close);

  auto funct = close_under_contraction(compile_ddr(defs.at("Funct")).first);
  std::set<std::string> names;
  for (const auto& s : funct) names.insert(s->name);
  CHECK(names.count("Funct_l"));
  CHECK(names.count("Funct_l[c:=b]"));
  CHECK(names.count("Funct_l[b:=a,c:=a]"));
}

TEST_CASE("a definition using equality brings the equality rules") {
  Calculus c = assemble_calculus(LanguageProfile{}.with_ddr("Funct"));
  CHECK(c.contains("eq_l"));
  CHECK(c.contains("euc"));
}

TEST_CASE("closing instances are found on the top sequent") {
  Calculus c = assemble_calculus(LanguageProfile{});
  auto app = find_closing(c, parse_sequent("a:C, b:D |- b:D"));
  REQUIRE(app);
  CHECK(app->schema->name == "id_C");
  CHECK_FALSE(find_closing(c, parse_sequent("a:C |- b:C")));
}
