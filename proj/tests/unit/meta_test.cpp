#include "doctest.h"
#include "dlseq/meta.hpp"
#include "dlseq/parser.hpp"
#include "dlseq/prover.hpp"

using namespace dlseq;

namespace {

LanguageProfile everything() {
  LanguageProfile p = full_profile();
  for (const auto& n : DefinitionRegistry().names()) p.with_ddr(n);
  return p;
}

Formula f(const std::string& t) {
  ParseOptions o;
  o.profile = everything();
  return parse_sequent("|- " + t, o).side(Side::right).at(0);
}

ProofNode proof_of(const Calculus& c, const std::string& text) {
  ParseOptions o;
  o.profile = c.profile();
  auto out = prove(parse_sequent(text, o), c);
  REQUIRE(out.verdict == Verdict::proved);
  return out.tree;
}

}  // namespace

TEST_CASE("identity derivations for every formula kind") {
  Calculus c = assemble_calculus(everything());
  for (const char* t : {"a:C", "a:(not (C or D))", "a:(some r (all s C))", "a:{b}", "a:(atmost 2 r C)",
                        "a:(atleast 2 r top)", "a:(self r)", "a:(some inv r C)", "r;s(a,b)", "r;s;t sub u",
                        "Trans(r)", "Funct(r)", "Irr(r)", "not r(a,b)", "a != b", "a = b", "(C and D) sub C"}) {
    CAPTURE(t);
    ProofNode p = derive_identity(c, f(t));
    CHECK(check_proof(p, c));
    CHECK(p.conclusion.count(Side::left, f(t)) == 1);
    CHECK(p.conclusion.count(Side::right, f(t)) == 1);
  }
}

TEST_CASE("identity derivations take the expected rule order") {
  Calculus c = assemble_calculus(everything());
  CHECK(rule_sequence(derive_identity(c, f("a:{b}"))) == std::vector<std::string>{"nom_l1", "nom_r1", "id_R"});
  CHECK(rule_sequence(derive_identity(c, f("r;s(a,b)"))) ==
        std::vector<std::string>{"comp_l", "comp_r", "id_R", "id_R"});
  CHECK(rule_sequence(derive_identity(c, f("Trans(r)"))) ==
        std::vector<std::string>{"Trans_r", "Trans_l", "id_R"});
  CHECK(derive_identity(c, f("a:(atleast 2 r C)")).rule == "atleast_l");
  CHECK(derive_identity(c, f("r;s sub t")).rule == "cria_r");
}

TEST_CASE("identity derivations need the profile's rules") {
  Calculus alc = assemble_calculus(LanguageProfile{});
  CHECK_THROWS_AS(derive_identity(alc, f("a:{b}")), TransformError);
}

TEST_CASE("weakening renames captured eigen individuals") {
  Calculus c = assemble_calculus(LanguageProfile{});
  ProofNode t = proof_of(c, "|- a:(all r (C or not C))");
  Individual e = Individual::eigen(1);
  Formula clash = Formula::assertion(e, Concept::atomic("D"));
  ProofNode w = weaken(c, t, SequentChange{{clash}, {}});
  CHECK(check_proof(w, c));
  CHECK(w.height() == t.height());
  CHECK(w.conclusion.count(Side::left, clash) == 1);
}

TEST_CASE("substitution can merge individuals") {
  Calculus c = assemble_calculus(LanguageProfile{});
  ProofNode t = proof_of(c, "r(a,b), b:C |- a:(some r C)");
  ProofNode s = substitute(c, t, Individual("b"), Individual("a"));
  CHECK(check_proof(s, c));
  CHECK(s.conclusion == parse_sequent("r(a,a), a:C |- a:(some r C)"));
  CHECK(s.height() <= t.height());
}

TEST_CASE("contraction through a removal rule") {
  Calculus c = assemble_calculus(LanguageProfile{});
  ProofNode t = proof_of(c, "a:(C and D), a:(C and D) |- a:C");
  ProofNode r = contract(c, t, Side::left, f("a:(C and D)"));
  CHECK(check_proof(r, c));
  CHECK(r.conclusion == parse_sequent("a:(C and D) |- a:C"));
  CHECK(r.height() <= t.height());
  CHECK_THROWS_AS(contract(c, r, Side::left, f("a:(C and D)")), TransformError);
}

TEST_CASE("contraction switches to the contracted definition rule") {
  LanguageProfile p;
  p.with(Feature::equality).with_ddr("Funct");
  Calculus c = assemble_calculus(p.normalized());
  ProofNode leaf = expand(c, parse_sequent("Funct(r), r(a,a), r(a,a) |- a = a"), "Funct_l",
                          {{"RRA", f("Funct(r)")}, {"a", Individual("a")}, {"b", Individual("a")},
                           {"c", Individual("a")}});
  leaf.children[0] = expand(c, leaf.children[0].conclusion, "id_R", {{"F", f("a = a")}});
  REQUIRE(check_proof(leaf, c));
  ProofNode r = contract(c, leaf, Side::left, f("r(a,a)"));
  CHECK(check_proof(r, c));
  CHECK(r.rule->rfind("Funct_l[", 0) == 0);
}

TEST_CASE("inversion of a removal rule") {
  Calculus c = assemble_calculus(LanguageProfile{});
  ProofNode t = proof_of(c, "a:(some r C), a:(all r D) |- a:(some r (C and D))");
  ProofNode r = invert(c, "some_l", 0, t);
  CHECK(check_proof(r, c));
  CHECK(r.height() <= t.height());
  CHECK(r.conclusion.count(Side::left, f("a:(some r C)")) == 0);
  CHECK_THROWS_AS(invert(c, "and_l", 0, t), TransformError);
}

TEST_CASE("inversion of a retaining rule is weakening") {
  Calculus c = assemble_calculus(LanguageProfile{});
  ProofNode t = proof_of(c, "r(a,b), a:(all r C) |- b:C");
  ProofNode r = invert(c, "all_l", 0, t, Binding{{"a", Individual("a")}, {"b", Individual("b")},
                                                 {"R", Role::named("r")}, {"P", Concept::atomic("C")}});
  CHECK(check_proof(r, c));
  CHECK(r.height() == t.height());
}

TEST_CASE("a side formula of sub_l blocks height-preserving inversion") {
  // The root proof has height 1; the some_l premise has no proof of height 1.
  LanguageProfile p;
  p.with(Feature::gciSplit);
  Calculus c = assemble_calculus(p);
  ProofNode t = proof_of(c, "(some r C) sub D, a:(some r C) |- a:D");
  CHECK(t.height() == 1);
  CHECK_THROWS_AS(invert(c, "some_l", 0, t), TransformError);
  Sequent premise = parse_sequent("(some r C) sub D, r(a,_e1), _e1:C |- a:D", ParseOptions{p, nullptr, true});
  CHECK_FALSE(find_closing(c, premise));
  BranchView view(premise);
  for (const auto& schema : c.schemas()) {
    for (auto b : schema->enumerate(view)) {
      std::uint32_t next = 10;
      schema->bind_eigens(b, next);
      ProofNode n;
      try {
        n = expand(c, premise, schema->name, b);
      } catch (const RuleError&) {
        continue;
      }
      bool all_close = true;
      for (const auto& ch : n.children) all_close = all_close && find_closing(c, ch.conclusion).has_value();
      CAPTURE(schema->name);
      CHECK_FALSE(all_close);
    }
  }
}

TEST_CASE("transform dispatches on its kind") {
  Calculus c = assemble_calculus(LanguageProfile{});
  ProofNode t = proof_of(c, "a:C |- a:C");
  TransformPayload add{{f("b:D")}, std::nullopt};
  CHECK(transform(c, TransformKind::weaken_right, t, add).conclusion == parse_sequent("a:C |- a:C, b:D"));
  TransformPayload sub{{}, std::make_pair(Individual("a"), Individual("c"))};
  CHECK(transform(c, TransformKind::substitute, t, sub).conclusion == parse_sequent("c:C |- c:C"));
  CHECK_THROWS_AS(transform(c, TransformKind::substitute, t, add), TransformError);
}
