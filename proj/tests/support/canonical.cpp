#include "canonical.hpp"

#include "dlseq/parser.hpp"

namespace dlseq::testing {

std::vector<CanonicalInstance> canonical_alc_instances() {
  ParseOptions o;
  o.profile = LanguageProfile{};
  auto s = [&](const char* t) { return parse_sequent(t, o); };
  auto k = [&](const char* t) { return parse_concept(t, o); };
  Individual a("a"), b("b"), e = Individual::eigen(1);
  Role r = Role::named("r");
  Concept C = k("C"), D = k("D");
  return {
      {"id_C", s("a:C |- a:C"), {{"a", a}, {"C", C}}},
      {"id_R", s("r(a,b) |- r(a,b)"), {{"F", Formula::role_assertion(r, a, b)}}},
      {"bot_l", s("a:bot |-"), {{"a", a}}},
      {"bot_r", s("|- a:C"), {{"a", a}}},
      {"top_l", s("|- a:C"), {{"a", a}}},
      {"top_r", s("|- a:top"), {{"a", a}}},
      {"not_l", s("a:(not C) |-"), {{"a", a}, {"P", C}}},
      {"not_r", s("|- a:(not C)"), {{"a", a}, {"P", C}}},
      {"or_l", s("a:(C or D) |- a:C"), {{"a", a}, {"P", C}, {"Q", D}}},
      {"or_r", s("|- a:(C or D)"), {{"a", a}, {"P", C}, {"Q", D}}},
      {"and_l", s("a:(C and D) |- a:C"), {{"a", a}, {"P", C}, {"Q", D}}},
      {"and_r", s("|- a:(C and D)"), {{"a", a}, {"P", C}, {"Q", D}}},
      {"sub_l", s("C sub D, a:C |- a:D"), {{"a", a}, {"P", C}, {"Q", D}}},
      {"sub_r", s("|- C sub D"), {{"b", e}, {"P", C}, {"Q", D}}},
      {"some_l", s("a:(some r C) |-"), {{"a", a}, {"b", e}, {"R", r}, {"P", C}}},
      {"some_r", s("r(a,b) |- a:(some r C)"), {{"a", a}, {"b", b}, {"R", r}, {"P", C}}},
      {"all_l", s("r(a,b), a:(all r C) |-"), {{"a", a}, {"b", b}, {"R", r}, {"P", C}}},
      {"all_r", s("|- a:(all r C)"), {{"a", a}, {"b", e}, {"R", r}, {"P", C}}},
  };
}

std::string expand_text(const Calculus& c, const CanonicalInstance& x) {
  return proof_text(expand(c, x.conclusion, x.rule, x.binding));
}

}  // namespace dlseq::testing
