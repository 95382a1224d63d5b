#pragma once

// Shorthands shared by the rule definitions.

#include <memory>

#include "dlseq/calculus.hpp"

namespace dlseq::kit {

inline Formula at(const Individual& a, const Concept& c) { return Formula::assertion(a, c); }
inline Formula rel(const Role& r, const Individual& a, const Individual& b) {
  return Formula::role_assertion(r, a, b);
}
inline Formula eq(const Individual& a, const Individual& b) { return Formula::equality(a, b); }

inline const Individual& ind(const Binding& b, const char* k) {
  return binding_get<Individual>(b, k);
}
inline const Concept& con(const Binding& b, const char* k) { return binding_get<Concept>(b, k); }
inline const Role& role(const Binding& b, const char* k) { return binding_get<Role>(b, k); }
inline const Formula& form(const Binding& b, const char* k) { return binding_get<Formula>(b, k); }
inline unsigned num(const Binding& b, const char* k) { return binding_get<unsigned>(b, k); }
inline const std::vector<Individual>& inds(const Binding& b, const char* k) {
  return binding_get<std::vector<Individual>>(b, k);
}

inline RuleInstance start(const std::string& rule, const Binding& b) {
  RuleInstance r;
  r.rule = rule;
  r.binding = b;
  return r;
}

inline SchemaPtr finish(RuleSchema s) {
  if (!s.fixed_premises && s.kind == RuleKind::initial) s.fixed_premises = 0;
  if (!s.fixed_premises && s.kind == RuleKind::unary) s.fixed_premises = 1;
  if (!s.fixed_premises && s.kind == RuleKind::binary) s.fixed_premises = 2;
  if (s.kind == RuleKind::initial) s.can_close = true;
  return std::make_shared<const RuleSchema>(std::move(s));
}

/// Calls f(formula) for each IF on `side` whose concept has the given kind.
template <typename F>
void each_if(const BranchView& v, Side side, Concept::Kind kind, F&& f) {
  const auto& zone = side == Side::left ? v.left : v.right;
  for (const auto& x : zone)
    if (x.is_internal() && x.concept_of().kind() == kind) f(x);
}

template <typename F>
void each_ef(const BranchView& v, Side side, Formula::Kind kind, F&& f) {
  const auto& zone = side == Side::left ? v.left : v.right;
  for (const auto& x : zone)
    if (x.kind() == kind) f(x);
}

inline void require_role_kind(const Role& r, bool allow_chain, const std::string& rule) {
  if (!allow_chain && r.is_chain())
    throw RuleError(rule + ": a role chain is not allowed here");
}

}  // namespace dlseq::kit
