#include <algorithm>

#include "dlseq/definitions.hpp"

namespace dlseq {

unsigned weight(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::atomic:
    case K::top:
    case K::bottom:
      return 1;
    case K::nominal:
    case K::self:
      return 2;
    case K::negation:
    case K::exists:
    case K::forall:
    case K::at_most:
    case K::at_least:
      return weight(c.first()) + 1;
    case K::disjunction:
    case K::conjunction:
      return std::max(weight(c.first()), weight(c.second())) + 1;
  }
  return 1;
}

unsigned weight(const Formula& f, const DefinitionRegistry& defs) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::concept_assertion:
      return weight(f.concept_of());
    case K::gci:
      return std::max(weight(f.concept_of()), weight(f.rhs())) + 1;
    case K::role_assertion:
      return static_cast<unsigned>(f.role().length());
    case K::negated_role:
    case K::inequality:
      return 2;
    case K::equality:
      return 1;
    case K::cria:
      return static_cast<unsigned>(f.chain().size()) + 2;
    case K::rra: {
      if (!defs.contains(f.name()))
        throw WeightError("no descriptive definition registered for " + f.name());
      const auto& d = defs.at(f.name());
      return 1 + static_cast<unsigned>(d.antecedent.size() + d.consequent.size());
    }
  }
  return 1;
}

}  // namespace dlseq
