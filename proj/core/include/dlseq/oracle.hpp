#pragma once

#include <optional>
#include <stdexcept>

#include "dlseq/interpretation.hpp"

namespace dlseq {

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  std::size_t max_domain = 4;
  std::size_t max_concepts = 8;
  std::size_t max_roles = 4;
  std::size_t max_individuals = 8;
};

/// First interpretation over domains of size 1..max_domain that falsifies
/// `s`, or none. Individuals are mapped first in canonical order, then
/// concept and role bits are assigned depth-first with three-valued pruning.
/// None means no countermodel up to the bound, not validity.
std::optional<Interpretation> find_countermodel(const Sequent& s, std::size_t max_domain,
                                                const DefinitionRegistry& defs = DefinitionRegistry(),
                                                const OracleLimits& limits = {});

/// Independent plain enumeration: sizes, individual maps and bit patterns
/// all visited in descending order, each candidate checked with
/// satisfies_sequent. Only for tiny vocabularies (at most 24 bits).
std::optional<Interpretation> find_countermodel_reversed(
    const Sequent& s, std::size_t max_domain,
    const DefinitionRegistry& defs = DefinitionRegistry());

}  // namespace dlseq
