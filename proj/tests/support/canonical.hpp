#pragma once

#include <string>
#include <vector>

#include "dlseq/proof.hpp"

namespace dlseq::testing {

struct CanonicalInstance {
  std::string rule;
  Sequent conclusion;
  Binding binding;
};

/// One instance per base rule, in display order.
std::vector<CanonicalInstance> canonical_alc_instances();

/// proof_text of the one-step expansion, as stored in the golden file.
std::string expand_text(const Calculus& c, const CanonicalInstance& x);

}  // namespace dlseq::testing
