#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dlseq {

enum class Feature {
  compose,
  rias,
  crias,
  nominals,
  inverses,
  functionality,
  unqualifiedCounting,
  qualifiedCounting,
  equality,
  inequality,
  negatedRoles,
  universalRole,
  selfConcept,
  gciSplit
};

const std::vector<Feature>& all_features();
std::string feature_name(Feature f);
std::optional<Feature> feature_from_name(const std::string& name);

/// The language fragment a calculus is assembled for. An empty profile is ALC.
struct LanguageProfile {
  std::set<Feature> flags;
  std::set<std::string> ddr_names;
  unsigned counting_ceiling = 8;

  bool has(Feature f) const { return flags.count(f) > 0; }
  LanguageProfile& with(Feature f) {
    flags.insert(f);
    return *this;
  }
  LanguageProfile& with_ddr(std::string name) {
    ddr_names.insert(std::move(name));
    return *this;
  }

  /// Adds the flags other flags depend on (nominals need equality, etc.)
  /// and the Funct definition for functionality.
  LanguageProfile normalized() const;
  bool is_normalized() const { return normalized().flags == flags && normalized().ddr_names == ddr_names; }

  std::string text() const;

  bool operator==(const LanguageProfile&) const = default;
};

/// Profile with every flag on.
LanguageProfile full_profile();

}  // namespace dlseq
