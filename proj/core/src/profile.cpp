#include "dlseq/profile.hpp"

#include <map>

namespace dlseq {

namespace {

const std::map<Feature, std::string>& names() {
  static const std::map<Feature, std::string> table = {
      {Feature::compose, "compose"},
      {Feature::rias, "rias"},
      {Feature::crias, "crias"},
      {Feature::nominals, "nominals"},
      {Feature::inverses, "inverses"},
      {Feature::functionality, "functionality"},
      {Feature::unqualifiedCounting, "unqualifiedCounting"},
      {Feature::qualifiedCounting, "qualifiedCounting"},
      {Feature::equality, "equality"},
      {Feature::inequality, "inequality"},
      {Feature::negatedRoles, "negatedRoles"},
      {Feature::universalRole, "universalRole"},
      {Feature::selfConcept, "selfConcept"},
      {Feature::gciSplit, "gciSplit"},
  };
  return table;
}

}  // namespace

const std::vector<Feature>& all_features() {
  static const std::vector<Feature> all = [] {
    std::vector<Feature> out;
    for (const auto& [f, _] : names()) out.push_back(f);
    return out;
  }();
  return all;
}

std::string feature_name(Feature f) { return names().at(f); }

std::optional<Feature> feature_from_name(const std::string& name) {
  for (const auto& [f, n] : names())
    if (n == name) return f;
  return std::nullopt;
}

LanguageProfile LanguageProfile::normalized() const {
  LanguageProfile out = *this;
  for (Feature f : {Feature::nominals, Feature::functionality, Feature::qualifiedCounting,
                    Feature::unqualifiedCounting, Feature::inequality}) {
    if (out.has(f)) out.flags.insert(Feature::equality);
  }
  if (out.has(Feature::crias)) out.flags.insert(Feature::compose);
  if (out.has(Feature::functionality)) out.ddr_names.insert("Funct");
  return out;
}

std::string LanguageProfile::text() const {
  std::string out;
  for (Feature f : flags) {
    if (!out.empty()) out += ' ';
    out += feature_name(f);
  }
  for (const auto& d : ddr_names) {
    if (!out.empty()) out += ' ';
    out += "ddr:" + d;
  }
  return out.empty() ? "ALC" : out;
}

LanguageProfile full_profile() {
  LanguageProfile p;
  for (Feature f : all_features()) p.flags.insert(f);
  return p.normalized();
}

}  // namespace dlseq
