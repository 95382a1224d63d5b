#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlseq/definitions.hpp"
#include "dlseq/profile.hpp"
#include "dlseq/syntax.hpp"

namespace dlseq {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// A construct outside the active profile.
class ProfileViolation : public std::runtime_error {
 public:
  ProfileViolation(std::string construct, std::string missing_flag);
  const std::string& construct() const { return construct_; }
  const std::string& missing_flag() const { return flag_; }

 private:
  std::string construct_, flag_;
};

struct ParseOptions {
  LanguageProfile profile = full_profile();
  const DefinitionRegistry* definitions = nullptr;  // built-ins when null
  bool allow_eigen = false;
  bool check_profile = true;
  /// Names known to be roles. `X sub Y` between plain names reads as a role
  /// inclusion when X or Y is a role, and as a concept inclusion otherwise.
  /// Roles used elsewhere in the same input are added automatically.
  std::set<std::string> role_names;
};

struct KnowledgeBase {
  std::vector<Formula> tbox;
  std::vector<Formula> abox;

  /// tbox, abox |-
  Sequent as_antecedent() const;
};

Role parse_role(const std::string& text, const ParseOptions& opts = {});
Concept parse_concept(const std::string& text, const ParseOptions& opts = {});
Formula parse_formula(const std::string& text, const ParseOptions& opts = {});
Sequent parse_sequent(const std::string& text, const ParseOptions& opts = {});
/// Lines `tbox: <EF>`, `abox: <IF or role assertion>`, optional `roles: r, s`.
/// Blank lines and lines starting with # are skipped.
KnowledgeBase parse_kb(const std::string& text, const ParseOptions& opts = {});

/// `def Name(r1,...,rl): forall x1 ... xm . A1 & ... & An -> B1 | ... | Bk`
std::vector<DescriptiveDefinition> parse_definitions(const std::string& text);

/// One flag name or `ddr Name` per line.
LanguageProfile parse_profile(const std::string& text);

/// Throws ProfileViolation naming the first construct outside the profile.
void check_profile(const Formula& f, const LanguageProfile& profile,
                   const DefinitionRegistry& defs);
void check_profile(const Sequent& s, const LanguageProfile& profile,
                   const DefinitionRegistry& defs);

}  // namespace dlseq
