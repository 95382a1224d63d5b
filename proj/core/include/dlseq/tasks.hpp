#pragma once

#include <optional>
#include <string>

#include "dlseq/parser.hpp"
#include "dlseq/prover.hpp"

namespace dlseq {

enum class TaskKind { validity, consistency, subsumption, instance };
enum class OutputFormat { text, json };
enum class Emit { proof, model, both };

/// Exit codes shared by the library and the command-line front end.
enum ExitCode : int { exit_resolved = 0, exit_countermodel = 1, exit_unknown = 2, exit_input_error = 3 };

struct TaskRequest {
  TaskKind task = TaskKind::validity;
  /// Sequent text for validity, knowledge-base text otherwise.
  std::string input;
  /// Subsumption: P and Q. Instance: the individual and P.
  std::string first, second;
  /// Contents of the profile and definition files; the default profile is
  /// every flag plus every known definition.
  std::optional<std::string> profile_text;
  std::optional<std::string> ddr_text;
  Budget budget;
  std::size_t oracle_bound = 0;
  OutputFormat format = OutputFormat::text;
  Emit emit = Emit::both;
};

struct TaskReport {
  int exit_code = exit_input_error;
  /// valid/invalid, inconsistent/consistent, subsumed/not-subsumed,
  /// instance/not-instance, unknown or error.
  std::string verdict;
  std::string output;
};

/// The query as a sequent: `KB |- P sub Q`, `KB |- a:P`, `KB |-`.
Sequent task_sequent(const TaskRequest& req, const ParseOptions& opts);

/// Never throws on bad input; parse, profile and definition errors become
/// exit code 3 with a diagnostic in `output`.
TaskReport run_task(const TaskRequest& req);

}  // namespace dlseq
