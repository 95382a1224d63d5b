// dlseq: description-logic sequent prover, batch front end.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dlseq/tasks.hpp"

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Backward proof search for description-logic sequents"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string profile_file, ddr_file, format = "text", emit = "both";
  std::size_t budget = dlseq::Budget{}.steps, oracle = 0;
  app.add_option("--profile", profile_file, "Profile file: one flag or `ddr Name` per line");
  app.add_option("--ddr", ddr_file, "Descriptive definitions file");
  app.add_option("--budget", budget, "Rule applications before giving up")->check(CLI::PositiveNumber);
  app.add_option("--oracle", oracle, "Cross-check countermodels up to this domain size");
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("--emit", emit)->check(CLI::IsMember({"proof", "model", "both"}));

  dlseq::TaskRequest req;
  std::string file;
  auto* prove = app.add_subcommand("prove", "Validity of the sequent in a file");
  prove->add_option("sequent-file", file)->required();
  auto* consistent = app.add_subcommand("consistent", "Consistency of a knowledge base");
  consistent->add_option("kb-file", file)->required();
  auto* subsumes = app.add_subcommand("subsumes", "Whether P is subsumed by Q under a knowledge base");
  subsumes->add_option("kb-file", file)->required();
  subsumes->add_option("P", req.first)->required();
  subsumes->add_option("Q", req.second)->required();
  auto* instance = app.add_subcommand("instance", "Whether a is an instance of P under a knowledge base");
  instance->add_option("kb-file", file)->required();
  instance->add_option("a", req.first)->required();
  instance->add_option("P", req.second)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : dlseq::exit_input_error;
  }

  if (prove->parsed()) req.task = dlseq::TaskKind::validity;
  if (consistent->parsed()) req.task = dlseq::TaskKind::consistency;
  if (subsumes->parsed()) req.task = dlseq::TaskKind::subsumption;
  if (instance->parsed()) req.task = dlseq::TaskKind::instance;
  req.budget.steps = budget;
  req.oracle_bound = oracle;
  req.format = format == "json" ? dlseq::OutputFormat::json : dlseq::OutputFormat::text;
  req.emit = emit == "proof" ? dlseq::Emit::proof : emit == "model" ? dlseq::Emit::model : dlseq::Emit::both;

  try {
    req.input = slurp(file);
    if (!profile_file.empty()) req.profile_text = slurp(profile_file);
    if (!ddr_file.empty()) req.ddr_text = slurp(ddr_file);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return dlseq::exit_input_error;
  }

  dlseq::TaskReport rep = dlseq::run_task(req);
  (rep.exit_code == dlseq::exit_input_error ? std::cerr : std::cout) << rep.output;
  return rep.exit_code;
}
