// Command-line front end: classify rank-one momentum polytopes and print them.

#include "rankone/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  rankone::ReportConfig config;
  std::string mode = "both";
  std::string format = "json";
  bool no_dedupe = false;

  CLI::App app{"Rank-one momentum polytopes of quasi-Hamiltonian and Hamiltonian manifolds"};
  app.add_option("--system", config.system,
                 "Selector <Family><rank>[~<twist>], e.g. A5~1, D4~3, F4 (finite), or 'all'")
      ->capture_default_str();
  app.add_option("--max-rank", config.max_rank, "Rank bound used with --system all")->capture_default_str();
  app.add_option("--mode", mode, "genuine (affine systems), hamiltonian (finite systems) or both")
      ->check(CLI::IsMember({"genuine", "hamiltonian", "both"}))
      ->capture_default_str();
  app.add_option("--format", format, "json, table or ascii-diagram")
      ->check(CLI::IsMember({"json", "table", "ascii-diagram"}))
      ->capture_default_str();
  app.add_flag("--no-dedupe", no_dedupe, "Emit every member of every automorphism orbit");
  app.add_flag("--check", config.check, "Assert the record invariants; exit 1 on any violation");
  app.add_option("--output,-o", config.output, "Write the report to a file instead of standard output");
  app.footer(
      "Exit status: 0 success, 1 invariant violation, 2 usage error, 3 I/O error.\n"
      "Rationals are written as p/q strings; node sets use diagram labels (affine node 0).");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rankone::exit_usage;
  }

  config.mode = mode == "genuine"       ? rankone::ModeSelection::genuine
                : mode == "hamiltonian" ? rankone::ModeSelection::hamiltonian
                                        : rankone::ModeSelection::both;
  config.format = format == "json" ? rankone::Format::json
                  : format == "table" ? rankone::Format::table
                                      : rankone::Format::diagram;
  config.dedupe = !no_dedupe;

  rankone::RunResult result = rankone::run(config);
  if (!result.error.empty()) std::cerr << "rankone: " << result.error << "\n";
  if (result.status == rankone::exit_usage || result.status == rankone::exit_io) return result.status;
  if (config.output.empty()) std::cout << result.report;
  if (!result.violations.empty()) {
    std::cerr << "{\"violations\": [";
    for (std::size_t i = 0; i < result.violations.size(); ++i)
      std::cerr << (i ? ", " : "") << '"' << result.violations[i] << '"';
    std::cerr << "]}\n";
  }
  return result.status;
}
