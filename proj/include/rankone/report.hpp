#pragma once

#include "rankone/classifier.hpp"

#include <string>
#include <vector>

namespace rankone {

enum class Format { json, table, diagram };
enum class ModeSelection { genuine, hamiltonian, both };

enum ExitCode : int { exit_ok = 0, exit_violation = 1, exit_usage = 2, exit_io = 3 };

/// Options of one report run.
struct ReportConfig {
  /// A selector such as "A5~1", "D4~3" or "F4", or "all".
  std::string system = "all";
  /// Rank bound used with "all".
  int max_rank = 8;
  ModeSelection mode = ModeSelection::both;
  Format format = Format::json;
  bool dedupe = true;
  bool check = false;
  /// Output file; empty means the returned report only.
  std::string output;
};

/// Records of one system in one mode.
struct Run {
  SystemId system;
  Mode mode = Mode::genuine;
  std::vector<PolytopeRecord> records;
  bool operator==(const Run&) const = default;
};

struct RunResult {
  int status = exit_ok;
  std::string report;
  std::vector<std::string> violations;
  std::string error;
};

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Systems and modes named by a config, in report order. Throws
/// std::invalid_argument on a bad selector or an impossible combination.
std::vector<std::pair<SystemId, Mode>> expand(const ReportConfig& config);

/// JSON document with metadata and the records of every run. Rationals are
/// "p/q" strings; node sets use diagram labels.
std::string serialize(const std::vector<Run>& runs);
/// Inverse of serialize. Throws std::invalid_argument on malformed input.
std::vector<Run> parse_report(const std::string& text);

/// Aligned text table with the columns of the case tables.
std::string emit_table(const std::vector<Run>& runs);

/// One-line ASCII diagram of a record: both ends in label order, '.' for a
/// node off S(X), 'o' for a node of S(X), '*' for the support of a
/// homogeneous weight, '>' for the distinguished inhomogeneous node. Bonds
/// are '-', '=', '#', '%' by multiplicity; bonds between non-consecutive
/// labels are listed at the end.
std::string emit_diagram(const RootSystem& sys, const PolytopeRecord& record);
std::string emit_diagrams(const std::vector<Run>& runs);

/// Classifies, checks, formats and writes according to the config.
RunResult run(const ReportConfig& config);

}  // namespace rankone
