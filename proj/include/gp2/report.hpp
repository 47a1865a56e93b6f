#pragma once

#include <string>

#include "gp2/evaluator.hpp"

namespace gp2 {

struct RunConfig {
  std::string program_path;
  std::string graph_path;
  int max_apps = 0;
  Mode mode = Mode::AllResults;
};

struct Report {
  std::string text;
  int exit_code = 0;
};

/// The machine-parseable result format:
///
///   Classes: <k>
///   Class <i>: <count> x
///   <host-graph text of representative>
///   Failures: <f>
///   Unfinished: <u>
///   Apps: <n or lo-hi>
///
/// Apps summarises the Active terminals, or the Failed terminals when no
/// branch produced a graph, and is "-" when neither exists.
std::string format_report(const EvalOutput& out);

/// Parse, check and evaluate: exit code 0 for any completed evaluation,
/// 1 for parse, check, evaluation or file errors (with the diagnostic as
/// the report text).
Report run(const RunConfig& config);

}  // namespace gp2
