#include "gp2/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gp2/parser.hpp"

namespace gp2 {

namespace {

std::string apps_text(const std::vector<int>& counts) {
  auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  if (*lo == *hi) return std::to_string(*lo);
  return std::to_string(*lo) + "-" + std::to_string(*hi);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string format_report(const EvalOutput& out) {
  std::string text = "Classes: " + std::to_string(out.classes.size()) + "\n";
  int i = 1;
  for (const auto& c : out.classes) {
    text += "Class " + std::to_string(i++) + ": " + std::to_string(c.count) +
            " x\n";
    text += print_host_graph(c.representative) + "\n";
  }
  text += "Failures: " + std::to_string(out.failures) + "\n";
  text += "Unfinished: " + std::to_string(out.unfinished) + "\n";
  if (!out.active_counts.empty())
    text += "Apps: " + apps_text(out.active_counts) + "\n";
  else if (!out.failed_counts.empty())
    text += "Apps: " + apps_text(out.failed_counts) + "\n";
  else
    text += "Apps: -\n";
  return text;
}

Report run(const RunConfig& config) {
  try {
    std::string program_text = read_file(config.program_path);
    std::string graph_text = read_file(config.graph_path);
    CheckedProgram prog;
    HostGraph host;
    try {
      prog = check(parse_program(program_text));
    } catch (const ParseError& e) {
      return {config.program_path + ":" + e.what() + "\n", 1};
    }
    try {
      host = parse_host_graph(graph_text);
    } catch (const ParseError& e) {
      return {config.graph_path + ":" + e.what() + "\n", 1};
    }
    EvalOutput out = eval_program(prog, host, config.max_apps, config.mode);
    return {format_report(out), 0};
  } catch (const std::exception& e) {
    return {std::string(e.what()) + "\n", 1};
  }
}

}  // namespace gp2
