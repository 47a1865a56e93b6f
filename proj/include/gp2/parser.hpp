#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gp2/ast.hpp"
#include "gp2/graph.hpp"

namespace gp2 {

/// First syntax error, with a 1-based position into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, std::string expected, std::string found);

  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int col_;
  std::string expected_;
  std::string found_;
};

/// Parses a GP 2 program text. "//" starts a comment running to the end
/// of the line. Throws ParseError on the first syntax error.
Program parse_program(std::string_view text);

/// Parses a host graph text: the rule-graph syntax restricted to constant
/// labels, with "(R)" marking root nodes. Node ids in the text only name
/// nodes for edge references; keys are assigned in order of appearance.
HostGraph parse_host_graph(std::string_view text);

/// Renders a program so that parse_program(print_program(p)) == p for any
/// parser-produced program.
std::string print_program(const Program& p);

/// Renders a host graph on one line in the host-graph grammar; output is
/// deterministic (ascending key order) and reparses to an equal graph.
std::string print_host_graph(const HostGraph& g);

}  // namespace gp2
