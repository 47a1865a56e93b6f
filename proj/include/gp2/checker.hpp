#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gp2/ast.hpp"

namespace gp2 {

enum class CheckErrorKind {
  UndeclaredRule,
  UndeclaredVariable,
  VariableNotInLHS,
  TwoListVariablesInLabel,
  TwoStringVariablesInConcat,
  LhsExpressionForbidden,
  MarkOnWrongEntity,
  InterfaceNotInBothSides,
  SharedNodeOutsideInterface,
  DuplicateDeclaration,
  NoMain,
  RecursiveMacro,
  MacroInRuleSet,
  TypeMismatch,
  UnknownNodeId,
};

const char* check_error_name(CheckErrorKind k);

class CheckError : public std::runtime_error {
 public:
  CheckError(CheckErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(check_error_name(kind)) + ": " + what),
        kind_(kind) {}

  CheckErrorKind kind() const { return kind_; }

 private:
  CheckErrorKind kind_;
};

/// A rule-side graph prepared for matching: nodes and edges are sorted by
/// their textual ids, which fixes the matcher's enumeration order.
struct PatternGraph {
  std::vector<RuleNode> nodes;
  std::vector<RuleEdge> edges;

  const RuleNode* find_node(const std::string& id) const;
  const RuleEdge* find_edge(const std::string& id) const;
};

using VarTypeMap = std::map<std::string, VarType>;

/// A checked rule together with the derived sets the applier needs.
/// Interface nodes are preserved (and relabelled from the RHS); LHS-only
/// nodes are deleted, RHS-only nodes created. An edge id present on both
/// sides denotes a preserved, possibly relabelled edge.
struct RuleSchema {
  std::string name;
  VarTypeMap var_types;
  PatternGraph lhs, rhs;
  std::vector<std::string> interface;
  Condition condition;
  std::vector<std::string> deleted_nodes;    // lhs ids not in interface
  std::vector<std::string> created_nodes;    // rhs ids not in interface
  std::vector<std::string> preserved_edges;  // edge ids on both sides
  std::vector<std::string> deleted_edges;
  std::vector<std::string> created_edges;
};

struct CheckedProgram {
  Command main;
  std::map<std::string, RuleSchema> rules;
};

/// Semantic analysis: expands macros, resolves every call to a declared
/// rule, and enforces the static rules on each declaration (variable
/// declaration and binding, LHS expression restrictions, the single
/// list-variable-per-label rule, mark placement, interface consistency,
/// and expression typing). Pure; throws CheckError on the first failure.
CheckedProgram check(const Program& p);

}  // namespace gp2
