#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gp2/graph.hpp"

namespace gp2 {

/// Variable types, ordered by the subtype chain: char <= string,
/// int <= atom, string <= atom, atom <= list.
enum class VarType { Int, Char, String, Atom, List };

const char* var_type_name(VarType t);

/// A label expression atom. Binary operators keep their operands in
/// args[0] and args[1]; Concat is the "." string concatenation.
struct AtomExpr {
  enum class Kind {
    IntConst,
    StrConst,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Concat,
    Indeg,
    Outdeg,
  };

  Kind kind = Kind::IntConst;
  std::int64_t int_value = 0;  // IntConst
  std::string name;            // Var / StrConst text / Indeg,Outdeg node id
  std::vector<AtomExpr> args;

  bool operator==(const AtomExpr&) const = default;

  static AtomExpr integer(std::int64_t v);
  static AtomExpr str(std::string s);
  static AtomExpr var(std::string name);
  static AtomExpr binary(Kind op, AtomExpr lhs, AtomExpr rhs);
  static AtomExpr degree(Kind op, std::string node_id);
};

/// A rule label: a list of expression atoms plus a mark. An empty atom
/// list is the "empty" label.
struct RuleLabel {
  std::vector<AtomExpr> atoms;
  Mark mark = Mark::None;

  bool operator==(const RuleLabel&) const = default;
};

enum class RelOp { Eq, Ne, Gt, Ge, Lt, Le };

const char* rel_op_text(RelOp op);

struct Condition {
  enum class Kind { True, TypeIs, Edge, Rel, Not, And, Or };

  Kind kind = Kind::True;
  VarType type_test = VarType::Int;  // TypeIs
  std::string var;                   // TypeIs
  std::string src, tgt;              // Edge
  std::optional<RuleLabel> label;    // Edge, optional label filter
  RelOp rel = RelOp::Eq;             // Rel
  std::vector<AtomExpr> exprs;       // Rel: {lhs, rhs}
  std::vector<Condition> args;       // Not: {c}; And/Or: {c1, c2}

  bool operator==(const Condition&) const = default;

  static Condition truth();
  static Condition type_is(VarType t, std::string var);
  static Condition edge(std::string src, std::string tgt,
                        std::optional<RuleLabel> label = std::nullopt);
  static Condition relation(RelOp op, AtomExpr lhs, AtomExpr rhs);
  static Condition negate(Condition c);
  static Condition conj(Condition a, Condition b);
  static Condition disj(Condition a, Condition b);
};

struct RuleNode {
  std::string id;
  RuleLabel label;
  bool root = false;

  bool operator==(const RuleNode&) const = default;
};

struct RuleEdge {
  std::string id;
  std::string src, tgt;
  RuleLabel label;

  bool operator==(const RuleEdge&) const = default;
};

/// A rule-side graph as written: node and edge order is source order.
struct RuleGraph {
  std::vector<RuleNode> nodes;
  std::vector<RuleEdge> edges;

  bool operator==(const RuleGraph&) const = default;

  const RuleNode* find_node(const std::string& id) const;
  const RuleEdge* find_edge(const std::string& id) const;
};

struct RuleDecl {
  std::string name;
  std::vector<std::pair<std::string, VarType>> params;  // declaration order
  RuleGraph lhs, rhs;
  std::vector<std::string> interface;  // node ids, as written
  Condition condition;                 // True when absent

  bool operator==(const RuleDecl&) const = default;
};

/// Commands. A Call with one name is a plain rule (or macro) call; with
/// several names it is a rule-set call {r1, ..., rn}. Rule and macro
/// calls are syntactically identical, so the distinction is resolved by
/// macro expansion. If/Try always carry three children; a missing else
/// branch is Skip.
struct Command {
  enum class Kind { Call, Seq, Loop, If, Try, Skip, Fail };

  Kind kind = Kind::Skip;
  std::vector<std::string> names;   // Call
  std::vector<Command> children;    // Seq: {c1, c2}; Loop: {body};
                                    // If/Try: {cond, then, else}

  bool operator==(const Command&) const = default;

  static Command call(std::vector<std::string> names);
  static Command seq(Command a, Command b);
  static Command loop(Command body);
  static Command branch(Kind k, Command cond, Command then_c, Command else_c);
  static Command skip();
  static Command fail();
};

struct Declaration {
  enum class Kind { Main, Macro, Rule };

  Kind kind = Kind::Main;
  std::string name;  // macro/rule name; "Main" for main
  Command body;      // Main/Macro
  RuleDecl rule;     // Rule

  bool operator==(const Declaration&) const = default;
};

struct Program {
  std::vector<Declaration> decls;

  bool operator==(const Program&) const = default;

  const Command* main() const;
};

/// Raised by expand_macros on a recursive macro or a macro named inside a
/// rule set; the checker maps it onto its own error kinds.
class MacroError : public std::runtime_error {
 public:
  enum class Kind { Recursive, InRuleSet };

  MacroError(Kind k, const std::string& what)
      : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// The unique rule declaration with the given name; throws std::out_of_range
/// if no such rule exists (the checker rejects unresolved names up front).
const RuleDecl& rule_lookup(const std::string& name, const Program& p);

/// Replaces every macro call by the macro's body and drops the macro
/// declarations. Idempotent; throws MacroError on recursion.
Program expand_macros(const Program& p);

}  // namespace gp2
