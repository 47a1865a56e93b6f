#include "gp2/checker.hpp"

#include <algorithm>
#include <set>

namespace gp2 {

const char* check_error_name(CheckErrorKind k) {
  switch (k) {
    case CheckErrorKind::UndeclaredRule: return "UndeclaredRule";
    case CheckErrorKind::UndeclaredVariable: return "UndeclaredVariable";
    case CheckErrorKind::VariableNotInLHS: return "VariableNotInLHS";
    case CheckErrorKind::TwoListVariablesInLabel:
      return "TwoListVariablesInLabel";
    case CheckErrorKind::TwoStringVariablesInConcat:
      return "TwoStringVariablesInConcat";
    case CheckErrorKind::LhsExpressionForbidden:
      return "LhsExpressionForbidden";
    case CheckErrorKind::MarkOnWrongEntity: return "MarkOnWrongEntity";
    case CheckErrorKind::InterfaceNotInBothSides:
      return "InterfaceNotInBothSides";
    case CheckErrorKind::SharedNodeOutsideInterface:
      return "SharedNodeOutsideInterface";
    case CheckErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
    case CheckErrorKind::NoMain: return "NoMain";
    case CheckErrorKind::RecursiveMacro: return "RecursiveMacro";
    case CheckErrorKind::MacroInRuleSet: return "MacroInRuleSet";
    case CheckErrorKind::TypeMismatch: return "TypeMismatch";
    case CheckErrorKind::UnknownNodeId: return "UnknownNodeId";
  }
  return "?";
}

const RuleNode* PatternGraph::find_node(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

const RuleEdge* PatternGraph::find_edge(const std::string& id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

[[noreturn]] void err(CheckErrorKind k, const std::string& what) {
  throw CheckError(k, what);
}

void flatten_concat(const AtomExpr& e, std::vector<const AtomExpr*>& out) {
  if (e.kind == AtomExpr::Kind::Concat) {
    flatten_concat(e.args[0], out);
    flatten_concat(e.args[1], out);
  } else {
    out.push_back(&e);
  }
}

class RuleChecker {
 public:
  RuleChecker(const RuleDecl& r) : r_(r) {}

  RuleSchema run() {
    RuleSchema s;
    s.name = r_.name;
    for (const auto& [v, t] : r_.params) {
      if (!s.var_types.emplace(v, t).second)
        err(CheckErrorKind::DuplicateDeclaration,
            "variable '" + v + "' declared twice in rule " + r_.name);
    }
    types_ = &s.var_types;

    for (const auto& n : r_.lhs.nodes) lhs_nodes_.insert(n.id);
    for (const auto& n : r_.rhs.nodes) rhs_nodes_.insert(n.id);

    check_marks(r_.lhs);
    check_marks(r_.rhs);

    for (const auto& n : r_.lhs.nodes) check_lhs_label(n.label);
    for (const auto& e : r_.lhs.edges) check_lhs_label(e.label);

    std::set<std::string> iface;
    for (const auto& id : r_.interface) {
      if (!iface.insert(id).second)
        err(CheckErrorKind::DuplicateDeclaration,
            "interface lists node '" + id + "' twice in rule " + r_.name);
      if (!lhs_nodes_.count(id) || !rhs_nodes_.count(id))
        err(CheckErrorKind::InterfaceNotInBothSides,
            "interface node '" + id + "' of rule " + r_.name +
                " is not on both sides");
    }
    for (const auto& id : lhs_nodes_)
      if (rhs_nodes_.count(id) && !iface.count(id))
        err(CheckErrorKind::SharedNodeOutsideInterface,
            "node '" + id + "' appears on both sides of rule " + r_.name +
                " but not in its interface");

    for (const auto& n : r_.rhs.nodes) check_rhs_label(n.label);
    for (const auto& e : r_.rhs.edges) check_rhs_label(e.label);
    check_condition(r_.condition);

    s.lhs = sorted_pattern(r_.lhs);
    s.rhs = sorted_pattern(r_.rhs);
    s.interface = r_.interface;
    std::sort(s.interface.begin(), s.interface.end());
    s.condition = r_.condition;

    for (const auto& n : s.lhs.nodes)
      if (!iface.count(n.id)) s.deleted_nodes.push_back(n.id);
    for (const auto& n : s.rhs.nodes)
      if (!iface.count(n.id)) s.created_nodes.push_back(n.id);

    std::set<std::string> lhs_edge_ids, rhs_edge_ids;
    for (const auto& e : s.lhs.edges) lhs_edge_ids.insert(e.id);
    for (const auto& e : s.rhs.edges) rhs_edge_ids.insert(e.id);
    for (const auto& e : s.lhs.edges) {
      if (!rhs_edge_ids.count(e.id)) {
        s.deleted_edges.push_back(e.id);
        continue;
      }
      const RuleEdge* re = s.rhs.find_edge(e.id);
      if (re->src != e.src || re->tgt != e.tgt || !iface.count(e.src) ||
          !iface.count(e.tgt))
        err(CheckErrorKind::SharedNodeOutsideInterface,
            "edge '" + e.id + "' of rule " + r_.name +
                " appears on both sides but is not preserved between "
                "interface nodes");
      s.preserved_edges.push_back(e.id);
    }
    for (const auto& e : s.rhs.edges)
      if (!lhs_edge_ids.count(e.id)) s.created_edges.push_back(e.id);

    return s;
  }

 private:
  static PatternGraph sorted_pattern(const RuleGraph& g) {
    PatternGraph p;
    p.nodes = g.nodes;
    p.edges = g.edges;
    std::sort(p.nodes.begin(), p.nodes.end(),
              [](const RuleNode& a, const RuleNode& b) { return a.id < b.id; });
    std::sort(p.edges.begin(), p.edges.end(),
              [](const RuleEdge& a, const RuleEdge& b) { return a.id < b.id; });
    return p;
  }

  void check_marks(const RuleGraph& g) {
    for (const auto& n : g.nodes)
      if (n.label.mark == Mark::Dashed)
        err(CheckErrorKind::MarkOnWrongEntity,
            "node '" + n.id + "' of rule " + r_.name + " is marked dashed");
    for (const auto& e : g.edges)
      if (e.label.mark == Mark::Grey)
        err(CheckErrorKind::MarkOnWrongEntity,
            "edge '" + e.id + "' of rule " + r_.name + " is marked grey");
  }

  VarType declared(const std::string& v) {
    auto it = types_->find(v);
    if (it == types_->end())
      err(CheckErrorKind::UndeclaredVariable,
          "variable '" + v + "' is not declared in rule " + r_.name);
    return it->second;
  }

  // LHS labels: constants, variables and string concatenations only.
  void check_lhs_label(const RuleLabel& l) {
    int list_vars = 0;
    for (const auto& a : l.atoms) {
      switch (a.kind) {
        case AtomExpr::Kind::IntConst:
        case AtomExpr::Kind::StrConst:
          break;
        case AtomExpr::Kind::Var:
          if (declared(a.name) == VarType::List) ++list_vars;
          lhs_vars_.insert(a.name);
          break;
        case AtomExpr::Kind::Concat:
          check_lhs_concat(a);
          break;
        default:
          err(CheckErrorKind::LhsExpressionForbidden,
              "left-hand label of rule " + r_.name +
                  " contains an expression or degree operator");
      }
    }
    if (list_vars > 1)
      err(CheckErrorKind::TwoListVariablesInLabel,
          "a left-hand label of rule " + r_.name +
              " uses two list variables");
  }

  void check_lhs_concat(const AtomExpr& e) {
    std::vector<const AtomExpr*> parts;
    flatten_concat(e, parts);
    int string_vars = 0;
    for (const AtomExpr* p : parts) {
      if (p->kind == AtomExpr::Kind::StrConst) continue;
      if (p->kind != AtomExpr::Kind::Var)
        err(CheckErrorKind::LhsExpressionForbidden,
            "a concatenation in a left-hand label of rule " + r_.name +
                " contains a non-string part");
      VarType t = declared(p->name);
      if (t == VarType::String) ++string_vars;
      else if (t != VarType::Char)
        err(CheckErrorKind::TypeMismatch,
            "variable '" + p->name + "' of rule " + r_.name +
                " is used in a concatenation but is not char or string");
      lhs_vars_.insert(p->name);
    }
    if (string_vars > 1)
      err(CheckErrorKind::TwoStringVariablesInConcat,
          "a concatenation in a left-hand label of rule " + r_.name +
              " uses two string variables");
  }

  void require_lhs_var(const std::string& v) {
    declared(v);
    if (!lhs_vars_.count(v))
      err(CheckErrorKind::VariableNotInLHS,
          "variable '" + v + "' of rule " + r_.name +
              " is used but never bound on the left-hand side");
  }

  void require_lhs_node(const std::string& id) {
    if (!lhs_nodes_.count(id))
      err(CheckErrorKind::UnknownNodeId,
          "'" + id + "' does not name a left-hand node of rule " + r_.name);
  }

  // Expression typing for right-hand labels and conditions. Arithmetic is
  // integer-only; "." concatenation takes char/string parts.
  VarType expr_type(const AtomExpr& e) {
    switch (e.kind) {
      case AtomExpr::Kind::IntConst:
        return VarType::Int;
      case AtomExpr::Kind::StrConst:
        return VarType::String;
      case AtomExpr::Kind::Var:
        require_lhs_var(e.name);
        return declared(e.name);
      case AtomExpr::Kind::Indeg:
      case AtomExpr::Kind::Outdeg:
        require_lhs_node(e.name);
        return VarType::Int;
      case AtomExpr::Kind::Add:
      case AtomExpr::Kind::Sub:
      case AtomExpr::Kind::Mul:
      case AtomExpr::Kind::Div:
        for (const auto& a : e.args)
          if (expr_type(a) != VarType::Int)
            err(CheckErrorKind::TypeMismatch,
                "arithmetic in rule " + r_.name +
                    " applied to a non-integer operand");
        return VarType::Int;
      case AtomExpr::Kind::Concat:
        for (const auto& a : e.args) {
          VarType t = expr_type(a);
          if (t != VarType::Char && t != VarType::String)
            err(CheckErrorKind::TypeMismatch,
                "concatenation in rule " + r_.name +
                    " applied to a non-string operand");
        }
        return VarType::String;
    }
    return VarType::List;
  }

  void check_rhs_label(const RuleLabel& l) {
    for (const auto& a : l.atoms) expr_type(a);
  }

  void check_condition(const Condition& c) {
    switch (c.kind) {
      case Condition::Kind::True:
        return;
      case Condition::Kind::TypeIs:
        require_lhs_var(c.var);
        return;
      case Condition::Kind::Edge:
        require_lhs_node(c.src);
        require_lhs_node(c.tgt);
        if (c.label) {
          check_lhs_label(*c.label);
          for (const auto& a : c.label->atoms)
            if (a.kind == AtomExpr::Kind::Var) require_lhs_var(a.name);
        }
        return;
      case Condition::Kind::Rel: {
        VarType l = expr_type(c.exprs[0]);
        VarType r = expr_type(c.exprs[1]);
        if (c.rel != RelOp::Eq && c.rel != RelOp::Ne) {
          for (VarType t : {l, r})
            if (t != VarType::Int && t != VarType::Atom)
              err(CheckErrorKind::TypeMismatch,
                  "ordered comparison in rule " + r_.name +
                      " applied to a non-integer operand");
        }
        return;
      }
      case Condition::Kind::Not:
      case Condition::Kind::And:
      case Condition::Kind::Or:
        for (const auto& a : c.args) check_condition(a);
        return;
    }
  }

  const RuleDecl& r_;
  const VarTypeMap* types_ = nullptr;
  std::set<std::string> lhs_nodes_, rhs_nodes_;
  std::set<std::string> lhs_vars_;
};

void check_calls_resolved(const Command& c,
                          const std::map<std::string, RuleSchema>& rules) {
  switch (c.kind) {
    case Command::Kind::Call:
      for (const auto& n : c.names)
        if (!rules.count(n))
          err(CheckErrorKind::UndeclaredRule,
              "call to undeclared rule '" + n + "'");
      return;
    default:
      for (const auto& k : c.children) check_calls_resolved(k, rules);
      return;
  }
}

}  // namespace

CheckedProgram check(const Program& p) {
  std::set<std::string> names;
  int mains = 0;
  for (const auto& d : p.decls) {
    if (d.kind == Declaration::Kind::Main) {
      if (++mains > 1)
        err(CheckErrorKind::DuplicateDeclaration,
            "more than one Main declaration");
      continue;
    }
    if (!names.insert(d.name).second)
      err(CheckErrorKind::DuplicateDeclaration,
          "'" + d.name + "' is declared twice");
  }
  if (mains == 0) err(CheckErrorKind::NoMain, "program has no Main");

  Program expanded;
  try {
    expanded = expand_macros(p);
  } catch (const MacroError& e) {
    err(e.kind() == MacroError::Kind::Recursive
            ? CheckErrorKind::RecursiveMacro
            : CheckErrorKind::MacroInRuleSet,
        e.what());
  }

  CheckedProgram out;
  for (const auto& d : expanded.decls) {
    if (d.kind == Declaration::Kind::Rule)
      out.rules.emplace(d.rule.name, RuleChecker(d.rule).run());
    else if (d.kind == Declaration::Kind::Main)
      out.main = d.body;
  }
  check_calls_resolved(out.main, out.rules);
  return out;
}

}  // namespace gp2
