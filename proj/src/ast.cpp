#include "gp2/ast.hpp"

#include <map>
#include <set>

namespace gp2 {

const char* var_type_name(VarType t) {
  switch (t) {
    case VarType::Int: return "int";
    case VarType::Char: return "char";
    case VarType::String: return "string";
    case VarType::Atom: return "atom";
    case VarType::List: return "list";
  }
  return "?";
}

const char* rel_op_text(RelOp op) {
  switch (op) {
    case RelOp::Eq: return "=";
    case RelOp::Ne: return "!=";
    case RelOp::Gt: return ">";
    case RelOp::Ge: return ">=";
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
  }
  return "?";
}

AtomExpr AtomExpr::integer(std::int64_t v) {
  AtomExpr e;
  e.kind = Kind::IntConst;
  e.int_value = v;
  return e;
}

AtomExpr AtomExpr::str(std::string s) {
  AtomExpr e;
  e.kind = Kind::StrConst;
  e.name = std::move(s);
  return e;
}

AtomExpr AtomExpr::var(std::string name) {
  AtomExpr e;
  e.kind = Kind::Var;
  e.name = std::move(name);
  return e;
}

AtomExpr AtomExpr::binary(Kind op, AtomExpr lhs, AtomExpr rhs) {
  AtomExpr e;
  e.kind = op;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

AtomExpr AtomExpr::degree(Kind op, std::string node_id) {
  AtomExpr e;
  e.kind = op;
  e.name = std::move(node_id);
  return e;
}

Condition Condition::truth() { return Condition{}; }

Condition Condition::type_is(VarType t, std::string var) {
  Condition c;
  c.kind = Kind::TypeIs;
  c.type_test = t;
  c.var = std::move(var);
  return c;
}

Condition Condition::edge(std::string src, std::string tgt,
                          std::optional<RuleLabel> label) {
  Condition c;
  c.kind = Kind::Edge;
  c.src = std::move(src);
  c.tgt = std::move(tgt);
  c.label = std::move(label);
  return c;
}

Condition Condition::relation(RelOp op, AtomExpr lhs, AtomExpr rhs) {
  Condition c;
  c.kind = Kind::Rel;
  c.rel = op;
  c.exprs.push_back(std::move(lhs));
  c.exprs.push_back(std::move(rhs));
  return c;
}

Condition Condition::negate(Condition c) {
  Condition n;
  n.kind = Kind::Not;
  n.args.push_back(std::move(c));
  return n;
}

Condition Condition::conj(Condition a, Condition b) {
  Condition c;
  c.kind = Kind::And;
  c.args.push_back(std::move(a));
  c.args.push_back(std::move(b));
  return c;
}

Condition Condition::disj(Condition a, Condition b) {
  Condition c;
  c.kind = Kind::Or;
  c.args.push_back(std::move(a));
  c.args.push_back(std::move(b));
  return c;
}

const RuleNode* RuleGraph::find_node(const std::string& id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

const RuleEdge* RuleGraph::find_edge(const std::string& id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

Command Command::call(std::vector<std::string> names) {
  Command c;
  c.kind = Kind::Call;
  c.names = std::move(names);
  return c;
}

Command Command::seq(Command a, Command b) {
  Command c;
  c.kind = Kind::Seq;
  c.children.push_back(std::move(a));
  c.children.push_back(std::move(b));
  return c;
}

Command Command::loop(Command body) {
  Command c;
  c.kind = Kind::Loop;
  c.children.push_back(std::move(body));
  return c;
}

Command Command::branch(Kind k, Command cond, Command then_c, Command else_c) {
  Command c;
  c.kind = k;
  c.children.push_back(std::move(cond));
  c.children.push_back(std::move(then_c));
  c.children.push_back(std::move(else_c));
  return c;
}

Command Command::skip() { return Command{}; }

Command Command::fail() {
  Command c;
  c.kind = Kind::Fail;
  return c;
}

const Command* Program::main() const {
  for (const auto& d : decls)
    if (d.kind == Declaration::Kind::Main) return &d.body;
  return nullptr;
}

const RuleDecl& rule_lookup(const std::string& name, const Program& p) {
  for (const auto& d : p.decls)
    if (d.kind == Declaration::Kind::Rule && d.rule.name == name)
      return d.rule;
  throw std::out_of_range("no rule named '" + name + "'");
}

namespace {

class MacroExpander {
 public:
  explicit MacroExpander(const Program& p) {
    for (const auto& d : p.decls)
      if (d.kind == Declaration::Kind::Macro) macros_[d.name] = &d.body;
  }

  Command expand(const Command& c) {
    switch (c.kind) {
      case Command::Kind::Call: {
        if (c.names.size() == 1) {
          auto it = macros_.find(c.names[0]);
          if (it != macros_.end()) return expand_macro(c.names[0], *it->second);
          return c;
        }
        for (const auto& n : c.names)
          if (macros_.count(n))
            throw MacroError(MacroError::Kind::InRuleSet,
                             "macro '" + n + "' used inside a rule set");
        return c;
      }
      case Command::Kind::Seq:
      case Command::Kind::Loop:
      case Command::Kind::If:
      case Command::Kind::Try: {
        Command out = c;
        for (auto& child : out.children) child = expand(child);
        return out;
      }
      case Command::Kind::Skip:
      case Command::Kind::Fail:
        return c;
    }
    return c;
  }

 private:
  Command expand_macro(const std::string& name, const Command& body) {
    if (!in_progress_.insert(name).second)
      throw MacroError(MacroError::Kind::Recursive,
                       "macro '" + name + "' expands to itself");
    Command out = expand(body);
    in_progress_.erase(name);
    return out;
  }

  std::map<std::string, const Command*> macros_;
  std::set<std::string> in_progress_;
};

}  // namespace

Program expand_macros(const Program& p) {
  MacroExpander ex(p);
  Program out;
  for (const auto& d : p.decls) {
    if (d.kind == Declaration::Kind::Macro) continue;
    Declaration nd = d;
    if (d.kind == Declaration::Kind::Main) nd.body = ex.expand(d.body);
    out.decls.push_back(std::move(nd));
  }
  return out;
}

}  // namespace gp2
