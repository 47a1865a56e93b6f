#include "gp2/rule_apply.hpp"

#include <algorithm>
#include <set>

#include "gp2/label_match.hpp"

namespace gp2 {

bool dangling_condition(const HostGraph& g,
                        const std::vector<EdgeKey>& matched_edges,
                        const std::vector<NodeKey>& deleted_nodes) {
  std::set<EdgeKey> matched(matched_edges.begin(), matched_edges.end());
  for (NodeKey n : deleted_nodes)
    for (const EdgeKey& e : g.incident_edges(n))
      if (!matched.count(e)) return false;
  return true;
}

namespace {

std::int64_t int_atom(const std::vector<Atom>& v, const char* what) {
  if (v.size() != 1 || !std::holds_alternative<std::int64_t>(v[0]))
    throw EvalError(std::string(what) + " applied to a non-integer value");
  return std::get<std::int64_t>(v[0]);
}

std::int64_t eval_int(const AtomExpr& e, const Environment& env,
                      const HostGraph& g, const NodeIdMap& nodes) {
  return int_atom(eval_expression(e, env, g, nodes), "arithmetic");
}

std::string eval_string(const AtomExpr& e, const Environment& env,
                        const HostGraph& g, const NodeIdMap& nodes) {
  auto v = eval_expression(e, env, g, nodes);
  if (v.size() != 1 || !std::holds_alternative<std::string>(v[0]))
    throw EvalError("concatenation applied to a non-string value");
  return std::get<std::string>(v[0]);
}

}  // namespace

std::vector<Atom> eval_expression(const AtomExpr& e, const Environment& env,
                                  const HostGraph& g, const NodeIdMap& nodes) {
  switch (e.kind) {
    case AtomExpr::Kind::IntConst:
      return {Atom{e.int_value}};
    case AtomExpr::Kind::StrConst:
      return {Atom{e.name}};
    case AtomExpr::Kind::Var: {
      auto it = env.find(e.name);
      if (it == env.end())
        throw EvalError("variable '" + e.name + "' is unbound");
      return value_atoms(it->second);
    }
    case AtomExpr::Kind::Indeg:
      return {Atom{std::int64_t{static_cast<std::int64_t>(
          g.indegree(nodes.at(e.name)))}}};
    case AtomExpr::Kind::Outdeg:
      return {Atom{std::int64_t{static_cast<std::int64_t>(
          g.outdegree(nodes.at(e.name)))}}};
    case AtomExpr::Kind::Add: {
      std::int64_t a = eval_int(e.args[0], env, g, nodes);
      std::int64_t b = eval_int(e.args[1], env, g, nodes);
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r))
        throw EvalError("integer overflow in addition");
      return {Atom{r}};
    }
    case AtomExpr::Kind::Sub: {
      std::int64_t a = eval_int(e.args[0], env, g, nodes);
      std::int64_t b = eval_int(e.args[1], env, g, nodes);
      std::int64_t r;
      if (__builtin_sub_overflow(a, b, &r))
        throw EvalError("integer overflow in subtraction");
      return {Atom{r}};
    }
    case AtomExpr::Kind::Mul: {
      std::int64_t a = eval_int(e.args[0], env, g, nodes);
      std::int64_t b = eval_int(e.args[1], env, g, nodes);
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r))
        throw EvalError("integer overflow in multiplication");
      return {Atom{r}};
    }
    case AtomExpr::Kind::Div: {
      std::int64_t a = eval_int(e.args[0], env, g, nodes);
      std::int64_t b = eval_int(e.args[1], env, g, nodes);
      if (b == 0) throw EvalError("division by zero");
      if (a == INT64_MIN && b == -1)
        throw EvalError("integer overflow in division");
      return {Atom{a / b}};  // truncates toward zero
    }
    case AtomExpr::Kind::Concat:
      return {Atom{eval_string(e.args[0], env, g, nodes) +
                   eval_string(e.args[1], env, g, nodes)}};
  }
  throw EvalError("malformed expression");
}

HostLabel eval_label(const RuleLabel& l, const Environment& env,
                     const HostGraph& g, const NodeIdMap& nodes) {
  HostLabel out;
  out.mark = l.mark;
  for (const auto& a : l.atoms) {
    auto atoms = eval_expression(a, env, g, nodes);
    out.list.insert(out.list.end(), atoms.begin(), atoms.end());
  }
  return out;
}

bool eval_condition(const Condition& c, const VarTypeMap& types,
                    const Environment& env, const HostGraph& g,
                    const NodeIdMap& nodes) {
  switch (c.kind) {
    case Condition::Kind::True:
      return true;
    case Condition::Kind::TypeIs: {
      auto it = env.find(c.var);
      if (it == env.end())
        throw EvalError("variable '" + c.var + "' is unbound");
      auto atoms = value_atoms(it->second);
      if (atoms.size() != 1) return false;
      switch (c.type_test) {
        case VarType::Int:
          return std::holds_alternative<std::int64_t>(atoms[0]);
        case VarType::Char:
          return std::holds_alternative<std::string>(atoms[0]) &&
                 std::get<std::string>(atoms[0]).size() == 1;
        case VarType::String:
          return std::holds_alternative<std::string>(atoms[0]);
        case VarType::Atom:
          return true;
        case VarType::List:
          return true;
      }
      return false;
    }
    case Condition::Kind::Edge: {
      NodeKey src = nodes.at(c.src);
      NodeKey tgt = nodes.at(c.tgt);
      for (const EdgeKey& e : g.edges_between(src, tgt)) {
        if (!c.label) return true;
        // The filter tests the label; bindings do not escape.
        if (match_label(env, types, *c.label, g.edge_label(e))) return true;
      }
      return false;
    }
    case Condition::Kind::Rel: {
      auto lhs = eval_expression(c.exprs[0], env, g, nodes);
      auto rhs = eval_expression(c.exprs[1], env, g, nodes);
      switch (c.rel) {
        case RelOp::Eq:
          return lhs == rhs;
        case RelOp::Ne:
          return lhs != rhs;
        default:
          break;
      }
      std::int64_t a = int_atom(lhs, "ordered comparison");
      std::int64_t b = int_atom(rhs, "ordered comparison");
      switch (c.rel) {
        case RelOp::Gt: return a > b;
        case RelOp::Ge: return a >= b;
        case RelOp::Lt: return a < b;
        case RelOp::Le: return a <= b;
        default: return false;
      }
    }
    case Condition::Kind::Not:
      return !eval_condition(c.args[0], types, env, g, nodes);
    case Condition::Kind::And:
      return eval_condition(c.args[0], types, env, g, nodes) &&
             eval_condition(c.args[1], types, env, g, nodes);
    case Condition::Kind::Or:
      return eval_condition(c.args[0], types, env, g, nodes) ||
             eval_condition(c.args[1], types, env, g, nodes);
  }
  return false;
}

HostGraph apply_at(const HostGraph& g, const RuleSchema& s,
                   const GraphMorphism& m) {
  HostGraph h = g;

  // All RHS labels are evaluated against the matched graph g, before any
  // rewriting, so degree operators see the state the rule matched.
  for (const auto& id : s.deleted_edges) h.delete_edge(m.edge_map.at(id));
  for (const auto& id : s.deleted_nodes) h.delete_node(m.node_map.at(id));

  for (const auto& id : s.interface) {
    const RuleNode* rn = s.rhs.find_node(id);
    NodeKey k = m.node_map.at(id);
    h.relabel_node(k, eval_label(rn->label, m.env, g, m.node_map));
    h.set_root(k, rn->root);
  }

  NodeIdMap created;
  for (const auto& id : s.created_nodes) {
    const RuleNode* rn = s.rhs.find_node(id);
    created[id] =
        h.add_node({eval_label(rn->label, m.env, g, m.node_map), rn->root});
  }

  for (const auto& id : s.preserved_edges) {
    const RuleEdge* re = s.rhs.find_edge(id);
    h.relabel_edge(m.edge_map.at(id),
                   eval_label(re->label, m.env, g, m.node_map));
  }

  auto rhs_node_key = [&](const std::string& id) {
    auto it = created.find(id);
    return it != created.end() ? it->second : m.node_map.at(id);
  };
  for (const auto& id : s.created_edges) {
    const RuleEdge* re = s.rhs.find_edge(id);
    h.add_edge(rhs_node_key(re->src), rhs_node_key(re->tgt),
               eval_label(re->label, m.env, g, m.node_map));
  }
  return h;
}

bool apply_rule(const HostGraph& g, const RuleSchema& s,
                const ResultSink& sink) {
  return match_graph(s.lhs, s.var_types, g, [&](const GraphMorphism& m) {
    std::vector<EdgeKey> matched;
    matched.reserve(m.edge_map.size());
    for (const auto& [id, k] : m.edge_map) matched.push_back(k);
    std::vector<NodeKey> deleted;
    deleted.reserve(s.deleted_nodes.size());
    for (const auto& id : s.deleted_nodes)
      deleted.push_back(m.node_map.at(id));

    if (!dangling_condition(g, matched, deleted)) return true;
    if (!eval_condition(s.condition, s.var_types, m.env, g, m.node_map))
      return true;
    return sink(apply_at(g, s, m));
  });
}

std::vector<HostGraph> apply_rule_all(const HostGraph& g,
                                      const RuleSchema& s) {
  std::vector<HostGraph> out;
  apply_rule(g, s, [&](const HostGraph& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

}  // namespace gp2
