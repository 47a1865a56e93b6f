#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gp2/checker.hpp"
#include "gp2/graph.hpp"
#include "gp2/graph_match.hpp"

namespace gp2 {

/// A failure while evaluating a label expression or condition (division
/// by zero, arithmetic overflow, comparison of non-integers). These abort
/// the run with a diagnostic; they are not rule-match failures.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using NodeIdMap = std::map<std::string, NodeKey>;

/// True iff every host edge incident to a node that the rule deletes is
/// itself matched by a deleted LHS edge, so the rewrite leaves no edge
/// dangling.
bool dangling_condition(const HostGraph& g,
                        const std::vector<EdgeKey>& matched_edges,
                        const std::vector<NodeKey>& deleted_nodes);

/// Evaluates a label expression to its atom list. Variables take their
/// values from the environment; indeg/outdeg count host edges at the
/// matched node.
std::vector<Atom> eval_expression(const AtomExpr& e, const Environment& env,
                                  const HostGraph& g, const NodeIdMap& nodes);

HostLabel eval_label(const RuleLabel& l, const Environment& env,
                     const HostGraph& g, const NodeIdMap& nodes);

bool eval_condition(const Condition& c, const VarTypeMap& types,
                    const Environment& env, const HostGraph& g,
                    const NodeIdMap& nodes);

/// Applies the rule at a morphism that has already passed the dangling
/// and condition checks. Steps, in order: delete edges, delete nodes,
/// relabel nodes, add nodes, relabel edges, add edges. The input graph is
/// not modified.
HostGraph apply_at(const HostGraph& g, const RuleSchema& s,
                   const GraphMorphism& m);

using ResultSink = std::function<bool(const HostGraph&)>;

/// All results of applying the rule to g: one rewritten graph per
/// morphism that passes the dangling condition and the rule condition, in
/// match order, lazily driven by the sink.
bool apply_rule(const HostGraph& g, const RuleSchema& s,
                const ResultSink& sink);
std::vector<HostGraph> apply_rule_all(const HostGraph& g, const RuleSchema& s);

}  // namespace gp2
