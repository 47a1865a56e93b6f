#pragma once

#include <functional>
#include <vector>

#include "gp2/checker.hpp"
#include "gp2/graph.hpp"
#include "gp2/isomorphism.hpp"
#include "gp2/rule_apply.hpp"

namespace gp2 {

/// One nondeterministic branch of the computation: a live graph with its
/// rule-application count, a failure with its count, or an unfinished
/// marker when the application bound was hit.
struct GraphState {
  enum class Kind { Active, Failed, Unfinished };

  Kind kind = Kind::Active;
  HostGraph graph;  // Active only
  int count = 0;    // Active and Failed

  static GraphState active(HostGraph g, int count) {
    return {Kind::Active, std::move(g), count};
  }
  static GraphState failed(int count) {
    return {Kind::Failed, HostGraph{}, count};
  }
  static GraphState unfinished() { return {Kind::Unfinished, HostGraph{}, 0}; }

  bool operator==(const GraphState& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case Kind::Active: return count == o.count && graph == o.graph;
      case Kind::Failed: return count == o.count;
      case Kind::Unfinished: return true;
    }
    return false;
  }
};

enum class Mode { AllResults, SingleResult };

struct EvalOutput {
  std::vector<IsoClass> classes;
  int failures = 0;
  int unfinished = 0;
  std::vector<int> active_counts;  // rule applications per Active terminal
  std::vector<int> failed_counts;  // count at which each branch failed
};

using StateSink = std::function<bool(const GraphState&)>;

/// Evaluates one command on one branch, handing every terminal state of
/// the resulting subtree to the sink in depth-first order. Failed and
/// Unfinished inputs pass through unchanged. A false sink result stops
/// the traversal (and is returned), so consumers pay only for the prefix
/// they demand.
bool eval_command(const CheckedProgram& prog, const Command& cmd,
                  const GraphState& st, int max_apps, const StateSink& sink);

std::vector<GraphState> eval_command_all(const CheckedProgram& prog,
                                         const Command& cmd,
                                         const GraphState& st, int max_apps);

/// Runs the whole program. AllResults enumerates every branch and
/// collates the output graphs into isomorphism classes; SingleResult
/// takes the first terminal state of the same enumeration.
EvalOutput eval_program(const CheckedProgram& prog, const HostGraph& host,
                        int max_apps, Mode mode);

}  // namespace gp2
