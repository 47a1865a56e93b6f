#include "gp2/evaluator.hpp"

namespace gp2 {

bool eval_command(const CheckedProgram& prog, const Command& cmd,
                  const GraphState& st, int max_apps, const StateSink& sink) {
  if (st.kind != GraphState::Kind::Active) return sink(st);

  switch (cmd.kind) {
    case Command::Kind::Skip:
      return sink(st);

    case Command::Kind::Fail:
      return sink(GraphState::failed(st.count));

    case Command::Kind::Call: {
      if (st.count == max_apps) return sink(GraphState::unfinished());
      bool any = false;
      for (const auto& name : cmd.names) {
        const RuleSchema& rule = prog.rules.at(name);
        bool keep = apply_rule(st.graph, rule, [&](const HostGraph& h) {
          any = true;
          return sink(GraphState::active(h, st.count + 1));
        });
        if (!keep) return false;
      }
      if (!any) return sink(GraphState::failed(st.count));
      return true;
    }

    case Command::Kind::Seq:
      return eval_command(prog, cmd.children[0], st, max_apps,
                          [&](const GraphState& mid) {
                            if (mid.kind != GraphState::Kind::Active)
                              return sink(mid);
                            return eval_command(prog, cmd.children[1], mid,
                                                max_apps, sink);
                          });

    case Command::Kind::Loop:
      // A failing iteration exits the loop with the state the iteration
      // was entered on, graph and count both.
      return eval_command(prog, cmd.children[0], st, max_apps,
                          [&](const GraphState& r) {
                            switch (r.kind) {
                              case GraphState::Kind::Active:
                                return eval_command(prog, cmd, r, max_apps,
                                                    sink);
                              case GraphState::Kind::Failed:
                                return sink(st);
                              case GraphState::Kind::Unfinished:
                                return sink(r);
                            }
                            return true;
                          });

    case Command::Kind::If:
    case Command::Kind::Try: {
      const Command& cond = cmd.children[0];
      const Command& then_c = cmd.children[1];
      const Command& else_c = cmd.children[2];
      bool is_try = cmd.kind == Command::Kind::Try;
      // The condition runs on a copy: every branch that succeeds selects
      // then (from the condition's result for try, from the original
      // state for if), every branch that fails selects else from the
      // original state.
      return eval_command(prog, cond, st, max_apps, [&](const GraphState& r) {
        switch (r.kind) {
          case GraphState::Kind::Active:
            return eval_command(prog, then_c, is_try ? r : st, max_apps, sink);
          case GraphState::Kind::Failed:
            return eval_command(prog, else_c, st, max_apps, sink);
          case GraphState::Kind::Unfinished:
            return sink(r);
        }
        return true;
      });
    }
  }
  return true;
}

std::vector<GraphState> eval_command_all(const CheckedProgram& prog,
                                         const Command& cmd,
                                         const GraphState& st, int max_apps) {
  std::vector<GraphState> out;
  eval_command(prog, cmd, st, max_apps, [&](const GraphState& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

EvalOutput eval_program(const CheckedProgram& prog, const HostGraph& host,
                        int max_apps, Mode mode) {
  std::vector<HostGraph> outputs;
  EvalOutput out;
  eval_command(prog, prog.main, GraphState::active(host, 0), max_apps,
               [&](const GraphState& s) {
                 switch (s.kind) {
                   case GraphState::Kind::Active:
                     outputs.push_back(s.graph);
                     out.active_counts.push_back(s.count);
                     break;
                   case GraphState::Kind::Failed:
                     ++out.failures;
                     out.failed_counts.push_back(s.count);
                     break;
                   case GraphState::Kind::Unfinished:
                     ++out.unfinished;
                     break;
                 }
                 return mode == Mode::AllResults;
               });
  out.classes = partition_classes(outputs);
  return out;
}

}  // namespace gp2
