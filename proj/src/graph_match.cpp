#include "gp2/graph_match.hpp"

#include <algorithm>

namespace gp2 {

std::vector<std::vector<std::pair<NodeKey, Environment>>> candidate_nodes(
    const PatternGraph& lhs, const VarTypeMap& types, const HostGraph& g) {
  std::vector<std::vector<std::pair<NodeKey, Environment>>> out;
  out.reserve(lhs.nodes.size());
  for (const auto& ln : lhs.nodes) {
    std::vector<std::pair<NodeKey, Environment>> cands;
    for (const auto& [hk, hn] : g.node_map()) {
      if (ln.root && !hn.root) continue;  // rooted nodes match rooted only
      auto env = match_label(Environment{}, types, ln.label, hn.label);
      if (env) cands.emplace_back(hk, std::move(*env));
    }
    out.push_back(std::move(cands));
  }
  return out;
}

namespace {

bool extend_node_morphism(
    const PatternGraph& lhs,
    const std::vector<std::vector<std::pair<NodeKey, Environment>>>& cands,
    std::size_t at, NodeMorphism& cur, const NodeMorphismSink& sink) {
  if (at == lhs.nodes.size()) return sink(cur);
  for (const auto& [hk, env] : cands[at]) {
    bool used = false;
    for (const auto& [id, mapped] : cur.node_map)
      if (mapped == hk) {
        used = true;
        break;
      }
    if (used) continue;
    auto merged = merge_environments(cur.env, env);
    if (!merged) continue;
    Environment saved = std::move(cur.env);
    cur.env = std::move(*merged);
    cur.node_map.emplace(lhs.nodes[at].id, hk);
    bool keep = extend_node_morphism(lhs, cands, at + 1, cur, sink);
    cur.node_map.erase(lhs.nodes[at].id);
    cur.env = std::move(saved);
    if (!keep) return false;
  }
  return true;
}

bool extend_edge_morphism(const PatternGraph& lhs, const VarTypeMap& types,
                          const HostGraph& g, std::size_t at,
                          GraphMorphism& cur, const MorphismSink& sink) {
  if (at == lhs.edges.size()) return sink(cur);
  const RuleEdge& le = lhs.edges[at];
  NodeKey src = cur.node_map.at(le.src);
  NodeKey tgt = cur.node_map.at(le.tgt);
  for (const EdgeKey& hk : g.edges_between(src, tgt)) {
    bool used = false;
    for (const auto& [id, mapped] : cur.edge_map)
      if (mapped == hk) {
        used = true;
        break;
      }
    if (used) continue;
    auto env = match_label(cur.env, types, le.label, g.edge_label(hk));
    if (!env) continue;
    Environment saved = std::move(cur.env);
    cur.env = std::move(*env);
    cur.edge_map.emplace(le.id, hk);
    bool keep = extend_edge_morphism(lhs, types, g, at + 1, cur, sink);
    cur.edge_map.erase(le.id);
    cur.env = std::move(saved);
    if (!keep) return false;
  }
  return true;
}

}  // namespace

bool for_each_node_morphism(const PatternGraph& lhs, const VarTypeMap& types,
                            const HostGraph& g, const NodeMorphismSink& sink) {
  auto cands = candidate_nodes(lhs, types, g);
  NodeMorphism cur;
  return extend_node_morphism(lhs, cands, 0, cur, sink);
}

std::vector<NodeMorphism> node_morphisms(const PatternGraph& lhs,
                                         const VarTypeMap& types,
                                         const HostGraph& g) {
  std::vector<NodeMorphism> out;
  for_each_node_morphism(lhs, types, g, [&](const NodeMorphism& nm) {
    out.push_back(nm);
    return true;
  });
  return out;
}

bool edge_morphisms(const PatternGraph& lhs, const VarTypeMap& types,
                    const HostGraph& g, const NodeMorphism& nm,
                    const MorphismSink& sink) {
  GraphMorphism cur;
  cur.env = nm.env;
  cur.node_map = nm.node_map;
  return extend_edge_morphism(lhs, types, g, 0, cur, sink);
}

std::vector<GraphMorphism> edge_morphisms_all(const PatternGraph& lhs,
                                              const VarTypeMap& types,
                                              const HostGraph& g,
                                              const NodeMorphism& nm) {
  std::vector<GraphMorphism> out;
  edge_morphisms(lhs, types, g, nm, [&](const GraphMorphism& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool match_graph(const PatternGraph& lhs, const VarTypeMap& types,
                 const HostGraph& g, const MorphismSink& sink) {
  return for_each_node_morphism(lhs, types, g, [&](const NodeMorphism& nm) {
    return edge_morphisms(lhs, types, g, nm, sink);
  });
}

std::vector<GraphMorphism> match_graph_all(const PatternGraph& lhs,
                                           const VarTypeMap& types,
                                           const HostGraph& g) {
  std::vector<GraphMorphism> out;
  match_graph(lhs, types, g, [&](const GraphMorphism& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace gp2
