#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gp2/checker.hpp"
#include "gp2/graph.hpp"
#include "gp2/label_match.hpp"

namespace gp2 {

/// Stage one of matching: an environment plus an injective map from LHS
/// node ids to host node keys.
struct NodeMorphism {
  Environment env;
  std::map<std::string, NodeKey> node_map;
};

/// A complete match: the node morphism extended with an injective edge
/// map whose endpoints agree with the node map and whose labels match
/// under the environment.
struct GraphMorphism {
  Environment env;
  std::map<std::string, NodeKey> node_map;
  std::map<std::string, EdgeKey> edge_map;

  bool operator==(const GraphMorphism&) const = default;
};

/// Return false from a sink to stop the enumeration early; enumerating
/// functions hand the stop back as their own false result. Cost is
/// proportional to the prefix demanded.
using MorphismSink = std::function<bool(const GraphMorphism&)>;
using NodeMorphismSink = std::function<bool(const NodeMorphism&)>;

/// For each LHS node (in id order), every host node that matches it by
/// label and rootedness, in ascending key order, paired with the
/// environment extension the label match produced.
std::vector<std::vector<std::pair<NodeKey, Environment>>> candidate_nodes(
    const PatternGraph& lhs, const VarTypeMap& types, const HostGraph& g);

/// All injective selections from the candidate lists whose environments
/// merge compatibly, in lexicographic order by LHS node id then host key.
bool for_each_node_morphism(const PatternGraph& lhs, const VarTypeMap& types,
                            const HostGraph& g, const NodeMorphismSink& sink);
std::vector<NodeMorphism> node_morphisms(const PatternGraph& lhs,
                                         const VarTypeMap& types,
                                         const HostGraph& g);

/// All extensions of a node morphism to complete morphisms: candidates
/// for an LHS edge are exactly the host edges between its mapped
/// endpoints, label-checked under the evolving environment and injective
/// over parallel candidates.
bool edge_morphisms(const PatternGraph& lhs, const VarTypeMap& types,
                    const HostGraph& g, const NodeMorphism& nm,
                    const MorphismSink& sink);
std::vector<GraphMorphism> edge_morphisms_all(const PatternGraph& lhs,
                                              const VarTypeMap& types,
                                              const HostGraph& g,
                                              const NodeMorphism& nm);

/// The full two-stage enumeration: node morphisms, each extended by all
/// compatible edge maps. Deterministic; lazily driven by the sink.
bool match_graph(const PatternGraph& lhs, const VarTypeMap& types,
                 const HostGraph& g, const MorphismSink& sink);
std::vector<GraphMorphism> match_graph_all(const PatternGraph& lhs,
                                           const VarTypeMap& types,
                                           const HostGraph& g);

}  // namespace gp2
