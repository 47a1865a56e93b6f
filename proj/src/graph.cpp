#include "gp2/graph.hpp"

#include <algorithm>

namespace gp2 {

const char* mark_name(Mark m) {
  switch (m) {
    case Mark::None: return "none";
    case Mark::Red: return "red";
    case Mark::Green: return "green";
    case Mark::Blue: return "blue";
    case Mark::Grey: return "grey";
    case Mark::Dashed: return "dashed";
  }
  return "?";
}

std::string atom_text(const Atom& a) {
  if (const auto* i = std::get_if<std::int64_t>(&a)) return std::to_string(*i);
  return "\"" + std::get<std::string>(a) + "\"";
}

NodeKey HostGraph::add_node(HostNode n) {
  if (n.label.mark == Mark::Dashed)
    throw GraphError("node label may not be marked dashed");
  NodeKey k = next_node_key_++;
  nodes_.emplace(k, std::move(n));
  return k;
}

EdgeKey HostGraph::add_edge(NodeKey src, NodeKey tgt, HostLabel label) {
  if (!has_node(src) || !has_node(tgt))
    throw GraphError("edge endpoint does not exist");
  if (label.mark == Mark::Grey)
    throw GraphError("edge label may not be marked grey");
  EdgeKey k{src, tgt, next_edge_index_[src]++};
  edges_.emplace(k, std::move(label));
  return k;
}

void HostGraph::delete_node(NodeKey k) {
  if (!has_node(k)) throw GraphError("delete of absent node");
  if (!incident_edges(k).empty())
    throw GraphError("delete of node with incident edges");
  nodes_.erase(k);
  next_edge_index_.erase(k);
}

void HostGraph::delete_edge(const EdgeKey& k) {
  if (edges_.erase(k) == 0) throw GraphError("delete of absent edge");
}

void HostGraph::relabel_node(NodeKey k, HostLabel label) {
  auto it = nodes_.find(k);
  if (it == nodes_.end()) throw GraphError("relabel of absent node");
  if (label.mark == Mark::Dashed)
    throw GraphError("node label may not be marked dashed");
  it->second.label = std::move(label);
}

void HostGraph::relabel_edge(const EdgeKey& k, HostLabel label) {
  auto it = edges_.find(k);
  if (it == edges_.end()) throw GraphError("relabel of absent edge");
  if (label.mark == Mark::Grey)
    throw GraphError("edge label may not be marked grey");
  it->second = std::move(label);
}

void HostGraph::set_root(NodeKey k, bool root) {
  auto it = nodes_.find(k);
  if (it == nodes_.end()) throw GraphError("set_root of absent node");
  it->second.root = root;
}

const HostNode& HostGraph::node(NodeKey k) const {
  auto it = nodes_.find(k);
  if (it == nodes_.end()) throw GraphError("lookup of absent node");
  return it->second;
}

const HostLabel& HostGraph::edge_label(const EdgeKey& k) const {
  auto it = edges_.find(k);
  if (it == edges_.end()) throw GraphError("lookup of absent edge");
  return it->second;
}

std::vector<NodeKey> HostGraph::nodes() const {
  std::vector<NodeKey> out;
  out.reserve(nodes_.size());
  for (const auto& [k, n] : nodes_) out.push_back(k);
  return out;
}

std::vector<EdgeKey> HostGraph::edges() const {
  std::vector<EdgeKey> out;
  out.reserve(edges_.size());
  for (const auto& [k, l] : edges_) out.push_back(k);
  return out;
}

std::vector<EdgeKey> HostGraph::incident_edges(NodeKey k) const {
  if (!has_node(k)) throw GraphError("incident_edges of absent node");
  std::vector<EdgeKey> out;
  for (const auto& [e, l] : edges_)
    if (e.src == k || e.tgt == k) out.push_back(e);
  return out;
}

std::vector<EdgeKey> HostGraph::edges_between(NodeKey src, NodeKey tgt) const {
  std::vector<EdgeKey> out;
  for (auto it = edges_.lower_bound(EdgeKey{src, tgt, 0});
       it != edges_.end() && it->first.src == src && it->first.tgt == tgt; ++it)
    out.push_back(it->first);
  return out;
}

int HostGraph::indegree(NodeKey k) const {
  int n = 0;
  for (const auto& [e, l] : edges_)
    if (e.tgt == k) ++n;
  return n;
}

int HostGraph::outdegree(NodeKey k) const {
  int n = 0;
  for (auto it = edges_.lower_bound(EdgeKey{k, 0, 0});
       it != edges_.end() && it->first.src == k; ++it)
    ++n;
  return n;
}

bool HostGraph::valid() const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const auto& e) {
    return has_node(e.first.src) && has_node(e.first.tgt);
  });
}

}  // namespace gp2
