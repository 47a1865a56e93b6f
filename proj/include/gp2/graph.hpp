#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace gp2 {

/// Colour decoration carried by a label. Grey may appear on nodes only,
/// Dashed on edges only; both constraints are enforced when nodes and
/// edges are created or relabelled.
enum class Mark { None, Red, Green, Blue, Grey, Dashed };

const char* mark_name(Mark m);

/// A label atom: a 64-bit signed integer or a character string.
/// Characters are represented as strings of length one.
using Atom = std::variant<std::int64_t, std::string>;

std::string atom_text(const Atom& a);

/// A host label is a list of atoms plus a mark. The empty list is the
/// "unlabelled" label.
struct HostLabel {
  std::vector<Atom> list;
  Mark mark = Mark::None;

  bool operator==(const HostLabel&) const = default;
  bool operator<(const HostLabel& o) const {
    return std::tie(list, mark) < std::tie(o.list, o.mark);
  }
};

using NodeKey = int;

/// Edge keys are (source, target, index) triples; the index disambiguates
/// parallel edges between the same pair of nodes.
struct EdgeKey {
  NodeKey src = 0;
  NodeKey tgt = 0;
  int index = 0;

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct HostNode {
  HostLabel label;
  bool root = false;

  bool operator==(const HostNode&) const = default;
};

/// Misuse of the graph store (absent keys, dangling deletes, marks on the
/// wrong kind of entity). These indicate a bug in the caller, not a
/// recoverable input condition.
class GraphError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A directed labelled multigraph stored as a pair of ordered maps from
/// keys to labels. Node keys are handed out by a monotone counter and
/// never reused; edge indices per source node likewise. Enumeration is
/// always in ascending key order, so identical build sequences yield
/// identical graphs.
///
/// Copying a HostGraph gives an independent value; all evaluator branching
/// works on copies, so a graph handed to a rule application is never
/// mutated.
class HostGraph {
 public:
  NodeKey add_node(HostNode n);
  EdgeKey add_edge(NodeKey src, NodeKey tgt, HostLabel label);

  /// Deleting a node with incident edges is an error (the rule applier
  /// must delete edges first; a violation means the dangling condition
  /// was not checked).
  void delete_node(NodeKey k);
  void delete_edge(const EdgeKey& k);

  void relabel_node(NodeKey k, HostLabel label);
  void relabel_edge(const EdgeKey& k, HostLabel label);
  void set_root(NodeKey k, bool root);

  bool has_node(NodeKey k) const { return nodes_.count(k) != 0; }
  bool has_edge(const EdgeKey& k) const { return edges_.count(k) != 0; }
  const HostNode& node(NodeKey k) const;
  const HostLabel& edge_label(const EdgeKey& k) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Keys in ascending order.
  std::vector<NodeKey> nodes() const;
  std::vector<EdgeKey> edges() const;

  const std::map<NodeKey, HostNode>& node_map() const { return nodes_; }
  const std::map<EdgeKey, HostLabel>& edge_map() const { return edges_; }

  /// All edges with source or target k; a loop at k is reported once.
  std::vector<EdgeKey> incident_edges(NodeKey k) const;

  /// Edges src -> tgt in ascending index order.
  std::vector<EdgeKey> edges_between(NodeKey src, NodeKey tgt) const;

  int indegree(NodeKey k) const;
  int outdegree(NodeKey k) const;

  /// Structural sanity: every edge endpoint names a live node.
  bool valid() const;

  /// Content equality (nodes and edges); key-allocation counters are not
  /// compared, so adding and removing an isolated node round-trips.
  bool operator==(const HostGraph& o) const {
    return nodes_ == o.nodes_ && edges_ == o.edges_;
  }

 private:
  std::map<NodeKey, HostNode> nodes_;
  std::map<EdgeKey, HostLabel> edges_;
  NodeKey next_node_key_ = 1;
  std::map<NodeKey, int> next_edge_index_;
};

}  // namespace gp2
