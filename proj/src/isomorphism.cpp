#include "gp2/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace gp2 {

namespace {

std::vector<HostLabel> labels_between(const HostGraph& g, NodeKey s,
                                      NodeKey t) {
  std::vector<HostLabel> out;
  for (const EdgeKey& e : g.edges_between(s, t)) out.push_back(g.edge_label(e));
  std::sort(out.begin(), out.end());
  return out;
}

using Colouring = std::map<NodeKey, int>;

std::vector<int> colour_multiset(const Colouring& c) {
  std::vector<int> out;
  out.reserve(c.size());
  for (const auto& [k, v] : c) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

// Iterated neighbourhood refinement over both graphs with a shared
// dictionary: a node's next colour combines its colour with the multiset
// of (direction, edge label, endpoint colour) over its incident edges.
// Isomorphic nodes always receive equal colours, so restricting
// candidates to equal colours never loses a real isomorphism. Returns
// false early when the colour multisets of the two graphs diverge.
bool refine_colours(const HostGraph& a, const HostGraph& b, Colouring& ca,
                    Colouring& cb) {
  {
    std::map<std::pair<HostLabel, bool>, int> ids;
    auto base = [&](const HostGraph& g, Colouring& c) {
      for (const auto& [k, n] : g.node_map()) {
        auto [it, fresh] = ids.emplace(std::make_pair(n.label, n.root),
                                       static_cast<int>(ids.size()));
        (void)fresh;
        c[k] = it->second;
      }
    };
    base(a, ca);
    base(b, cb);
  }
  if (colour_multiset(ca) != colour_multiset(cb)) return false;

  std::size_t classes = 0;
  for (std::size_t round = 0; round < a.node_count(); ++round) {
    using Item = std::tuple<int, HostLabel, int>;  // direction, label, colour
    using Key = std::pair<int, std::vector<Item>>;
    std::map<Key, int> ids;

    auto next = [&](const HostGraph& g, const Colouring& c) {
      std::map<NodeKey, std::vector<Item>> items;
      for (const auto& [e, l] : g.edge_map()) {
        items[e.src].emplace_back(0, l, c.at(e.tgt));
        items[e.tgt].emplace_back(1, l, c.at(e.src));
      }
      Colouring out;
      for (const auto& [k, n] : g.node_map()) {
        auto& v = items[k];
        std::sort(v.begin(), v.end());
        auto [it, fresh] = ids.emplace(Key{c.at(k), std::move(v)},
                                       static_cast<int>(ids.size()));
        (void)fresh;
        out[k] = it->second;
      }
      return out;
    };

    Colouring na = next(a, ca);
    Colouring nb = next(b, cb);
    if (colour_multiset(na) != colour_multiset(nb)) return false;
    ca = std::move(na);
    cb = std::move(nb);
    std::set<int> distinct;
    for (const auto& [k, v] : ca) distinct.insert(v);
    if (distinct.size() == classes || distinct.size() == a.node_count())
      break;  // colouring is stable or discrete
    classes = distinct.size();
  }
  return true;
}

class IsoSearch {
 public:
  IsoSearch(const HostGraph& a, const HostGraph& b) : a_(a), b_(b) {}

  bool run() {
    if (a_.node_count() != b_.node_count()) return false;
    if (a_.edge_count() != b_.edge_count()) return false;
    if (a_.node_count() == 0) return true;

    Colouring ca, cb;
    if (!refine_colours(a_, b_, ca, cb)) return false;
    for (const auto& [k, col] : cb) groups_[col].push_back(k);

    order_a(ca);
    return extend(0);
  }

 private:
  // Order a's nodes so that each next node touches the part already
  // mapped when possible, preferring small candidate classes.
  void order_a(const Colouring& ca) {
    std::map<NodeKey, std::vector<NodeKey>> adj;
    for (const auto& [e, l] : a_.edge_map()) {
      adj[e.src].push_back(e.tgt);
      adj[e.tgt].push_back(e.src);
    }
    std::set<NodeKey> left;
    for (const auto& [k, n] : a_.node_map()) left.insert(k);
    std::map<NodeKey, int> attached;  // ordered neighbours per node

    while (!left.empty()) {
      NodeKey best = *left.begin();
      auto score = [&](NodeKey k) {
        return std::tuple(-attached[k],
                          static_cast<int>(groups_.at(ca.at(k)).size()), k);
      };
      for (NodeKey k : left)
        if (score(k) < score(best)) best = k;
      left.erase(best);
      order_.push_back(best);
      cands_.push_back(&groups_.at(ca.at(best)));
      for (NodeKey n : adj[best])
        if (left.count(n)) ++attached[n];
    }
  }

  bool extend(std::size_t at) {
    if (at == order_.size()) return true;
    NodeKey u = order_[at];
    for (NodeKey v : *cands_[at]) {
      if (used_.count(v)) continue;
      if (!consistent(u, v)) continue;
      map_[u] = v;
      used_.insert(v);
      if (extend(at + 1)) return true;
      used_.erase(v);
      map_.erase(u);
    }
    return false;
  }

  // Edge structure between u and every already-mapped node must agree,
  // including loops and parallel-edge label multisets.
  bool consistent(NodeKey u, NodeKey v) {
    if (labels_between(a_, u, u) != labels_between(b_, v, v)) return false;
    for (const auto& [w, x] : map_) {
      if (labels_between(a_, u, w) != labels_between(b_, v, x)) return false;
      if (labels_between(a_, w, u) != labels_between(b_, x, v)) return false;
    }
    return true;
  }

  const HostGraph& a_;
  const HostGraph& b_;
  std::map<int, std::vector<NodeKey>> groups_;
  std::vector<NodeKey> order_;
  std::vector<const std::vector<NodeKey>*> cands_;
  std::map<NodeKey, NodeKey> map_;
  std::set<NodeKey> used_;
};

}  // namespace

bool isomorphic(const HostGraph& a, const HostGraph& b) {
  return IsoSearch(a, b).run();
}

std::vector<IsoClass> partition_classes(const std::vector<HostGraph>& gs) {
  std::vector<IsoClass> out;
  for (const HostGraph& g : gs) {
    bool placed = false;
    for (IsoClass& c : out) {
      if (isomorphic(c.representative, g)) {
        ++c.count;
        placed = true;
        break;
      }
    }
    if (!placed) out.push_back(IsoClass{g, 1});
  }
  return out;
}

}  // namespace gp2
