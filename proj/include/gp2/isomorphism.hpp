#pragma once

#include <vector>

#include "gp2/graph.hpp"

namespace gp2 {

struct IsoClass {
  HostGraph representative;
  int count = 1;
};

/// True iff a bijection on nodes exists that preserves labels, marks and
/// root flags and induces a bijection on edges preserving source, target
/// and label. Parallel edges are compared as multisets of labels per
/// (source, target) pair.
bool isomorphic(const HostGraph& a, const HostGraph& b);

/// Greedy left-to-right partition into isomorphism classes; class order
/// is first-occurrence order and counts sum to the input size.
std::vector<IsoClass> partition_classes(const std::vector<HostGraph>& gs);

}  // namespace gp2
