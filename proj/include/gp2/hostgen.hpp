#pragma once

#include <string>

#include "gp2/graph.hpp"

namespace gp2 {

/// Benchmark host-graph families, returned as host-graph text.
///
/// linear n: a chain of n nodes with empty labels and n-1 empty edges.
/// cyclic n: the chain plus an edge from the last node back to the first.
/// grid w h: a lattice w wide and h tall with w(h-1) + h(w-1) edges, all
///   directed rightwards or downwards; the top-left node is marked grey,
///   horizontal edges cost 1 and vertical edges cost 2.
/// gen n: a single node labelled n (the generation-number seed).
///
/// Sizes must be at least 1; std::invalid_argument otherwise.
std::string linear_host(int n);
std::string cyclic_host(int n);
std::string grid_host(int w, int h);
std::string gen_host(int n);

HostGraph linear_host_graph(int n);
HostGraph cyclic_host_graph(int n);
HostGraph grid_host_graph(int w, int h);
HostGraph gen_host_graph(int n);

}  // namespace gp2
