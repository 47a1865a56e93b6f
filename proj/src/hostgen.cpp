#include "gp2/hostgen.hpp"

#include <stdexcept>

#include "gp2/parser.hpp"

namespace gp2 {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace

HostGraph linear_host_graph(int n) {
  require_positive(n, "linear size");
  HostGraph g;
  std::vector<NodeKey> keys;
  for (int i = 0; i < n; ++i) keys.push_back(g.add_node({HostLabel{}, false}));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(keys[i], keys[i + 1], HostLabel{});
  return g;
}

HostGraph cyclic_host_graph(int n) {
  require_positive(n, "cyclic size");
  HostGraph g = linear_host_graph(n);
  auto keys = g.nodes();
  g.add_edge(keys.back(), keys.front(), HostLabel{});
  return g;
}

HostGraph grid_host_graph(int w, int h) {
  require_positive(w, "grid width");
  require_positive(h, "grid height");
  HostGraph g;
  std::vector<NodeKey> keys;
  for (int i = 0; i < w * h; ++i) {
    HostLabel l;
    if (i == 0) l.mark = Mark::Grey;  // the shortest-distances start node
    keys.push_back(g.add_node({l, false}));
  }
  HostLabel right{{Atom{std::int64_t{1}}}, Mark::None};
  HostLabel down{{Atom{std::int64_t{2}}}, Mark::None};
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      int i = r * w + c;
      if (c + 1 < w) g.add_edge(keys[i], keys[i + 1], right);
      if (r + 1 < h) g.add_edge(keys[i], keys[i + w], down);
    }
  }
  return g;
}

HostGraph gen_host_graph(int n) {
  require_positive(n, "generation number");
  HostGraph g;
  g.add_node({HostLabel{{Atom{std::int64_t{n}}}, Mark::None}, false});
  return g;
}

std::string linear_host(int n) { return print_host_graph(linear_host_graph(n)); }
std::string cyclic_host(int n) { return print_host_graph(cyclic_host_graph(n)); }
std::string grid_host(int w, int h) {
  return print_host_graph(grid_host_graph(w, h));
}
std::string gen_host(int n) { return print_host_graph(gen_host_graph(n)); }

}  // namespace gp2
