#include "min2lin/graph.hpp"

#include <stdexcept>

namespace min2lin {

EdgeId Graph::add_edge(Vertex u, Vertex v, Weight w) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) throw std::out_of_range("edge endpoint out of range");
  if (w <= 0) throw std::invalid_argument("edge weights must be positive");
  const EdgeId id = num_edges();
  edges_.push_back({u, v, w});
  adj_[u].emplace_back(id, v);
  if (u != v) adj_[v].emplace_back(id, u);
  return id;
}

std::vector<int> components(const Graph& g, const std::vector<char>& removed) {
  std::vector<int> comp(g.num_vertices(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (auto [e, y] : g.incident(x))
        if ((removed.empty() || !removed[e]) && comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace min2lin
