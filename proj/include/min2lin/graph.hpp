#pragma once

#include <utility>
#include <vector>

#include "min2lin/system.hpp"

namespace min2lin {

using Vertex = int;
using EdgeId = int;

struct GraphEdge {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight = 1;
};

// Weighted undirected multigraph on vertices 0..n-1; edge ids are insertion
// positions.
class Graph {
 public:
  explicit Graph(int n = 0) : adj_(n) {}

  Vertex add_vertex() {
    adj_.emplace_back();
    return num_vertices() - 1;
  }
  EdgeId add_edge(Vertex u, Vertex v, Weight w = 1);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const GraphEdge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  // (edge, other endpoint); a loop appears once.
  const std::vector<std::pair<EdgeId, Vertex>>& incident(Vertex v) const { return adj_[v]; }

 private:
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<std::pair<EdgeId, Vertex>>> adj_;
};

// Component label per vertex in the graph minus the removed edges.
std::vector<int> components(const Graph& g, const std::vector<char>& removed = {});

}  // namespace min2lin
