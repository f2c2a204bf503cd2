#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpcert/error.hpp"

namespace gpcert {

using VertexId = std::size_t;
using VertexSet = std::set<VertexId>;

// A loop-free simple graph on named vertices. Vertex ids are positions in the
// vertex list, and that order is the canonical total order on vertices.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  // Throws SchemaError on duplicate names or loops, UnknownVertex on an edge
  // endpoint that is not listed. Repeated edges collapse.
  SimplicialGraph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  // Same, with edges given by id.
  static SimplicialGraph from_ids(std::vector<std::string> vertices,
                                  const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(VertexId v) const;
  VertexId id(std::string_view name) const;

  bool adjacent(VertexId u, VertexId v) const {
    return adjacency_[u * names_.size() + v] != 0;
  }

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  VertexSet all_vertices() const;

  friend bool operator==(const SimplicialGraph&, const SimplicialGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<char> adjacency_;
};

VertexSet link(const SimplicialGraph& graph, VertexId v);

// The induced subgraph on X, re-indexed in the original vertex order.
SimplicialGraph full_subgraph(const SimplicialGraph& graph, const VertexSet& x);

// Throws UnknownVertex when some member of x is not a vertex of graph.
void require_vertices(const SimplicialGraph& graph, const VertexSet& x);

}  // namespace gpcert
