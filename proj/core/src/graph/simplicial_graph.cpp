#include "gpcert/graph/simplicial_graph.hpp"

#include <algorithm>

namespace gpcert {

SimplicialGraph SimplicialGraph::from_ids(
    std::vector<std::string> vertices,
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  SimplicialGraph g;
  const std::size_t n = vertices.size();
  std::vector<std::string> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::SchemaError, "duplicate vertex name");
  }
  g.names_ = std::move(vertices);
  g.adjacency_.assign(n * n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorKind::UnknownVertex, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorKind::SchemaError, "loop at " + g.names_[u]);
    g.adjacency_[u * n + v] = g.adjacency_[v * n + u] = 1;
  }
  return g;
}

SimplicialGraph::SimplicialGraph(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  auto position = [&](const std::string& name) {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) {
      throw Error(ErrorKind::UnknownVertex, "'" + name + "'");
    }
    return static_cast<VertexId>(it - vertices.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> ids;
  for (const auto& [u, v] : edges) ids.emplace_back(position(u), position(v));
  *this = from_ids(std::move(vertices), ids);
}

const std::string& SimplicialGraph::name(VertexId v) const {
  if (v >= names_.size()) {
    throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v));
  }
  return names_[v];
}

VertexId SimplicialGraph::id(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw Error(ErrorKind::UnknownVertex, "'" + std::string(name) + "'");
  }
  return static_cast<VertexId>(it - names_.begin());
}

std::vector<std::pair<VertexId, VertexId>> SimplicialGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < names_.size(); ++u) {
    for (VertexId v = u + 1; v < names_.size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet SimplicialGraph::all_vertices() const {
  VertexSet all;
  for (VertexId v = 0; v < names_.size(); ++v) all.insert(v);
  return all;
}

void require_vertices(const SimplicialGraph& graph, const VertexSet& x) {
  for (VertexId v : x) {
    if (v >= graph.vertex_count()) {
      throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v));
    }
  }
}

VertexSet link(const SimplicialGraph& graph, VertexId v) {
  require_vertices(graph, {v});
  VertexSet out;
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    if (graph.adjacent(u, v)) out.insert(u);
  }
  return out;
}

SimplicialGraph full_subgraph(const SimplicialGraph& graph, const VertexSet& x) {
  require_vertices(graph, x);
  std::vector<VertexId> kept(x.begin(), x.end());
  std::vector<std::string> names;
  for (VertexId v : kept) names.push_back(graph.names()[v]);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (graph.adjacent(kept[i], kept[j])) edges.emplace_back(i, j);
    }
  }
  return SimplicialGraph::from_ids(std::move(names), edges);
}

}  // namespace gpcert
