#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "itw/rational.hpp"

namespace itw {

using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

/// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates in place.
VertexSet normalized(VertexSet s);

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction normalizes the edge list (orients every pair, sorts, drops
/// duplicates) and rejects loops and out-of-range endpoints with InputError.
/// After construction nothing mutates, so instances are safe to share across
/// threads.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < vertex_count(); }

  /// Index of edge {u,v} in edges(), or nullopt.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Result of a derivation that keeps a subset of the parent's vertices.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // new id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> new id or kNoVertex
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

struct Contraction {
  Graph graph;
  std::vector<Vertex> image;  // parent id -> new id; u and v map to the merged vertex
};

/// Contracts edge uv. The merged vertex takes id min(u,v); ids above max(u,v)
/// shift down by one.
Contraction contract_edge(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);

/// Whether g[s] is connected. The empty set is not connected.
bool is_connected_set(const Graph& g, std::span<const Vertex> s);

/// Connected components of g restricted to `allowed` (all vertices when null).
/// Each component is sorted; components are ordered by their least vertex.
std::vector<VertexSet> connected_components(const Graph& g, const std::vector<bool>* allowed = nullptr);

/// True iff g has >= 3 vertices, is connected and has no cut vertex.
bool is_two_connected(const Graph& g);

/// Cut vertices of g (all components), sorted.
VertexSet articulation_points(const Graph& g);

struct Degeneracy {
  int value = 0;
  std::vector<Vertex> order;  // elimination order: each vertex has <= value later neighbours
};

Degeneracy degeneracy(const Graph& g);

/// |E| / |V|; throws InputError on the empty graph.
Rational edge_density(const Graph& g);

struct Biclique {
  VertexSet left;
  VertexSet right;
};

/// Exact search for a K_{t,t} subgraph (not necessarily induced).
std::optional<Biclique> has_biclique_subgraph(const Graph& g, int t);

struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of;  // line-graph vertex -> edge of the parent
};

LineGraph line_graph(const Graph& g);

// Small named families used throughout (grid and wall live in constructions).
Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Whether s and t intersect or are joined by an edge.
bool sets_touch(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> t);

}  // namespace itw
