#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "itw/graph.hpp"

namespace itw {

/// Grid/wall position. For Γ_k both range over [0,k); for W_k the column is in
/// [0,2k) and the row in [0,k), matching the 2k x k host grid.
struct Coord {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Graph whose vertices carry grid coordinates.
struct LabeledGraph {
  Graph graph;
  std::vector<Coord> coords;  // vertex -> position

  /// Vertex at a position, or kNoVertex if absent.
  Vertex at(int col, int row) const;
};

/// k x k grid Γ_k; vertex (col,row) has id row*k + col.
LabeledGraph grid(int k);

/// k x k wall W_k: the 2k x k grid minus vertical edges whose column and lower
/// row have different parity (0-based), minus the two vertices left with
/// degree one. Vertices are numbered row by row, columns ascending.
LabeledGraph wall(int k);

enum class LengthMode { exact, at_least };

/// Book-keeping for a subdivision: which host vertices are branch vertices and
/// which host path replaces each skeleton edge.
struct SubdivisionSpec {
  Graph skeleton;
  std::vector<Vertex> branch;               // skeleton vertex -> host vertex
  std::vector<std::vector<Vertex>> paths;   // skeleton edge index -> host path branch[u] .. branch[v]
  std::vector<int> lengths;                 // skeleton edge index -> number of edges on the path
};

struct Subdivision {
  Graph graph;
  SubdivisionSpec spec;
};

/// Replaces every edge of h by a path. In exact mode every path has `length`
/// edges; in at-least mode each length is drawn uniformly from
/// [length, length + max_extra] with the given seed. Branch vertices keep their
/// skeleton ids; subdivision vertices follow in skeleton-edge order.
Subdivision subdivide(const Graph& h, int length, LengthMode mode = LengthMode::exact, std::uint64_t seed = 0,
                      int max_extra = 0);

/// Per-edge exact lengths (indexed like h.edges()).
Subdivision subdivide(const Graph& h, std::span<const int> lengths);

/// Empty string when `spec` describes g exactly as a subdivision, else a reason.
std::string check_subdivision(const Graph& g, const SubdivisionSpec& spec);

/// Quasi-subdivision of a subcubic skeleton: a subdivision in which some
/// degree-3 skeleton vertices are replaced by triangles.
struct QuasiSubdivision {
  Graph skeleton;
  /// skeleton vertex -> its host vertex, or three triangle corners; corner i
  /// is attached to the path towards skeleton.neighbors(v)[i].
  std::vector<std::vector<Vertex>> corners;
  /// skeleton edge index -> host path from the attachment at the lower
  /// endpoint to the attachment at the higher endpoint.
  std::vector<std::vector<Vertex>> paths;

  bool is_triangle(Vertex v) const { return corners[static_cast<std::size_t>(v)].size() == 3; }
  /// Host vertex where the path of edge {v,w} leaves v.
  Vertex attachment(Vertex v, Vertex w) const;
  /// Host vertices used by the structure, sorted.
  VertexSet vertex_set() const;
};

struct QuasiSubdivisionGraph {
  Graph graph;
  QuasiSubdivision structure;
};

/// Subdivides h (lengths as in subdivide) and turns every vertex of
/// `triangles` into a triangle. Triangle vertices must have degree 3.
QuasiSubdivisionGraph quasi_subdivide(const Graph& h, std::span<const Vertex> triangles, int length,
                                      LengthMode mode = LengthMode::exact, std::uint64_t seed = 0,
                                      int max_extra = 0);
QuasiSubdivisionGraph quasi_subdivide(const Graph& h, std::span<const Vertex> triangles,
                                      std::span<const int> lengths);

/// Checks that host[structure.vertex_set()] is exactly the quasi-subdivision
/// described: corners/paths disjoint, path endpoints at the right attachments,
/// and the induced edge set equal to path edges plus triangle edges. Returns
/// an empty string on success.
std::string check_quasi_subdivision(const Graph& host, const QuasiSubdivision& qs);

}  // namespace itw
