#include "itw/constructions.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "itw/error.hpp"
#include "itw/rng.hpp"

namespace itw {

Vertex LabeledGraph::at(int col, int row) const {
  // Coordinates are sorted by (row, col) in both families.
  Coord key{col, row};
  auto it = std::lower_bound(coords.begin(), coords.end(), key, [](const Coord& a, const Coord& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  if (it == coords.end() || *it != key) return kNoVertex;
  return static_cast<Vertex>(it - coords.begin());
}

LabeledGraph grid(int k) {
  if (k < 1) throw InputError("grid size must be >= 1");
  LabeledGraph out;
  std::vector<Edge> edges;
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      out.coords.push_back({c, r});
      Vertex v = r * k + c;
      if (c + 1 < k) edges.emplace_back(v, v + 1);
      if (r + 1 < k) edges.emplace_back(v, v + k);
    }
  }
  out.graph = Graph(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), std::move(edges));
  return out;
}

LabeledGraph wall(int k) {
  if (k < 2) throw InputError("wall size must be >= 2");
  const int cols = 2 * k;
  auto id = [cols](int c, int r) { return r * cols + c; };
  std::vector<Edge> edges;
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(c, r), id(c + 1, r));
      if (r + 1 < k && c % 2 == r % 2) edges.emplace_back(id(c, r), id(c, r + 1));
    }
  }
  Graph full(static_cast<std::size_t>(cols * k), std::move(edges));
  std::vector<Vertex> keep;
  int dropped = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(full.vertex_count()); ++v) {
    if (full.degree(v) == 1)
      ++dropped;
    else
      keep.push_back(v);
  }
  if (dropped != 2) throw std::logic_error("wall construction left " + std::to_string(dropped) + " pendant vertices");
  auto sub = induced_subgraph(full, keep);
  LabeledGraph out;
  out.graph = std::move(sub.graph);
  for (Vertex v : sub.to_parent) out.coords.push_back({v % cols, v / cols});
  return out;
}

namespace {

std::vector<int> draw_lengths(const Graph& h, int length, LengthMode mode, std::uint64_t seed, int max_extra) {
  if (length < 1) throw InputError("subdivision length must be >= 1");
  if (max_extra < 0) throw InputError("length bound must be >= 0");
  std::vector<int> lengths(h.edge_count(), length);
  if (mode == LengthMode::at_least) {
    Rng rng(seed);
    for (auto& l : lengths) l = static_cast<int>(rng.uniform(length, length + max_extra));
  }
  return lengths;
}

}  // namespace

Subdivision subdivide(const Graph& h, int length, LengthMode mode, std::uint64_t seed, int max_extra) {
  auto lengths = draw_lengths(h, length, mode, seed, max_extra);
  return subdivide(h, lengths);
}

Subdivision subdivide(const Graph& h, std::span<const int> lengths) {
  if (lengths.size() != h.edge_count()) throw InputError("one length per skeleton edge required");
  Subdivision out;
  out.spec.skeleton = h;
  out.spec.lengths.assign(lengths.begin(), lengths.end());
  const auto n = static_cast<Vertex>(h.vertex_count());
  for (Vertex v = 0; v < n; ++v) out.spec.branch.push_back(v);
  Vertex next = n;
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (lengths[e] < 1) throw InputError("subdivision length must be >= 1");
    auto [u, v] = h.edges()[e];
    std::vector<Vertex> path{u};
    for (int i = 1; i < lengths[e]; ++i) path.push_back(next++);
    path.push_back(v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
    out.spec.paths.push_back(std::move(path));
  }
  out.graph = Graph(static_cast<std::size_t>(next), std::move(edges));
  return out;
}

std::string check_subdivision(const Graph& g, const SubdivisionSpec& spec) {
  if (spec.branch.size() != spec.skeleton.vertex_count()) return "branch map size differs from skeleton";
  if (spec.lengths.size() != spec.skeleton.edge_count()) return "length map size differs from skeleton";
  QuasiSubdivision qs;
  qs.skeleton = spec.skeleton;
  for (Vertex b : spec.branch) qs.corners.push_back({b});
  qs.paths = spec.paths;
  if (auto err = check_quasi_subdivision(g, qs); !err.empty()) return err;
  if (qs.vertex_set().size() != g.vertex_count()) return "subdivision does not span the graph";
  for (std::size_t e = 0; e < spec.paths.size(); ++e)
    if (static_cast<int>(spec.paths[e].size()) - 1 != spec.lengths[e])
      return "path " + std::to_string(e) + " length differs from recorded length";
  return {};
}

Vertex QuasiSubdivision::attachment(Vertex v, Vertex w) const {
  const auto& c = corners[static_cast<std::size_t>(v)];
  if (c.size() == 1) return c[0];
  auto nb = skeleton.neighbors(v);
  auto it = std::find(nb.begin(), nb.end(), w);
  if (it == nb.end()) throw InputError("attachment requested for a non-edge");
  return c[static_cast<std::size_t>(it - nb.begin())];
}

VertexSet QuasiSubdivision::vertex_set() const {
  VertexSet out;
  for (const auto& c : corners) out.insert(out.end(), c.begin(), c.end());
  for (const auto& p : paths)
    if (p.size() > 2) out.insert(out.end(), p.begin() + 1, p.end() - 1);
  return normalized(std::move(out));
}

QuasiSubdivisionGraph quasi_subdivide(const Graph& h, std::span<const Vertex> triangles, int length,
                                      LengthMode mode, std::uint64_t seed, int max_extra) {
  auto lengths = draw_lengths(h, length, mode, seed, max_extra);
  return quasi_subdivide(h, triangles, lengths);
}

QuasiSubdivisionGraph quasi_subdivide(const Graph& h, std::span<const Vertex> triangles,
                                      std::span<const int> lengths) {
  if (h.max_degree() > 3) throw InputError("quasi-subdivision needs a subcubic skeleton");
  if (lengths.size() != h.edge_count()) throw InputError("one length per skeleton edge required");
  std::vector<bool> tri(h.vertex_count(), false);
  for (Vertex v : triangles) {
    if (!h.contains(v)) throw InputError("triangle vertex out of range");
    if (h.degree(v) != 3)
      throw InputError("vertex " + std::to_string(v) + " has degree " + std::to_string(h.degree(v)) +
                       ", only degree-3 vertices become triangles");
    tri[static_cast<std::size_t>(v)] = true;
  }
  QuasiSubdivisionGraph out;
  auto& qs = out.structure;
  qs.skeleton = h;
  Vertex next = 0;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(h.vertex_count()); ++v) {
    if (tri[static_cast<std::size_t>(v)]) {
      qs.corners.push_back({next, next + 1, next + 2});
      edges.emplace_back(next, next + 1);
      edges.emplace_back(next, next + 2);
      edges.emplace_back(next + 1, next + 2);
      next += 3;
    } else {
      qs.corners.push_back({next++});
    }
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (lengths[e] < 1) throw InputError("subdivision length must be >= 1");
    auto [u, v] = h.edges()[e];
    std::vector<Vertex> path{qs.attachment(u, v)};
    for (int i = 1; i < lengths[e]; ++i) path.push_back(next++);
    path.push_back(qs.attachment(v, u));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
    qs.paths.push_back(std::move(path));
  }
  out.graph = Graph(static_cast<std::size_t>(next), std::move(edges));
  return out;
}

std::string check_quasi_subdivision(const Graph& host, const QuasiSubdivision& qs) {
  const Graph& h = qs.skeleton;
  if (qs.corners.size() != h.vertex_count()) return "corner map size differs from skeleton";
  if (qs.paths.size() != h.edge_count()) return "path count differs from skeleton edge count";
  std::vector<int> owner(host.vertex_count(), 0);
  auto claim = [&](Vertex x) -> bool {
    if (!host.contains(x)) return false;
    return ++owner[static_cast<std::size_t>(x)] == 1;
  };
  std::set<Edge> expected;
  auto expect = [&](Vertex a, Vertex b) { expected.insert(a < b ? Edge{a, b} : Edge{b, a}); };
  for (Vertex v = 0; v < static_cast<Vertex>(h.vertex_count()); ++v) {
    const auto& c = qs.corners[static_cast<std::size_t>(v)];
    if (c.size() == 3) {
      if (h.degree(v) != 3) return "triangle at skeleton vertex " + std::to_string(v) + " of degree " + std::to_string(h.degree(v));
      expect(c[0], c[1]);
      expect(c[0], c[2]);
      expect(c[1], c[2]);
    } else if (c.size() != 1) {
      return "skeleton vertex " + std::to_string(v) + " needs one host vertex or three corners";
    }
    for (Vertex x : c)
      if (!claim(x)) return "host vertex " + std::to_string(x) + " reused or out of range (skeleton vertex " + std::to_string(v) + ")";
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto& p = qs.paths[e];
    auto [u, v] = h.edges()[e];
    if (p.size() < 2 || p.front() == p.back()) return "path " + std::to_string(e) + " has no edge";
    if (p.front() != qs.attachment(u, v) || p.back() != qs.attachment(v, u))
      return "path " + std::to_string(e) + " does not join the attachments of skeleton edge {" + std::to_string(u) +
             "," + std::to_string(v) + "}";
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      if (!claim(p[i])) return "host vertex " + std::to_string(p[i]) + " reused or out of range (path " + std::to_string(e) + ")";
    for (std::size_t i = 0; i + 1 < p.size(); ++i) expect(p[i], p[i + 1]);
  }
  auto vs = qs.vertex_set();
  auto sub = induced_subgraph(host, vs);
  std::set<Edge> actual;
  for (auto [a, b] : sub.graph.edges()) actual.insert({sub.to_parent[static_cast<std::size_t>(a)], sub.to_parent[static_cast<std::size_t>(b)]});
  for (const auto& e : expected)
    if (!actual.contains(e)) return "missing host edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
  for (const auto& e : actual)
    if (!expected.contains(e)) return "unexpected induced edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
  return {};
}

}  // namespace itw
