#include "itw/trim.hpp"

#include <algorithm>
#include <set>

#include "itw/constructions.hpp"
#include "itw/error.hpp"
#include "itw/graph_io.hpp"
#include "itw/rng.hpp"

namespace itw {

int TrimSupergraph::side() const {
  auto n = static_cast<int>(skeleton.vertex_count());
  return kind == SkeletonKind::biclique ? n / 2 : n;
}

int TrimSupergraph::min_path_length() const {
  int best = 0;
  for (const auto& p : paths) {
    int len = static_cast<int>(p.size()) - 1;
    if (best == 0 || len < best) best = len;
  }
  return best;
}

Graph skeleton_graph(SkeletonKind kind, int side) {
  if (side < 1) throw InputError("skeleton side must be >= 1");
  return kind == SkeletonKind::clique ? complete_graph(side) : complete_bipartite(side, side);
}

namespace {

std::set<Edge> path_edge_set(const TrimSupergraph& t) {
  std::set<Edge> out;
  for (const auto& p : t.paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.insert(std::minmax(p[i], p[i + 1]));
  return out;
}

}  // namespace

std::vector<Edge> extra_edges(const TrimSupergraph& t) {
  auto on_paths = path_edge_set(t);
  std::vector<Edge> out;
  for (const auto& e : t.host.edges())
    if (!on_paths.contains(e)) out.push_back(e);
  return out;
}

TrimReport validate_trim(const TrimSupergraph& t) {
  TrimReport r;
  auto fail = [&r](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  const Graph& g = t.host;
  const auto n = g.vertex_count();
  if (t.skeleton != skeleton_graph(t.kind, std::max(1, t.side())) ||
      (t.kind == SkeletonKind::biclique && t.skeleton.vertex_count() % 2 != 0))
    fail("skeleton is not the declared clique/biclique");
  if (t.branch.size() != t.skeleton.vertex_count()) fail("branch map size differs from skeleton");
  if (t.paths.size() != t.skeleton.edge_count()) fail("path count differs from skeleton edge count");
  if (!t.origin.empty() && t.origin.size() != n) fail("origin map size differs from host");
  if (!r.ok) return r;

  // path_of[v] = index of the path holding v in its interior; -2 for branch vertices.
  std::vector<int> path_of(n, -1);
  for (std::size_t b = 0; b < t.branch.size(); ++b) {
    Vertex v = t.branch[b];
    if (!g.contains(v)) {
      fail("branch vertex " + std::to_string(v) + " out of range");
      return r;
    }
    if (path_of[static_cast<std::size_t>(v)] != -1) fail("branch vertex " + std::to_string(v) + " repeated");
    path_of[static_cast<std::size_t>(v)] = -2;
  }
  for (std::size_t e = 0; e < t.paths.size(); ++e) {
    const auto& p = t.paths[e];
    auto [u, v] = t.skeleton.edges()[e];
    std::string tag = "direct path " + std::to_string(e) + " {" + std::to_string(u) + "," + std::to_string(v) + "}";
    if (p.size() < 2 || p.front() != t.branch[static_cast<std::size_t>(u)] ||
        p.back() != t.branch[static_cast<std::size_t>(v)]) {
      fail(tag + " does not join its branch vertices");
      continue;
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (!g.contains(p[i])) {
        fail(tag + " leaves the host");
        return r;
      }
      auto& slot = path_of[static_cast<std::size_t>(p[i])];
      if (slot != -1)
        fail(tag + " reuses vertex " + std::to_string(p[i]));
      else
        slot = static_cast<int>(e);
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.adjacent(p[i], p[i + 1]))
        fail(tag + " is not a path: {" + std::to_string(p[i]) + "," + std::to_string(p[i + 1]) + "} missing");
  }
  for (std::size_t v = 0; v < n; ++v)
    if (path_of[v] == -1) fail("host vertex " + std::to_string(v) + " is neither branch nor subdivision vertex");
  if (!r.ok) return r;

  // Trimness: every host edge between two vertices of one direct path joins
  // consecutive vertices.
  std::vector<int> pos(n, -1);
  for (std::size_t e = 0; e < t.paths.size(); ++e) {
    const auto& p = t.paths[e];
    for (std::size_t i = 0; i < p.size(); ++i) pos[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (Vertex w : g.neighbors(p[i])) {
        int j = pos[static_cast<std::size_t>(w)];
        if (j < 0 || static_cast<std::size_t>(j) <= i + 1) continue;
        fail("trimness: chord {" + std::to_string(p[i]) + "," + std::to_string(w) + "} on direct path " +
             std::to_string(e));
      }
    }
    for (Vertex x : p) pos[static_cast<std::size_t>(x)] = -1;
  }

  auto extras = extra_edges(t);
  r.extra_edge_count = extras.size();
  for (auto [a, b] : extras) {
    bool ba = path_of[static_cast<std::size_t>(a)] == -2, bb = path_of[static_cast<std::size_t>(b)] == -2;
    if (ba && bb)
      ++r.taxonomy.branch_pairs;
    else if (ba || bb)
      ++r.taxonomy.branch_to_path;
    else
      ++r.taxonomy.subdivision_pairs;
  }
  return r;
}

TrimSupergraph restrict_trim(const TrimSupergraph& t, std::span<const Vertex> keep, SkeletonKind kind) {
  const int k = static_cast<int>(keep.size());
  if (kind == SkeletonKind::biclique && k % 2 != 0) throw InputError("biclique restriction needs an even vertex list");
  if (k == 0) throw InputError("empty restriction");
  TrimSupergraph out;
  out.kind = kind;
  out.skeleton = skeleton_graph(kind, kind == SkeletonKind::biclique ? k / 2 : k);
  VertexSet hosts;
  std::vector<std::vector<Vertex>> paths;
  for (Vertex s : keep) hosts.push_back(t.branch[static_cast<std::size_t>(s)]);
  for (auto [i, j] : out.skeleton.edges()) {
    Vertex a = keep[static_cast<std::size_t>(i)], b = keep[static_cast<std::size_t>(j)];
    auto idx = t.skeleton.edge_index(a, b);
    if (!idx) throw InputError("restriction asks for a skeleton pair that has no direct path");
    auto p = t.paths[*idx];
    if (a > b) std::reverse(p.begin(), p.end());
    hosts.insert(hosts.end(), p.begin(), p.end());
    paths.push_back(std::move(p));
  }
  hosts = normalized(std::move(hosts));
  auto sub = induced_subgraph(t.host, hosts);
  out.host = std::move(sub.graph);
  for (Vertex s : keep) out.branch.push_back(sub.from_parent[static_cast<std::size_t>(t.branch[static_cast<std::size_t>(s)])]);
  for (auto& p : paths) {
    for (auto& x : p) x = sub.from_parent[static_cast<std::size_t>(x)];
    out.paths.push_back(std::move(p));
  }
  for (Vertex x : sub.to_parent)
    out.origin.push_back(t.origin.empty() ? x : t.origin[static_cast<std::size_t>(x)]);
  return out;
}

namespace {

std::vector<Edge> legal_pairs(const TrimSupergraph& t) {
  const auto n = t.host.vertex_count();
  std::vector<int> path_of(n, -1);
  for (std::size_t e = 0; e < t.paths.size(); ++e)
    for (std::size_t i = 1; i + 1 < t.paths[e].size(); ++i) path_of[static_cast<std::size_t>(t.paths[e][i])] = static_cast<int>(e);
  auto on_path = [&](Vertex branch_vertex, int path) {
    const auto& p = t.paths[static_cast<std::size_t>(path)];
    return p.front() == branch_vertex || p.back() == branch_vertex;
  };
  std::vector<Edge> out;
  for (Vertex a = 0; a < static_cast<Vertex>(n); ++a) {
    for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b) {
      if (t.host.adjacent(a, b)) continue;
      int pa = path_of[static_cast<std::size_t>(a)], pb = path_of[static_cast<std::size_t>(b)];
      if (pa < 0 && pb < 0) continue;
      if (pa >= 0 && pb >= 0 && pa == pb) continue;
      if (pa < 0 && on_path(a, pb)) continue;
      if (pb < 0 && on_path(b, pa)) continue;
      out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

std::size_t legal_extra_pair_count(const TrimSupergraph& t) { return legal_pairs(t).size(); }

TrimSupergraph random_trim_supergraph(SkeletonKind kind, int side, int length, std::size_t extra,
                                      std::uint64_t seed, int max_extra) {
  auto sub = subdivide(skeleton_graph(kind, side), length, max_extra > 0 ? LengthMode::at_least : LengthMode::exact,
                       seed, max_extra);
  TrimSupergraph t;
  t.kind = kind;
  t.skeleton = sub.spec.skeleton;
  t.branch = sub.spec.branch;
  t.paths = sub.spec.paths;
  t.host = sub.graph;
  auto pool = legal_pairs(t);
  if (extra > pool.size())
    throw Refusal("requested " + std::to_string(extra) + " extra edges but only " + std::to_string(pool.size()) +
                  " vertex pairs keep the supergraph trim");
  // Separate stream from the length draws so lengths do not depend on `extra`.
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Edge> edges = t.host.edges();
  for (std::size_t i = 0; i < extra; ++i) {
    std::size_t j = i + rng.index(pool.size() - i);
    std::swap(pool[i], pool[j]);
    edges.push_back(pool[i]);
  }
  t.host = Graph(t.host.vertex_count(), std::move(edges));
  for (Vertex v = 0; v < static_cast<Vertex>(t.host.vertex_count()); ++v) t.origin.push_back(v);
  return t;
}

const char* to_string(SkeletonKind k) { return k == SkeletonKind::clique ? "clique" : "biclique"; }

SkeletonKind parse_skeleton_kind(const std::string& name) {
  if (name == "clique") return SkeletonKind::clique;
  if (name == "biclique") return SkeletonKind::biclique;
  throw InputError("unknown skeleton kind '" + name + "'");
}

nlohmann::json to_json(const TrimSupergraph& t) {
  return {{"kind", to_string(t.kind)}, {"side", t.side()}, {"host", to_json(t.host)}, {"branch", t.branch}, {"paths", t.paths}};
}

TrimSupergraph trim_from_json(const nlohmann::json& j) {
  TrimSupergraph t;
  try {
    t.kind = parse_skeleton_kind(j.at("kind").get<std::string>());
    int side = j.at("side").get<int>();
    if (side < 1 || side > 64) throw InputError("trim json: side out of range");
    t.skeleton = skeleton_graph(t.kind, side);
    t.host = graph_from_json(j.at("host"));
    t.branch = j.at("branch").get<std::vector<Vertex>>();
    t.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("trim json: ") + e.what());
  }
  const auto n = static_cast<Vertex>(t.host.vertex_count());
  auto in_range = [&](Vertex v) { return v >= 0 && v < n; };
  if (t.branch.size() != t.skeleton.vertex_count() || t.paths.size() != t.skeleton.edge_count())
    throw InputError("trim json: branch/path counts do not match the skeleton");
  for (Vertex v : t.branch)
    if (!in_range(v)) throw InputError("trim json: branch vertex out of range");
  for (const auto& p : t.paths)
    for (Vertex v : p)
      if (!in_range(v)) throw InputError("trim json: path vertex out of range");
  auto report = validate_trim(t);
  if (!report.ok) throw InputError("trim json: " + report.violations.front());
  return t;
}

}  // namespace itw
