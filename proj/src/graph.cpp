#include "itw/graph.hpp"

#include <algorithm>
#include <string>

#include "itw/error.hpp"

namespace itw {

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : adjacency_(vertex_count) {
  const auto n = static_cast<Vertex>(vertex_count);
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for " +
                       std::to_string(vertex_count) + " vertices");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : adjacency_) d = std::max(d, nb.size());
  return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nb = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  InducedSubgraph out;
  out.from_parent.assign(g.vertex_count(), kNoVertex);
  for (Vertex v : s) {
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " not in graph");
    if (out.from_parent[static_cast<std::size_t>(v)] != kNoVertex) continue;
    out.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(out.to_parent[i])) {
      Vertex j = out.from_parent[static_cast<std::size_t>(w)];
      if (j != kNoVertex && static_cast<std::size_t>(j) > i) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  out.graph = Graph(out.to_parent.size(), std::move(edges));
  return out;
}

Contraction contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v))
    throw InputError("cannot contract {" + std::to_string(u) + "," + std::to_string(v) + "}: not an edge");
  if (u > v) std::swap(u, v);
  Contraction out;
  out.image.resize(g.vertex_count());
  for (Vertex x = 0; x < static_cast<Vertex>(g.vertex_count()); ++x)
    out.image[static_cast<std::size_t>(x)] = x == v ? u : (x > v ? x - 1 : x);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    Vertex ia = out.image[static_cast<std::size_t>(a)];
    Vertex ib = out.image[static_cast<std::size_t>(b)];
    if (ia != ib) edges.emplace_back(ia, ib);
  }
  out.graph = Graph(g.vertex_count() - 1, std::move(edges));
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const std::vector<bool>* allowed) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (seen[static_cast<std::size_t>(s)] || (allowed && !(*allowed)[static_cast<std::size_t>(s)])) continue;
    VertexSet comp;
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        auto yi = static_cast<std::size_t>(y);
        if (seen[yi] || (allowed && !(*allowed)[yi])) continue;
        seen[yi] = true;
        stack.push_back(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return g.vertex_count() > 0 && connected_components(g).size() == 1; }

bool is_connected_set(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) return false;
  std::vector<bool> allowed(g.vertex_count(), false);
  for (Vertex v : s) {
    if (!g.contains(v)) return false;
    allowed[static_cast<std::size_t>(v)] = true;
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{s.front()};
  seen[static_cast<std::size_t>(s.front())] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex y : g.neighbors(x)) {
      auto yi = static_cast<std::size_t>(y);
      if (allowed[yi] && !seen[yi]) {
        seen[yi] = true;
        stack.push_back(y);
      }
    }
  }
  std::size_t distinct = static_cast<std::size_t>(std::count(allowed.begin(), allowed.end(), true));
  return reached == distinct;
}

VertexSet articulation_points(const Graph& g) {
  // Iterative Hopcroft-Tarjan lowpoint computation.
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;
  for (Vertex root = 0; root < static_cast<Vertex>(n); ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    int root_children = 0;
    std::vector<Vertex> stack{root};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Vertex x = stack.back();
      auto xi = static_cast<std::size_t>(x);
      auto nb = g.neighbors(x);
      if (next_child[xi] < nb.size()) {
        Vertex y = nb[next_child[xi]++];
        auto yi = static_cast<std::size_t>(y);
        if (disc[yi] == -1) {
          parent[yi] = x;
          disc[yi] = low[yi] = timer++;
          if (x == root) ++root_children;
          stack.push_back(y);
        } else if (y != parent[xi]) {
          low[xi] = std::min(low[xi], disc[yi]);
        }
      } else {
        stack.pop_back();
        Vertex p = parent[xi];
        if (p != kNoVertex) {
          auto pi = static_cast<std::size_t>(p);
          low[pi] = std::min(low[pi], low[xi]);
          if (p != root && low[xi] >= disc[pi]) cut[pi] = true;
        }
      }
    }
    if (root_children > 1) cut[static_cast<std::size_t>(root)] = true;
  }
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    if (cut[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

bool is_two_connected(const Graph& g) {
  return g.vertex_count() >= 3 && is_connected(g) && articulation_points(g).empty();
}

Degeneracy degeneracy(const Graph& g) {
  // Bucket queue on current degree; ties broken by least vertex id.
  const std::size_t n = g.vertex_count();
  Degeneracy out;
  if (n == 0) return out;
  std::vector<std::size_t> deg(n);
  std::size_t maxd = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    maxd = std::max(maxd, deg[v]);
  }
  std::vector<std::vector<Vertex>> buckets(maxd + 1);
  for (std::size_t v = n; v-- > 0;) buckets[deg[v]].push_back(static_cast<Vertex>(v));
  std::vector<bool> removed(n, false);
  std::size_t cur = 0;
  for (std::size_t step = 0; step < n; ++step) {
    cur = 0;
    Vertex pick = kNoVertex;
    while (pick == kNoVertex) {
      auto& b = buckets[cur];
      while (!b.empty()) {
        Vertex c = b.back();
        b.pop_back();
        auto ci = static_cast<std::size_t>(c);
        if (!removed[ci] && deg[ci] == cur) {
          pick = c;
          break;
        }
      }
      if (pick == kNoVertex) ++cur;
    }
    removed[static_cast<std::size_t>(pick)] = true;
    out.value = std::max(out.value, static_cast<int>(cur));
    out.order.push_back(pick);
    for (Vertex y : g.neighbors(pick)) {
      auto yi = static_cast<std::size_t>(y);
      if (removed[yi]) continue;
      --deg[yi];
      buckets[deg[yi]].push_back(y);
    }
  }
  return out;
}

Rational edge_density(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("edge density of the empty graph");
  return Rational(static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(g.vertex_count()));
}

namespace {

bool extend_biclique(const Graph& g, int t, std::size_t start, VertexSet& left, const VertexSet& common,
                     Biclique& out) {
  if (static_cast<int>(left.size()) == t) {
    out.left = left;
    out.right.assign(common.begin(), common.begin() + t);
    return true;
  }
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = static_cast<Vertex>(start); a < n; ++a) {
    if (static_cast<int>(g.degree(a)) < t) continue;
    VertexSet next;
    if (left.empty()) {
      next.assign(g.neighbors(a).begin(), g.neighbors(a).end());
    } else {
      auto nb = g.neighbors(a);
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
    }
    if (static_cast<int>(next.size()) < t) continue;
    left.push_back(a);
    if (extend_biclique(g, t, static_cast<std::size_t>(a) + 1, left, next, out)) return true;
    left.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Biclique> has_biclique_subgraph(const Graph& g, int t) {
  if (t < 1) throw InputError("biclique size must be >= 1");
  // The common neighbourhood of the left side never contains a left vertex,
  // so any t of its members complete the biclique.
  VertexSet left;
  Biclique out;
  if (extend_biclique(g, t, 0, left, {}, out)) return out;
  return std::nullopt;
}

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edge_of = g.edges();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    std::vector<Vertex> incident;
    for (Vertex w : g.neighbors(v)) incident.push_back(static_cast<Vertex>(*g.edge_index(v, w)));
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j) edges.emplace_back(incident[i], incident[j]);
  }
  out.graph = Graph(g.edge_count(), std::move(edges));
  return out;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(static_cast<std::size_t>(std::max(n, 0)), std::move(edges));
}

Graph complete_bipartite(int s, int t) {
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
  return Graph(static_cast<std::size_t>(s + t), std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(static_cast<std::size_t>(std::max(n, 0)), std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

bool sets_touch(const Graph& g, std::span<const Vertex> s, std::span<const Vertex> t) {
  std::vector<bool> in_t(g.vertex_count(), false);
  for (Vertex v : t) in_t[static_cast<std::size_t>(v)] = true;
  for (Vertex v : s) {
    if (in_t[static_cast<std::size_t>(v)]) return true;
    for (Vertex w : g.neighbors(v))
      if (in_t[static_cast<std::size_t>(w)]) return true;
  }
  return false;
}

}  // namespace itw
