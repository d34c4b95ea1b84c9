#pragma once

// Independent oracles and generators for tests. Everything here is written
// without calling the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "itw/graph.hpp"
#include "itw/minor.hpp"
#include "itw/rng.hpp"

namespace itw::testing {

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  const auto scale = static_cast<std::uint64_t>(p * 1'000'000);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<std::uint64_t>(rng.uniform(0, 999'999)) < scale) edges.emplace_back(u, v);
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

// Uniform attachment tree.
inline Graph random_tree(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng.index(static_cast<std::size_t>(v))), v);
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline bool adjacent_plain(const std::vector<Edge>& edges, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return std::find(edges.begin(), edges.end(), Edge{a, b}) != edges.end();
}

// Backtracking isomorphism test with degree filtering.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const auto n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> map(n, kNoVertex);
  std::vector<bool> used(n, false);
  // Map vertices of a in BFS order so neighbours constrain early.
  std::vector<Vertex> order;
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = true;
    std::size_t head = order.size();
    order.push_back(s);
    for (; head < order.size(); ++head)
      for (Vertex w : a.neighbors(order[head]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          order.push_back(w);
        }
  }
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) return true;
    Vertex x = order[k];
    for (Vertex y = 0; y < static_cast<Vertex>(n); ++y) {
      if (used[static_cast<std::size_t>(y)] || a.degree(x) != b.degree(y)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        Vertex px = order[i];
        ok = a.adjacent(x, px) == b.adjacent(y, map[static_cast<std::size_t>(px)]);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      if (rec(k + 1)) return true;
      used[static_cast<std::size_t>(y)] = false;
    }
    map[static_cast<std::size_t>(x)] = kNoVertex;
    return false;
  };
  return rec(0);
}

// Treewidth as the minimum over all elimination orders (n <= 9).
inline int brute_force_treewidth(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  if (n == 0) return -1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [u, v] : g.edges()) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    int w = 0;
    for (int v : perm) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (!gone[static_cast<std::size_t>(u)] && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) nb.push_back(u);
      w = std::max(w, static_cast<int>(nb.size()));
      for (int x : nb)
        for (int y : nb)
          if (x != y) adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
      gone[static_cast<std::size_t>(v)] = true;
      if (w >= best) break;
    }
    best = std::min(best, w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Minimum hitting set by enumerating subsets of increasing size.
inline int brute_force_hitting_number(const std::vector<VertexSet>& sets, int universe) {
  for (int k = 0; k <= universe; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      bool all = true;
      for (const auto& s : sets) {
        bool hit = false;
        for (int p : pick)
          if (std::find(s.begin(), s.end(), p) != s.end()) hit = true;
        if (!hit) {
          all = false;
          break;
        }
      }
      if (all) return k;
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == universe - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return -1;
}

// Connectivity of s inside g by repeated edge relaxation (no BFS helpers).
inline bool set_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  std::vector<Vertex> reached{s.front()};
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [u, v] : g.edges()) {
      bool iu = std::find(s.begin(), s.end(), u) != s.end(), iv = std::find(s.begin(), s.end(), v) != s.end();
      if (!iu || !iv) continue;
      bool ru = std::find(reached.begin(), reached.end(), u) != reached.end();
      bool rv = std::find(reached.begin(), reached.end(), v) != reached.end();
      if (ru != rv) {
        reached.push_back(ru ? v : u);
        grew = true;
      }
    }
  }
  return reached.size() == s.size();
}

// Host that realizes `pattern` as an induced minor: every pattern vertex is
// blown up into a random tree of 1..blob vertices; each pattern edge becomes
// one edge between random members of the two blobs.
struct PlantedHost {
  Graph graph;
  std::vector<VertexSet> blobs;
};

inline PlantedHost inflate(const Graph& pattern, int blob, std::uint64_t seed) {
  Rng rng(seed);
  PlantedHost out;
  std::vector<Edge> edges;
  Vertex next = 0;
  for (Vertex p = 0; p < static_cast<Vertex>(pattern.vertex_count()); ++p) {
    int size = static_cast<int>(rng.uniform(1, blob));
    VertexSet b;
    for (int i = 0; i < size; ++i) {
      if (i > 0) edges.emplace_back(b[rng.index(b.size())], next);
      b.push_back(next++);
    }
    out.blobs.push_back(b);
  }
  for (auto [a, b] : pattern.edges()) {
    const auto& x = out.blobs[static_cast<std::size_t>(a)];
    const auto& y = out.blobs[static_cast<std::size_t>(b)];
    edges.emplace_back(x[rng.index(x.size())], y[rng.index(y.size())]);
  }
  out.graph = Graph(static_cast<std::size_t>(next), std::move(edges));
  return out;
}

// First valid (induced) minor model in the order that enumerates label
// vectors lexicographically with "discarded" below every branch label. Plain
// enumeration of all (p+1)^n assignments with bitmask checks (n <= 16).
inline std::optional<MinorModel> brute_force_minor(const Graph& host, const Graph& pattern, bool induced) {
  const int n = static_cast<int>(host.vertex_count()), p = static_cast<int>(pattern.vertex_count());
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : host.edges()) {
    nb[static_cast<std::size_t>(u)] |= 1u << v;
    nb[static_cast<std::size_t>(v)] |= 1u << u;
  }
  auto closed_nb = [&](std::uint32_t s) {
    std::uint32_t out = s;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) out |= nb[static_cast<std::size_t>(v)];
    return out;
  };
  std::vector<int> digit(static_cast<std::size_t>(n), 0);  // 0 = discarded, i+1 = branch i
  std::vector<std::uint32_t> sets(static_cast<std::size_t>(p));
  for (;;) {
    std::fill(sets.begin(), sets.end(), 0u);
    for (int v = 0; v < n; ++v)
      if (digit[static_cast<std::size_t>(v)] > 0) sets[static_cast<std::size_t>(digit[static_cast<std::size_t>(v)] - 1)] |= 1u << v;
    bool ok = true;
    for (int a = 0; a < p && ok; ++a) {
      std::uint32_t s = sets[static_cast<std::size_t>(a)];
      if (!s) {
        ok = false;
        break;
      }
      std::uint32_t r = s & (~s + 1);
      for (std::uint32_t prev = 0; prev != r;) {
        prev = r;
        r = closed_nb(r) & s;
      }
      ok = r == s;
    }
    for (int a = 0; a < p && ok; ++a)
      for (int b = a + 1; b < p && ok; ++b) {
        bool want = adjacent_plain(pattern.edges(), a, b);
        bool have = (closed_nb(sets[static_cast<std::size_t>(a)]) & sets[static_cast<std::size_t>(b)]) != 0;
        if (want && !have) ok = false;
        if (induced && have && !want) ok = false;
      }
    if (ok) {
      MinorModel m;
      m.pattern = pattern;
      m.induced = induced;
      m.branch_sets.resize(static_cast<std::size_t>(p));
      for (int v = 0; v < n; ++v)
        if (digit[static_cast<std::size_t>(v)] > 0) m.branch_sets[static_cast<std::size_t>(digit[static_cast<std::size_t>(v)] - 1)].push_back(v);
      return m;
    }
    int i = n - 1;
    while (i >= 0 && digit[static_cast<std::size_t>(i)] == p) digit[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return std::nullopt;
    ++digit[static_cast<std::size_t>(i)];
  }
}

struct MinorInstance {
  Graph host;
  Graph pattern;
  bool induced = true;
};

// Fixed corpus: hosts on 3..10 vertices, patterns on 1..4 vertices. Every
// fourth instance plants the pattern so that "found" answers are common.
inline std::vector<MinorInstance> minor_corpus(int count = 200) {
  std::vector<MinorInstance> out;
  for (int i = 0; i < count; ++i) {
    auto seed = static_cast<std::uint64_t>(1000 + i);
    MinorInstance inst;
    int p = 1 + i % 4;
    inst.pattern = random_graph(p, 0.6, seed * 7 + 1);
    inst.induced = i % 5 != 4;
    int n = 3 + (i / 4) % 8;
    if (i % 4 == 3 && p <= n) {
      auto planted = inflate(inst.pattern, std::max(1, n / p), seed);
      auto noise = random_graph(static_cast<int>(planted.graph.vertex_count()), 0.15, seed * 3);
      auto edges = planted.graph.edges();
      for (auto e : noise.edges()) edges.push_back(e);
      inst.host = Graph(planted.graph.vertex_count(), edges);
    } else {
      inst.host = random_graph(n, 0.2 + 0.05 * (i % 9), seed);
    }
    out.push_back(inst);
  }
  return out;
}

}  // namespace itw::testing
