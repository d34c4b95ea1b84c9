#pragma once

// Graphs built together with a tree decomposition, for the G_x / torso /
// bramble projection tests. Test scaffolding only.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "itw/constructions.hpp"
#include "itw/graph.hpp"
#include "itw/rng.hpp"
#include "itw/width.hpp"

namespace itw::testing {

struct Decomposed {
  Graph graph;
  TreeDecomposition td;
};

inline std::vector<Vertex> random_subset(const VertexSet& from, std::size_t k, Rng& rng) {
  std::vector<Vertex> pool = from;
  rng.shuffle(std::span<Vertex>(pool));
  pool.resize(std::min(k, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Tree grown node by node: a child bag is a random subset (<= max_adhesion)
// of its parent's bag plus 1-3 new vertices. Edges only inside bags, at least
// one endpoint new, with probability p_percent/100.
inline Decomposed random_decomposed(int n, int max_adhesion, std::uint64_t seed, int p_percent = 45) {
  Rng rng(seed * 977 + 13);
  std::vector<VertexSet> bags;
  std::vector<Edge> tree_edges, edges;
  int next = 0;
  auto add_bag = [&](VertexSet old, int fresh) {
    VertexSet bag = old;
    std::vector<Vertex> created;
    for (int i = 0; i < fresh && next < n; ++i) created.push_back(next++);
    bag.insert(bag.end(), created.begin(), created.end());
    for (std::size_t i = 0; i < bag.size(); ++i)
      for (std::size_t j = i + 1; j < bag.size(); ++j) {
        bool touches_new = j >= old.size();
        if (touches_new && rng.uniform(0, 99) < p_percent) edges.emplace_back(bag[i], bag[j]);
      }
    bags.push_back(normalized(bag));
  };
  add_bag({}, static_cast<int>(rng.uniform(1, 4)));
  while (next < n) {
    auto parent = rng.index(bags.size());
    const auto& pb = bags[parent];
    auto a = static_cast<std::size_t>(rng.uniform(rng.coin() ? 1 : 0, std::min<std::int64_t>(max_adhesion, static_cast<std::int64_t>(pb.size()))));
    auto old = random_subset(pb, a, rng);
    tree_edges.emplace_back(static_cast<Vertex>(parent), static_cast<Vertex>(bags.size()));
    add_bag(old, static_cast<int>(rng.uniform(1, 3)));
  }
  Decomposed out;
  out.graph = Graph(static_cast<std::size_t>(n), edges);
  out.td.tree = Graph(bags.size(), tree_edges);
  out.td.bags = bags;
  return out;
}

struct BrambleFixture {
  Graph graph;
  TreeDecomposition td;
  Bramble bramble;
  int h = 1;
  int core_bag = 0;           // node holding the core
  std::vector<VertexSet> blobs;
};

// A core with a known bramble (K_4, K_5, Γ_3 or Γ_4) in one bag, blobs hanging
// off <= h core vertices in child bags (some sharing attachments, so that
// twins appear), bramble sets sometimes grown into an adjacent blob, and the
// tree's node ids shuffled.
inline BrambleFixture random_bramble_fixture(std::uint64_t seed) {
  Rng rng(seed * 7919 + 5);
  BrambleFixture f;
  f.h = static_cast<int>(rng.uniform(1, 2));
  Graph core;
  Bramble b;
  switch (rng.uniform(0, 3)) {
    case 0:
    case 1: {
      int k = 4 + static_cast<int>(rng.uniform(0, 1));
      core = complete_graph(k);
      for (Vertex v = 0; v < k; ++v) b.sets.push_back({v});
      break;
    }
    default: {
      int k = 3 + static_cast<int>(rng.uniform(0, 1));
      core = grid(k).graph;
      b = grid_bramble(k);
    }
  }
  auto edges = core.edges();
  Vertex next = static_cast<Vertex>(core.vertex_count());
  VertexSet core_set(core.vertex_count());
  std::iota(core_set.begin(), core_set.end(), 0);
  std::vector<VertexSet> bags{core_set};
  std::vector<Edge> tree;
  std::vector<VertexSet> attach;
  const int blobs = static_cast<int>(rng.uniform(2, 6));
  for (int i = 0; i < blobs; ++i) {
    VertexSet s;
    if (!attach.empty() && rng.coin()) s = attach[rng.index(attach.size())];
    else s = random_subset(core_set, static_cast<std::size_t>(rng.uniform(1, f.h)), rng);
    attach.push_back(s);
    const int size = static_cast<int>(rng.uniform(1, 3));
    VertexSet blob;
    for (int j = 0; j < size; ++j) {
      blob.push_back(next);
      if (j > 0) edges.emplace_back(next - 1, next);
      ++next;
    }
    for (Vertex a : s) {
      edges.emplace_back(a, blob.front());
      for (Vertex x : blob)
        if (x != blob.front() && rng.coin()) edges.emplace_back(a, x);
    }
    VertexSet bag = s;
    bag.insert(bag.end(), blob.begin(), blob.end());
    tree.emplace_back(0, static_cast<Vertex>(bags.size()));
    bags.push_back(normalized(bag));
    f.blobs.push_back(blob);
    // sometimes grow a bramble set into this blob
    for (auto& set : b.sets)
      if (std::binary_search(set.begin(), set.end(), s.front()) && rng.uniform(0, 2) == 0) {
        set.insert(set.end(), blob.begin(), blob.end());
        set = normalized(set);
        break;
      }
  }
  // shuffle node ids
  std::vector<Vertex> perm(bags.size());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span<Vertex>(perm));
  f.td.bags.resize(bags.size());
  for (std::size_t i = 0; i < bags.size(); ++i) f.td.bags[static_cast<std::size_t>(perm[i])] = bags[i];
  for (auto& [u, v] : tree) {
    u = perm[static_cast<std::size_t>(u)];
    v = perm[static_cast<std::size_t>(v)];
  }
  f.td.tree = Graph(bags.size(), tree);
  f.core_bag = perm[0];
  f.graph = Graph(static_cast<std::size_t>(next), edges);
  f.bramble = b;
  return f;
}

// Γ_3 with its crosses bramble and a pendant path at every corner, each in
// its own bag (adhesion 1).
inline BrambleFixture grid3_crosses_fixture() {
  BrambleFixture f;
  f.h = 1;
  auto g = grid(3);
  auto edges = g.graph.edges();
  VertexSet core(9);
  std::iota(core.begin(), core.end(), 0);
  std::vector<VertexSet> bags{core};
  std::vector<Edge> tree;
  Vertex next = 9;
  for (Vertex corner : {g.at(0, 0), g.at(2, 0), g.at(0, 2), g.at(2, 2)}) {
    edges.emplace_back(corner, next);
    edges.emplace_back(next, next + 1);
    tree.emplace_back(0, static_cast<Vertex>(bags.size()));
    bags.push_back({corner, next, next + 1});
    f.blobs.push_back({next, next + 1});
    next += 2;
  }
  f.graph = Graph(static_cast<std::size_t>(next), edges);
  f.td.tree = Graph(bags.size(), tree);
  f.td.bags = bags;
  f.bramble = grid_bramble(3);
  // one cross reaches into the first pendant path
  f.bramble.sets[0].insert(f.bramble.sets[0].end(), {9, 10});
  f.bramble.sets[0] = normalized(f.bramble.sets[0]);
  return f;
}

}  // namespace itw::testing
