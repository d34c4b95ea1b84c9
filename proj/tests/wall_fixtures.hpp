#pragma once

// Hosts carrying a known induced W_k model, built vertex by vertex so the
// model is known without running any library search.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "itw/constructions.hpp"
#include "itw/minor.hpp"
#include "itw/rng.hpp"
#include "itw/wall.hpp"

namespace itw::testing {

enum class Gadget {
  single,     // one host vertex
  triangle,   // three corners, all in the vertex's branch set
  split,      // three corners, the one facing `third` handed to that neighbour
  detour,     // path a-p-b; the first vertex z towards `third` sees both a and b
};

struct WallHost {
  Graph graph;
  MinorModel model;             // induced model of W_k
  std::vector<Gadget> gadgets;  // per wall vertex
  std::vector<int> third;       // neighbour index the split/detour faces
  // host vertices of interest per wall vertex: corners (triangle/split),
  // {a, p, b, z} (detour) or the single vertex
  std::vector<std::vector<Vertex>> parts;
};

// `gadgets[v]` other than single need degree 3. Split and detour vertices must
// not face each other. Path lengths are drawn from [2, 2 + extra].
inline WallHost build_wall_host(int k, std::vector<Gadget> gadgets, std::vector<int> third, std::uint64_t seed,
                                int extra = 2) {
  auto w = wall(k);
  const Graph& s = w.graph;
  const auto n = s.vertex_count();
  Rng rng(seed);
  WallHost out;
  out.gadgets = gadgets;
  out.third = third;
  out.parts.resize(n);
  std::vector<Edge> edges;
  Vertex next = 0;
  std::vector<VertexSet> sets(n);
  // attach[v][i]: host vertex where the path towards neighbors(v)[i] starts
  std::vector<std::vector<Vertex>> attach(n);
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    auto deg = s.degree(v);
    auto& part = out.parts[static_cast<std::size_t>(v)];
    switch (gadgets[static_cast<std::size_t>(v)]) {
      case Gadget::single:
        part = {next++};
        attach[static_cast<std::size_t>(v)].assign(deg, part[0]);
        break;
      case Gadget::triangle:
      case Gadget::split:
        part = {next, next + 1, next + 2};
        next += 3;
        edges.insert(edges.end(), {{part[0], part[1]}, {part[0], part[2]}, {part[1], part[2]}});
        attach[static_cast<std::size_t>(v)] = part;
        break;
      case Gadget::detour: {
        Vertex a = next++, p = next++, b = next++;
        edges.insert(edges.end(), {{a, p}, {p, b}});
        part = {a, p, b};
        int t = third[static_cast<std::size_t>(v)];
        std::vector<Vertex> at(3, kNoVertex);
        int other = 0;
        for (int i = 0; i < 3; ++i)
          if (i != t) at[static_cast<std::size_t>(i)] = other++ == 0 ? a : b;
        attach[static_cast<std::size_t>(v)] = at;  // kNoVertex at t: handled by the path
        break;
      }
    }
  }
  auto nb_index = [&](Vertex v, Vertex u) {
    auto nb = s.neighbors(v);
    return static_cast<int>(std::find(nb.begin(), nb.end(), u) - nb.begin());
  };
  auto hands_over = [&](Vertex v, Vertex u) {
    auto g = gadgets[static_cast<std::size_t>(v)];
    return (g == Gadget::split || g == Gadget::detour) && third[static_cast<std::size_t>(v)] == nb_index(v, u);
  };
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    for (Vertex x : out.parts[static_cast<std::size_t>(v)]) sets[static_cast<std::size_t>(v)].push_back(x);
  for (auto [u, v] : s.edges()) {
    int len = 2 + static_cast<int>(rng.uniform(0, extra));
    std::vector<Vertex> interior;
    for (int i = 1; i < len; ++i) interior.push_back(next++);
    Vertex au = attach[static_cast<std::size_t>(u)][static_cast<std::size_t>(nb_index(u, v))];
    Vertex av = attach[static_cast<std::size_t>(v)][static_cast<std::size_t>(nb_index(v, u))];
    std::vector<Vertex> chain;
    if (au != kNoVertex) chain.push_back(au);
    chain.insert(chain.end(), interior.begin(), interior.end());
    if (av != kNoVertex) chain.push_back(av);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.emplace_back(chain[i], chain[i + 1]);
    // detour: the path's first interior vertex sees both a and b
    for (auto [end, z] : {std::pair{u, interior.front()}, std::pair{v, interior.back()}})
      if (gadgets[static_cast<std::size_t>(end)] == Gadget::detour && hands_over(end, end == u ? v : u)) {
        const auto& part = out.parts[static_cast<std::size_t>(end)];
        edges.emplace_back(part[0], z);
        edges.emplace_back(part[2], z);
        out.parts[static_cast<std::size_t>(end)].push_back(z);
      }
    // owner of the interior
    Vertex owner = u;
    if (hands_over(u, v)) owner = v;
    else if (hands_over(v, u)) owner = u;
    auto& set = sets[static_cast<std::size_t>(owner)];
    set.insert(set.end(), interior.begin(), interior.end());
    for (auto [end, other] : {std::pair{u, v}, std::pair{v, u}})
      if (gadgets[static_cast<std::size_t>(end)] == Gadget::split && hands_over(end, other)) {
        Vertex corner = attach[static_cast<std::size_t>(end)][static_cast<std::size_t>(nb_index(end, other))];
        auto& mine = sets[static_cast<std::size_t>(end)];
        mine.erase(std::find(mine.begin(), mine.end(), corner));
        sets[static_cast<std::size_t>(other)].push_back(corner);
      }
  }
  out.graph = Graph(static_cast<std::size_t>(next), std::move(edges));
  out.model = MinorModel{s, {}, true};
  for (auto& set : sets) out.model.branch_sets.push_back(normalized(set));
  return out;
}

// Plain (>=2)-subdivision host.
inline WallHost plain_wall_host(int k, std::uint64_t seed, int extra = 2) {
  auto n = wall(k).graph.vertex_count();
  return build_wall_host(k, std::vector<Gadget>(n, Gadget::single), std::vector<int>(n, 0), seed, extra);
}

// Positions in W_k of the degree-3 branch vertices of the tripled W_{k/3}.
inline std::vector<Vertex> tripled_branch_positions(int k) {
  auto small = wall(k / 3);
  auto big = wall(k);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(small.graph.vertex_count()); ++v) {
    if (small.graph.degree(v) != 3) continue;
    auto [x, y] = small.coords[static_cast<std::size_t>(v)];
    out.push_back(big.at(3 * x + y % 2, 2 * y));
  }
  return out;
}

// Random gadgets on W_k: roughly a quarter of the degree-3 vertices get a
// non-single gadget; split/detour vertices are pairwise non-adjacent.
inline WallHost random_wall_host(int k, std::uint64_t seed, bool adversarial_at_branches) {
  auto w = wall(k);
  const auto n = w.graph.vertex_count();
  Rng rng(seed * 31 + 7);
  std::vector<Gadget> g(n, Gadget::single);
  std::vector<int> t(n, 0);
  std::vector<bool> handing(n, false);
  auto place = [&](Vertex v, Gadget kind) {
    if (w.graph.degree(v) != 3 || handing[static_cast<std::size_t>(v)]) return;
    for (Vertex u : w.graph.neighbors(v))
      if (handing[static_cast<std::size_t>(u)]) return;
    g[static_cast<std::size_t>(v)] = kind;
    t[static_cast<std::size_t>(v)] = static_cast<int>(rng.uniform(0, 2));
    if (kind != Gadget::triangle) handing[static_cast<std::size_t>(v)] = true;
  };
  if (adversarial_at_branches)
    for (Vertex v : tripled_branch_positions(k)) place(v, rng.coin() ? Gadget::split : Gadget::detour);
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    if (g[static_cast<std::size_t>(v)] == Gadget::single && rng.uniform(0, 3) == 0) {
      static constexpr Gadget kinds[] = {Gadget::triangle, Gadget::split, Gadget::detour};
      place(v, kinds[static_cast<std::size_t>(rng.uniform(0, 2))]);
    }
  return build_wall_host(k, g, t, seed);
}

// Planted quasi-subdivision of W_K with random triangles and path lengths.
struct PlantedWall {
  Graph graph;
  WallQuasiSubdivisionWitness witness;
};

inline PlantedWall planted_wall(int K, std::uint64_t seed, int min_len = 1, int extra = 2) {
  auto w = wall(K).graph;
  Rng rng(seed);
  std::vector<Vertex> tri;
  for (Vertex v = 0; v < static_cast<Vertex>(w.vertex_count()); ++v)
    if (w.degree(v) == 3 && rng.uniform(0, 2) == 0) tri.push_back(v);
  auto q = quasi_subdivide(w, tri, min_len, LengthMode::at_least, seed, extra);
  return {q.graph, make_wall_witness(K, q.structure)};
}

}  // namespace itw::testing
