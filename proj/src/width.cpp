#include "itw/width.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "itw/constructions.hpp"
#include "itw/error.hpp"

namespace itw {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<int> TreeDecomposition::nodes_containing(Vertex v) const {
  std::vector<int> out;
  for (std::size_t x = 0; x < bags.size(); ++x)
    if (std::binary_search(bags[x].begin(), bags[x].end(), v)) out.push_back(static_cast<int>(x));
  return out;
}

VertexSet bag_intersection(const TreeDecomposition& td, int x, int y) {
  const auto& a = td.bags[static_cast<std::size_t>(x)];
  const auto& b = td.bags[static_cast<std::size_t>(y)];
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<VertexSet> adhesions_of(const TreeDecomposition& td, int x) {
  std::set<VertexSet> seen;
  for (int y = 0; y < static_cast<int>(td.node_count()); ++y) {
    if (y == x) continue;
    auto s = bag_intersection(td, x, y);
    if (!s.empty()) seen.insert(std::move(s));
  }
  return {seen.begin(), seen.end()};
}

TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  TdReport r;
  auto fail = [&r](std::string msg) {
    r.ok = false;
    r.violations.push_back(std::move(msg));
  };
  const auto nodes = td.node_count();
  if (td.tree.vertex_count() != nodes) {
    fail("tree has " + std::to_string(td.tree.vertex_count()) + " nodes but " + std::to_string(nodes) + " bags given");
    return r;
  }
  if (nodes == 0) {
    if (g.vertex_count() > 0) fail("no bags for a non-empty graph");
    return r;
  }
  if (td.tree.edge_count() + 1 != nodes || !is_connected(td.tree)) fail("decomposition tree is not a tree");
  for (std::size_t x = 0; x < nodes; ++x) {
    const auto& b = td.bags[x];
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
      fail("bag " + std::to_string(x) + " is not a sorted set");
    for (Vertex v : b)
      if (!g.contains(v)) fail("bag " + std::to_string(x) + " holds unknown vertex " + std::to_string(v));
  }
  if (!r.ok) return r;

  std::vector<std::vector<int>> where(g.vertex_count());
  for (std::size_t x = 0; x < nodes; ++x)
    for (Vertex v : td.bags[x]) where[static_cast<std::size_t>(v)].push_back(static_cast<int>(x));
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    const auto& w = where[static_cast<std::size_t>(v)];
    if (w.empty()) {
      fail("vertex " + std::to_string(v) + " is in no bag");
      continue;
    }
    if (!is_connected_set(td.tree, w)) fail("bags containing vertex " + std::to_string(v) + " do not form a subtree");
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int x : where[static_cast<std::size_t>(u)]) {
      const auto& b = td.bags[static_cast<std::size_t>(x)];
      if (std::binary_search(b.begin(), b.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered) fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is in no bag");
  }
  r.width = td.width();
  for (std::size_t x = 0; x < nodes; ++x)
    for (std::size_t y = x + 1; y < nodes; ++y)
      r.adhesion_size = std::max(r.adhesion_size, static_cast<int>(bag_intersection(td, static_cast<int>(x), static_cast<int>(y)).size()));
  return r;
}

namespace {

using AdjSets = std::vector<std::set<Vertex>>;

AdjSets adjacency_sets(const Graph& g) {
  AdjSets adj(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  return adj;
}

// Removes v, turning its neighbourhood into a clique; returns the neighbourhood.
std::vector<Vertex> eliminate(AdjSets& adj, Vertex v) {
  std::vector<Vertex> nb(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end());
  for (Vertex a : nb) {
    adj[static_cast<std::size_t>(a)].erase(v);
    for (Vertex b : nb)
      if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
  }
  adj[static_cast<std::size_t>(v)].clear();
  return nb;
}

void check_order(const Graph& g, const std::vector<Vertex>& order) {
  if (order.size() != g.vertex_count()) throw InputError("elimination order must list every vertex once");
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v : order) {
    if (!g.contains(v) || seen[static_cast<std::size_t>(v)]) throw InputError("elimination order must list every vertex once");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

int elimination_width(const Graph& g, const std::vector<Vertex>& order) {
  check_order(g, order);
  auto adj = adjacency_sets(g);
  int w = -1;
  for (Vertex v : order) w = std::max(w, static_cast<int>(eliminate(adj, v).size()));
  return w;
}

TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  check_order(g, order);
  const auto n = g.vertex_count();
  TreeDecomposition td;
  if (n == 0) {
    td.tree = Graph(1, {});
    td.bags = {{}};
    return td;
  }
  std::vector<int> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  auto adj = adjacency_sets(g);
  std::vector<Edge> tree_edges;
  std::vector<int> roots;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    auto later = eliminate(adj, v);
    VertexSet bag = later;
    bag.push_back(v);
    td.bags.push_back(normalized(std::move(bag)));
    if (later.empty()) {
      roots.push_back(static_cast<int>(i));
    } else {
      int parent = static_cast<int>(n);
      for (Vertex w : later) parent = std::min(parent, pos[static_cast<std::size_t>(w)]);
      tree_edges.emplace_back(static_cast<int>(i), parent);
    }
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) tree_edges.emplace_back(roots[i], roots[i + 1]);
  td.tree = Graph(n, std::move(tree_edges));
  return td;
}

std::vector<Vertex> min_fill_order(const Graph& g) {
  auto adj = adjacency_sets(g);
  const auto n = g.vertex_count();
  std::vector<bool> done(n, false);
  std::vector<Vertex> order;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = kNoVertex;
    std::size_t best_fill = 0, best_deg = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      const auto& nb = adj[static_cast<std::size_t>(v)];
      std::size_t fill = 0;
      for (auto a = nb.begin(); a != nb.end(); ++a)
        for (auto b = std::next(a); b != nb.end(); ++b)
          if (!adj[static_cast<std::size_t>(*a)].contains(*b)) ++fill;
      if (best == kNoVertex || fill < best_fill || (fill == best_fill && nb.size() < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = nb.size();
      }
    }
    eliminate(adj, best);
    done[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }
  return order;
}

TreewidthResult exact_treewidth(const Graph& g, std::size_t cap) {
  const auto n = g.vertex_count();
  if (n > std::min<std::size_t>(cap, 64))
    throw InputError("exact treewidth is capped at " + std::to_string(std::min<std::size_t>(cap, 64)) + " vertices, got " +
                     std::to_string(n));
  TreewidthResult out;
  if (n == 0) {
    out.decomposition = decomposition_from_elimination_order(g, {});
    return out;
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  // Later neighbours of v in the fill-in graph once S is eliminated: vertices
  // outside S reachable from v through S.
  auto q_size = [&](std::uint64_t s, int v) {
    const std::uint64_t vb = std::uint64_t{1} << v;
    std::uint64_t comp = vb, frontier = vb, reach = 0;
    while (frontier) {
      std::uint64_t nb = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) nb |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      reach |= nb;
      frontier = nb & s & ~comp;
      comp |= frontier;
    }
    return std::popcount(reach & ~s & ~vb);
  };

  auto ub_order = min_fill_order(g);
  int best = elimination_width(g, ub_order);
  std::vector<Vertex> best_order = ub_order;

  struct Entry {
    int tw;
    int last;
  };
  std::vector<std::unordered_map<std::uint64_t, Entry>> levels(n + 1);
  levels[0][0] = {0, -1};
  auto prefix_of = [&](std::uint64_t s, std::size_t k) {
    std::vector<Vertex> rev;
    for (; k > 0; --k) {
      int v = levels[k].at(s).last;
      rev.push_back(v);
      s &= ~(std::uint64_t{1} << v);
    }
    return std::vector<Vertex>(rev.rbegin(), rev.rend());
  };
  for (std::size_t k = 0; k < n; ++k) {
    // Deterministic iteration: sort the level's keys.
    std::vector<std::uint64_t> keys;
    keys.reserve(levels[k].size());
    for (const auto& [s, e] : levels[k]) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    for (std::uint64_t s : keys) {
      const int t = levels[k].at(s).tw;
      if (t >= best) continue;
      const int rest = static_cast<int>(n - k);
      if (rest - 1 <= t) {
        // Any completion has width t.
        best = t;
        best_order = prefix_of(s, k);
        for (int v = 0; v < static_cast<int>(n); ++v)
          if (!(s >> v & 1)) best_order.push_back(v);
        continue;
      }
      for (int v = 0; v < static_cast<int>(n); ++v) {
        if (s >> v & 1) continue;
        int t2 = std::max(t, q_size(s, v));
        if (t2 >= best) continue;
        std::uint64_t s2 = s | (std::uint64_t{1} << v);
        auto [it, inserted] = levels[k + 1].try_emplace(s2, Entry{t2, v});
        if (!inserted && t2 < it->second.tw) it->second = {t2, v};
      }
    }
  }
  out.width = best;
  out.order = best_order;
  out.decomposition = decomposition_from_elimination_order(g, best_order);
  return out;
}

nlohmann::json to_json(const TreeDecomposition& td) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [x, y] : td.tree.edges()) edges.push_back({x, y});
  return {{"nodes", td.node_count()}, {"edges", edges}, {"bags", td.bags}};
}

TreeDecomposition tree_decomposition_from_json(const nlohmann::json& j) {
  try {
    TreeDecomposition td;
    auto bags = j.at("bags").get<std::vector<VertexSet>>();
    std::size_t nodes = j.contains("nodes") ? j.at("nodes").get<std::size_t>() : bags.size();
    if (nodes != bags.size()) throw InputError("tree decomposition: node count differs from bag count");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("tree decomposition: edges must be pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    for (auto& b : bags) b = normalized(std::move(b));
    td.tree = Graph(nodes, std::move(edges));
    td.bags = std::move(bags);
    return td;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("tree decomposition JSON: ") + e.what());
  }
}

std::string validate_bramble(const Graph& g, const Bramble& b) {
  for (std::size_t i = 0; i < b.sets.size(); ++i) {
    const auto& s = b.sets[i];
    for (Vertex v : s)
      if (!g.contains(v)) return "set " + std::to_string(i) + " holds unknown vertex " + std::to_string(v);
    if (!is_connected_set(g, s)) return "set " + std::to_string(i) + " is empty or disconnected";
  }
  for (std::size_t i = 0; i < b.sets.size(); ++i)
    for (std::size_t j = i + 1; j < b.sets.size(); ++j)
      if (!sets_touch(g, b.sets[i], b.sets[j]))
        return "sets " + std::to_string(i) + " and " + std::to_string(j) + " do not touch";
  return {};
}

bool hits_all(const std::vector<VertexSet>& sets, const VertexSet& z) {
  for (const auto& s : sets) {
    bool hit = std::any_of(s.begin(), s.end(), [&](Vertex v) { return std::binary_search(z.begin(), z.end(), v); });
    if (!hit) return false;
  }
  return true;
}

namespace {

using Bits = std::bitset<256>;

class HittingSetSearch {
 public:
  explicit HittingSetSearch(std::vector<Bits> sets) : sets_(std::move(sets)) {}

  Bits solve() {
    // Greedy start.
    Bits chosen;
    for (;;) {
      std::vector<int> count(256, 0);
      bool any = false;
      for (const auto& s : sets_) {
        if ((s & chosen).any()) continue;
        any = true;
        for (int e = 0; e < 256; ++e)
          if (s[static_cast<std::size_t>(e)]) ++count[static_cast<std::size_t>(e)];
      }
      if (!any) break;
      chosen.set(static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin()));
    }
    best_ = chosen;
    best_size_ = chosen.count();
    search(Bits{}, Bits{});
    return best_;
  }

 private:
  void search(const Bits& chosen, Bits forbidden) {
    std::vector<const Bits*> open;
    for (const auto& s : sets_)
      if ((s & chosen).none()) open.push_back(&s);
    const std::size_t have = chosen.count();
    if (open.empty()) {
      if (have < best_size_) {
        best_ = chosen;
        best_size_ = have;
      }
      return;
    }
    // Lower bound: pairwise disjoint open sets need distinct elements.
    std::vector<Bits> avail;
    avail.reserve(open.size());
    for (const Bits* s : open) avail.push_back(*s & ~forbidden);
    std::vector<std::size_t> idx(avail.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return avail[a].count() < avail[b].count(); });
    if (avail[idx[0]].none()) return;
    Bits used;
    std::size_t packing = 0;
    for (std::size_t i : idx) {
      if ((avail[i] & used).none()) {
        used |= avail[i];
        ++packing;
      }
    }
    if (have + packing >= best_size_) return;
    // Branch on the elements of the most constrained open set.
    const Bits pick = avail[idx[0]];
    for (std::size_t e = 0; e < 256; ++e) {
      if (!pick[e]) continue;
      Bits next = chosen;
      next.set(e);
      search(next, forbidden);
      forbidden.set(e);
      if (have + 1 >= best_size_) return;
    }
  }

  std::vector<Bits> sets_;
  Bits best_;
  std::size_t best_size_ = 0;
};

}  // namespace

HittingSet minimum_hitting_set(const std::vector<VertexSet>& sets, std::size_t universe) {
  if (universe > 256) throw InputError("hitting-set search supports at most 256 elements");
  std::vector<Bits> bits;
  for (const auto& s : sets) {
    Bits b;
    for (Vertex v : s) {
      if (v < 0 || static_cast<std::size_t>(v) >= universe) throw InputError("hitting-set element out of range");
      b.set(static_cast<std::size_t>(v));
    }
    if (b.none()) throw InputError("cannot hit an empty set");
    bits.push_back(b);
  }
  // Drop supersets: hitting the subset hits them too.
  std::vector<Bits> kept;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < bits.size() && !redundant; ++j) {
      if (i == j) continue;
      bool subset = (bits[j] & ~bits[i]).none();
      if (subset && (bits[j] != bits[i] || j < i)) redundant = true;
    }
    if (!redundant) kept.push_back(bits[i]);
  }
  HittingSet out;
  if (kept.empty()) return out;
  Bits z = HittingSetSearch(std::move(kept)).solve();
  for (std::size_t e = 0; e < 256; ++e)
    if (z[e]) out.set.push_back(static_cast<Vertex>(e));
  out.order = static_cast<int>(out.set.size());
  return out;
}

HittingSet bramble_order(const Graph& g, const Bramble& b, std::size_t cap) {
  if (auto err = validate_bramble(g, b); !err.empty()) throw InputError("invalid bramble: " + err);
  if (g.vertex_count() * b.sets.size() > cap)
    throw InputError("bramble too large for exact order: |V|*|sets| = " + std::to_string(g.vertex_count() * b.sets.size()));
  return minimum_hitting_set(b.sets, g.vertex_count());
}

Bramble grid_bramble(int k) {
  if (k < 2) throw InputError("grid bramble needs k >= 2");
  auto id = [k](int c, int r) { return r * k + c; };
  Bramble b;
  for (int i = 0; i < k - 1; ++i) {
    for (int j = 0; j < k - 1; ++j) {
      VertexSet s;
      for (int c = 0; c < k - 1; ++c) s.push_back(id(c, i));
      for (int r = 0; r < k - 1; ++r) s.push_back(id(j, r));
      b.sets.push_back(normalized(std::move(s)));
    }
  }
  VertexSet last_row, last_col;
  for (int c = 0; c < k - 1; ++c) last_row.push_back(id(c, k - 1));
  for (int r = 0; r < k; ++r) last_col.push_back(id(k - 1, r));
  b.sets.push_back(normalized(std::move(last_row)));
  b.sets.push_back(normalized(std::move(last_col)));
  return b;
}

nlohmann::json to_json(const Bramble& b) { return {{"sets", b.sets}}; }

Bramble bramble_from_json(const nlohmann::json& j) {
  try {
    Bramble b;
    for (auto s : j.at("sets").get<std::vector<VertexSet>>()) b.sets.push_back(normalized(std::move(s)));
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bramble JSON: ") + e.what());
  }
}

WitnessKind parse_witness_kind(const std::string& name) {
  if (name == "grid") return WitnessKind::grid;
  if (name == "wall") return WitnessKind::wall;
  if (name == "biclique") return WitnessKind::biclique;
  if (name == "clique") return WitnessKind::clique;
  throw InputError("unknown witness kind '" + name + "' (grid, wall, biclique, clique)");
}

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::grid: return "grid";
    case WitnessKind::wall: return "wall";
    case WitnessKind::biclique: return "biclique";
    case WitnessKind::clique: return "clique";
  }
  return "?";
}

Graph witness_pattern(WitnessKind kind, int k) {
  switch (kind) {
    case WitnessKind::grid: return grid(k).graph;
    case WitnessKind::wall: return wall(k).graph;
    case WitnessKind::biclique: return complete_bipartite(k, k);
    case WitnessKind::clique: return complete_graph(k);
  }
  throw InputError("unknown witness kind");
}

int tw_lower_bound_from_witness(const Graph& g, const MinorModel& witness, WitnessKind kind, int k) {
  if (auto err = validate_model(g, witness); !err.empty()) throw InputError("invalid witness: " + err);
  if (witness.pattern != witness_pattern(kind, k))
    throw InputError(std::string("witness pattern is not the canonical ") + to_string(kind) + " of size " + std::to_string(k));
  return kind == WitnessKind::clique ? k - 1 : k;
}

Rational nabla_r(const Graph& g, int r) {
  const int n = static_cast<int>(g.vertex_count());
  if (n > 12) throw InputError("nabla_r is capped at 12 vertices");
  if (r < 0 || r > 2) throw InputError("nabla_r supports 0 <= r <= 2");
  if (n == 0) throw InputError("nabla_r of the empty graph is undefined");
  // All-pairs distances in g; two vertices of one branch set of radius r are
  // within 2r of each other in g.
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), n + 1));
  for (int s = 0; s < n; ++s) {
    auto& d = dist[static_cast<std::size_t>(s)];
    d[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : g.neighbors(queue[h]))
        if (d[static_cast<std::size_t>(w)] > n) {
          d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(queue[h])] + 1;
          queue.push_back(w);
        }
  }
  std::vector<int> block(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> members;
  Rational best(0);

  auto radius_ok = [&](const std::vector<int>& set) {
    if (set.size() == 1) return true;
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int v : set) in[static_cast<std::size_t>(v)] = true;
    for (int c : set) {
      std::vector<int> d(static_cast<std::size_t>(n), -1);
      d[static_cast<std::size_t>(c)] = 0;
      std::vector<int> queue{c};
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (Vertex w : g.neighbors(queue[h]))
          if (in[static_cast<std::size_t>(w)] && d[static_cast<std::size_t>(w)] < 0) {
            d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(queue[h])] + 1;
            queue.push_back(w);
          }
      if (queue.size() == set.size() &&
          std::all_of(set.begin(), set.end(), [&](int v) { return d[static_cast<std::size_t>(v)] <= r; }))
        return true;
    }
    return false;
  };

  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      if (members.empty()) return;
      for (const auto& m : members)
        if (!radius_ok(m)) return;
      std::set<std::pair<int, int>> quotient;
      for (auto [a, b] : g.edges()) {
        int x = block[static_cast<std::size_t>(a)], y = block[static_cast<std::size_t>(b)];
        if (x >= 0 && y >= 0 && x != y) quotient.insert(std::minmax(x, y));
      }
      Rational d(static_cast<std::int64_t>(quotient.size()), static_cast<std::int64_t>(members.size()));
      if (d > best) best = d;
      return;
    }
    rec(v + 1);  // discard v
    const int blocks = static_cast<int>(members.size());
    for (int b = r > 0 ? 0 : blocks; b <= blocks; ++b) {
      if (b < blocks) {
        bool close = std::all_of(members[static_cast<std::size_t>(b)].begin(), members[static_cast<std::size_t>(b)].end(),
                                 [&](int u) { return dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <= 2 * r; });
        if (!close) continue;
        members[static_cast<std::size_t>(b)].push_back(v);
      } else {
        members.push_back({v});
      }
      block[static_cast<std::size_t>(v)] = b;
      rec(v + 1);
      block[static_cast<std::size_t>(v)] = -1;
      if (b < blocks)
        members[static_cast<std::size_t>(b)].pop_back();
      else
        members.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace itw
