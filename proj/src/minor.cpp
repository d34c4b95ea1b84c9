#include "itw/minor.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

#include "itw/error.hpp"
#include "itw/graph_io.hpp"
#include "itw/width.hpp"

namespace itw {

VertexSet MinorModel::support() const {
  VertexSet out;
  for (const auto& s : branch_sets) out.insert(out.end(), s.begin(), s.end());
  return normalized(std::move(out));
}

namespace {

std::string pair_name(std::size_t i, std::size_t j) { return "{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

// Which pattern vertex owns each host vertex (-1: none). Empty string or error.
std::string owners(const Graph& host, const MinorModel& m, std::vector<int>& owner) {
  owner.assign(host.vertex_count(), -1);
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
    const auto& s = m.branch_sets[i];
    if (s.empty()) return "branch set " + std::to_string(i) + " is empty";
    for (Vertex v : s) {
      if (!host.contains(v)) return "branch set " + std::to_string(i) + " holds unknown vertex " + std::to_string(v);
      auto& o = owner[static_cast<std::size_t>(v)];
      if (o != -1) return "branch sets " + std::to_string(o) + " and " + std::to_string(i) + " share vertex " + std::to_string(v);
      o = static_cast<int>(i);
    }
  }
  return {};
}

}  // namespace

std::string validate_model(const Graph& host, const MinorModel& m) {
  if (m.branch_sets.size() != m.pattern.vertex_count())
    return "model has " + std::to_string(m.branch_sets.size()) + " branch sets for a pattern on " +
           std::to_string(m.pattern.vertex_count()) + " vertices";
  std::vector<int> owner;
  if (auto err = owners(host, m, owner); !err.empty()) return err;
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i)
    if (!is_connected_set(host, m.branch_sets[i])) return "branch set " + std::to_string(i) + " is disconnected";
  std::set<Edge> touching;
  for (auto [a, b] : host.edges()) {
    int x = owner[static_cast<std::size_t>(a)], y = owner[static_cast<std::size_t>(b)];
    if (x >= 0 && y >= 0 && x != y) touching.insert(std::minmax(x, y));
  }
  for (auto [i, j] : m.pattern.edges())
    if (!touching.contains({i, j}))
      return "pattern edge " + pair_name(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) + " has no host edge between its branch sets";
  if (m.induced)
    for (auto [i, j] : touching)
      if (!m.pattern.adjacent(i, j))
        return "branch sets " + pair_name(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) + " touch but the pattern has no such edge";
  return {};
}

MinorModel identity_model(const Graph& g) {
  MinorModel m;
  m.pattern = g;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) m.branch_sets.push_back({v});
  return m;
}

MinorModel compose_models(const MinorModel& outer, const MinorModel& inner) {
  MinorModel out;
  out.pattern = outer.pattern;
  out.induced = outer.induced && inner.induced;
  for (const auto& s : outer.branch_sets) {
    VertexSet u;
    for (Vertex b : s) {
      if (b < 0 || static_cast<std::size_t>(b) >= inner.branch_sets.size())
        throw InputError("outer model refers to vertex " + std::to_string(b) + " outside the inner pattern");
      const auto& t = inner.branch_sets[static_cast<std::size_t>(b)];
      u.insert(u.end(), t.begin(), t.end());
    }
    out.branch_sets.push_back(normalized(std::move(u)));
  }
  return out;
}

std::string check_branch_trichotomy(const Graph& host, const MinorModel& m) {
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
    auto sub = induced_subgraph(host, m.branch_sets[i]);
    const Graph& b = sub.graph;
    const auto n = b.vertex_count(), e = b.edge_count();
    std::string tag = "branch set " + std::to_string(i);
    if (!is_connected(b)) return tag + " is disconnected";
    if (b.max_degree() > 3) return tag + " has a vertex of degree " + std::to_string(b.max_degree());
    std::size_t deg3 = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) deg3 += b.degree(v) == 3;
    if (e + 1 == n) {
      if (deg3 <= 1) continue;  // path or tripod
      return tag + " is a tree with " + std::to_string(deg3) + " branching vertices";
    }
    if (e == n) {
      // Unicyclic: must be a triangle with pendant paths at its corners.
      bool triangle = false;
      for (auto [x, y] : b.edges())
        for (Vertex z : b.neighbors(x))
          if (z != y && b.adjacent(y, z)) triangle = true;
      if (!triangle) return tag + " has a cycle longer than a triangle";
      for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
        if (b.degree(v) < 3) continue;
        // Degree-3 vertices must be triangle corners.
        auto nb = b.neighbors(v);
        bool corner = false;
        for (Vertex x : nb)
          for (Vertex y : nb)
            if (x < y && b.adjacent(x, y)) corner = true;
        if (!corner) return tag + " branches away from its triangle";
      }
      continue;
    }
    return tag + " has " + std::to_string(e) + " edges on " + std::to_string(n) + " vertices";
  }
  return {};
}

namespace {

// Whether replacing set i by `cand` keeps m valid, given current owners.
bool replacement_valid(const Graph& host, const MinorModel& m, std::size_t i, const VertexSet& cand,
                       const std::vector<int>& owner) {
  if (!is_connected_set(host, cand)) return false;
  std::vector<bool> touched(m.branch_sets.size(), false);
  for (Vertex v : cand)
    for (Vertex w : host.neighbors(v)) {
      int o = owner[static_cast<std::size_t>(w)];
      if (o >= 0 && static_cast<std::size_t>(o) != i) touched[static_cast<std::size_t>(o)] = true;
    }
  for (Vertex j : m.pattern.neighbors(static_cast<Vertex>(i)))
    if (!touched[static_cast<std::size_t>(j)]) return false;
  // Shrinking a set never creates adjacencies, so induced non-edges stay fine.
  return true;
}

bool greedy_pass(const Graph& host, MinorModel& m, std::vector<int>& owner) {
  bool changed = false;
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
    for (std::size_t k = 0; k < m.branch_sets[i].size() && m.branch_sets[i].size() > 1;) {
      VertexSet cand = m.branch_sets[i];
      Vertex v = cand[k];
      cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(k));
      if (replacement_valid(host, m, i, cand, owner)) {
        owner[static_cast<std::size_t>(v)] = -1;
        m.branch_sets[i] = std::move(cand);
        changed = true;
      } else {
        ++k;
      }
    }
  }
  return changed;
}

bool exhaustive_pass(const Graph& host, MinorModel& m, std::vector<int>& owner, int cap) {
  for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
    const auto& s = m.branch_sets[i];
    const int size = static_cast<int>(s.size());
    if (size <= 2 || size > cap) continue;
    for (int want = 1; want < size - 1; ++want) {
      // Subsets of the requested size in lexicographic order of positions.
      std::vector<int> pick(static_cast<std::size_t>(want));
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        VertexSet cand;
        for (int p : pick) cand.push_back(s[static_cast<std::size_t>(p)]);
        if (replacement_valid(host, m, i, cand, owner)) {
          for (Vertex v : s) owner[static_cast<std::size_t>(v)] = -1;
          for (Vertex v : cand) owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
          m.branch_sets[i] = std::move(cand);
          return true;
        }
        int k = want - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] == size - want + k) --k;
        if (k < 0) break;
        ++pick[static_cast<std::size_t>(k)];
        for (int t = k + 1; t < want; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
      }
    }
  }
  return false;
}

}  // namespace

MinorModel refine_to_minimal(const Graph& host, MinorModel m, int exhaustive_cap) {
  if (auto err = validate_model(host, m); !err.empty()) throw InputError("cannot refine an invalid model: " + err);
  std::vector<int> owner;
  owners(host, m, owner);
  for (;;) {
    while (greedy_pass(host, m, owner)) {
    }
    if (!exhaustive_pass(host, m, owner, exhaustive_cap)) break;
  }
  return m;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

class InducedMinorSearcher {
 public:
  InducedMinorSearcher(const Graph& host, const Graph& pattern, const InducedMinorOptions& opt)
      : host_(host), pattern_(pattern), opt_(opt), n_(static_cast<int>(host.vertex_count())),
        p_(static_cast<int>(pattern.vertex_count())) {
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : host.edges()) {
      adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
      adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }
    sets_.assign(static_cast<std::size_t>(p_), 0);
    label_.assign(static_cast<std::size_t>(n_), -1);
  }

  InducedMinorSearch run() {
    InducedMinorSearch out;
    try {
      if (dfs(0)) {
        out.status = SearchStatus::found;
        MinorModel m;
        m.pattern = pattern_;
        m.induced = opt_.induced;
        m.branch_sets.resize(static_cast<std::size_t>(p_));
        for (int v = 0; v < n_; ++v)
          if (label_[static_cast<std::size_t>(v)] >= 0) m.branch_sets[static_cast<std::size_t>(label_[static_cast<std::size_t>(v)])].push_back(v);
        out.model = std::move(m);
      }
    } catch (const BudgetExhausted&) {
      out.status = SearchStatus::budget_exhausted;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (; s; s &= s - 1) out |= adj_[static_cast<std::size_t>(std::countr_zero(s))];
    return out;
  }

  // Vertices reachable from `seed` inside `allowed`.
  Mask reach(Mask seed, Mask allowed) const {
    Mask comp = seed, frontier = seed;
    while (frontier) {
      frontier = neighborhood(frontier) & allowed & ~comp;
      comp |= frontier;
    }
    return comp;
  }

  bool feasible(int next) const {
    const Mask free = next >= 64 ? 0 : (~Mask{0} << next) & full_mask();
    int empty = 0;
    std::vector<Mask> region(static_cast<std::size_t>(p_));
    for (int i = 0; i < p_; ++i) {
      Mask s = sets_[static_cast<std::size_t>(i)];
      if (!s) {
        ++empty;
        region[static_cast<std::size_t>(i)] = free;
        continue;
      }
      Mask lowest = s & (~s + 1);
      Mask comp = reach(lowest, s | free);
      if ((comp & s) != s) return false;
      region[static_cast<std::size_t>(i)] = comp;
    }
    if (empty > std::popcount(free)) return false;
    for (auto [i, j] : pattern_.edges()) {
      Mask si = sets_[static_cast<std::size_t>(i)], sj = sets_[static_cast<std::size_t>(j)];
      if (si && sj && (neighborhood(si) & sj)) continue;
      Mask ri = region[static_cast<std::size_t>(i)], rj = region[static_cast<std::size_t>(j)];
      if (!((ri | neighborhood(ri)) & rj)) return false;
    }
    return true;
  }

  Mask full_mask() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  bool complete() const {
    for (int i = 0; i < p_; ++i) {
      Mask s = sets_[static_cast<std::size_t>(i)];
      if (!s || reach(s & (~s + 1), s) != s) return false;
    }
    for (auto [i, j] : pattern_.edges())
      if (!(neighborhood(sets_[static_cast<std::size_t>(i)]) & sets_[static_cast<std::size_t>(j)])) return false;
    return true;
  }

  bool dfs(int v) {
    if (++nodes_ > opt_.budget) throw BudgetExhausted("induced minor search budget exhausted");
    if (v == n_) return complete();
    if (!feasible(v)) return false;
    // Discarded first, then labels in increasing order.
    if (dfs(v + 1)) return true;
    const Mask vb = Mask{1} << v;
    for (int i = 0; i < p_; ++i) {
      if (opt_.induced) {
        bool clash = false;
        for (int j = 0; j < p_ && !clash; ++j)
          if (j != i && !pattern_.adjacent(i, j) && (adj_[static_cast<std::size_t>(v)] & sets_[static_cast<std::size_t>(j)])) clash = true;
        if (clash) continue;
      }
      sets_[static_cast<std::size_t>(i)] |= vb;
      label_[static_cast<std::size_t>(v)] = i;
      if (dfs(v + 1)) return true;
      sets_[static_cast<std::size_t>(i)] &= ~vb;
      label_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  const InducedMinorOptions& opt_;
  int n_, p_;
  std::vector<Mask> adj_;
  std::vector<Mask> sets_;
  std::vector<int> label_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

InducedMinorSearch find_induced_minor(const Graph& host, const Graph& pattern, const InducedMinorOptions& opt) {
  if (pattern.vertex_count() > opt.pattern_cap)
    throw InputError("pattern has " + std::to_string(pattern.vertex_count()) + " vertices, cap is " + std::to_string(opt.pattern_cap));
  if (host.vertex_count() > std::min<std::size_t>(opt.host_cap, 64))
    throw InputError("host has " + std::to_string(host.vertex_count()) + " vertices, cap is " +
                     std::to_string(std::min<std::size_t>(opt.host_cap, 64)));
  if (opt.treewidth_prune && host.vertex_count() <= 24 && pattern.vertex_count() <= 24 &&
      exact_treewidth(pattern).width > exact_treewidth(host).width)
    return {SearchStatus::absent, std::nullopt, 0};
  auto out = InducedMinorSearcher(host, pattern, opt).run();
  if (out.model) {
    if (auto err = validate_model(host, *out.model); !err.empty())
      throw std::logic_error("induced minor search produced an invalid model: " + err);
  }
  return out;
}

namespace {

class SubdivisionSearcher {
 public:
  SubdivisionSearcher(const Graph& host, int s, std::uint64_t budget)
      : host_(host), s_(s), budget_(budget), pairs_(complete_graph(s).edges()), used_(host.vertex_count(), false) {}

  CliqueSubdivisionSearch run() {
    CliqueSubdivisionSearch out;
    try {
      std::vector<Vertex> cands;
      for (Vertex v = 0; v < static_cast<Vertex>(host_.vertex_count()); ++v)
        if (static_cast<int>(host_.degree(v)) >= s_ - 1) cands.push_back(v);
      if (choose(cands, 0)) {
        out.status = SearchStatus::found;
        out.witness = CliqueSubdivision{branch_, paths_};
      }
    } catch (const BudgetExhausted&) {
      out.status = SearchStatus::budget_exhausted;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted("clique subdivision search budget exhausted");
  }

  bool choose(const std::vector<Vertex>& cands, std::size_t from) {
    tick();
    if (static_cast<int>(branch_.size()) == s_) {
      paths_.clear();
      return route(0);
    }
    for (std::size_t i = from; i < cands.size(); ++i) {
      if (cands.size() - i < static_cast<std::size_t>(s_) - branch_.size()) break;
      branch_.push_back(cands[i]);
      used_[static_cast<std::size_t>(cands[i])] = true;
      if (choose(cands, i + 1)) return true;
      used_[static_cast<std::size_t>(cands[i])] = false;
      branch_.pop_back();
    }
    return false;
  }

  // Whether a path from a to b with interior in unused vertices exists.
  bool linkable(Vertex a, Vertex b) const {
    if (host_.adjacent(a, b)) return true;
    std::vector<bool> seen(host_.vertex_count(), false);
    std::vector<Vertex> queue{a};
    seen[static_cast<std::size_t>(a)] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : host_.neighbors(queue[h])) {
        if (w == b) return true;
        if (seen[static_cast<std::size_t>(w)] || used_[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        queue.push_back(w);
      }
    return false;
  }

  bool route(std::size_t k) {
    tick();
    if (k == pairs_.size()) return true;
    for (std::size_t r = k; r < pairs_.size(); ++r)
      if (!linkable(branch_[static_cast<std::size_t>(pairs_[r].first)], branch_[static_cast<std::size_t>(pairs_[r].second)])) return false;
    Vertex a = branch_[static_cast<std::size_t>(pairs_[k].first)], b = branch_[static_cast<std::size_t>(pairs_[k].second)];
    std::vector<Vertex> path{a};
    return extend(k, path, b);
  }

  bool extend(std::size_t k, std::vector<Vertex>& path, Vertex target) {
    tick();
    Vertex tip = path.back();
    if (host_.adjacent(tip, target)) {
      path.push_back(target);
      paths_.push_back(path);
      if (route(k + 1)) return true;
      paths_.pop_back();
      path.pop_back();
    }
    for (Vertex w : host_.neighbors(tip)) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      used_[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      if (extend(k, path, target)) return true;
      path.pop_back();
      used_[static_cast<std::size_t>(w)] = false;
    }
    return false;
  }

  const Graph& host_;
  int s_;
  std::uint64_t budget_;
  std::vector<Edge> pairs_;
  std::vector<bool> used_;
  std::vector<Vertex> branch_;
  std::vector<std::vector<Vertex>> paths_;
  std::uint64_t nodes_ = 0;
};

// Replaces each path by a shortest path through its own interior and unused
// vertices, repeating until nothing shrinks.
void shorten_paths(const Graph& host, CliqueSubdivision& w) {
  std::vector<bool> used(host.vertex_count(), false);
  for (Vertex b : w.branch) used[static_cast<std::size_t>(b)] = true;
  for (const auto& p : w.paths)
    for (std::size_t i = 1; i + 1 < p.size(); ++i) used[static_cast<std::size_t>(p[i])] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& p : w.paths) {
      for (std::size_t i = 1; i + 1 < p.size(); ++i) used[static_cast<std::size_t>(p[i])] = false;
      Vertex a = p.front(), b = p.back();
      std::vector<Vertex> parent(host.vertex_count(), kNoVertex);
      std::vector<bool> seen(host.vertex_count(), false);
      std::vector<Vertex> queue{a};
      seen[static_cast<std::size_t>(a)] = true;
      for (std::size_t h = 0; h < queue.size() && !seen[static_cast<std::size_t>(b)]; ++h)
        for (Vertex x : host.neighbors(queue[h])) {
          if (seen[static_cast<std::size_t>(x)] || (x != b && used[static_cast<std::size_t>(x)])) continue;
          seen[static_cast<std::size_t>(x)] = true;
          parent[static_cast<std::size_t>(x)] = queue[h];
          if (x != b) queue.push_back(x);
        }
      std::vector<Vertex> q;
      for (Vertex x = b; x != kNoVertex; x = parent[static_cast<std::size_t>(x)]) q.push_back(x);
      std::reverse(q.begin(), q.end());
      if (q.size() < p.size()) {
        p = std::move(q);
        changed = true;
      }
      for (std::size_t i = 1; i + 1 < p.size(); ++i) used[static_cast<std::size_t>(p[i])] = true;
    }
  }
}

}  // namespace

CliqueSubdivisionSearch find_clique_subdivision(const Graph& host, int s, std::uint64_t budget) {
  if (s < 1) throw InputError("clique subdivision needs s >= 1");
  auto out = SubdivisionSearcher(host, s, budget).run();
  if (out.witness) {
    shorten_paths(host, *out.witness);
    if (auto err = check_clique_subdivision(host, s, *out.witness); !err.empty())
      throw std::logic_error("clique subdivision search produced an invalid witness: " + err);
  }
  return out;
}

std::string check_clique_subdivision(const Graph& host, int s, const CliqueSubdivision& w) {
  auto pairs = complete_graph(s).edges();
  if (static_cast<int>(w.branch.size()) != s) return "expected " + std::to_string(s) + " branch vertices";
  if (w.paths.size() != pairs.size()) return "expected one path per pair of branch vertices";
  std::vector<int> use(host.vertex_count(), 0);
  for (Vertex b : w.branch) {
    if (!host.contains(b)) return "branch vertex " + std::to_string(b) + " out of range";
    if (++use[static_cast<std::size_t>(b)] > 1) return "branch vertex " + std::to_string(b) + " repeated";
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& p = w.paths[k];
    if (p.size() < 2 || p.front() != w.branch[static_cast<std::size_t>(pairs[k].first)] ||
        p.back() != w.branch[static_cast<std::size_t>(pairs[k].second)])
      return "path " + std::to_string(k) + " does not join its branch vertices";
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!host.adjacent(p[i], p[i + 1])) return "path " + std::to_string(k) + " uses a non-edge";
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (!host.contains(p[i])) return "path " + std::to_string(k) + " leaves the host";
      if (++use[static_cast<std::size_t>(p[i])] > 1) return "vertex " + std::to_string(p[i]) + " used twice";
    }
  }
  return {};
}

std::optional<VertexSet> green_clique_ramsey(const TrimSupergraph& t, int length, int s) {
  if (t.kind != SkeletonKind::clique) throw InputError("green clique search needs a clique skeleton");
  if (s < 0) throw InputError("clique size must be >= 0");
  const int n = static_cast<int>(t.skeleton.vertex_count());
  std::vector<Edge> green;
  for (std::size_t e = 0; e < t.paths.size(); ++e)
    if (static_cast<int>(t.paths[e].size()) - 1 > length) green.push_back(t.skeleton.edges()[e]);
  Graph aux(static_cast<std::size_t>(n), std::move(green));
  VertexSet cur;
  std::function<bool(Vertex)> grow = [&](Vertex from) {
    if (static_cast<int>(cur.size()) == s) return true;
    for (Vertex v = from; v < n; ++v) {
      if (n - v < s - static_cast<int>(cur.size())) break;
      if (!std::all_of(cur.begin(), cur.end(), [&](Vertex u) { return aux.adjacent(u, v); })) continue;
      cur.push_back(v);
      if (grow(v + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (grow(0)) return cur;
  return std::nullopt;
}

nlohmann::json to_json(const MinorModel& m) {
  return {{"pattern", to_json(m.pattern)}, {"branch_sets", m.branch_sets}, {"induced", m.induced}};
}

MinorModel minor_model_from_json(const nlohmann::json& j) {
  try {
    MinorModel m;
    m.pattern = graph_from_json(j.at("pattern"));
    for (auto s : j.at("branch_sets").get<std::vector<VertexSet>>()) m.branch_sets.push_back(normalized(std::move(s)));
    m.induced = j.value("induced", true);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("minor model JSON: ") + e.what());
  }
}

}  // namespace itw
