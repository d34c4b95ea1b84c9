#include "itw/dedensify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

#include "itw/error.hpp"
#include "itw/width.hpp"

namespace itw {

namespace {

std::size_t interior(const std::vector<Vertex>& p) { return p.size() - 2; }

void require_valid(const TrimSupergraph& t, SkeletonKind kind, const char* what) {
  if (t.kind != kind) throw InputError(std::string(what) + " expects a " + to_string(kind) + " trim supergraph");
  auto r = validate_trim(t);
  if (!r.ok) throw InputError(std::string(what) + ": " + r.violations.front());
}

// Host vertices kept when the clique's skeleton is cut into (in_a, rest).
std::size_t split_retention(const TrimSupergraph& t, const std::vector<char>& in_a) {
  std::size_t kept = t.skeleton.vertex_count();
  const auto& edges = t.skeleton.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (in_a[static_cast<std::size_t>(edges[e].first)] != in_a[static_cast<std::size_t>(edges[e].second)])
      kept += interior(t.paths[e]);
  return kept;
}

}  // namespace

BicliqueSplit clique_to_biclique_split(const TrimSupergraph& t, std::uint64_t seed, int tries) {
  require_valid(t, SkeletonKind::clique, "biclique split");
  const int n2 = static_cast<int>(t.skeleton.vertex_count());
  if (n2 % 2 != 0) throw InputError("biclique split needs an even clique, got K_" + std::to_string(n2));
  const int s = n2 / 2;
  const std::size_t n = t.vertex_count();
  if (tries < 0) throw InputError("tries must be >= 0");

  BicliqueSplit out;
  std::vector<char> in_a(static_cast<std::size_t>(n2));
  std::vector<Vertex> chosen;
  auto mark = [&](const std::vector<Vertex>& a) {
    std::fill(in_a.begin(), in_a.end(), 0);
    for (Vertex v : a) in_a[static_cast<std::size_t>(v)] = 1;
  };

  Rng rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n2));
  for (int d = 0; d < tries && chosen.empty(); ++d) {
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<Vertex>(order));
    std::vector<Vertex> a(order.begin(), order.begin() + s);
    std::sort(a.begin(), a.end());
    if (a.front() != 0) {  // name the side holding 0 as A
      std::vector<Vertex> b(order.begin() + s, order.end());
      std::sort(b.begin(), b.end());
      a = std::move(b);
    }
    mark(a);
    ++out.draws;
    if (2 * split_retention(t, in_a) >= n) chosen = std::move(a);
  }
  if (chosen.empty()) {
    if ((tries > 0 && n2 > 12) || n2 > 24)
      throw BudgetExhausted("no balanced bipartition kept half the vertices in " + std::to_string(tries) + " draws");
    out.exhaustive = true;
    std::size_t best = 0;
    // combinations of {1..2s-1} of size s-1, lexicographic; 0 is always in A
    std::vector<Vertex> comb(static_cast<std::size_t>(s - 1));
    std::iota(comb.begin(), comb.end(), 1);
    while (true) {
      std::vector<Vertex> a{0};
      a.insert(a.end(), comb.begin(), comb.end());
      mark(a);
      ++out.draws;
      auto kept = split_retention(t, in_a);
      if (kept > best) {
        best = kept;
        chosen = a;
      }
      int i = s - 2;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == n2 - (s - 1) + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int k = i + 1; k < s - 1; ++k) comb[static_cast<std::size_t>(k)] = comb[static_cast<std::size_t>(k - 1)] + 1;
    }
    // the average bipartition keeps more than half, so the best one does
    if (2 * best < n) throw std::logic_error("no bipartition keeps half the vertices");
  }

  out.side_a = chosen;
  mark(chosen);
  for (Vertex v = 0; v < n2; ++v)
    if (!in_a[static_cast<std::size_t>(v)]) out.side_b.push_back(v);
  TrimSupergraph base = t;
  base.origin.clear();
  std::vector<Vertex> keep = out.side_a;
  keep.insert(keep.end(), out.side_b.begin(), out.side_b.end());
  out.biclique = restrict_trim(base, keep, SkeletonKind::biclique);
  if (2 * out.biclique.vertex_count() < n || !validate_trim(out.biclique).ok)
    throw std::logic_error("biclique split lost its guarantee");
  return out;
}

BalancedPartitionPair random_balanced_partition(int s, int h, Rng& rng) {
  if (h < 1 || s < 1 || s % h != 0) throw InputError("h must divide s");
  const int size = s / h;
  auto draw = [&](Vertex offset) {
    std::vector<Vertex> items(static_cast<std::size_t>(s));
    std::iota(items.begin(), items.end(), offset);
    rng.shuffle(std::span<Vertex>(items));
    std::vector<std::vector<Vertex>> parts;
    for (int p = 0; p < h; ++p) {
      std::vector<Vertex> part(items.begin() + p * size, items.begin() + (p + 1) * size);
      std::sort(part.begin(), part.end());
      parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
  };
  BalancedPartitionPair out;
  out.a = draw(0);
  out.b = draw(s);
  return out;
}

std::uint64_t balanced_partition_count(int s, int h) {
  if (h < 1 || s < 1 || s % h != 0) throw InputError("h must divide s");
  // product over parts of C(remaining - 1, size - 1): the smallest remaining item
  // anchors the next part
  const int size = s / h;
  unsigned __int128 total = 1;
  const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
  for (int remaining = s; remaining > 0; remaining -= size) {
    unsigned __int128 c = 1;
    for (int k = 1; k < size; ++k) c = c * static_cast<unsigned>(remaining - k) / static_cast<unsigned>(k);
    total *= c;
    if (total > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<std::vector<std::vector<Vertex>>> all_balanced_partitions(int s, int h) {
  if (balanced_partition_count(s, h) > 5'000'000) throw InputError("too many balanced partitions to list");
  const int size = s / h;
  std::vector<std::vector<std::vector<Vertex>>> out;
  std::vector<std::vector<Vertex>> parts;
  std::vector<char> used(static_cast<std::size_t>(s), 0);
  auto rec = [&](auto&& self) -> void {
    Vertex first = 0;
    while (first < s && used[static_cast<std::size_t>(first)]) ++first;
    if (first == s) {
      out.push_back(parts);
      return;
    }
    std::vector<Vertex> rest;
    for (Vertex v = first + 1; v < s; ++v)
      if (!used[static_cast<std::size_t>(v)]) rest.push_back(v);
    const int r = static_cast<int>(rest.size());
    std::vector<int> idx(static_cast<std::size_t>(size - 1));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Vertex> part{first};
      for (int i : idx) part.push_back(rest[static_cast<std::size_t>(i)]);
      for (Vertex v : part) used[static_cast<std::size_t>(v)] = 1;
      parts.push_back(part);
      self(self);
      parts.pop_back();
      for (Vertex v : part) used[static_cast<std::size_t>(v)] = 0;
      int i = size - 2;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - (size - 1) + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int k = i + 1; k < size - 1; ++k) idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
    }
  };
  rec(rec);
  return out;
}

TrimSupergraph partition_cell(const TrimSupergraph& t, const BalancedPartitionPair& p, int i, int j) {
  std::vector<Vertex> keep = p.a.at(static_cast<std::size_t>(i));
  const auto& b = p.b.at(static_cast<std::size_t>(j));
  keep.insert(keep.end(), b.begin(), b.end());
  return restrict_trim(t, keep, SkeletonKind::biclique);
}

namespace {

// Per-host-vertex cell membership: a fixed row and/or column, -1 meaning all.
struct Place {
  int row = -1, col = -1;
};

struct CellContext {
  const TrimSupergraph& t;
  std::vector<Edge> extras;
  int s, h;
};

std::vector<CellCount> count_cells(const CellContext& ctx, const BalancedPartitionPair& p) {
  const auto& t = ctx.t;
  const int s = ctx.s, h = ctx.h;
  std::vector<int> part_of(static_cast<std::size_t>(2 * s), -1);
  for (int i = 0; i < h; ++i) {
    for (Vertex v : p.a[static_cast<std::size_t>(i)]) part_of[static_cast<std::size_t>(v)] = i;
    for (Vertex v : p.b[static_cast<std::size_t>(i)]) part_of[static_cast<std::size_t>(v)] = i;
  }
  std::vector<CellCount> cells(static_cast<std::size_t>(h * h));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      auto& c = cells[static_cast<std::size_t>(i * h + j)];
      c.i = i;
      c.j = j;
      c.vertices = static_cast<std::size_t>(2 * (s / h));
    }
  std::vector<Place> place(t.vertex_count());
  for (Vertex v = 0; v < 2 * s; ++v) {
    auto& pl = place[static_cast<std::size_t>(t.branch[static_cast<std::size_t>(v)])];
    (v < s ? pl.row : pl.col) = part_of[static_cast<std::size_t>(v)];
  }
  const auto& edges = t.skeleton.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int i = part_of[static_cast<std::size_t>(edges[e].first)], j = part_of[static_cast<std::size_t>(edges[e].second)];
    const auto& path = t.paths[e];
    cells[static_cast<std::size_t>(i * h + j)].vertices += interior(path);
    for (std::size_t k = 1; k + 1 < path.size(); ++k) place[static_cast<std::size_t>(path[k])] = {i, j};
  }
  auto meet = [](int x, int y) { return x < 0 ? y : (y < 0 || x == y ? x : -2); };
  for (auto [u, v] : ctx.extras) {
    const auto& pu = place[static_cast<std::size_t>(u)];
    const auto& pv = place[static_cast<std::size_t>(v)];
    int r = meet(pu.row, pv.row), c = meet(pu.col, pv.col);
    if (r == -2 || c == -2) continue;
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j)
        if ((r < 0 || r == i) && (c < 0 || c == j)) ++cells[static_cast<std::size_t>(i * h + j)].extras;
  }
  return cells;
}

struct Pick {
  std::size_t extras = 0, vertices = 0, partition = 0;
  int i = 0, j = 0;
  bool any = false;
  std::size_t qualifying = 0;

  auto key() const { return std::tuple(extras, vertices, partition, i, j); }
};

}  // namespace

std::vector<CellCount> partition_cell_counts(const TrimSupergraph& t, const BalancedPartitionPair& p) {
  if (t.kind != SkeletonKind::biclique) throw InputError("partition cells need a biclique trim supergraph");
  CellContext ctx{t, extra_edges(t), t.side(), static_cast<int>(p.a.size())};
  return count_cells(ctx, p);
}

DedensifyResult dedensify_balanced(const TrimSupergraph& t, int h, const DedensifyOptions& opts) {
  require_valid(t, SkeletonKind::biclique, "dedensify");
  const int s = t.side();
  if (h < 1 || s % h != 0) throw InputError("h = " + std::to_string(h) + " does not divide s = " + std::to_string(s));
  if (opts.jobs < 1) throw InputError("jobs must be >= 1");
  CellContext ctx{t, extra_edges(t), s, h};
  const std::size_t n = t.vertex_count();
  const std::size_t m = ctx.extras.size();

  // partitions to examine, in their tie-breaking order
  std::vector<BalancedPartitionPair> pairs;
  if (opts.exhaustive) {
    auto count = balanced_partition_count(s, h);
    if (count > opts.budget || count > opts.budget / count)
      throw BudgetExhausted("exhaustive dedensify needs " + std::to_string(count) + "^2 partition pairs, budget " +
                            std::to_string(opts.budget));
    auto all = all_balanced_partitions(s, h);
    for (const auto& a : all)
      for (const auto& b : all) {
        BalancedPartitionPair p{a, b};
        for (auto& part : p.b)
          for (auto& v : part) v += s;
        pairs.push_back(std::move(p));
      }
  } else {
    if (opts.draws == 0) throw InputError("sampled dedensify needs draws >= 1");
    Rng rng(opts.seed);
    for (std::size_t d = 0; d < opts.draws; ++d) pairs.push_back(random_balanced_partition(s, h, rng));
  }

  auto scan = [&](std::size_t lo, std::size_t hi) {
    Pick best;
    for (std::size_t p = lo; p < hi; ++p)
      for (const auto& c : count_cells(ctx, pairs[p])) {
        // extras <= m/(h n) * |V(cell)|
        if (c.extras * static_cast<std::size_t>(h) * n > m * c.vertices) continue;
        ++best.qualifying;
        Pick cand{c.extras, c.vertices, p, c.i, c.j, true, 0};
        if (!best.any || cand.key() < best.key()) {
          cand.qualifying = best.qualifying;
          best = cand;
        }
      }
    return best;
  };

  const std::size_t jobs = std::min<std::size_t>(static_cast<std::size_t>(opts.jobs), pairs.size());
  std::vector<Pick> picks(jobs);
  if (jobs <= 1) {
    picks.assign(1, scan(0, pairs.size()));
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (pairs.size() + jobs - 1) / jobs;
    for (std::size_t k = 0; k < jobs; ++k)
      pool.emplace_back([&, k] { picks[k] = scan(std::min(pairs.size(), k * chunk), std::min(pairs.size(), (k + 1) * chunk)); });
    for (auto& th : pool) th.join();
  }
  Pick best;
  std::size_t qualifying = 0;
  for (const auto& p : picks) {
    qualifying += p.qualifying;
    if (p.any && (!best.any || p.key() < best.key())) best = p;
  }
  if (!best.any)
    throw BudgetExhausted("no cell met extras*h*n <= m*|V(cell)| in " + std::to_string(pairs.size()) + " partition pairs");

  DedensifyResult out;
  out.partition = pairs[best.partition];
  out.i = best.i;
  out.j = best.j;
  TrimSupergraph base = t;
  base.origin.clear();
  out.graph = partition_cell(base, out.partition, best.i, best.j);
  out.input_vertices = n;
  out.input_extras = m;
  out.partitions_examined = pairs.size();
  out.qualifying = qualifying;
  auto report = validate_trim(out.graph);
  out.extras = report.extra_edge_count;
  if (!report.ok || out.extras != best.extras || out.graph.vertex_count() != best.vertices)
    throw std::logic_error("dedensify cell disagrees with its counted size");
  return out;
}

MinorModel biclique_model(const SparseWitnessCertificate& c) {
  MinorModel m{skeleton_graph(SkeletonKind::biclique, c.side), {}, false};
  m.branch_sets.resize(static_cast<std::size_t>(2 * c.side));
  for (std::size_t v = 0; v < c.branch.size(); ++v) m.branch_sets[v].push_back(c.branch[v]);
  const auto& edges = m.pattern.edges();
  for (std::size_t e = 0; e < edges.size() && e < c.paths.size(); ++e) {
    auto& set = m.branch_sets[static_cast<std::size_t>(edges[e].first)];
    const auto& p = c.paths[e];
    if (p.size() > 2) set.insert(set.end(), p.begin() + 1, p.end() - 1);
  }
  for (auto& set : m.branch_sets) set = normalized(std::move(set));
  return m;
}

void check_sparse_witness(const Graph& host, SparseWitnessCertificate& c) {
  c.edge_count = c.extra_edges = 0;
  c.two_connected = false;
  c.tw_lower_bound = 0;
  c.min_path_length = 0;
  c.inequalities.clear();
  c.violations.clear();
  auto fail = [&](std::string msg) { c.violations.push_back(std::move(msg)); };

  if (c.side < 1) return fail("side must be >= 1");
  if (c.eps <= Rational(0)) return fail("eps must be positive");
  if (c.vertices != normalized(c.vertices)) return fail("vertex list is not sorted and duplicate-free");
  for (Vertex v : c.vertices)
    if (!host.contains(v)) return fail("vertex " + std::to_string(v) + " is not in the host");
  auto sub = induced_subgraph(host, c.vertices);
  auto local = [&](Vertex v) {
    return host.contains(v) ? sub.from_parent[static_cast<std::size_t>(v)] : kNoVertex;
  };
  TrimSupergraph t;
  t.kind = SkeletonKind::biclique;
  t.skeleton = skeleton_graph(SkeletonKind::biclique, c.side);
  t.host = sub.graph;
  for (Vertex v : c.branch) t.branch.push_back(local(v));
  for (const auto& p : c.paths) {
    std::vector<Vertex> q;
    for (Vertex v : p) q.push_back(local(v));
    t.paths.push_back(std::move(q));
  }
  for (Vertex v : t.branch)
    if (v == kNoVertex) return fail("branch vertex outside the certified vertex set");
  for (const auto& p : t.paths)
    for (Vertex v : p)
      if (v == kNoVertex) return fail("path vertex outside the certified vertex set");
  auto report = validate_trim(t);
  for (auto& v : report.violations) fail("structure: " + v);
  if (!report.ok) return;

  const auto n = static_cast<std::int64_t>(sub.graph.vertex_count());
  const auto m = static_cast<std::int64_t>(sub.graph.edge_count());
  const int ell = t.min_path_length();
  c.min_path_length = ell;
  c.edge_count = static_cast<std::size_t>(m);
  c.extra_edges = report.extra_edge_count;
  c.two_connected = is_two_connected(sub.graph);
  if (!c.two_connected) fail("subgraph is not 2-connected");

  auto model = biclique_model(c);
  for (auto& set : model.branch_sets)
    for (auto& v : set) v = local(v);
  try {
    c.tw_lower_bound = tw_lower_bound_from_witness(sub.graph, model, WitnessKind::biclique, c.side);
  } catch (const InputError& e) {
    fail(std::string("biclique model: ") + e.what());
  }

  const Rational eps = c.eps;
  const auto extras = static_cast<std::int64_t>(c.extra_edges);
  auto add = [&](std::string name, Rational lhs, Rational rhs) {
    Inequality q{std::move(name), lhs, rhs};
    if (!q.holds()) fail(q.name + " fails: " + lhs.to_string() + " > " + rhs.to_string());
    c.inequalities.push_back(std::move(q));
  };
  add("w <= tw lower bound", Rational(c.w), Rational(c.tw_lower_bound));
  add("ceil(2/eps)+1 <= l", Rational((Rational(2) / eps).ceil() + 1), Rational(ell));
  if (ell >= 2) {
    add("subdivision edges <= (1+1/(l-1))|V|", Rational(m - extras), (Rational(1) + Rational(1, ell - 1)) * Rational(n));
    add("1/(l-1) <= eps/2", Rational(1, ell - 1), eps / Rational(2));
  }
  add("extra edges <= (eps/2)|V|", Rational(extras), eps / Rational(2) * Rational(n));
  add("|E| <= (1+eps)|V|", Rational(m), (Rational(1) + eps) * Rational(n));
}

SparseWitnessRun assemble_sparse_witness(const TrimSupergraph& t, int w, const Rational& eps, std::uint64_t seed,
                                         std::optional<Rational> d, const DedensifyOptions& opts) {
  require_valid(t, SkeletonKind::clique, "sparse witness");
  if (w < 1) throw InputError("w must be >= 1");
  if (eps <= Rational(0)) throw InputError("eps must be positive");
  const int n2 = static_cast<int>(t.skeleton.vertex_count());
  if (n2 % 2 != 0) throw InputError("sparse witness needs an even clique, got K_" + std::to_string(n2));
  const int s = n2 / 2;

  const int ell = t.min_path_length();
  const auto need = (Rational(2) / eps).ceil() + 1;
  if (ell < need)
    throw Refusal("l >= ceil(2/eps)+1 fails: l = " + std::to_string(ell) + " < " + std::to_string(need));

  const auto n = static_cast<std::int64_t>(t.vertex_count());
  const auto m = static_cast<std::int64_t>(extra_edges(t).size());
  const Rational measured(m, n);
  SparseWitnessRun run;
  run.s = s;
  run.d = d.value_or(measured);
  if (run.d < measured)
    throw Refusal("d >= measured extra-edge ratio fails: " + run.d.to_string() + " < " + measured.to_string());
  const auto h0 = std::max<std::int64_t>(1, (Rational(4) * run.d / eps).ceil());
  int h = 0;
  for (int c = static_cast<int>(std::min<std::int64_t>(h0, s + 1)); c <= s && h == 0; ++c)
    if (s % c == 0) h = c;
  if (h == 0 || s / h < w)
    throw Refusal("s >= h*w fails: s = " + std::to_string(s) + ", h = " + (h ? std::to_string(h) : std::to_string(h0)) +
                  ", w = " + std::to_string(w));
  run.h = h;

  auto split = clique_to_biclique_split(t, seed);
  run.split_vertices = split.biclique.vertex_count();
  run.split_extras = extra_edges(split.biclique).size();

  DedensifyOptions o = opts;
  o.seed = seed ^ 0x9e3779b97f4a7c15ULL;
  DedensifyResult cell;
  try {
    cell = dedensify_balanced(split.biclique, h, o);
  } catch (const BudgetExhausted&) {
    if (o.exhaustive) throw;
    o.exhaustive = true;
    cell = dedensify_balanced(split.biclique, h, o);
  }
  run.partitions_examined = cell.partitions_examined;

  // back to the ids of t.host: cell -> split -> t
  auto up = [&](Vertex v) {
    Vertex x = cell.graph.origin[static_cast<std::size_t>(v)];
    return split.biclique.origin[static_cast<std::size_t>(x)];
  };
  auto& c = run.certificate;
  c.side = s / h;
  c.w = w;
  c.eps = eps;
  for (Vertex v = 0; v < static_cast<Vertex>(cell.graph.vertex_count()); ++v) c.vertices.push_back(up(v));
  c.vertices = normalized(std::move(c.vertices));
  for (Vertex v : cell.graph.branch) c.branch.push_back(up(v));
  for (const auto& p : cell.graph.paths) {
    std::vector<Vertex> q;
    for (Vertex v : p) q.push_back(up(v));
    c.paths.push_back(std::move(q));
  }
  check_sparse_witness(t.host, c);
  if (!c.ok()) throw std::logic_error("sparse witness failed its own check: " + c.violations.front());
  return run;
}

nlohmann::json to_json(const Inequality& q) {
  return {{"name", q.name}, {"lhs", to_json(q.lhs)}, {"rhs", to_json(q.rhs)}, {"holds", q.holds()}};
}

nlohmann::json to_json(const SparseWitnessCertificate& c) {
  nlohmann::json ineq = nlohmann::json::array();
  for (const auto& q : c.inequalities) ineq.push_back(to_json(q));
  return {{"kind", "sparse_biclique_witness"},
          {"side", c.side},
          {"w", c.w},
          {"eps", to_json(c.eps)},
          {"vertices", c.vertices},
          {"branch", c.branch},
          {"paths", c.paths},
          {"min_path_length", c.min_path_length},
          {"vertex_count", c.vertices.size()},
          {"edge_count", c.edge_count},
          {"extra_edges", c.extra_edges},
          {"two_connected", c.two_connected},
          {"tw_lower_bound", c.tw_lower_bound},
          {"inequalities", ineq},
          {"violations", c.violations},
          {"ok", c.ok()}};
}

SparseWitnessCertificate sparse_witness_from_json(const nlohmann::json& j) {
  SparseWitnessCertificate c;
  try {
    if (j.at("kind").get<std::string>() != "sparse_biclique_witness") throw InputError("not a sparse witness certificate");
    c.side = j.at("side").get<int>();
    c.w = j.at("w").get<int>();
    c.eps = rational_from_json(j.at("eps"));
    c.vertices = j.at("vertices").get<VertexSet>();
    c.branch = j.at("branch").get<std::vector<Vertex>>();
    c.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("sparse witness json: ") + e.what());
  }
  if (c.side < 1 || c.side > 64) throw InputError("sparse witness json: side out of range");
  if (c.branch.size() != static_cast<std::size_t>(2 * c.side) ||
      c.paths.size() != static_cast<std::size_t>(c.side) * static_cast<std::size_t>(c.side))
    throw InputError("sparse witness json: branch/path counts do not match the side");
  return c;
}

}  // namespace itw
