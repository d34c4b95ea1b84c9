#include "itw/wall.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "itw/error.hpp"

namespace itw {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::string coord_name(int col, int row) { return "(" + std::to_string(col) + "," + std::to_string(row) + ")"; }

}  // namespace

MinorModel grid_to_wall_model(int k) {
  if (k < 4) throw InputError("grid_to_wall_model needs k >= 4, got " + std::to_string(k));
  const int m = k / 2;
  auto g = grid(k);
  auto w = wall(m);
  MinorModel out{w.graph, {}, true};
  out.branch_sets.resize(w.graph.vertex_count());
  for (Vertex v = 0; v < static_cast<Vertex>(w.graph.vertex_count()); ++v) {
    auto [x, y] = w.coords[idx(v)];
    const int col = 2 * m - 1 - x;
    VertexSet s{g.at(col, 2 * y)};
    if (y > 0 && w.at(x, y - 1) != kNoVertex && w.graph.adjacent(v, w.at(x, y - 1))) s.push_back(g.at(col, 2 * y - 1));
    out.branch_sets[idx(v)] = normalized(s);
  }
  return out;
}

MinorModel wall_to_grid_model(int k) {
  if (k < 2) throw InputError("wall_to_grid_model needs k >= 2, got " + std::to_string(k));
  auto g = grid(k);
  auto w = wall(k);
  MinorModel out{g.graph, {}, true};
  out.branch_sets.resize(g.graph.vertex_count());
  for (Vertex v = 0; v < static_cast<Vertex>(g.graph.vertex_count()); ++v) {
    auto [c, r] = g.coords[idx(v)];
    VertexSet s;
    for (int col : {2 * c, 2 * c + 1})
      if (Vertex x = w.at(col, r); x != kNoVertex) s.push_back(x);
    out.branch_sets[idx(v)] = normalized(s);
  }
  return out;
}

EmbeddedSubdivision tripled_wall_in_wall(int k) {
  const int m = k / 3;
  if (m < 2) throw InputError("tripled_wall_in_wall needs k >= 6, got " + std::to_string(k));
  auto big = wall(k);
  auto small = wall(m);
  EmbeddedSubdivision out{subdivide(small.graph, 3), {}};
  const auto& spec = out.sub.spec;
  out.image.assign(out.sub.graph.vertex_count(), kNoVertex);
  auto place = [&](Vertex v) {
    auto [x, y] = small.coords[idx(v)];
    return Coord{3 * x + y % 2, 2 * y};
  };
  auto at = [&](Coord c) {
    Vertex v = big.at(c.col, c.row);
    if (v == kNoVertex) throw std::logic_error("tripled wall leaves W_k at " + coord_name(c.col, c.row));
    return v;
  };
  for (std::size_t e = 0; e < small.graph.edge_count(); ++e) {
    auto [a, b] = small.graph.edges()[e];
    Coord pa = place(a), pb = place(b);
    std::vector<Coord> route;
    if (pa.row == pb.row) {
      for (int c = pa.col; c <= pb.col; ++c) route.push_back({c, pa.row});
    } else {
      // up one row, sideways one column, up again
      route = {pa, {pa.col, pa.row + 1}, {pb.col, pa.row + 1}, pb};
    }
    const auto& path = spec.paths[e];
    if (route.size() != path.size()) throw std::logic_error("tripled wall route has the wrong length");
    for (std::size_t i = 0; i < path.size(); ++i) out.image[idx(path[i])] = at(route[i]);
  }
  return out;
}

int wall_index(const Graph& g) {
  const auto n = g.vertex_count();
  for (int k = 2; static_cast<std::size_t>(2 * k * k - 2) <= n; ++k)
    if (static_cast<std::size_t>(2 * k * k - 2) == n) return g == wall(k).graph ? k : 0;
  return 0;
}

const char* to_string(WitnessRole r) {
  switch (r) {
    case WitnessRole::branch: return "branch";
    case WitnessRole::triangle_corner: return "triangle_corner";
    case WitnessRole::path: return "path";
  }
  return "?";
}

WitnessRole WallQuasiSubdivisionWitness::role(Vertex v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) throw InputError("vertex " + std::to_string(v) + " is not part of the witness");
  return roles[static_cast<std::size_t>(it - vertices.begin())];
}

std::size_t WallQuasiSubdivisionWitness::triangle_count() const {
  std::size_t t = 0;
  for (const auto& c : structure.corners) t += c.size() == 3;
  return t;
}

WallQuasiSubdivisionWitness make_wall_witness(int k, QuasiSubdivision structure) {
  WallQuasiSubdivisionWitness w;
  w.k = k;
  w.structure = std::move(structure);
  w.vertices = w.structure.vertex_set();
  std::map<Vertex, WitnessRole> role;
  for (Vertex v : w.vertices) role[v] = WitnessRole::path;
  for (const auto& c : w.structure.corners)
    for (Vertex x : c) role[x] = c.size() == 3 ? WitnessRole::triangle_corner : WitnessRole::branch;
  for (Vertex v : w.vertices) w.roles.push_back(role[v]);
  return w;
}

std::string validate_wall_witness(const Graph& host, const WallQuasiSubdivisionWitness& w) {
  if (w.k < 2) return "wall index " + std::to_string(w.k) + " is below 2";
  if (!(w.structure.skeleton == wall(w.k).graph)) return "skeleton is not W_" + std::to_string(w.k);
  if (auto err = check_quasi_subdivision(host, w.structure); !err.empty()) return err;
  auto expect = make_wall_witness(w.k, w.structure);
  if (expect.vertices != w.vertices) return "vertex set differs from the structure";
  if (expect.roles != w.roles) return "role map differs from the structure";
  return {};
}

namespace {

// Per-set bookkeeping for the extraction: either one anchor vertex, or a
// triangle, and the host vertices dropped from the set.
struct Anchor {
  std::vector<Vertex> corners;
};

// Orders the vertices of a set inducing a path from one end to the other.
std::vector<Vertex> path_order(const Graph& host, const VertexSet& s) {
  if (s.size() == 1) return {s[0]};
  auto sub = induced_subgraph(host, s);
  Vertex start = kNoVertex;
  for (Vertex v = 0; v < static_cast<Vertex>(sub.graph.vertex_count()); ++v)
    if (sub.graph.degree(v) == 1) {
      start = v;
      break;
    }
  std::vector<Vertex> order{start};
  Vertex prev = kNoVertex, cur = start;
  while (order.size() < s.size()) {
    Vertex next = kNoVertex;
    for (Vertex w : sub.graph.neighbors(cur))
      if (w != prev) next = w;
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  for (auto& v : order) v = sub.to_parent[idx(v)];
  return order;
}

}  // namespace

WallExtraction extract_wall_quasi_subdivision(const Graph& host, const MinorModel& model) {
  if (!model.induced) throw InputError("extraction needs an induced minor model");
  const int k = wall_index(model.pattern);
  if (k == 0) throw InputError("model pattern is not a wall");
  if (k < 6) throw InputError("extraction needs W_k with k >= 6, got k = " + std::to_string(k));
  if (auto err = validate_model(host, model); !err.empty()) throw InputError("invalid wall model: " + err);

  const int m = k / 3;
  auto emb = tripled_wall_in_wall(k);
  const Graph& h = emb.sub.graph;
  MinorModel h_in_wall{h, {}, true};
  for (Vertex v : emb.image) h_in_wall.branch_sets.push_back({v});

  WallExtraction out;
  out.minimal = refine_to_minimal(host, compose_models(h_in_wall, model));
  if (auto err = check_branch_trichotomy(host, out.minimal); !err.empty())
    throw std::logic_error("minimal model breaks the branch-set shapes: " + err);

  const auto& sets = out.minimal.branch_sets;
  std::vector<int> owner(host.vertex_count(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (Vertex v : sets[i]) owner[idx(v)] = static_cast<int>(i);

  const Graph skeleton = wall(m).graph;
  std::vector<Anchor> anchors(skeleton.vertex_count());
  std::set<Vertex> removed;
  for (Vertex b = 0; b < static_cast<Vertex>(skeleton.vertex_count()); ++b) {
    const VertexSet& set = sets[idx(b)];  // branch vertices keep their ids in the subdivision
    auto& anchor = anchors[idx(b)];
    if (skeleton.degree(b) == 2 || set.size() == 1) {
      anchor.corners = {set.front()};
      continue;
    }
    auto sub = induced_subgraph(host, set);
    if (sub.graph.edge_count() == set.size()) {  // triangle with pendant paths
      for (auto [p, q] : sub.graph.edges())
        for (Vertex r : sub.graph.neighbors(p))
          if (r > q && sub.graph.adjacent(q, r) && anchor.corners.empty())
            anchor.corners = {sub.to_parent[idx(p)], sub.to_parent[idx(q)], sub.to_parent[idx(r)]};
      continue;
    }
    if (sub.graph.max_degree() == 3) {  // tripod
      for (Vertex p = 0; p < static_cast<Vertex>(sub.graph.vertex_count()); ++p)
        if (sub.graph.degree(p) == 3) anchor.corners = {sub.to_parent[idx(p)]};
      continue;
    }
    // A path with three neighbouring sets: two of them hang at the ends.
    auto order = path_order(host, set);
    const int last = static_cast<int>(order.size()) - 1;
    std::map<int, std::vector<int>> contacts;  // neighbouring set -> positions along the path
    for (int i = 0; i <= last; ++i)
      for (Vertex w : host.neighbors(order[idx(i)])) {
        int o = owner[idx(w)];
        if (o >= 0 && o != b) {
          auto& c = contacts[o];
          if (c.empty() || c.back() != i) c.push_back(i);
        }
      }
    if (contacts.size() != 3) throw std::logic_error("degree-3 branch set touches " + std::to_string(contacts.size()) + " sets");
    int at_u = -1, at_v = -1;
    for (const auto& [o, pos] : contacts)
      if (at_u < 0 && pos == std::vector<int>{0}) at_u = o;
    for (const auto& [o, pos] : contacts)
      if (at_v < 0 && o != at_u && pos == std::vector<int>{last}) at_v = o;
    if (at_u < 0 || at_v < 0) throw std::logic_error("path branch set has an end without a private neighbour");
    int third = -1;
    for (const auto& [o, pos] : contacts)
      if (o != at_u && o != at_v) third = o;
    const auto& pos = contacts[third];
    const int x = pos.front(), y = pos.back();
    if (x == y) {
      anchor.corners = {order[idx(x)]};
      continue;
    }
    // The third set meets the stretch x..y in a single vertex z.
    std::set<Vertex> zs;
    for (int i = x; i <= y; ++i)
      for (Vertex w : host.neighbors(order[idx(i)]))
        if (owner[idx(w)] == third) zs.insert(w);
    if (zs.size() != 1) throw std::logic_error("third neighbour of a path branch set meets it in " + std::to_string(zs.size()) + " vertices");
    const Vertex z = *zs.begin();
    for (int i = x + 1; i < y; ++i) removed.insert(order[idx(i)]);
    if (y == x + 1)
      anchor.corners = {order[idx(x)], order[idx(y)], z};
    else
      anchor.corners = {z};
    ++out.smoothed;
  }

  std::vector<char> kept(host.vertex_count(), 0);
  for (const auto& s : sets)
    for (Vertex v : s)
      if (!removed.contains(v)) kept[idx(v)] = 1;
  std::vector<int> anchor_of(host.vertex_count(), -1);
  for (Vertex b = 0; b < static_cast<Vertex>(anchors.size()); ++b)
    for (Vertex c : anchors[idx(b)].corners) anchor_of[idx(c)] = b;
  auto kept_neighbors = [&](Vertex v) {
    std::vector<Vertex> nb;
    for (Vertex w : host.neighbors(v))
      if (kept[idx(w)]) nb.push_back(w);
    return nb;
  };

  // Re-derive the direct paths by walking from every anchor.
  QuasiSubdivision qs;
  qs.skeleton = skeleton;
  qs.corners.resize(skeleton.vertex_count());
  qs.paths.resize(skeleton.edge_count());
  for (Vertex b = 0; b < static_cast<Vertex>(anchors.size()); ++b) {
    const auto& corners = anchors[idx(b)].corners;
    std::vector<std::pair<Vertex, Vertex>> exits;  // (start, first step)
    for (Vertex c : corners)
      for (Vertex w : kept_neighbors(c))
        if (std::find(corners.begin(), corners.end(), w) == corners.end()) exits.emplace_back(c, w);
    if (exits.size() != static_cast<std::size_t>(skeleton.degree(b)))
      throw std::logic_error("anchor of wall vertex " + std::to_string(b) + " has " + std::to_string(exits.size()) + " exits");
    if (corners.size() == 3) qs.corners[idx(b)].assign(3, kNoVertex);
    else qs.corners[idx(b)] = corners;
    for (auto [start, step] : exits) {
      std::vector<Vertex> path{start};
      Vertex prev = start, cur = step;
      while (anchor_of[idx(cur)] < 0) {
        path.push_back(cur);
        auto nb = kept_neighbors(cur);
        if (nb.size() != 2) throw std::logic_error("path vertex " + std::to_string(cur) + " has kept degree " + std::to_string(nb.size()));
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      path.push_back(cur);
      const Vertex other = anchor_of[idx(cur)];
      auto e = skeleton.edge_index(b, other);
      if (!e) throw std::logic_error("walk from wall vertex " + std::to_string(b) + " ends at non-neighbour " + std::to_string(other));
      if (corners.size() == 3) {
        auto nb = skeleton.neighbors(b);
        qs.corners[idx(b)][static_cast<std::size_t>(std::find(nb.begin(), nb.end(), other) - nb.begin())] = start;
      }
      if (b < other) qs.paths[*e] = path;
    }
  }
  out.witness = make_wall_witness(m, std::move(qs));
  if (auto err = validate_wall_witness(host, out.witness); !err.empty())
    throw std::logic_error("extracted quasi-subdivision does not check: " + err);
  std::size_t kept_count = static_cast<std::size_t>(std::count(kept.begin(), kept.end(), 1));
  if (kept_count != out.witness.vertices.size()) throw std::logic_error("kept vertices outside the extracted quasi-subdivision");
  out.removed.assign(removed.begin(), removed.end());
  return out;
}

SparseWall thin_to_sparse_wall(const Graph& host, const WallQuasiSubdivisionWitness& witness, int w, const Rational& eps) {
  if (w < 2) throw InputError("thinning needs w >= 2, got " + std::to_string(w));
  if (eps <= Rational(0)) throw InputError("thinning needs eps > 0, got " + eps.to_string());
  if (auto err = validate_wall_witness(host, witness); !err.empty()) throw InputError("invalid wall witness: " + err);
  const int s = static_cast<int>((Rational(4) / eps).ceil()) + 1;
  const int big_k = witness.k;
  auto big = wall(big_k);
  auto small = wall(w);
  const auto& qs = witness.structure;

  auto column = [&](int x, int y) { return s * x + ((s + 1) * x + y) % 2; };
  auto at = [&](int col, int row) {
    Vertex v = big.at(col, row);
    if (v == kNoVertex)
      throw Refusal("W_" + std::to_string(big_k) + " is too small to keep every " + std::to_string(s) +
                    "-th column of W_" + std::to_string(w) + ": needs position " + coord_name(col, row));
    return v;
  };

  // Route of every W_w edge through W_K (as W_K vertices, lower end first).
  std::vector<std::vector<Vertex>> routes;
  for (auto [a, b] : small.graph.edges()) {
    auto [xa, ya] = small.coords[idx(a)];
    auto [xb, yb] = small.coords[idx(b)];
    std::vector<Vertex> r;
    if (ya == yb) {
      int c0 = column(xa, ya), c1 = column(xb, yb);
      for (int c = c0; c <= c1; ++c) r.push_back(at(c, 2 * ya));
    } else {
      int c0 = column(xa, ya), c1 = column(xb, yb);
      r = {at(c0, 2 * ya), at(c0, 2 * ya + 1), at(c1, 2 * ya + 1), at(c1, 2 * yb)};
    }
    routes.push_back(r);
  }
  // The chosen W_K vertices must induce exactly the routes.
  std::set<Vertex> chosen;
  std::set<Edge> route_edges;
  for (const auto& r : routes) {
    chosen.insert(r.begin(), r.end());
    for (std::size_t i = 0; i + 1 < r.size(); ++i) route_edges.insert(std::minmax(r[i], r[i + 1]));
  }
  for (auto [a, b] : big.graph.edges())
    if (chosen.contains(a) && chosen.contains(b) && !route_edges.contains({a, b}))
      throw std::logic_error("thinned wall picks up W_K edge " + std::to_string(a) + "-" + std::to_string(b));
  for (const auto& e : route_edges)
    if (!big.graph.adjacent(e.first, e.second)) throw std::logic_error("thinned wall route uses a non-edge");

  // Host realization: a triangle contributes the corners facing used edges.
  auto host_path = [&](Vertex p, Vertex q) {
    auto e = *qs.skeleton.edge_index(p, q);
    auto path = qs.paths[e];
    if (p > q) std::reverse(path.begin(), path.end());
    return path;  // attachment at p .. attachment at q
  };
  SparseWall out;
  out.spacing = s;
  out.model = MinorModel{small.graph, std::vector<VertexSet>(small.graph.vertex_count()), true};
  std::set<Vertex> keep;
  for (Vertex v = 0; v < static_cast<Vertex>(small.graph.vertex_count()); ++v) {
    out.degree3 += small.graph.degree(v) == 3;
  }
  for (std::size_t e = 0; e < routes.size(); ++e) {
    const auto& r = routes[e];
    auto [a, b] = small.graph.edges()[e];
    auto& set_a = out.model.branch_sets[idx(a)];
    // Everything strictly after the anchor of a up to (not including) the
    // anchor of b goes to a's branch set.
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      auto path = host_path(r[i], r[i + 1]);
      for (std::size_t j = 0; j < path.size(); ++j) {
        Vertex x = path[j];
        keep.insert(x);
        const bool in_a_anchor = i == 0 && j == 0;
        const bool in_b_anchor = i + 2 == r.size() && j + 1 == path.size();
        if (!in_a_anchor && !in_b_anchor) set_a.push_back(x);
      }
    }
  }
  // Anchors: the corners of each W_w vertex's W_K position that face used routes.
  for (Vertex v = 0; v < static_cast<Vertex>(small.graph.vertex_count()); ++v) {
    auto [x, y] = small.coords[idx(v)];
    Vertex p = at(column(x, y), 2 * y);
    auto& set = out.model.branch_sets[idx(v)];
    const auto& c = qs.corners[idx(p)];
    for (Vertex corner : c)
      if (keep.contains(corner)) set.push_back(corner);
  }
  // Interior W_K triangles crossed by a route: the two used corners are already
  // in the route's set (as path ends); nothing else is needed.
  for (auto& set : out.model.branch_sets) set = normalized(set);
  out.vertices.assign(keep.begin(), keep.end());

  auto sub = induced_subgraph(host, out.vertices);
  out.edge_count = sub.graph.edge_count();
  if (auto err = validate_model(host, out.model); !err.empty()) throw std::logic_error("thinned wall model does not check: " + err);
  if (out.model.support() != out.vertices) throw std::logic_error("thinned wall model does not cover the kept vertices");
  if (!is_two_connected(sub.graph)) throw std::logic_error("thinned wall is not 2-connected");
  const auto n = static_cast<std::int64_t>(out.vertices.size());
  const auto m = static_cast<std::int64_t>(out.edge_count);
  // A bare cycle (W_2, no degree-3 vertex) has one edge more than a path.
  if (m > n - 1 + std::max(2 * out.degree3, 1)) throw std::logic_error("thinned wall has more edges than its cycle count allows");
  if (Rational(m) > (Rational(1) + eps) * Rational(n))
    throw Refusal("thinned wall has " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices, above (1+" +
                  eps.to_string() + ")|V|");
  return out;
}

nlohmann::json to_json(const WallQuasiSubdivisionWitness& w) {
  nlohmann::json roles = nlohmann::json::object();
  for (auto r : {WitnessRole::branch, WitnessRole::triangle_corner, WitnessRole::path}) roles[to_string(r)] = nlohmann::json::array();
  for (std::size_t i = 0; i < w.vertices.size(); ++i) roles[to_string(w.roles[i])].push_back(w.vertices[i]);
  return {{"k", w.k}, {"corners", w.structure.corners}, {"paths", w.structure.paths}, {"roles", roles}};
}

WallQuasiSubdivisionWitness wall_witness_from_json(const nlohmann::json& j) {
  try {
    const int k = j.at("k").get<int>();
    if (k < 2) throw InputError("witness wall index must be at least 2");
    QuasiSubdivision qs;
    qs.skeleton = wall(k).graph;
    qs.corners = j.at("corners").get<std::vector<std::vector<Vertex>>>();
    qs.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
    if (qs.corners.size() != qs.skeleton.vertex_count() || qs.paths.size() != qs.skeleton.edge_count())
      throw InputError("witness sizes do not match W_" + std::to_string(k));
    return make_wall_witness(k, std::move(qs));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed wall witness: ") + e.what());
  }
}

}  // namespace itw
