#include "itw/decomp.hpp"

#include <algorithm>
#include <map>

#include "itw/constructions.hpp"
#include "itw/error.hpp"
#include "itw/graph_io.hpp"

namespace itw {

namespace {

void require_node(const Graph& g, const TreeDecomposition& td, int x) {
  auto report = validate_tree_decomposition(g, td);
  if (!report.ok) throw InputError("invalid tree decomposition: " + report.violations.front());
  if (x < 0 || x >= static_cast<int>(td.node_count()))
    throw InputError("node " + std::to_string(x) + " is not in the decomposition");
}

std::vector<bool> outside(const Graph& g, const VertexSet& bag) {
  std::vector<bool> out(g.vertex_count(), true);
  for (Vertex v : bag) out[static_cast<std::size_t>(v)] = false;
  return out;
}

VertexSet neighbourhood_in(const Graph& g, const VertexSet& set, const std::vector<bool>& allowed_out) {
  VertexSet n;
  for (Vertex v : set)
    for (Vertex w : g.neighbors(v))
      if (!allowed_out[static_cast<std::size_t>(w)]) n.push_back(w);
  return normalized(std::move(n));
}

bool hits(const VertexSet& set, const VertexSet& z) {
  return std::any_of(set.begin(), set.end(), [&](Vertex v) { return std::binary_search(z.begin(), z.end(), v); });
}

}  // namespace

Torso build_torso(const Graph& g, const TreeDecomposition& td, int x) {
  require_node(g, td, x);
  Torso t;
  t.bag = normalized(td.bags[static_cast<std::size_t>(x)]);
  auto sub = induced_subgraph(g, t.bag);
  auto edges = sub.graph.edges();
  for (const auto& adh : adhesions_of(td, x))
    for (std::size_t i = 0; i < adh.size(); ++i)
      for (std::size_t j = i + 1; j < adh.size(); ++j)
        edges.emplace_back(sub.from_parent[static_cast<std::size_t>(adh[i])], sub.from_parent[static_cast<std::size_t>(adh[j])]);
  t.graph = Graph(t.bag.size(), std::move(edges));
  return t;
}

Vertex GxResult::local(Vertex g_vertex) const {
  auto it = std::lower_bound(bag.begin(), bag.end(), g_vertex);
  return it != bag.end() && *it == g_vertex ? static_cast<Vertex>(it - bag.begin()) : kNoVertex;
}

GxResult build_gx(const Graph& g, const TreeDecomposition& td, int x) {
  require_node(g, td, x);
  GxResult r;
  r.node = x;
  r.bag = normalized(td.bags[static_cast<std::size_t>(x)]);
  auto out = outside(g, r.bag);
  std::map<VertexSet, std::size_t> class_of;
  for (auto& comp : connected_components(g, &out)) {
    auto n = neighbourhood_in(g, comp, out);
    auto [it, fresh] = class_of.emplace(n, r.attachment.size());
    if (fresh) {
      r.attachment.push_back(n);
      r.classes.emplace_back();
    }
    r.classes[it->second].push_back(std::move(comp));
  }
  auto sub = induced_subgraph(g, r.bag);
  auto edges = sub.graph.edges();
  for (std::size_t i = 0; i < r.attachment.size(); ++i)
    for (Vertex w : r.attachment[i]) edges.emplace_back(r.local(w), static_cast<Vertex>(r.bag.size() + i));
  r.graph = Graph(r.bag.size() + r.attachment.size(), std::move(edges));
  return r;
}

MinorModel gx_model(const GxResult& r) {
  MinorModel m{r.graph, {}, true};
  for (Vertex v : r.bag) m.branch_sets.push_back({v});
  for (const auto& cls : r.classes) m.branch_sets.push_back(cls.front());
  return m;
}

std::string validate_gx(const Graph& g, const TreeDecomposition& td, const GxResult& r) {
  if (r.node < 0 || r.node >= static_cast<int>(td.node_count())) return "node out of range";
  if (r.bag != normalized(td.bags[static_cast<std::size_t>(r.node)])) return "bag differs from the decomposition";
  for (Vertex v : r.bag)
    if (!g.contains(v)) return "bag vertex out of range";
  if (r.classes.size() != r.attachment.size()) return "class and attachment counts differ";
  if (r.graph.vertex_count() != r.bag.size() + r.attachment.size()) return "vertex count is not |bag| + |I|";
  auto out = outside(g, r.bag);
  // the classes are exactly the components, grouped by neighbourhood
  std::vector<VertexSet> listed;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    if (r.classes[i].empty()) return "empty class " + std::to_string(i);
    for (const auto& comp : r.classes[i]) {
      if (neighbourhood_in(g, comp, out) != r.attachment[i])
        return "a component of class " + std::to_string(i) + " has another neighbourhood";
      listed.push_back(comp);
    }
    for (std::size_t j = 0; j < i; ++j)
      if (r.attachment[i] == r.attachment[j]) return "I-vertices " + std::to_string(j) + " and " + std::to_string(i) + " are false twins";
  }
  std::sort(listed.begin(), listed.end());
  if (listed != connected_components(g, &out)) return "classes do not list the components of G - bag";
  for (std::size_t i = 0; i < r.attachment.size(); ++i) {
    auto v = static_cast<Vertex>(r.bag.size() + i);
    VertexSet nb;
    for (Vertex w : r.graph.neighbors(v)) {
      if (r.in_independent(w)) return "I is not independent";
      nb.push_back(r.bag[static_cast<std::size_t>(w)]);
    }
    if (nb != r.attachment[i]) return "I-vertex " + std::to_string(v) + " neighbours differ from its attachment";
  }
  auto sub = induced_subgraph(g, r.bag);
  for (Vertex u = 0; u < static_cast<Vertex>(r.bag.size()); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(r.bag.size()); ++v)
      if (sub.graph.adjacent(u, v) != r.graph.adjacent(u, v)) return "bag part differs from G[bag]";
  auto err = validate_model(g, gx_model(r));
  if (!err.empty()) return "model: " + err;
  return {};
}

DegreeTransferReport check_gx_degree_transfer(const Graph& g, const TreeDecomposition& td, int x, int h) {
  if (h < 0 || h > 20) throw InputError("h must be in [0, 20]");
  auto torso = build_torso(g, td, x);
  auto gx = build_gx(g, td, x);
  DegreeTransferReport rep;
  rep.h = h;
  rep.bound = h + (1 << (h + 1));
  rep.adhesion = validate_tree_decomposition(g, td).adhesion_size;
  rep.adhesion_ok = rep.adhesion <= h;
  for (Vertex v = 0; v < static_cast<Vertex>(torso.bag.size()); ++v)
    if (static_cast<int>(torso.graph.degree(v)) > h) rep.heavy.push_back(torso.bag[static_cast<std::size_t>(v)]);
  rep.heavy_ok = static_cast<int>(rep.heavy.size()) <= h;
  for (Vertex v = 0; v < static_cast<Vertex>(gx.graph.vertex_count()); ++v) {
    const int deg = static_cast<int>(gx.graph.degree(v));
    if (gx.in_independent(v)) {
      rep.max_independent_degree = std::max(rep.max_independent_degree, deg);
      if (deg > rep.adhesion)
        rep.violations.push_back("I-vertex " + std::to_string(v) + " has degree " + std::to_string(deg) + " > adhesion");
    } else if (static_cast<int>(torso.graph.degree(v)) > h) {
      continue;
    }
    rep.max_light_degree = std::max(rep.max_light_degree, deg);
    if (deg > rep.bound)
      rep.violations.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(deg) + " > " +
                               std::to_string(rep.bound));
  }
  rep.slack = rep.bound - rep.max_light_degree;
  return rep;
}

MinorModel project_minor_model_to_torso(const GxResult& r, const MinorModel& model) {
  const int k = static_cast<int>(model.size());
  if (k < 2 || model.pattern != complete_graph(k)) throw InputError("expected a complete-graph model with >= 2 sets");
  auto plain = model;
  plain.induced = false;
  if (auto err = validate_model(r.graph, plain); !err.empty()) throw InputError("model is not valid in G_x: " + err);
  std::size_t drop = static_cast<std::size_t>(k - 1);
  for (std::size_t i = 0; i < model.branch_sets.size(); ++i)
    if (model.branch_sets[i].size() == 1 && r.in_independent(model.branch_sets[i][0])) {
      drop = i;
      break;
    }
  MinorModel out{complete_graph(k - 1), {}, false};
  for (std::size_t i = 0; i < model.branch_sets.size(); ++i) {
    if (i == drop) continue;
    VertexSet kept;
    for (Vertex v : model.branch_sets[i])
      if (!r.in_independent(v)) kept.push_back(v);
    out.branch_sets.push_back(std::move(kept));
  }
  return out;
}

ProjectedBramble project_bramble(const Graph& g, const TreeDecomposition& td, const Bramble& b, int h, int p) {
  if (h < 1 || p < 0) throw InputError("project_bramble needs h >= 1 and p >= 0");
  auto report = validate_tree_decomposition(g, td);
  if (!report.ok) throw InputError("invalid tree decomposition: " + report.violations.front());
  if (report.adhesion_size > h)
    throw Refusal("adhesion <= h fails: " + std::to_string(report.adhesion_size) + " > " + std::to_string(h));
  ProjectedBramble out;
  out.input_order = bramble_order(g, b);
  if (out.input_order.order < h * p + 1)
    throw Refusal("bramble order >= h*p+1 fails: " + std::to_string(out.input_order.order) + " < " +
                  std::to_string(h * p + 1));

  // nodes meeting every set; subtrees of a tree pairwise meeting share a node
  std::vector<char> common(td.node_count(), 1);
  for (const auto& set : b.sets) {
    std::vector<char> meets(td.node_count(), 0);
    for (Vertex v : set)
      for (int y : td.nodes_containing(v)) meets[static_cast<std::size_t>(y)] = 1;
    for (std::size_t y = 0; y < common.size(); ++y) common[y] = common[y] && meets[y];
  }
  auto it = std::find(common.begin(), common.end(), 1);
  if (it == common.end()) throw std::logic_error("bramble subtrees have no common node");
  out.node = static_cast<int>(it - common.begin());
  out.gx = build_gx(g, td, out.node);

  const auto& gx = out.gx;
  std::vector<Vertex> class_of(g.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < gx.classes.size(); ++i)
    for (const auto& comp : gx.classes[i])
      for (Vertex v : comp) class_of[static_cast<std::size_t>(v)] = static_cast<Vertex>(gx.bag.size() + i);
  for (const auto& set : b.sets) {
    VertexSet proj;
    for (Vertex v : set) proj.push_back(class_of[static_cast<std::size_t>(v)] != kNoVertex ? class_of[static_cast<std::size_t>(v)] : gx.local(v));
    out.projected.sets.push_back(normalized(std::move(proj)));
  }
  if (auto err = validate_bramble(gx.graph, out.projected); !err.empty())
    throw std::logic_error("projected bramble is invalid: " + err);
  out.projected_order = bramble_order(gx.graph, out.projected);
  if (out.projected_order.order < p + 1) throw std::logic_error("projected bramble order fell below p+1");
  return out;
}

VertexSet lift_hitting_set(const ProjectedBramble& pb, const Bramble& original, const VertexSet& z) {
  const auto& gx = pb.gx;
  auto zs = normalized(z);
  for (Vertex v : zs)
    if (v < 0 || v >= static_cast<Vertex>(gx.graph.vertex_count())) throw InputError("hitting set vertex out of range");
  for (const auto& set : pb.projected.sets)
    if (!hits(set, zs)) throw InputError("z misses a projected bramble set");
  VertexSet lifted;
  for (Vertex v : zs) {
    if (gx.in_independent(v)) {
      const auto& a = gx.attachment[static_cast<std::size_t>(v) - gx.bag.size()];
      lifted.insert(lifted.end(), a.begin(), a.end());
    } else {
      lifted.push_back(gx.bag[static_cast<std::size_t>(v)]);
    }
  }
  lifted = normalized(std::move(lifted));
  for (const auto& set : original.sets)
    if (!hits(set, lifted)) throw std::logic_error("lifted set misses an original bramble set");
  return lifted;
}

nlohmann::json to_json(const Torso& t) { return {{"bag", t.bag}, {"graph", to_json(t.graph)}}; }

nlohmann::json to_json(const GxResult& r) {
  nlohmann::json ind = nlohmann::json::array();
  for (std::size_t i = 0; i < r.attachment.size(); ++i)
    ind.push_back({{"attachment", r.attachment[i]}, {"class_size", r.classes[i].size()}, {"components", r.classes[i]}});
  return {{"node", r.node}, {"bag", r.bag}, {"graph", to_json(r.graph)}, {"independent", ind}};
}

GxResult gx_from_json(const nlohmann::json& j) {
  GxResult r;
  try {
    r.node = j.at("node").get<int>();
    r.bag = j.at("bag").get<VertexSet>();
    r.graph = graph_from_json(j.at("graph"));
    for (const auto& e : j.at("independent")) {
      r.attachment.push_back(e.at("attachment").get<VertexSet>());
      r.classes.push_back(e.at("components").get<std::vector<VertexSet>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("gx json: ") + e.what());
  }
  if (r.bag != normalized(r.bag)) throw InputError("gx json: bag is not sorted");
  return r;
}

}  // namespace itw
