#include "itw/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "itw/constructions.hpp"
#include "itw/decomp.hpp"
#include "itw/dedensify.hpp"
#include "itw/error.hpp"
#include "itw/graph_io.hpp"
#include "itw/minor.hpp"
#include "itw/trim.hpp"
#include "itw/wall.hpp"
#include "itw/width.hpp"

namespace itw::cli {

namespace {

using json = nlohmann::json;

struct Context {
  std::vector<std::string> args;
  std::ostream& out;
  std::ostream& err;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  int jobs = 1;
  std::string format = "g6";
  std::string out_path;
};

std::uint64_t need_seed(const Context& c) {
  if (!c.seed) throw InputError("this subcommand is randomized and needs --seed");
  return *c.seed;
}

json envelope(const Context& c, const std::string& kind, json payload) {
  json env{{"command", c.args}, {"jobs", c.jobs}};
  env["seed"] = c.seed ? json(*c.seed) : json(nullptr);
  env["budget"] = c.budget ? json(*c.budget) : json(nullptr);
  return {{"kind", kind}, {"tool", kToolVersion}, {"environment", env}, {"payload", std::move(payload)}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void emit(const Context& c, const std::string& text) {
  if (c.out_path.empty()) c.out << text;
  else write_text(c.out_path, text);
}

void emit_json(const Context& c, const json& j) { emit(c, j.dump(2) + "\n"); }

json read_json(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Certificate envelopes and bare payloads are both accepted as inputs.
json payload_of(const json& j) { return j.is_object() && j.contains("payload") ? j.at("payload") : j; }

// A graph file, or the host of a trim supergraph / trim certificate.
Graph load_graph(const std::string& path) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    auto j = payload_of(read_json(path));
    try {
      if (j.contains("host")) return graph_from_json(j.at("host"));
      return graph_from_json(j);
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  return read_graph_file(path);
}

TrimSupergraph load_trim(const std::string& path) { return trim_from_json(payload_of(read_json(path))); }

MinorModel wall_model_of_subdivision(const Subdivision& sub) {
  MinorModel m{sub.spec.skeleton, {}, true};
  for (Vertex b : sub.spec.branch) m.branch_sets.push_back({b});
  const auto& edges = sub.spec.skeleton.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& set = m.branch_sets[static_cast<std::size_t>(edges[e].first)];
    const auto& p = sub.spec.paths[e];
    set.insert(set.end(), p.begin() + 1, p.end() - 1);
  }
  for (auto& s : m.branch_sets) s = normalized(std::move(s));
  return m;
}

json hitting_json(const HittingSet& h) { return {{"order", h.order}, {"hitting_set", h.set}}; }

json inequality_json(const std::string& name, const Rational& lhs, const Rational& rhs) {
  return {{"name", name}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}, {"holds", lhs <= rhs}};
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::vector<int> params;
  int length = 2;
  int max_extra = 0;
  std::size_t extra = 0;
  std::string cert_path;
};

int cmd_gen(Context& c, const GenArgs& a) {
  auto param = [&](std::size_t i, const char* what) {
    if (a.params.size() <= i) throw InputError("gen " + a.family + " needs " + what);
    return a.params[i];
  };
  auto format = parse_graph_format(c.format);
  auto trim_kind = [&]() -> std::optional<SkeletonKind> {
    if (a.family == "trim-clique") return SkeletonKind::clique;
    if (a.family == "trim-biclique") return SkeletonKind::biclique;
    return std::nullopt;
  }();
  if (trim_kind) {
    auto t = random_trim_supergraph(*trim_kind, param(0, "a side"), a.length, a.extra, need_seed(c), a.max_extra);
    auto report = validate_trim(t);
    json p = to_json(t);
    p["extra_edges"] = report.extra_edge_count;
    p["min_path_length"] = t.min_path_length();
    emit_json(c, envelope(c, "trim", p));
    c.err << "# " << a.family << " side=" << t.side() << ": " << t.vertex_count() << " vertices, "
          << t.host.edge_count() << " edges, " << report.extra_edge_count << " extra\n";
    return ok;
  }

  Graph g;
  std::optional<MinorModel> model;
  const auto mode = a.max_extra > 0 ? LengthMode::at_least : LengthMode::exact;
  std::string model_family = "wall";
  int model_k = 0;
  if (a.family == "grid") {
    g = grid(param(0, "k")).graph;
    if (!a.cert_path.empty()) model = grid_to_wall_model(param(0, "k"));
    model_k = param(0, "k") / 2;
  } else if (a.family == "wall") {
    g = wall(param(0, "k")).graph;
    if (!a.cert_path.empty()) model = wall_to_grid_model(param(0, "k"));
    model_family = "grid";
    model_k = param(0, "k");
  }
  else if (a.family == "clique") g = complete_graph(param(0, "n"));
  else if (a.family == "biclique") g = complete_bipartite(param(0, "s"), param(0, "s"));
  else if (a.family == "path") g = path_graph(param(0, "n"));
  else if (a.family == "cycle") g = cycle_graph(param(0, "n"));
  else if (a.family == "subdivided-clique") {
    g = subdivide(complete_graph(param(0, "s")), a.length, mode, need_seed(c), a.max_extra).graph;
  } else if (a.family == "subdivided-wall") {
    auto sub = subdivide(wall(param(0, "k")).graph, a.length, mode, need_seed(c), a.max_extra);
    model = wall_model_of_subdivision(sub);
    model_k = param(0, "k");
    g = std::move(sub.graph);
  } else {
    throw InputError("unknown family '" + a.family + "'");
  }
  emit(c, format_graph(g, format));
  if (!a.cert_path.empty()) {
    if (!model) throw InputError("--cert is only produced for grid, wall and subdivided-wall");
    json p = to_json(*model);
    p["family"] = model_family;
    p["k"] = model_k;
    write_text(a.cert_path, envelope(c, "model", p).dump(2) + "\n");
  }
  c.err << "# " << a.family;
  for (int x : a.params) c.err << ' ' << x;
  c.err << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  return ok;
}

// ---------------------------------------------------------------- widths

int cmd_tw(Context& c, const std::string& graph, bool exact, std::size_t cap, const std::string& cert) {
  auto g = load_graph(graph);
  TreeDecomposition td;
  int width;
  if (exact) {
    auto r = exact_treewidth(g, cap);
    width = r.width;
    td = r.decomposition;
  } else {
    auto order = min_fill_order(g);
    width = elimination_width(g, order);
    td = decomposition_from_elimination_order(g, order);
  }
  emit(c, std::to_string(width) + (exact ? "\n" : " (upper bound)\n"));
  if (!cert.empty())
    write_text(cert, envelope(c, "td", {{"td", to_json(td)}, {"width", width}, {"exact", exact}}).dump(2) + "\n");
  return ok;
}

json td_report_json(const TdReport& r) {
  return {{"ok", r.ok}, {"width", r.width}, {"adhesion", r.adhesion_size}, {"violations", r.violations}};
}

int cmd_validate_td(Context& c, const std::string& graph, const std::string& td_path) {
  auto g = load_graph(graph);
  auto td = tree_decomposition_from_json(payload_of(read_json(td_path)).value("td", payload_of(read_json(td_path))));
  auto r = validate_tree_decomposition(g, td);
  emit_json(c, td_report_json(r));
  return r.ok ? ok : absent_or_refused;
}

Bramble load_bramble(const std::string& path) {
  auto j = payload_of(read_json(path));
  return bramble_from_json(j.contains("bramble") ? j.at("bramble") : j);
}

TreeDecomposition load_td(const std::string& path) {
  auto j = payload_of(read_json(path));
  return tree_decomposition_from_json(j.contains("td") ? j.at("td") : j);
}

int cmd_bramble_order(Context& c, const std::string& graph, const std::string& bramble, const std::string& cert) {
  auto g = load_graph(graph);
  auto b = load_bramble(bramble);
  auto h = bramble_order(g, b);
  emit(c, std::to_string(h.order) + "\n");
  if (!cert.empty()) {
    json p = hitting_json(h);
    p["bramble"] = to_json(b);
    write_text(cert, envelope(c, "bramble", p).dump(2) + "\n");
  }
  return ok;
}

// ---------------------------------------------------------------- searches

int cmd_find_im(Context& c, const std::string& host_path, const std::string& pattern_path, bool plain, bool prune,
                std::size_t host_cap) {
  auto host = load_graph(host_path);
  auto pattern = load_graph(pattern_path);
  InducedMinorOptions o;
  o.induced = !plain;
  o.treewidth_prune = prune;
  o.host_cap = host_cap;
  if (c.budget) o.budget = *c.budget;
  auto r = find_induced_minor(host, pattern, o);
  json search{{"target", "minor"},      {"status", to_string(r.status)}, {"nodes", r.nodes},
              {"induced", o.induced},   {"treewidth_prune", prune},      {"host_cap", host_cap},
              {"budget", o.budget},     {"pattern", to_json(pattern)}};
  if (r.status == SearchStatus::found) {
    json p = to_json(*r.model);
    p["search"] = search;
    emit_json(c, envelope(c, "model", p));
    return ok;
  }
  emit_json(c, envelope(c, "search", search));
  return r.status == SearchStatus::absent ? absent_or_refused : budget_exhausted;
}

int cmd_find_subdiv(Context& c, const std::string& host_path, int s) {
  auto host = load_graph(host_path);
  std::uint64_t budget = c.budget.value_or(50'000'000);
  auto r = find_clique_subdivision(host, s, budget);
  json search{{"target", "clique_subdivision"}, {"s", s}, {"status", to_string(r.status)}, {"nodes", r.nodes}, {"budget", budget}};
  if (r.status == SearchStatus::found) {
    emit_json(c, envelope(c, "subdivision", {{"s", s}, {"branch", r.witness->branch}, {"paths", r.witness->paths}, {"search", search}}));
    return ok;
  }
  emit_json(c, envelope(c, "search", search));
  return r.status == SearchStatus::absent ? absent_or_refused : budget_exhausted;
}

// ---------------------------------------------------------------- walls

int cmd_extract_wall(Context& c, const std::string& host_path, const std::string& model_path) {
  auto host = load_graph(host_path);
  auto model = minor_model_from_json(payload_of(read_json(model_path)));
  auto r = extract_wall_quasi_subdivision(host, model);
  json p = to_json(r.witness);
  p["removed"] = r.removed;
  p["smoothed"] = r.smoothed;
  p["triangles"] = r.witness.triangle_count();
  emit_json(c, envelope(c, "wall_witness", p));
  return ok;
}

json sparse_wall_json(const SparseWall& s, int w, const Rational& eps) {
  const auto n = static_cast<std::int64_t>(s.vertices.size());
  const auto m = static_cast<std::int64_t>(s.edge_count);
  return {{"w", w},
          {"eps", to_json(eps)},
          {"spacing", s.spacing},
          {"vertices", s.vertices},
          {"model", to_json(s.model)},
          {"vertex_count", n},
          {"edge_count", m},
          {"degree3", s.degree3},
          {"inequalities", json::array({inequality_json("|E| <= (1+eps)|V|", Rational(m), (Rational(1) + eps) * Rational(n))})}};
}

int cmd_thin(Context& c, const std::string& host_path, const std::string& witness_path, int w, const std::string& eps_text) {
  auto host = load_graph(host_path);
  auto witness = wall_witness_from_json(payload_of(read_json(witness_path)));
  auto eps = Rational::parse(eps_text);
  auto s = thin_to_sparse_wall(host, witness, w, eps);
  emit_json(c, envelope(c, "sparse_wall", sparse_wall_json(s, w, eps)));
  return ok;
}

// ---------------------------------------------------------------- density

DedensifyOptions dedensify_options(const Context& c, bool exhaustive, std::size_t draws) {
  DedensifyOptions o;
  o.exhaustive = exhaustive;
  o.draws = draws;
  o.jobs = c.jobs;
  if (c.budget) o.budget = *c.budget;
  if (!exhaustive) o.seed = need_seed(c);
  return o;
}

int cmd_dedensify(Context& c, const std::string& trim_path, int h, bool exhaustive, std::size_t draws) {
  auto t = load_trim(trim_path);
  auto r = dedensify_balanced(t, h, dedensify_options(c, exhaustive, draws));
  json p = to_json(r.graph);
  const auto n = static_cast<std::int64_t>(r.input_vertices), m = static_cast<std::int64_t>(r.input_extras);
  const auto nc = static_cast<std::int64_t>(r.graph.vertex_count());
  p["origin"] = r.graph.origin;
  p["cell"] = {{"i", r.i}, {"j", r.j}, {"h", h}, {"partition_a", r.partition.a}, {"partition_b", r.partition.b}};
  p["input_vertices"] = n;
  p["input_extras"] = m;
  p["extra_edges"] = r.extras;
  p["partitions_examined"] = r.partitions_examined;
  p["qualifying_cells"] = r.qualifying;
  p["inequalities"] = json::array({inequality_json("extras <= (m/(h n)) |V(cell)|", Rational(static_cast<std::int64_t>(r.extras)),
                                                   Rational(m, h * n) * Rational(nc))});
  emit_json(c, envelope(c, "trim", p));
  return ok;
}

int cmd_witness(Context& c, const std::string& trim_path, int w, const std::string& eps_text, const std::string& d_text,
                bool exhaustive, std::size_t draws) {
  auto t = load_trim(trim_path);
  auto eps = Rational::parse(eps_text);
  std::optional<Rational> d;
  if (!d_text.empty()) d = Rational::parse(d_text);
  auto o = dedensify_options(c, exhaustive, draws);
  auto run = assemble_sparse_witness(t, w, eps, need_seed(c), d, o);
  json p = to_json(run.certificate);
  p["h"] = run.h;
  p["s"] = run.s;
  p["d"] = to_json(run.d);
  p["split_vertices"] = run.split_vertices;
  p["split_extras"] = run.split_extras;
  p["partitions_examined"] = run.partitions_examined;
  emit_json(c, envelope(c, "witness", p));
  return ok;
}

// ---------------------------------------------------------------- decompositions

int cmd_gx(Context& c, const std::string& graph, const std::string& td_path, int node) {
  auto g = load_graph(graph);
  auto td = load_td(td_path);
  auto r = build_gx(g, td, node);
  json p = to_json(r);
  p["td"] = to_json(td);
  emit_json(c, envelope(c, "gx", p));
  return ok;
}

int cmd_torso(Context& c, const std::string& graph, const std::string& td_path, int node) {
  auto g = load_graph(graph);
  auto td = load_td(td_path);
  auto t = build_torso(g, td, node);
  json p = to_json(t);
  p["node"] = node;
  p["td"] = to_json(td);
  emit_json(c, envelope(c, "torso", p));
  return ok;
}

int cmd_project_bramble(Context& c, const std::string& graph, const std::string& td_path, const std::string& bramble_path,
                        int h, int p) {
  auto g = load_graph(graph);
  auto td = load_td(td_path);
  auto b = load_bramble(bramble_path);
  auto pb = project_bramble(g, td, b, h, p);
  auto lifted = lift_hitting_set(pb, b, pb.projected_order.set);
  json out{{"node", pb.node},
           {"h", h},
           {"p", p},
           {"td", to_json(td)},
           {"bramble", to_json(b)},
           {"input_order", hitting_json(pb.input_order)},
           {"gx", to_json(pb.gx)},
           {"projected", to_json(pb.projected)},
           {"projected_order", hitting_json(pb.projected_order)},
           {"lifted", lifted}};
  emit_json(c, envelope(c, "projected_bramble", out));
  return ok;
}

// ---------------------------------------------------------------- check

struct Verdict {
  std::vector<std::string> problems;
  void require(bool cond, const std::string& what) {
    if (!cond) problems.push_back(what);
  }
};

}  // namespace

int check_certificate(const std::string& kind, const std::string& graph_path, const json& cert, std::ostream& out,
                      std::ostream& err) {
  if (cert.contains("kind") && cert.at("kind").get<std::string>() != kind)
    throw InputError("certificate kind is '" + cert.at("kind").get<std::string>() + "', not '" + kind + "'");
  const json p = payload_of(cert);
  auto graph = [&]() {
    if (graph_path.empty()) throw InputError("checking a " + kind + " certificate needs the graph");
    return load_graph(graph_path);
  };
  Verdict v;
  try {
    if (kind == "model") {
      auto g = graph();
      auto m = minor_model_from_json(p);
      auto e = validate_model(g, m);
      v.require(e.empty(), e);
      if (p.contains("family")) {
        auto family = p.at("family").get<std::string>();
        v.require(m.pattern == witness_pattern(parse_witness_kind(family), p.at("k").get<int>()),
                  "pattern is not the named " + family);
      }
    } else if (kind == "search") {
      auto g = graph();
      auto status = p.at("status").get<std::string>();
      SearchStatus now;
      if (p.at("target") == "minor") {
        InducedMinorOptions o;
        o.induced = p.at("induced").get<bool>();
        o.treewidth_prune = p.at("treewidth_prune").get<bool>();
        o.host_cap = p.at("host_cap").get<std::size_t>();
        o.budget = p.at("budget").get<std::uint64_t>();
        now = find_induced_minor(g, graph_from_json(p.at("pattern")), o).status;
      } else {
        now = find_clique_subdivision(g, p.at("s").get<int>(), p.at("budget").get<std::uint64_t>()).status;
      }
      v.require(status == to_string(now), "search now reports " + std::string(to_string(now)) + ", certificate says " + status);
    } else if (kind == "subdivision") {
      auto g = graph();
      CliqueSubdivision w{p.at("branch").get<std::vector<Vertex>>(), p.at("paths").get<std::vector<std::vector<Vertex>>>()};
      auto e = check_clique_subdivision(g, p.at("s").get<int>(), w);
      v.require(e.empty(), e);
    } else if (kind == "td") {
      auto g = graph();
      auto td = tree_decomposition_from_json(p.at("td"));
      auto r = validate_tree_decomposition(g, td);
      v.require(r.ok, r.ok ? "" : r.violations.front());
      v.require(r.width == p.at("width").get<int>(), "width differs");
      if (p.value("exact", false)) v.require(exact_treewidth(g).width == r.width, "width is not the treewidth");
    } else if (kind == "bramble") {
      auto g = graph();
      auto b = bramble_from_json(p.at("bramble"));
      auto e = validate_bramble(g, b);
      v.require(e.empty(), e);
      if (e.empty()) {
        auto z = p.at("hitting_set").get<VertexSet>();
        v.require(hits_all(b.sets, z), "hitting set misses a set");
        v.require(static_cast<int>(z.size()) == p.at("order").get<int>(), "hitting set size differs from the order");
        v.require(bramble_order(g, b).order == p.at("order").get<int>(), "order is not minimum");
      }
    } else if (kind == "trim") {
      auto t = trim_from_json(p);  // throws on any trim violation
      if (!graph_path.empty()) v.require(load_graph(graph_path) == t.host, "host differs from the graph file");
      auto extras = validate_trim(t).extra_edge_count;
      if (p.contains("extra_edges")) v.require(p.at("extra_edges").get<std::size_t>() == extras, "extra edge count differs");
      if (p.contains("inequalities")) {
        // recompute the cell bound from the recorded input sizes
        auto n = p.at("input_vertices").get<std::int64_t>(), m = p.at("input_extras").get<std::int64_t>();
        auto h = p.at("cell").at("h").get<std::int64_t>();
        auto q = inequality_json("extras <= (m/(h n)) |V(cell)|", Rational(static_cast<std::int64_t>(extras)),
                                 Rational(m, h * n) * Rational(static_cast<std::int64_t>(t.vertex_count())));
        v.require(q.at("holds").get<bool>(), "cell bound extras <= (m/(h n)) |V(cell)| fails");
        v.require(p.at("inequalities") == json::array({q}), "recorded inequality differs from the recomputed one");
      }
    } else if (kind == "wall_witness") {
      auto g = graph();
      auto w = wall_witness_from_json(p);
      auto e = validate_wall_witness(g, w);
      v.require(e.empty(), e);
    } else if (kind == "sparse_wall") {
      auto g = graph();
      auto vs = p.at("vertices").get<VertexSet>();
      auto m = minor_model_from_json(p.at("model"));
      for (Vertex x : vs) v.require(g.contains(x), "vertex out of range");
      if (v.problems.empty()) {
        auto sub = induced_subgraph(g, vs);
        auto e = validate_model(g, m);
        v.require(e.empty(), "model: " + e);
        v.require(m.support() == vs, "model support differs from the vertex set");
        v.require(is_two_connected(sub.graph), "not 2-connected");
        v.require(sub.graph.edge_count() == p.at("edge_count").get<std::size_t>(), "edge count differs");
        auto eps = rational_from_json(p.at("eps"));
        auto nn = static_cast<std::int64_t>(sub.graph.vertex_count()), mm = static_cast<std::int64_t>(sub.graph.edge_count());
        v.require(Rational(mm) <= (Rational(1) + eps) * Rational(nn), "|E| <= (1+eps)|V| fails");
        if (e.empty()) {
          int w = p.at("w").get<int>();
          v.require(tw_lower_bound_from_witness(g, m, WitnessKind::wall, w) >= w, "wall witness below w");
        }
        v.require(p.at("inequalities") ==
                      json::array({inequality_json("|E| <= (1+eps)|V|", Rational(mm), (Rational(1) + eps) * Rational(nn))}),
                  "recorded inequality differs from the recomputed one");
      }
    } else if (kind == "witness") {
      auto g = graph();
      auto c = sparse_witness_from_json(p);
      check_sparse_witness(g, c);
      for (const auto& s : c.violations) v.require(false, s);
      v.require(c.edge_count == p.at("edge_count").get<std::size_t>(), "edge count differs");
      v.require(c.extra_edges == p.at("extra_edges").get<std::size_t>(), "extra edge count differs");
      v.require(c.tw_lower_bound == p.at("tw_lower_bound").get<int>(), "treewidth bound differs");
      v.require(to_json(c).at("inequalities") == p.at("inequalities"), "recorded inequalities differ");
    } else if (kind == "gx") {
      auto g = graph();
      auto td = tree_decomposition_from_json(p.at("td"));
      auto r = validate_tree_decomposition(g, td);
      v.require(r.ok, "decomposition invalid");
      if (r.ok) {
        auto e = validate_gx(g, td, gx_from_json(p));
        v.require(e.empty(), e);
      }
    } else if (kind == "torso") {
      auto g = graph();
      auto td = tree_decomposition_from_json(p.at("td"));
      auto t = build_torso(g, td, p.at("node").get<int>());
      v.require(to_json(t).at("graph") == p.at("graph"), "torso differs");
      v.require(t.bag == p.at("bag").get<VertexSet>(), "bag differs");
    } else if (kind == "projected_bramble") {
      auto g = graph();
      auto td = tree_decomposition_from_json(p.at("td"));
      auto b = bramble_from_json(p.at("bramble"));
      const int h = p.at("h").get<int>(), pp = p.at("p").get<int>();
      auto r = validate_tree_decomposition(g, td);
      v.require(r.ok && r.adhesion_size <= h, "decomposition invalid or adhesion above h");
      auto gx = gx_from_json(p.at("gx"));
      auto e = validate_gx(g, td, gx);
      v.require(e.empty(), e);
      auto in_order = bramble_order(g, b).order;
      v.require(in_order == p.at("input_order").at("order").get<int>(), "input order differs");
      v.require(in_order >= h * pp + 1, "input order below h*p+1");
      auto proj = bramble_from_json(p.at("projected"));
      if (e.empty()) {
        auto pe = validate_bramble(gx.graph, proj);
        v.require(pe.empty(), pe);
        if (pe.empty()) {
          auto o = bramble_order(gx.graph, proj).order;
          v.require(o == p.at("projected_order").at("order").get<int>(), "projected order differs");
          v.require(o >= pp + 1, "projected order below p+1");
        }
      }
      auto z = p.at("projected_order").at("hitting_set").get<VertexSet>();
      auto lifted = p.at("lifted").get<VertexSet>();
      v.require(hits_all(b.sets, lifted), "lifted set misses the input bramble");
      v.require(lifted.size() <= static_cast<std::size_t>(h) * z.size(), "|lifted| > h |z|");
    } else if (kind == "refusal" || kind == "budget_exhausted") {
      // replay the command without its output options
      const int expected = kind == "refusal" ? absent_or_refused : budget_exhausted;
      std::vector<std::string> cmd;
      const auto& recorded = cert.at("environment").at("command");
      for (std::size_t i = 0; i < recorded.size(); ++i) {
        auto a = recorded[i].get<std::string>();
        if (a == "--out" || a == "--cert") {
          ++i;
          continue;
        }
        if (a.rfind("--out=", 0) == 0 || a.rfind("--cert=", 0) == 0) continue;
        cmd.push_back(a);
      }
      std::ostringstream sink, replay_err;
      int code = run(cmd, sink, replay_err);
      v.require(code == expected, "replay exited with " + std::to_string(code));
      if (code == expected) {
        auto replayed = json::parse(sink.str());
        v.require(replayed.at("kind") == kind && replayed.at("payload").at("message") == p.at("message"),
                  "replay stopped for another reason");
      }
    } else {
      throw InputError("unknown certificate kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + kind + " certificate: " + e.what());
  }
  if (v.problems.empty()) {
    out << "ok: " << kind << " certificate verified\n";
    return ok;
  }
  out << "invalid: " << v.problems.front() << "\n";
  for (std::size_t i = 1; i < v.problems.size(); ++i) err << "  also: " << v.problems[i] << "\n";
  return absent_or_refused;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context c{args, out, err, {}, {}, 1, "g6", {}};
  CLI::App app{"Induced minors, walls and sparse treewidth witnesses", "itw"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0, budget = 0;
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized subcommands");
  auto* budget_opt = app.add_option("--budget", budget, "search budget");
  app.add_option("--jobs", c.jobs, "worker threads for batch work")->check(CLI::Range(1, 256));
  app.add_option("--format", c.format, "graph output format: g6, edgelist, json");
  app.add_option("--out", c.out_path, "write the main output to a file");

  std::function<int()> action;
  std::string a1, a2, a3;
  int i1 = 0, i2 = 0;
  bool f1 = false, f2 = false;
  std::size_t n1 = 0;
  std::string s1, s2, s3 = "1";
  GenArgs gen;

  auto* sc = app.add_subcommand("gen", "generate a graph or trim supergraph");
  sc->add_option("family", gen.family, "grid|wall|clique|biclique|path|cycle|subdivided-clique|subdivided-wall|trim-clique|trim-biclique")->required();
  sc->add_option("params", gen.params, "sizes")->required();
  sc->add_option("--length", gen.length, "direct path length (edges)");
  sc->add_option("--max-extra", gen.max_extra, "path lengths drawn from [length, length+max-extra]");
  sc->add_option("--extra", gen.extra, "extra edges (trim families)");
  sc->add_option("--cert", gen.cert_path, "model certificate (grid, wall, subdivided-wall)");
  sc->callback([&] { action = [&] { return cmd_gen(c, gen); }; });

  sc = app.add_subcommand("check", "re-validate a certificate: check KIND [GRAPH] CERT");
  sc->add_option("kind", a1)->required();
  sc->add_option("first", a2)->required();
  sc->add_option("second", a3);
  sc->callback([&] {
    action = [&] {
      std::string graph = a3.empty() ? "" : a2, cert = a3.empty() ? a2 : a3;
      return check_certificate(a1, graph, read_json(cert), c.out, c.err);
    };
  });

  sc = app.add_subcommand("tw", "treewidth (min-fill upper bound, or exact)");
  sc->add_option("graph", a1)->required();
  sc->add_flag("--exact", f1);
  n1 = 24;
  sc->add_option("--cap", n1, "vertex cap for the exact solver");
  sc->add_option("--cert", s1, "write a tree decomposition certificate");
  sc->callback([&] { action = [&] { return cmd_tw(c, a1, f1, n1, s1); }; });

  sc = app.add_subcommand("validate-td", "validate a tree decomposition");
  sc->add_option("graph", a1)->required();
  sc->add_option("td", a2)->required();
  sc->callback([&] { action = [&] { return cmd_validate_td(c, a1, a2); }; });

  sc = app.add_subcommand("bramble-order", "exact order of a bramble");
  sc->add_option("graph", a1)->required();
  sc->add_option("bramble", a2)->required();
  sc->add_option("--cert", s1, "write a bramble certificate");
  sc->callback([&] { action = [&] { return cmd_bramble_order(c, a1, a2, s1); }; });

  sc = app.add_subcommand("find-im", "exact induced (or plain) minor search");
  sc->add_option("host", a1)->required();
  sc->add_option("pattern", a2)->required();
  sc->add_flag("--plain", f1, "plain minor instead of induced");
  sc->add_flag("--tw-prune", f2, "skip when treewidth rules the pattern out");
  std::size_t host_cap = 18;
  sc->add_option("--host-cap", host_cap);
  sc->callback([&] { action = [&] { return cmd_find_im(c, a1, a2, f1, f2, host_cap); }; });

  sc = app.add_subcommand("find-subdiv", "exact search for a K_s subdivision");
  sc->add_option("host", a1)->required();
  sc->add_option("s", i1)->required();
  sc->callback([&] { action = [&] { return cmd_find_subdiv(c, a1, i1); }; });

  sc = app.add_subcommand("extract-wall", "induced quasi-subdivision of W_{k/3} from an induced W_k model");
  sc->add_option("host", a1)->required();
  sc->add_option("model", a2)->required();
  sc->callback([&] { action = [&] { return cmd_extract_wall(c, a1, a2); }; });

  sc = app.add_subcommand("thin", "sparse W_w from a wall quasi-subdivision");
  sc->add_option("host", a1)->required();
  sc->add_option("witness", a2)->required();
  sc->add_option("--w", i1)->required();
  sc->add_option("--eps", s3, "epsilon as p/q or decimal");
  sc->callback([&] { action = [&] { return cmd_thin(c, a1, a2, i1, s3); }; });

  std::size_t draws = 200;
  sc = app.add_subcommand("dedensify", "balanced-partition cell of a K_{s,s} trim supergraph");
  sc->add_option("trim", a1)->required();
  sc->add_option("--parts", i1, "number of parts per side")->required();
  sc->add_flag("--exhaustive", f1);
  sc->add_option("--draws", draws);
  sc->callback([&] { action = [&] { return cmd_dedensify(c, a1, i1, f1, draws); }; });

  sc = app.add_subcommand("witness", "sparse biclique witness from a K_{2s} trim supergraph");
  sc->add_option("trim", a1)->required();
  sc->add_option("--w", i1)->required();
  sc->add_option("--eps", s3);
  sc->add_option("--d", s2, "extra-edge ratio to use (default: measured)");
  sc->add_flag("--exhaustive", f1);
  sc->add_option("--draws", draws);
  sc->callback([&] { action = [&] { return cmd_witness(c, a1, i1, s3, s2, f1, draws); }; });

  sc = app.add_subcommand("gx", "G_x of a tree decomposition node");
  sc->add_option("graph", a1)->required();
  sc->add_option("td", a2)->required();
  sc->add_option("--node", i1)->required();
  sc->callback([&] { action = [&] { return cmd_gx(c, a1, a2, i1); }; });

  sc = app.add_subcommand("torso", "torso of a tree decomposition node");
  sc->add_option("graph", a1)->required();
  sc->add_option("td", a2)->required();
  sc->add_option("--node", i1)->required();
  sc->callback([&] { action = [&] { return cmd_torso(c, a1, a2, i1); }; });

  sc = app.add_subcommand("project-bramble", "carry a bramble into G_x and certify its order");
  sc->add_option("graph", a1)->required();
  sc->add_option("td", a2)->required();
  sc->add_option("bramble", a3)->required();
  sc->add_option("--adhesion", i1, "adhesion bound")->required();
  sc->add_option("--p", i2)->required();
  sc->callback([&] { action = [&] { return cmd_project_bramble(c, a1, a2, a3, i1, i2); }; });

  std::vector<std::string> argv_store{"itw"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  if (seed_opt->count()) c.seed = seed;
  if (budget_opt->count()) c.budget = budget;

  try {
    return action();
  } catch (const Refusal& e) {
    emit_json(c, envelope(c, "refusal", {{"message", e.what()}}));
    err << "refused: " << e.what() << "\n";
    return absent_or_refused;
  } catch (const BudgetExhausted& e) {
    emit_json(c, envelope(c, "budget_exhausted", {{"message", e.what()}}));
    err << "budget exhausted: " << e.what() << "\n";
    return budget_exhausted;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}

}  // namespace itw::cli
