#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "itw/constructions.hpp"
#include "itw/error.hpp"
#include "itw/width.hpp"
#include "support.hpp"

using namespace itw;
using itw::testing::brute_force_hitting_number;
using itw::testing::brute_force_treewidth;
using itw::testing::random_graph;
using itw::testing::random_tree;

TEST_CASE("tree decomposition validation") {
  auto k4 = complete_graph(4);
  TreeDecomposition one{Graph(1, {}), {{0, 1, 2, 3}}};
  auto r = validate_tree_decomposition(k4, one);
  CHECK(r.ok);
  CHECK(r.width == 3);
  CHECK(r.adhesion_size == 0);

  auto p = path_graph(4);
  TreeDecomposition chain{path_graph(3), {{0, 1}, {1, 2}, {2, 3}}};
  r = validate_tree_decomposition(p, chain);
  CHECK(r.ok);
  CHECK(r.width == 1);
  CHECK(r.adhesion_size == 1);

  // vertex 1 in bags 0 and 2 but not in the middle one
  TreeDecomposition broken{path_graph(3), {{0, 1}, {2, 3}, {1, 2}}};
  r = validate_tree_decomposition(p, broken);
  CHECK_FALSE(r.ok);
  bool named = false;
  for (const auto& v : r.violations) named |= v.find("vertex 1 ") != std::string::npos;
  CHECK(named);

  // uncovered edge
  TreeDecomposition gap{path_graph(2), {{0, 1}, {2, 3}}};
  r = validate_tree_decomposition(p, gap);
  CHECK_FALSE(r.ok);
  CHECK(r.violations.front().find("edge {1,2}") != std::string::npos);

  // not a tree
  TreeDecomposition cyc{cycle_graph(3), {{0, 1}, {1, 2}, {2, 3}}};
  CHECK_FALSE(validate_tree_decomposition(p, cyc).ok);
}

TEST_CASE("adhesion counts non-adjacent node pairs") {
  // Star tree: centre bag {0}, leaves {0,1,2}, {0,1,3}. Leaves share {0,1}
  // although they are not adjacent in the tree.
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}, {0, 2}, {0, 3}});
  TreeDecomposition td{Graph(3, {{0, 1}, {0, 2}}), {{0, 1}, {0, 1, 2}, {0, 1, 3}}};
  auto r = validate_tree_decomposition(g, td);
  CHECK(r.ok);
  CHECK(r.adhesion_size == 2);
  TreeDecomposition td2{Graph(3, {{0, 1}, {0, 2}}), {{0}, {0, 1, 2}, {0, 1, 3}}};
  auto r2 = validate_tree_decomposition(g, td2);
  CHECK_FALSE(r2.ok);  // vertex 1 trace disconnected
}

TEST_CASE("exact treewidth on known graphs") {
  CHECK(exact_treewidth(complete_graph(5)).width == 4);
  CHECK(exact_treewidth(complete_bipartite(3, 3)).width == 3);
  CHECK(exact_treewidth(grid(3).graph).width == 3);
  CHECK(exact_treewidth(grid(4).graph).width == 4);
  CHECK(exact_treewidth(cycle_graph(7)).width == 2);
  CHECK(exact_treewidth(Graph()).width == -1);
  CHECK(exact_treewidth(Graph(3, {})).width == 0);
  for (int n = 2; n <= 12; ++n) CHECK(exact_treewidth(random_tree(n, static_cast<std::uint64_t>(n))).width == 1);
  CHECK_THROWS_AS(exact_treewidth(Graph(25, {})), InputError);
}

TEST_CASE("exact treewidth agrees with brute force over orders") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    auto g = random_graph(n, 0.2 + 0.01 * static_cast<double>(seed % 50), seed);
    auto r = exact_treewidth(g);
    CHECK(r.width == brute_force_treewidth(g));
    auto rep = validate_tree_decomposition(g, r.decomposition);
    CHECK(rep.ok);
    CHECK(rep.width == r.width);
  }
}

TEST_CASE("exact treewidth on larger graphs re-validates") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto g = random_graph(16, 0.25, seed);
    auto r = exact_treewidth(g);
    auto rep = validate_tree_decomposition(g, r.decomposition);
    CHECK(rep.ok);
    CHECK(rep.width == r.width);
    CHECK(r.width <= elimination_width(g, min_fill_order(g)));
  }
  CHECK(exact_treewidth(grid(5).graph, 25).width == 5);
  CHECK(exact_treewidth(wall(3).graph).width == 3);
}

TEST_CASE("tree decomposition JSON round trip") {
  auto g = grid(3).graph;
  auto td = exact_treewidth(g).decomposition;
  auto back = tree_decomposition_from_json(to_json(td));
  CHECK(back.bags == td.bags);
  CHECK(back.tree == td.tree);
  CHECK_THROWS_AS(tree_decomposition_from_json(nlohmann::json::parse(R"({"bags": 3})")), InputError);
}

TEST_CASE("bramble order") {
  auto k3 = complete_graph(3);
  Bramble singletons{{{0}, {1}, {2}}};
  CHECK(bramble_order(k3, singletons).order == 3);

  auto g2 = grid(2).graph;  // 0 1 / 2 3
  Bramble rows_cols{{{0, 1}, {2, 3}, {0, 2}, {1, 3}}};
  CHECK(bramble_order(g2, rows_cols).order == 2);

  auto g3 = grid(3);
  auto crosses = grid_bramble(3);
  CHECK(validate_bramble(g3.graph, crosses).empty());
  auto h = bramble_order(g3.graph, crosses);
  CHECK(h.order == 4);
  CHECK(hits_all(crosses.sets, h.set));
  CHECK(h.order <= exact_treewidth(g3.graph).width + 1);

  Bramble bad{{{0}, {8}}};
  CHECK_FALSE(validate_bramble(g3.graph, bad).empty());
  CHECK_THROWS_AS(bramble_order(g3.graph, bad), InputError);
  Bramble split{{{0, 2}}};
  CHECK_THROWS_AS(bramble_order(g3.graph, split), InputError);
}

TEST_CASE("grid brambles have order k+1 = tw+1") {
  for (int k = 2; k <= 5; ++k) {
    auto g = grid(k).graph;
    auto b = grid_bramble(k);
    CHECK(validate_bramble(g, b).empty());
    int order = bramble_order(g, b).order;
    CHECK(order == k + 1);
    if (k <= 3) CHECK(order == brute_force_hitting_number(b.sets, k * k));
    CHECK(order == exact_treewidth(g, 25).width + 1);
  }
}

TEST_CASE("minimum hitting set agrees with brute force") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    int universe = 4 + static_cast<int>(seed % 8);
    std::vector<VertexSet> sets;
    int count = 2 + static_cast<int>(rng.index(10));
    for (int i = 0; i < count; ++i) {
      VertexSet s;
      for (int e = 0; e < universe; ++e)
        if (rng.uniform(0, 3) == 0) s.push_back(e);
      if (s.empty()) s.push_back(static_cast<Vertex>(rng.index(static_cast<std::size_t>(universe))));
      sets.push_back(s);
    }
    auto h = minimum_hitting_set(sets, static_cast<std::size_t>(universe));
    CHECK(hits_all(sets, h.set));
    CHECK(h.order == brute_force_hitting_number(sets, universe));
  }
}

TEST_CASE("bramble duality direction on random graphs") {
  // Brambles made of single vertices of a clique subgraph and of connected
  // pairs: any valid bramble has order <= tw + 1.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_graph(8, 0.5, seed);
    Bramble b;
    for (auto [u, v] : g.edges()) {
      VertexSet s{u, v};
      bool ok = true;
      for (const auto& t : b.sets) ok = ok && sets_touch(g, s, t);
      if (ok) b.sets.push_back(s);
    }
    if (b.sets.empty()) continue;
    CHECK(bramble_order(g, b).order <= exact_treewidth(g).width + 1);
  }
}

TEST_CASE("treewidth lower bounds from witnesses") {
  auto k33 = complete_bipartite(3, 3);
  auto sub = subdivide(k33, 3);
  MinorModel m;
  m.pattern = k33;
  m.induced = false;
  for (Vertex b : sub.spec.branch) m.branch_sets.push_back({b});
  // Each A-side set absorbs the interiors of its paths.
  for (std::size_t e = 0; e < sub.spec.paths.size(); ++e) {
    const auto& p = sub.spec.paths[e];
    auto& set = m.branch_sets[static_cast<std::size_t>(sub.spec.skeleton.edges()[e].first)];
    set.insert(set.end(), p.begin() + 1, p.end() - 1);
  }
  for (auto& s : m.branch_sets) s = normalized(s);
  CHECK(tw_lower_bound_from_witness(sub.graph, m, WitnessKind::biclique, 3) == 3);

  auto k2 = complete_graph(2);
  CHECK(tw_lower_bound_from_witness(k2, identity_model(k2), WitnessKind::clique, 2) == 1);

  // Γ_3 planted in a host by inflating vertices.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto g3 = grid(3).graph;
    auto host = itw::testing::inflate(g3, 2, seed);
    MinorModel gm{g3, host.blobs, true};
    int bound = tw_lower_bound_from_witness(host.graph, gm, WitnessKind::grid, 3);
    CHECK(bound == 3);
    CHECK(bound <= exact_treewidth(host.graph).width);
  }
  // wrong family
  CHECK_THROWS_AS(tw_lower_bound_from_witness(k2, identity_model(k2), WitnessKind::grid, 2), InputError);
}

TEST_CASE("nabla_r") {
  CHECK(nabla_r(complete_graph(4), 0) == Rational(3, 2));
  CHECK(nabla_r(complete_graph(4), 2) == Rational(3, 2));
  CHECK(nabla_r(cycle_graph(6), 1) == Rational(1));
  CHECK(nabla_r(cycle_graph(6), 0) == Rational(1));
  CHECK_THROWS_AS(nabla_r(Graph(13, {}), 1), InputError);
  CHECK_THROWS_AS(nabla_r(cycle_graph(5), 3), InputError);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_graph(7, 0.35, seed);
    // depth-0: densest subgraph by subset enumeration
    Rational densest(0);
    for (int mask = 1; mask < 128; ++mask) {
      int e = 0;
      for (auto [u, v] : g.edges()) e += (mask >> u & 1) && (mask >> v & 1);
      Rational d(e, std::popcount(static_cast<unsigned>(mask)));
      if (d > densest) densest = d;
    }
    auto n0 = nabla_r(g, 0), n1 = nabla_r(g, 1), n2 = nabla_r(g, 2);
    CHECK(n0 == densest);
    CHECK(n0 <= n1);
    CHECK(n1 <= n2);
  }
}
