#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "itw/constructions.hpp"
#include "itw/error.hpp"
#include "itw/graph.hpp"
#include "itw/graph_io.hpp"
#include "itw/rational.hpp"
#include "support.hpp"

using namespace itw;
using itw::testing::isomorphic;
using itw::testing::random_graph;

TEST_CASE("graph normalizes edges and rejects bad input") {
  Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
}

TEST_CASE("induced subgraph") {
  auto k4 = complete_graph(4);
  VertexSet all{0, 1, 2, 3};
  CHECK(induced_subgraph(k4, all).graph == k4);

  auto g3 = grid(3);
  // corner (0,0) and its neighbours (1,0), (0,1)
  VertexSet s{g3.at(0, 0), g3.at(1, 0), g3.at(0, 1)};
  auto sub = induced_subgraph(g3.graph, s);
  CHECK(isomorphic(sub.graph, path_graph(3)));
  CHECK(sub.to_parent == std::vector<Vertex>(s.begin(), s.end()));

  CHECK(induced_subgraph(k4, VertexSet{}).graph.vertex_count() == 0);
  CHECK_THROWS_AS(induced_subgraph(k4, VertexSet{7}), InputError);
}

TEST_CASE("edge contraction") {
  auto k3 = complete_graph(3);
  auto c = contract_edge(k3, 0, 1);
  CHECK(c.graph == complete_graph(2));
  CHECK(c.image == std::vector<Vertex>{0, 0, 1});

  CHECK(contract_edge(path_graph(3), 0, 1).graph == complete_graph(2));
  CHECK(isomorphic(contract_edge(cycle_graph(4), 1, 2).graph, complete_graph(3)));
  CHECK_THROWS_AS(contract_edge(path_graph(3), 0, 2), InputError);
}

TEST_CASE("contraction never adds vertices or loops") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_graph(9, 0.4, seed);
    for (auto [u, v] : g.edges()) {
      auto c = contract_edge(g, u, v);
      CHECK(c.graph.vertex_count() == g.vertex_count() - 1);
      for (auto [a, b] : c.graph.edges()) CHECK(a != b);
    }
  }
}

TEST_CASE("two-connectivity") {
  CHECK(is_two_connected(cycle_graph(5)));
  CHECK_FALSE(is_two_connected(path_graph(4)));
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK_FALSE(is_two_connected(bowtie));
  CHECK(articulation_points(bowtie) == VertexSet{2});
  CHECK_FALSE(is_two_connected(complete_graph(2)));
}

TEST_CASE("two-connected graphs have minimum degree two") {
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = random_graph(8, 0.35, seed);
    if (!is_two_connected(g)) continue;
    ++seen;
    for (Vertex v = 0; v < 8; ++v) CHECK(g.degree(v) >= 2);
    // Removing any vertex keeps the rest connected.
    for (Vertex x = 0; x < 8; ++x) {
      VertexSet rest;
      for (Vertex v = 0; v < 8; ++v)
        if (v != x) rest.push_back(v);
      CHECK(itw::testing::set_connected(g, rest));
    }
  }
  CHECK(seen > 10);
}

TEST_CASE("degeneracy") {
  for (int t = 1; t <= 6; ++t) CHECK(degeneracy(complete_graph(t)).value == t - 1);
  CHECK(degeneracy(Graph(5, {})).value == 0);
  CHECK(degeneracy(grid(4).graph).value == 2);
}

TEST_CASE("degeneracy order replays and bounds density") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = random_graph(10, 0.3 + 0.005 * static_cast<double>(seed), seed);
    auto d = degeneracy(g);
    std::vector<int> pos(10);
    for (int i = 0; i < 10; ++i) pos[static_cast<std::size_t>(d.order[static_cast<std::size_t>(i)])] = i;
    for (Vertex v = 0; v < 10; ++v) {
      int later = 0;
      for (Vertex w : g.neighbors(v)) later += pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)];
      CHECK(later <= d.value);
    }
    // Least possible: equals the max over subsets of the min degree inside.
    int brute = 0;
    for (int mask = 1; mask < 1024; ++mask) {
      int mindeg = 10;
      for (Vertex v = 0; v < 10; ++v) {
        if (!(mask >> v & 1)) continue;
        int deg = 0;
        for (Vertex w : g.neighbors(v)) deg += mask >> w & 1;
        mindeg = std::min(mindeg, deg);
      }
      brute = std::max(brute, mindeg);
    }
    CHECK(d.value == brute);
    Rng rng(seed);
    for (int trial = 0; trial < 10; ++trial) {
      VertexSet s;
      for (Vertex v = 0; v < 10; ++v)
        if (rng.coin()) s.push_back(v);
      if (s.empty()) continue;
      CHECK(edge_density(induced_subgraph(g, s).graph) <= Rational(d.value));
    }
  }
}

TEST_CASE("edge density") {
  CHECK(edge_density(complete_graph(3)) == Rational(1));
  for (int t = 2; t <= 4; ++t) {
    auto k = complete_graph(t);
    Graph padded(static_cast<std::size_t>(t + t * t * t), k.edges());
    CHECK(edge_density(padded) < Rational(1, t));
  }
  CHECK(edge_density(grid(5).graph) == Rational(8, 5));
  CHECK_THROWS_AS(edge_density(Graph()), InputError);
}

TEST_CASE("biclique subgraphs") {
  auto k33 = complete_bipartite(3, 3);
  auto b = has_biclique_subgraph(k33, 3);
  REQUIRE(b);
  CHECK(b->left == VertexSet{0, 1, 2});
  CHECK(b->right == VertexSet{3, 4, 5});
  // Grid faces are 4-cycles; planarity rules out K_{3,3}. Walls have girth 6.
  for (int k = 2; k <= 5; ++k) {
    CHECK(has_biclique_subgraph(grid(k).graph, 2));
    CHECK_FALSE(has_biclique_subgraph(grid(k).graph, 3));
    CHECK_FALSE(has_biclique_subgraph(wall(k).graph, 2));
  }
  auto k4 = complete_graph(4);
  auto w = has_biclique_subgraph(k4, 2);
  REQUIRE(w);
  for (Vertex a : w->left)
    for (Vertex c : w->right) CHECK(k4.adjacent(a, c));
  CHECK_THROWS_AS(has_biclique_subgraph(k4, 0), InputError);
}

TEST_CASE("biclique search agrees with brute force") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = random_graph(8, 0.5, seed);
    // brute force over pairs of disjoint 2-sets
    bool brute = false;
    for (int a = 0; a < 8 && !brute; ++a)
      for (int b = a + 1; b < 8 && !brute; ++b)
        for (int c = 0; c < 8 && !brute; ++c)
          for (int d = c + 1; d < 8 && !brute; ++d) {
            if (c == a || c == b || d == a || d == b) continue;
            brute = g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) && g.adjacent(b, d);
          }
    CHECK(has_biclique_subgraph(g, 2).has_value() == brute);
  }
}

TEST_CASE("line graphs") {
  CHECK(line_graph(path_graph(3)).graph == complete_graph(2));
  CHECK(isomorphic(line_graph(complete_bipartite(1, 3)).graph, complete_graph(3)));
  CHECK(isomorphic(line_graph(cycle_graph(5)).graph, cycle_graph(5)));
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), InputError);
  CHECK_THROWS_AS(Rational::parse("x"), InputError);
}

TEST_CASE("graph formats round trip") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_graph(static_cast<int>(seed % 70), 0.2, seed);
    CHECK(parse_graph6(to_graph6(g)) == g);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    CHECK(graph_from_json(to_json(g)) == g);
  }
  // Known graph6 strings.
  CHECK(to_graph6(complete_graph(5)) == "D~{");
  CHECK(parse_graph6("D~{") == complete_graph(5));
  CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
  // Edge list without count line, comments and trailing isolated vertex.
  CHECK(parse_edge_list("# c\n0 1\n1 2\n") == path_graph(3));
  CHECK(parse_edge_list("4\n0 1\n").vertex_count() == 4);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), InputError);
  CHECK_THROWS_AS(parse_graph6("\x01"), InputError);
}
