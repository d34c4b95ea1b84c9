#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "itw/constructions.hpp"
#include "itw/error.hpp"
#include "itw/graph_io.hpp"
#include "itw/trim.hpp"
#include "support.hpp"

using namespace itw;
using itw::testing::isomorphic;

TEST_CASE("grids") {
  CHECK(grid(1).graph.vertex_count() == 1);
  CHECK(isomorphic(grid(2).graph, cycle_graph(4)));
  auto g5 = grid(5);
  CHECK(g5.graph.vertex_count() == 25);
  CHECK(g5.graph.edge_count() == 40);
  for (int k = 1; k <= 7; ++k) CHECK(grid(k).graph.edge_count() == static_cast<std::size_t>(2 * k * (k - 1)));
  CHECK(g5.at(3, 2) == 13);
  CHECK(g5.coords[13] == Coord{3, 2});
  CHECK(g5.at(5, 0) == kNoVertex);
  CHECK_THROWS_AS(grid(0), InputError);
}

TEST_CASE("walls") {
  CHECK(isomorphic(wall(2).graph, cycle_graph(6)));
  auto w3 = wall(3);
  CHECK(w3.graph.vertex_count() == 16);
  CHECK(w3.graph.max_degree() == 3);
  for (int k = 2; k <= 9; ++k) {
    auto w = wall(k);
    CHECK(w.graph.vertex_count() == static_cast<std::size_t>(2 * k * k - 2));
    CHECK(w.graph.edge_count() == static_cast<std::size_t>(3 * k * k - 2 * k - 2));
    CHECK(w.graph.max_degree() <= 3);
    CHECK(is_two_connected(w.graph));
  }
  CHECK_THROWS_AS(wall(1), InputError);
}

TEST_CASE("wall of size 5 matches the golden drawing") {
  auto golden = read_graph_file(std::string(ITW_TEST_DATA) + "/wall5.edges");
  auto w5 = wall(5);
  CHECK(golden.vertex_count() == 48);
  CHECK(golden == w5.graph);
  // Dropped corners: bottom-right of the first row, top-left of the last row
  // in the 0-based 10x5 frame.
  CHECK(w5.at(9, 0) == kNoVertex);
  CHECK(w5.at(0, 4) == kNoVertex);
}

TEST_CASE("subdivisions") {
  auto k3 = subdivide(complete_graph(3), 1);
  CHECK(k3.graph == complete_graph(3));
  CHECK(subdivide(complete_graph(4), 2).graph.vertex_count() == 10);
  auto k22 = subdivide(complete_bipartite(2, 2), 3);
  CHECK(k22.graph.vertex_count() == 12);
  CHECK(check_subdivision(k22.graph, k22.spec).empty());
  CHECK_THROWS_AS(subdivide(complete_graph(3), 0), InputError);

  // Broken spec is reported.
  auto spec = k22.spec;
  spec.lengths[0] = 4;
  CHECK_FALSE(check_subdivision(k22.graph, spec).empty());
}

TEST_CASE("at-least subdivisions are seeded and bounded") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = subdivide(complete_graph(5), 3, LengthMode::at_least, seed, 4);
    auto b = subdivide(complete_graph(5), 3, LengthMode::at_least, seed, 4);
    CHECK(a.graph == b.graph);
    for (int l : a.spec.lengths) {
      CHECK(l >= 3);
      CHECK(l <= 7);
    }
    CHECK(check_subdivision(a.graph, a.spec).empty());
  }
}

TEST_CASE("branch vertices of a (>=2)-subdivision are independent; density bound") {
  for (int s = 2; s <= 6; ++s)
    for (int l = 2; l <= 5; ++l)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto sub = subdivide(complete_graph(s), l, LengthMode::at_least, seed, 3);
        for (Vertex a : sub.spec.branch)
          for (Vertex b : sub.spec.branch) CHECK_FALSE(sub.graph.adjacent(a, b));
        // |E| * (l-1) <= l * |V|
        CHECK(sub.graph.edge_count() * static_cast<std::size_t>(l - 1) <= static_cast<std::size_t>(l) * sub.graph.vertex_count());
      }
}

TEST_CASE("quasi-subdivisions") {
  auto claw = complete_bipartite(1, 3);
  std::vector<Vertex> centre{0};
  auto q = quasi_subdivide(claw, centre, 1);
  // triangle with a pendant at every corner
  Graph expect(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(isomorphic(q.graph, expect));
  CHECK(check_quasi_subdivision(q.graph, q.structure).empty());

  auto plain = quasi_subdivide(complete_graph(4), std::vector<Vertex>{}, 2);
  CHECK(plain.graph == subdivide(complete_graph(4), 2).graph);

  std::vector<Vertex> leaf{1};
  CHECK_THROWS_AS(quasi_subdivide(claw, leaf, 1), InputError);
}

TEST_CASE("line graph of a 2-subdivision is a quasi-subdivision with all triangles") {
  auto w3 = wall(3).graph;
  auto line = line_graph(subdivide(w3, 2).graph).graph;
  // A degree-2 vertex is represented by its half-edge towards the smaller
  // neighbour; the other half-edge lengthens that side's path.
  std::vector<Vertex> triangles;
  for (Vertex v = 0; v < static_cast<Vertex>(w3.vertex_count()); ++v)
    if (w3.degree(v) == 3) triangles.push_back(v);
  std::vector<int> lengths;
  for (auto [u, v] : w3.edges()) {
    int len = 1;
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}})
      if (w3.degree(x) == 2 && y != w3.neighbors(x)[0]) ++len;
    lengths.push_back(len);
  }
  auto q = quasi_subdivide(w3, triangles, lengths);
  CHECK(q.graph.vertex_count() == line.vertex_count());
  CHECK(isomorphic(q.graph, line));
}

TEST_CASE("quasi-subdivision checker catches chords and overlaps") {
  auto q = quasi_subdivide(wall(3).graph, std::vector<Vertex>{}, 2);
  auto edges = q.graph.edges();
  const auto& p = q.structure.paths[0];
  edges.emplace_back(p.front(), p.back());  // chord
  Graph chorded(q.graph.vertex_count(), edges);
  CHECK_FALSE(check_quasi_subdivision(chorded, q.structure).empty());
  auto bad = q.structure;
  bad.paths[1] = bad.paths[0];
  CHECK_FALSE(check_quasi_subdivision(q.graph, bad).empty());
}

TEST_CASE("trim validation") {
  auto t = random_trim_supergraph(SkeletonKind::biclique, 2, 3, 0, 1);
  auto r = validate_trim(t);
  CHECK(r.ok);
  CHECK(r.extra_edge_count == 0);

  // chord between path endpoints
  {
    auto bad = t;
    const auto& p = bad.paths[0];
    auto edges = bad.host.edges();
    edges.emplace_back(p.front(), p.back());
    bad.host = Graph(bad.host.vertex_count(), edges);
    auto rep = validate_trim(bad);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations[0].find("trimness") != std::string::npos);
  }
  // chord between two subdivision vertices of one path (length 3 -> 2 interior,
  // consecutive, so use a longer path)
  {
    auto long_t = random_trim_supergraph(SkeletonKind::clique, 3, 4, 0, 1);
    const auto& p = long_t.paths[0];
    auto edges = long_t.host.edges();
    edges.emplace_back(p[1], p[3]);
    long_t.host = Graph(long_t.host.vertex_count(), edges);
    CHECK_FALSE(validate_trim(long_t).ok);
  }
  // an extra edge parallel to a path edge is no extra edge at all
  {
    auto same = t;
    const auto& p = same.paths[0];
    auto edges = same.host.edges();
    edges.emplace_back(p[1], p[2]);
    same.host = Graph(same.host.vertex_count(), edges);
    CHECK(validate_trim(same).ok);
    CHECK(validate_trim(same).extra_edge_count == 0);
  }
}

TEST_CASE("random trim supergraphs") {
  auto t = random_trim_supergraph(SkeletonKind::biclique, 2, 3, 1, 7);
  auto r = validate_trim(t);
  CHECK(r.ok);
  CHECK(r.extra_edge_count == 1);
  CHECK(r.taxonomy.subdivision_pairs + r.taxonomy.branch_to_path == 1);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto a = random_trim_supergraph(SkeletonKind::clique, 5, 3, 12, seed, 2);
    auto b = random_trim_supergraph(SkeletonKind::clique, 5, 3, 12, seed, 2);
    CHECK(a.host == b.host);
    auto rep = validate_trim(a);
    CHECK(rep.ok);
    CHECK(rep.extra_edge_count == 12);
    CHECK(rep.taxonomy.branch_pairs == 0);
  }

  // K_4 with 2-edge paths: fill every legal pair, then one more is refused.
  auto base = random_trim_supergraph(SkeletonKind::clique, 4, 2, 0, 3);
  auto legal = legal_extra_pair_count(base);
  // 6 subdivision vertices: pairs on distinct paths = 15; branch to non-incident
  // path interior = 4 branch * 3 paths = 12.
  CHECK(legal == 27);
  auto full = random_trim_supergraph(SkeletonKind::clique, 4, 2, legal, 3);
  CHECK(validate_trim(full).ok);
  CHECK(validate_trim(full).extra_edge_count == legal);
  CHECK_THROWS_AS(random_trim_supergraph(SkeletonKind::clique, 4, 2, legal + 1, 3), Refusal);
}

TEST_CASE("restricting a trim supergraph") {
  auto t = random_trim_supergraph(SkeletonKind::clique, 6, 3, 20, 5, 2);
  std::vector<Vertex> keep{0, 2, 3, 5};
  auto r = restrict_trim(t, keep, SkeletonKind::biclique);
  CHECK(validate_trim(r).ok);
  CHECK(r.skeleton == complete_bipartite(2, 2));
  for (std::size_t i = 0; i < keep.size(); ++i)
    CHECK(r.origin[static_cast<std::size_t>(r.branch[i])] == t.branch[static_cast<std::size_t>(keep[i])]);
  // every induced host edge is an edge of the original
  for (auto [a, b] : r.host.edges()) CHECK(t.host.adjacent(r.origin[static_cast<std::size_t>(a)], r.origin[static_cast<std::size_t>(b)]));
}
