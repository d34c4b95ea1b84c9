#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itw/graph.hpp"
#include "itw/minor.hpp"
#include "itw/rational.hpp"
#include "json.hpp"

namespace itw {

/// Tree of bags over a host graph. Tree nodes are 0..node_count()-1.
struct TreeDecomposition {
  Graph tree;
  std::vector<VertexSet> bags;

  std::size_t node_count() const { return bags.size(); }
  /// Largest bag size minus one (-1 when every bag is empty).
  int width() const;
  /// Nodes whose bag contains v, sorted.
  std::vector<int> nodes_containing(Vertex v) const;
};

VertexSet bag_intersection(const TreeDecomposition& td, int x, int y);

/// Distinct non-empty intersections of bag x with every other bag.
std::vector<VertexSet> adhesions_of(const TreeDecomposition& td, int x);

struct TdReport {
  bool ok = true;
  std::vector<std::string> violations;
  int width = -1;
  /// Max |β(x) ∩ β(y)| over all pairs of distinct nodes, adjacent or not.
  int adhesion_size = 0;
};

TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// Decomposition with one bag per eliminated vertex: {v} plus its later
/// neighbours in the fill-in graph.
TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order);

/// Width of an elimination order (max later-degree in the fill-in graph).
int elimination_width(const Graph& g, const std::vector<Vertex>& order);

/// Greedy min-fill order; an upper bound only.
std::vector<Vertex> min_fill_order(const Graph& g);

struct TreewidthResult {
  int width = -1;
  std::vector<Vertex> order;
  TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over eliminated vertex sets,
/// keeping only sets that can still beat the min-fill bound. Throws
/// InputError above `cap` vertices (hard limit 64).
TreewidthResult exact_treewidth(const Graph& g, std::size_t cap = 24);

/// {"nodes": n, "edges": [[x,y],...], "bags": [[...],...]}
nlohmann::json to_json(const TreeDecomposition& td);
TreeDecomposition tree_decomposition_from_json(const nlohmann::json& j);

struct Bramble {
  std::vector<VertexSet> sets;
};

/// Empty string when every set is non-empty and connected and all pairs touch.
std::string validate_bramble(const Graph& g, const Bramble& b);

struct HittingSet {
  int order = 0;
  VertexSet set;
};

bool hits_all(const std::vector<VertexSet>& sets, const VertexSet& z);

/// Exact minimum hitting set by branch and bound (disjoint-packing lower
/// bound). Elements must be < 256.
HittingSet minimum_hitting_set(const std::vector<VertexSet>& sets, std::size_t universe);

/// Validates b and returns its order with a minimum hitting set. Throws
/// InputError on an invalid bramble or when |V|·|sets| exceeds `cap`.
HittingSet bramble_order(const Graph& g, const Bramble& b, std::size_t cap = 1u << 20);

/// Bramble of order k+1 on Γ_k (k >= 2): crosses (row ∪ column) of the top-left
/// (k-1)x(k-1) subgrid, the last row without its last vertex, and the last
/// column.
Bramble grid_bramble(int k);

nlohmann::json to_json(const Bramble& b);
Bramble bramble_from_json(const nlohmann::json& j);

enum class WitnessKind { grid, wall, biclique, clique };

WitnessKind parse_witness_kind(const std::string& name);
const char* to_string(WitnessKind k);

/// Canonical pattern for a witness family: Γ_k, W_k, K_{k,k} or K_k.
Graph witness_pattern(WitnessKind kind, int k);

/// Treewidth lower bound certified by a minor model of a known family:
/// k for Γ_k and W_k, s for K_{s,s}, s-1 for K_s. The model must validate and
/// its pattern must equal witness_pattern(kind, k); otherwise InputError.
int tw_lower_bound_from_witness(const Graph& g, const MinorModel& witness, WitnessKind kind, int k);

/// Max edge density over minors whose branch sets have radius <= r (measured
/// inside the branch set). n <= 12 and r <= 2.
Rational nabla_r(const Graph& g, int r);

}  // namespace itw
