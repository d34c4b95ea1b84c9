#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itw/minor.hpp"
#include "itw/rational.hpp"
#include "itw/rng.hpp"
#include "itw/trim.hpp"
#include "json.hpp"

namespace itw {

struct BicliqueSplit {
  TrimSupergraph biclique;    // K_{s,s}; origin maps into the clique's host
  std::vector<Vertex> side_a;  // clique skeleton vertices, sorted; side_a[0] == 0
  std::vector<Vertex> side_b;
  bool exhaustive = false;     // found by enumeration rather than sampling
  int draws = 0;               // bipartitions looked at
};

/// Splits a K_{2s} trim supergraph into the K_{s,s} one given by a balanced
/// bipartition of the branch vertices, keeping at least half of the host.
/// Draws up to `tries` random bipartitions; with tries == 0, or when sampling
/// fails and 2s <= 12, enumerates all of them (the one keeping the most
/// vertices wins, ties to the lexicographically smallest side A).
BicliqueSplit clique_to_biclique_split(const TrimSupergraph& t, std::uint64_t seed, int tries = 64);

/// h parts of equal size per side; parts are sorted and ordered by their
/// smallest element.
struct BalancedPartitionPair {
  std::vector<std::vector<Vertex>> a;  // skeleton vertices in [0, s)
  std::vector<std::vector<Vertex>> b;  // skeleton vertices in [s, 2s)
};

BalancedPartitionPair random_balanced_partition(int s, int h, Rng& rng);
/// Number of ways to cut s items into h unordered parts of size s/h.
/// Saturates at UINT64_MAX.
std::uint64_t balanced_partition_count(int s, int h);
/// All balanced partitions of {0..s-1}, lexicographic in the flattened part list.
std::vector<std::vector<std::vector<Vertex>>> all_balanced_partitions(int s, int h);

/// Sub-supergraph on A_i ∪ B_j (side A first).
TrimSupergraph partition_cell(const TrimSupergraph& t, const BalancedPartitionPair& p, int i, int j);

struct CellCount {
  int i = 0, j = 0;
  std::size_t vertices = 0;
  std::size_t extras = 0;
};
/// Vertex and extra-edge counts of all h² cells, row-major, without building them.
std::vector<CellCount> partition_cell_counts(const TrimSupergraph& t, const BalancedPartitionPair& p);

struct DedensifyOptions {
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t draws = 200;            // sampled mode
  std::uint64_t budget = 1'000'000;   // exhaustive mode: max partition pairs
  int jobs = 1;
};

struct DedensifyResult {
  TrimSupergraph graph;  // K_{s/h,s/h}; origin maps into the input host
  BalancedPartitionPair partition;
  int i = 0, j = 0;
  std::size_t extras = 0;           // in graph
  std::size_t input_vertices = 0;   // n
  std::size_t input_extras = 0;     // m
  std::size_t partitions_examined = 0;
  std::size_t qualifying = 0;       // cells meeting extras·h·n <= m·|V(cell)|
};

/// Finds a cell G_{i,j} of a balanced partition pair with
/// extras·h·n <= m·|V(G_{i,j})|, n and m taken from the input. Among the
/// qualifying cells of all partitions examined, returns the one with fewest
/// extras, then fewest vertices, then earliest partition, then smallest
/// (i,j). Throws InputError when h does not divide s, BudgetExhausted when
/// sampling finds nothing or the exhaustive enumeration exceeds the budget.
DedensifyResult dedensify_balanced(const TrimSupergraph& t, int h, const DedensifyOptions& opts = {});

/// a <= b, exactly.
struct Inequality {
  std::string name;
  Rational lhs, rhs;
  bool holds() const { return lhs <= rhs; }
};

/// Subgraph whose treewidth and density are certified from its own structure:
/// branch vertices (side A first) and direct paths of a K_{side,side}
/// subdivision spanning the induced subgraph on `vertices`.
struct SparseWitnessCertificate {
  VertexSet vertices;  // input host ids
  int side = 0;
  std::vector<Vertex> branch;
  std::vector<std::vector<Vertex>> paths;  // biclique skeleton edge order
  int w = 0;
  Rational eps;
  int min_path_length = 0;

  // filled by check_sparse_witness
  std::size_t edge_count = 0;
  std::size_t extra_edges = 0;
  bool two_connected = false;
  int tw_lower_bound = 0;
  std::vector<Inequality> inequalities;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Recomputes every derived field from the host alone: trimness of the
/// structure, 2-connectivity, the biclique model (side A sets absorb their
/// paths), tw >= side >= w, subdivision edges <= (1+1/(ℓ-1))|V|,
/// extras <= (ε/2)|V| and |E| <= (1+ε)|V|.
void check_sparse_witness(const Graph& host, SparseWitnessCertificate& c);

/// K_{side,side} minor model whose side A sets hold the interiors of their
/// paths. Not induced: extras may join two side A sets.
MinorModel biclique_model(const SparseWitnessCertificate& c);

struct SparseWitnessRun {
  SparseWitnessCertificate certificate;
  Rational d;          // extra-edge ratio used for h
  int h = 0;
  int s = 0;
  std::size_t split_vertices = 0;
  std::size_t split_extras = 0;
  std::size_t partitions_examined = 0;
};

/// Sparse high-treewidth subgraph of a K_{2s} trim supergraph: split into a
/// K_{s,s}, then a balanced cell with h the smallest divisor of s at least
/// ⌈4d/ε⌉, d the extra-edge ratio (measured unless given, and never below the
/// measured one). Refuses unless ℓ >= ⌈2/ε⌉+1 and s/h >= w.
SparseWitnessRun assemble_sparse_witness(const TrimSupergraph& t, int w, const Rational& eps, std::uint64_t seed,
                                         std::optional<Rational> d = std::nullopt, const DedensifyOptions& opts = {});

nlohmann::json to_json(const Inequality& q);
nlohmann::json to_json(const SparseWitnessCertificate& c);
/// Reads the structural fields only; run check_sparse_witness afterwards.
SparseWitnessCertificate sparse_witness_from_json(const nlohmann::json& j);

}  // namespace itw
