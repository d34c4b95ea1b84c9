#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itw/graph.hpp"
#include "itw/trim.hpp"
#include "json.hpp"

namespace itw {

/// Minor model of `pattern` in a host: branch_sets[p] is the host set for
/// pattern vertex p. In induced mode two branch sets are adjacent exactly when
/// their pattern vertices are; in plain mode pattern edges only need some
/// host edge between the sets.
struct MinorModel {
  Graph pattern;
  std::vector<VertexSet> branch_sets;
  bool induced = true;

  std::size_t size() const { return branch_sets.size(); }
  /// Union of all branch sets, sorted.
  VertexSet support() const;
};

/// Empty string when valid, else the first violation found.
std::string validate_model(const Graph& host, const MinorModel& m);

/// Each vertex of g as its own branch set.
MinorModel identity_model(const Graph& g);

/// Given a model of A in B and a model of B in C, the model of A in C.
/// Branch sets are unions of the inner model's sets; the result is induced
/// only when both inputs are.
MinorModel compose_models(const MinorModel& outer, const MinorModel& inner);

/// Checks that every branch set induces a path, a tripod (subdivided claw) or
/// the line graph of a tripod (a triangle with up to three pendant paths).
/// Returns an empty string when all sets fit, else the offending set.
std::string check_branch_trichotomy(const Graph& host, const MinorModel& m);

/// Shrinks branch sets while the model stays valid: single-vertex deletions
/// to a fixpoint, then, for every set of at most `exhaustive_cap` vertices,
/// a search over smaller connected subsets. Throws InputError on an invalid
/// input model.
MinorModel refine_to_minimal(const Graph& host, MinorModel m, int exhaustive_cap = 10);

enum class SearchStatus { found, absent, budget_exhausted };

const char* to_string(SearchStatus s);

struct InducedMinorSearch {
  SearchStatus status = SearchStatus::absent;
  std::optional<MinorModel> model;
  std::uint64_t nodes = 0;  // search nodes visited
};

struct InducedMinorOptions {
  bool induced = true;
  std::uint64_t budget = 50'000'000;  // search nodes
  std::size_t pattern_cap = 6;
  std::size_t host_cap = 18;
  /// Skip the search when exact treewidth shows the pattern cannot fit
  /// (tw(pattern) > tw(host) means no minor at all).
  bool treewidth_prune = false;
};

/// Exact search over assignments vertex -> {discarded, branch set 0..p-1},
/// hosts scanned in id order with "discarded" tried first, so the witness
/// is the least one in that order. Exceeding the caps throws InputError.
InducedMinorSearch find_induced_minor(const Graph& host, const Graph& pattern, const InducedMinorOptions& opt = {});

struct CliqueSubdivision {
  std::vector<Vertex> branch;             // s host vertices
  std::vector<std::vector<Vertex>> paths; // in complete_graph(s).edges() order, branch[u] .. branch[v]
};

struct CliqueSubdivisionSearch {
  SearchStatus status = SearchStatus::absent;
  std::optional<CliqueSubdivision> witness;
  std::uint64_t nodes = 0;
};

/// Exact search for a subdivision of K_s as a subgraph: branch vertices are
/// chosen in increasing order, then internally disjoint paths are found by
/// backtracking. Found paths are shortened greedily afterwards.
CliqueSubdivisionSearch find_clique_subdivision(const Graph& host, int s, std::uint64_t budget = 50'000'000);

/// Empty string when w is a K_s subdivision in host.
std::string check_clique_subdivision(const Graph& host, int s, const CliqueSubdivision& w);

/// Skeleton vertices (of a clique trim supergraph) pairwise joined by direct
/// paths of more than `length` edges, `s` of them, or nullopt. Exact maximum
/// clique search on the auxiliary "long path" graph.
std::optional<VertexSet> green_clique_ramsey(const TrimSupergraph& t, int length, int s);

nlohmann::json to_json(const MinorModel& m);
MinorModel minor_model_from_json(const nlohmann::json& j);

}  // namespace itw
