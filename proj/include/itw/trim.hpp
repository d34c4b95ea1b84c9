#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "itw/graph.hpp"
#include "json.hpp"

namespace itw {

enum class SkeletonKind { clique, biclique };

/// Spanning supergraph of a K_s or K_{s,s} subdivision, kept as the host plus
/// the subdivision it spans. For bicliques skeleton vertices [0,s) form side A
/// and [s,2s) side B.
struct TrimSupergraph {
  Graph host;
  SkeletonKind kind = SkeletonKind::clique;
  Graph skeleton;
  std::vector<Vertex> branch;              // skeleton vertex -> host vertex
  std::vector<std::vector<Vertex>> paths;  // skeleton edge index -> host path branch[u] .. branch[v]
  std::vector<Vertex> origin;              // host vertex -> id in the graph this was cut from

  /// Number of skeleton vertices per side (biclique) or in total (clique).
  int side() const;
  std::size_t vertex_count() const { return host.vertex_count(); }
  /// Shortest direct path, in edges.
  int min_path_length() const;
};

/// Builds the skeleton graph for a kind and size.
Graph skeleton_graph(SkeletonKind kind, int side);

/// Host edges that are not on any direct path.
std::vector<Edge> extra_edges(const TrimSupergraph& t);

struct ExtraEdgeTaxonomy {
  std::size_t subdivision_pairs = 0;  // subdivision vertices on distinct direct paths
  std::size_t branch_to_path = 0;     // branch vertex to a non-incident path's interior
  std::size_t branch_pairs = 0;       // two branch vertices without a direct path between them
};

struct TrimReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::size_t extra_edge_count = 0;
  ExtraEdgeTaxonomy taxonomy;
};

/// Checks every TrimSupergraph invariant: path shape and endpoints, internal
/// disjointness, that every host vertex is used exactly once, and trimness
/// (no host edge joins two non-consecutive vertices of one direct path,
/// endpoints included).
TrimReport validate_trim(const TrimSupergraph& t);

/// Sub-supergraph induced by the branch vertices of `keep` and the interiors
/// of the direct paths between them. For a biclique result, the first half of
/// `keep` becomes side A. Every requested skeleton pair must be an edge of the
/// input skeleton.
TrimSupergraph restrict_trim(const TrimSupergraph& t, std::span<const Vertex> keep, SkeletonKind kind);

/// Generator: a subdivision of K_s / K_{s,s} (paths of `length` edges, or
/// [length, length+max_extra] in at-least mode) plus `extra` extra edges drawn
/// uniformly without replacement among vertex pairs that keep every direct
/// path induced. Branch-branch pairs are never drawn. Throws Refusal when fewer
/// than `extra` legal pairs exist.
TrimSupergraph random_trim_supergraph(SkeletonKind kind, int side, int length, std::size_t extra,
                                      std::uint64_t seed, int max_extra = 0);

/// Number of legal extra-edge pairs available in t (see random_trim_supergraph).
std::size_t legal_extra_pair_count(const TrimSupergraph& t);

const char* to_string(SkeletonKind k);
SkeletonKind parse_skeleton_kind(const std::string& name);

/// {"kind", "side", "host": graph, "branch": [...], "paths": [[...],...]}.
/// Paths follow skeleton edge order; origin is not stored.
nlohmann::json to_json(const TrimSupergraph& t);
/// Parses and runs validate_trim; throws InputError on any violation.
TrimSupergraph trim_from_json(const nlohmann::json& j);

}  // namespace itw
