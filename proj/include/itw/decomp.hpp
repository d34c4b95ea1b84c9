#pragma once

#include <string>
#include <vector>

#include "itw/graph.hpp"
#include "itw/minor.hpp"
#include "itw/width.hpp"
#include "json.hpp"

namespace itw {

/// Vertex i of `graph` is bag[i].
struct Torso {
  Graph graph;
  VertexSet bag;
};

/// G[β(x)] with every adhesion of x made a clique. Throws InputError on an
/// invalid decomposition or node.
Torso build_torso(const Graph& g, const TreeDecomposition& td, int x);

/// G with each component of G - β(x) contracted and one contracted vertex
/// kept per false-twin class. Vertices [0, |bag|) are the bag in order, the
/// rest form the independent set I.
struct GxResult {
  int node = 0;
  Graph graph;
  VertexSet bag;
  std::vector<VertexSet> attachment;            // per I-vertex: its neighbours, g ids
  std::vector<std::vector<VertexSet>> classes;  // per I-vertex: the components contracted into it; [0] is kept

  std::size_t bag_size() const { return bag.size(); }
  std::size_t independent_size() const { return attachment.size(); }
  bool in_independent(Vertex v) const { return v >= static_cast<Vertex>(bag.size()); }
  /// G_x vertex of a bag vertex given in g ids, or kNoVertex.
  Vertex local(Vertex g_vertex) const;
};

GxResult build_gx(const Graph& g, const TreeDecomposition& td, int x);

/// Induced minor model of result.graph in g: bag vertices as singletons, each
/// I-vertex as its kept component.
MinorModel gx_model(const GxResult& result);

/// Empty string when `result` is exactly G_x of g at its node: checks the bag
/// part, that the classes are the components of G - β(x) grouped by
/// neighbourhood, the independent set, and the induced minor model.
std::string validate_gx(const Graph& g, const TreeDecomposition& td, const GxResult& result);

struct DegreeTransferReport {
  int h = 0;
  int bound = 0;               // h + 2^{h+1}
  int adhesion = 0;            // of the decomposition
  std::vector<Vertex> heavy;   // bag vertices with torso degree > h, g ids
  bool adhesion_ok = false;    // adhesion <= h
  bool heavy_ok = false;       // |heavy| <= h
  int max_light_degree = 0;    // over G_x minus heavy
  int max_independent_degree = 0;
  int slack = 0;               // bound - max_light_degree
  std::vector<std::string> violations;  // degree bounds that fail
  bool preconditions() const { return adhesion_ok && heavy_ok; }
};

/// Degrees in G_x against the torso: every I-vertex has degree <= h and every
/// G_x vertex that is not torso-heavy has degree <= h + 2^{h+1}. Unmet
/// preconditions are reported, and the bounds are checked regardless.
DegreeTransferReport check_gx_degree_transfer(const Graph& g, const TreeDecomposition& td, int x, int h);

/// K_{h+1} minor model in G_x (ids of result.graph) to a K_h model in the
/// torso (ids of the torso, equal to the bag part of G_x): drops a set that is
/// a single I-vertex (else the last set) and removes I from the others.
MinorModel project_minor_model_to_torso(const GxResult& result, const MinorModel& model);

struct ProjectedBramble {
  int node = 0;
  GxResult gx;
  Bramble projected;      // in ids of gx.graph, parallel to the input sets
  HittingSet input_order;
  HittingSet projected_order;
};

/// Picks the least node whose bag meets every bramble set and carries the
/// bramble into G_x there (bag part kept, outside parts replaced by the kept
/// representative of their component's class). Requires adhesion <= h and a
/// certified input order >= h·p+1 (Refusal otherwise); the projected order is
/// certified >= p+1 by exact hitting set.
ProjectedBramble project_bramble(const Graph& g, const TreeDecomposition& td, const Bramble& b, int h, int p);

/// Hitting set of the projected bramble (G_x ids) to one of the input bramble
/// (g ids): bag vertices kept, I-vertices replaced by their neighbours.
/// Throws InputError when z misses a projected set.
VertexSet lift_hitting_set(const ProjectedBramble& pb, const Bramble& original, const VertexSet& z);

nlohmann::json to_json(const Torso& t);
nlohmann::json to_json(const GxResult& r);
GxResult gx_from_json(const nlohmann::json& j);

}  // namespace itw
