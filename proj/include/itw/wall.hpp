#pragma once

#include <string>
#include <vector>

#include "itw/constructions.hpp"
#include "itw/graph.hpp"
#include "itw/minor.hpp"
#include "itw/rational.hpp"
#include "json.hpp"

namespace itw {

/// Induced minor model of W_{⌊k/2⌋} in Γ_k. Wall vertex (x,y) sits at grid
/// column 2m-1-x, row 2y (m = ⌊k/2⌋); the end of every vertical wall edge
/// also takes the grid vertex just below it. Requires k >= 4.
MinorModel grid_to_wall_model(int k);

/// Induced minor model of Γ_k in W_k: grid vertex (c,r) is the horizontal
/// pair of wall vertices at columns 2c and 2c+1 of row r. Requires k >= 2.
MinorModel wall_to_grid_model(int k);

/// W_{⌊k/3⌋} with every edge replaced by a 3-edge path, sitting inside W_k as
/// an induced subgraph. `image` maps each vertex of `sub.graph` to W_k.
struct EmbeddedSubdivision {
  Subdivision sub;
  std::vector<Vertex> image;
};
EmbeddedSubdivision tripled_wall_in_wall(int k);

/// k such that g equals wall(k).graph, or 0.
int wall_index(const Graph& g);

enum class WitnessRole { branch, triangle_corner, path };
const char* to_string(WitnessRole r);

/// Induced quasi-subdivision of W_k inside a host, in host vertex ids.
struct WallQuasiSubdivisionWitness {
  int k = 0;
  QuasiSubdivision structure;  // skeleton is wall(k).graph
  VertexSet vertices;          // structure.vertex_set()
  std::vector<WitnessRole> roles;  // parallel to vertices

  WitnessRole role(Vertex v) const;  // throws InputError if v is not used
  std::size_t triangle_count() const;
};

/// Fills vertices and roles from the structure.
WallQuasiSubdivisionWitness make_wall_witness(int k, QuasiSubdivision structure);

/// Empty string when the witness is an induced quasi-subdivision of W_k in host.
std::string validate_wall_witness(const Graph& host, const WallQuasiSubdivisionWitness& w);

struct WallExtraction {
  WallQuasiSubdivisionWitness witness;  // of W_{⌊k/3⌋}
  MinorModel minimal;  // refined model of the tripled W_{⌊k/3⌋}
  VertexSet removed;   // path stretches cut out of three-neighbour branch sets
  int smoothed = 0;    // branch sets whose branching moved into a neighbour
};

/// Turns an induced minor model of W_k (k >= 6) into an induced
/// quasi-subdivision of W_{⌊k/3⌋}: pull back the tripled W_{⌊k/3⌋}, shrink
/// to a minimal model, keep tripods, triangles and paths with a single contact
/// to their third neighbour, and cut the stretch between the outermost
/// contacts otherwise. The witness is re-derived from the kept vertex set and
/// re-checked.
WallExtraction extract_wall_quasi_subdivision(const Graph& host, const MinorModel& model);

struct SparseWall {
  VertexSet vertices;
  MinorModel model;  // induced W_w model, host ids, support == vertices
  std::size_t edge_count = 0;
  int degree3 = 0;   // degree-3 vertices of W_w
  int spacing = 0;   // kept every spacing-th column
};

/// Keeps every other row and every (⌈4/ε⌉+1)-st column of the witness and
/// returns the host vertices of the induced quasi-subdivision of W_w so
/// obtained. Checks 2-connectivity, the W_w model and |E| <= (1+ε)|V|.
/// Throws Refusal when the witness wall is too small for the spacing.
SparseWall thin_to_sparse_wall(const Graph& host, const WallQuasiSubdivisionWitness& witness, int w, const Rational& eps);

nlohmann::json to_json(const WallQuasiSubdivisionWitness& w);
WallQuasiSubdivisionWitness wall_witness_from_json(const nlohmann::json& j);

}  // namespace itw
