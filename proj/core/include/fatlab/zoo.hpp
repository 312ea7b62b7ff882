#ifndef FATLAB_ZOO_HPP
#define FATLAB_ZOO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatlab/complexes.hpp"
#include "fatlab/exact.hpp"

namespace fatlab {

/// Exact vertex coordinates of a polytope together with the sphere its
/// edges are supposed to touch. Coordinates live in Q or Q(sqrt(5));
/// the simplex uses the symmetric 5-coordinate model inside the
/// hyperplane sum(x) = 1, flagged by subspace_normal.
struct VertexModel {
  bool rational_only{true};
  int ambient{4};
  std::vector<std::vector<QuadNum>> vertices;
  std::vector<QuadNum> center;
  std::optional<std::vector<QuadNum>> subspace_normal;
  QuadNum r2;  // squared radius of the declared tangent sphere
};

enum class FacetShape { Tet, Icosa, Other };

/// Supporting hyperplane x . normal <= offset, equality exactly on the
/// facet. Entries follow the top cells of the lattice in id order.
struct FacetPlane {
  long cell{-1};
  std::vector<QuadNum> normal;
  QuadNum offset;
  FacetShape shape{FacetShape::Other};
};

struct PolytopeLattice {
  CellComplex cx;
  std::vector<FacetPlane> facets;

  const FacetPlane& facet_of_cell(long cell_id) const;
};

struct Build {
  VertexModel model;
  PolytopeLattice lattice;
};

/// Regular 4-simplex: vertices e_1..e_5, center at their mean, edges
/// tangent to the sphere of squared radius 3/10 about it.
Build build_simplex4();

/// Cross polytope: vertices +-e_i, 16 tetrahedral facets indexed by sign
/// vectors, squared tangency radius 1/2.
Build build_cross4();

/// The 600-cell carries extra structure the compound machinery leans on.
struct Cell600 {
  VertexModel model;  // 120 unit quaternions over Q(sqrt(5))
  PolytopeLattice lattice;
  std::vector<std::vector<long>> neighbors;        // sorted, 12 per vertex
  std::map<std::vector<long>, long> cell_by_verts; // sorted vertex tuple -> cell id
  bool adjacent(long i, long j) const;
};

/// Built once and cached; vertices ordered: 8 axis units, 16 half-integer
/// points, 96 even permutations of (phi, 1, 1/phi, 0)/2 with signs.
/// The first 24 form the binary tetrahedral subgroup.
const Cell600& cell600();

/// Convex hull of the 600-cell minus pairwise non-adjacent vertices:
/// each cut swaps the vertex's 20 tetrahedra for one icosahedral facet
/// on its link. Throws std::invalid_argument if cuts touch or repeat.
struct CutResult {
  VertexModel model;
  PolytopeLattice lattice;
  std::vector<long> cuts;         // sorted 600-cell vertex ids that were cut
  std::vector<long> orig_vertex;  // new vertex id -> 600-cell vertex id
  std::vector<long> new_vertex;   // 600-cell vertex id -> new id, -1 if cut
  std::vector<long> icosa_cells;  // lattice cell id of the cap, per cut
};
CutResult cut_600cell(const std::vector<long>& vertices_to_cut);

/// Snub 24-cell: the 600-cell cut at the binary tetrahedral subgroup;
/// 24 icosahedra plus 120 surviving tetrahedra.
CutResult build_snub24();

struct TangencyResult {
  bool ok{false};
  QuadNum r2;          // common squared edge distance when ok
  std::string reason;  // empty when ok
};

/// True iff the nearest point of every edge to the center lies strictly
/// inside the edge at the same squared distance, and every vertex is
/// strictly outside that sphere. Reports the common squared radius.
TangencyResult check_edge_tangent(const VertexModel& m, const PolytopeLattice& l);

/// Confirms every facet's hyperplane supports the polytope: x.u <= c for
/// all vertices with equality exactly on the facet.
bool verify_facet_planes(const VertexModel& m, const PolytopeLattice& l);

struct DihedralCos2 {
  QuadNum cos2;  // cos^2 of the hyperbolic dihedral angle at the ridge
  int cos_sign;  // sign of cos itself
};

/// Hyperbolic dihedral angle at a ridge of an edge-tangent polytope,
/// computed from the two facet hyperplanes in the Minkowski model of the
/// ball of squared radius r2 about the model center. Throws
/// std::domain_error if a hyperplane misses the ball,
/// std::invalid_argument if the ridge is not in exactly two facets.
DihedralCos2 hyperbolic_dihedral_cos2(const VertexModel& m, const PolytopeLattice& l,
                                      long ridge_id);

/// Sidecar JSON with the exact coordinates: rationals as "p/q" strings,
/// quadratic values as {"a","b","d"} objects.
std::string model_coords_to_json(const VertexModel& m, int indent = 2);

}  // namespace fatlab

#endif
