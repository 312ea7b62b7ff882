#ifndef FATLAB_COMPOUNDS_HPP
#define FATLAB_COMPOUNDS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fatlab/exact.hpp"
#include "fatlab/jewels.hpp"
#include "fatlab/zoo.hpp"

namespace fatlab {

enum class AtomKind { Simplex4, Cross4, Cell600, Cut600 };

/// An edge-tangent building block: its face lattice plus the dihedral angle
/// the tangency geometry assigns to each ridge. Dihedrals are verified at
/// construction against the exact hyperbolic computation.
struct AtomType {
  std::string name;
  AtomKind kind{AtomKind::Simplex4};
  VertexModel model;
  PolytopeLattice lattice;
  long n_vertices{0};

  /// Dihedral angle at a ridge, as a rational multiple of pi.
  AnglePi dihedral(long ridge) const;

  /// Facets around an edge in cyclic order; corners[i] is the angle at the
  /// ridge ridges[i] between facets[i] and facets[(i+1) % m].
  struct EdgeFigure {
    std::vector<long> facets;
    std::vector<long> ridges;
    std::vector<AnglePi> corners;
  };
  const EdgeFigure& edge_figure(long edge) const;

  std::vector<EdgeFigure> figures;  // indexed by edge - first_edge
  long first_edge{0};

  // populated for cut 600-cells only
  std::vector<long> cuts;      // original vertex ids that were cut, sorted
  std::vector<long> cut_orig;  // local vertex -> original 600-cell vertex
  std::vector<long> cut_new;   // original vertex -> local vertex, -1 if cut
  std::vector<long> cap_cells; // icosahedral cap facet per cut
};

const AtomType& atom_simplex4();
const AtomType& atom_cross4();
const AtomType& atom_cell600();
/// 600-cells with the given vertices cut, cached per cut set.
const AtomType& atom_cut600(const std::vector<long>& cuts);

struct AtomInstance {
  const AtomType* type{nullptr};
  std::vector<long> gv;  // local vertex id -> global vertex id
};

struct CompoundSlot {
  int atom{0};
  long cell{0};
};
bool operator==(const CompoundSlot& a, const CompoundSlot& b);

/// Atoms glued facet-to-facet wherever two facets span the same global
/// vertex set. Construction validates the gluings: at most two facets per
/// vertex set, matching face structure on glued pairs, consistent fans
/// around every ridge and edge class, and a closed boundary complex.
struct Compound {
  std::vector<AtomInstance> atoms;
  long n_vertices{0};
  std::map<std::vector<long>, std::vector<CompoundSlot>> facet_slots;
  std::map<std::vector<long>, std::vector<CompoundSlot>> ridge_slots;
  std::map<std::vector<long>, std::vector<CompoundSlot>> edge_slots;
};

Compound make_compound(std::vector<AtomInstance> atoms);

/// f-vector of the boundary complex (unglued facets and their faces).
std::vector<long long> compound_fvector(const Compound& c);

enum class RidgeVerdict { StrictlyConvex, Flat, Reflex, InteriorOk, InteriorDeficient };

struct RidgeReport {
  std::vector<long> verts;
  bool interior{false};
  AnglePi total;
  RidgeVerdict verdict{RidgeVerdict::StrictlyConvex};
};

struct ConvexReport {
  bool convex{false};
  std::vector<RidgeReport> ridges;  // one per ridge class, in vertex-set order
};

/// Classifies every ridge class by its exact angle sum: boundary ridges as
/// strictly convex (< pi), flat, or reflex; interior ones by whether the
/// fan closes up to exactly 2 pi.
ConvexReport check_convex(const Compound& c);

/// Link of one edge class: the atoms' edge figures glued side-to-side into
/// a disk, walked along its boundary.
struct EdgeLink {
  std::array<long, 2> verts{};
  int tile_count{0};
  std::vector<CompoundSlot> boundary_sides;  // unglued facet slots in cyclic order
  std::vector<AnglePi> corner_sums;          // corner_sums[i] follows boundary_sides[i]
  std::vector<std::vector<long>> interior_ridges;
  /// Canonical direction mask of the unfolded link polygon when every tile
  /// is a unit triangle or unit square; -1 when unfolding does not apply.
  int jewel_mask{-1};
};

EdgeLink edge_link(const Compound& c, const std::vector<long>& edge);

/// n cross polytopes glued end-to-end; with caulked set, the four flat
/// junction ridges are each filled by a chain of three simplices.
Compound build_cross_chain(int n, bool caulked = true);

/// Chain of n 600-cells glued over the icosahedra exposed by vertex cuts.
Compound build_cut600_chain(int n);

/// n doubly cut 600-cells glued cap-to-cap around a shared link triangle.
Compound build_cut600_ring(int n_atoms = 10);

/// Confirms the ring of ten closes up: shared triangle interior with angle
/// sum exactly 2 pi, per-atom corner pi/5, decagonal edge links, convex
/// compound; and that nine atoms instead leave the fan deficient.
bool ring_of_ten_check();

/// Edge compound realizing a jewel tiling: one atom per tile, one shared
/// global edge.
Compound build_edge_bouquet(const std::vector<JewelTile>& tiling);

struct SimplexCompound {
  std::vector<std::vector<long>> atoms;  // canonical sorted vertex 5-sets
  std::vector<long long> fvector;
};

/// Exhaustive search over convex facet-glued compounds of 4-simplices with
/// edge links pruned against the triangle-jewel catalog.
std::vector<SimplexCompound> classify_simplex_compounds();

/// Canonical relabeling of a set of simplex atoms given as vertex 5-sets.
std::vector<std::vector<long>> canonical_atom_sets(std::vector<std::vector<long>> atoms);

struct CrossGluingOrbit {
  int k{0};
  unsigned mask{0};  // representative facet set; facet = sign pattern bits
  long size{0};      // orbit size under the full symmetry group
};

struct CrossGluingCensus {
  std::array<long, 9> counts{};           // orbits per k, full group of order 384
  std::array<long, 9> raw_counts{};       // independent facet sets per k
  std::array<long, 9> rotation_counts{};  // orbits per k, rotation subgroup of order 192
  long total{0};
  long rotation_total{0};
  long burnside_total{0};  // fixed-set average over the full group
  std::vector<CrossGluingOrbit> orbits;
};

/// Ways to glue k simplices onto pairwise nonadjacent facets of the cross
/// polytope: independent sets in the 4-cube graph up to symmetry.
CrossGluingCensus enumerate_cross_simplex_compounds();

}  // namespace fatlab

#endif
