#ifndef FATLAB_FVECTOR_FAMILIES_HPP
#define FATLAB_FVECTOR_FAMILIES_HPP

#include <array>
#include <string>
#include <vector>

#include "fatlab/exact.hpp"

namespace fatlab {

/// Face-count vector; length 4 for 3-spheres and 4-polytopes, length 3
/// for surfaces. Entries are arbitrary-precision (cubical families scale
/// by 2^(n-2)).
using FVector = std::vector<Int>;

/// (f1+f2)/(f0+f3) for a length-4 vector.
Rational fatness3(const FVector& f);

/// f1/(f0+f2) for a length-3 vector.
Rational fatness_surface(const FVector& f);

/// 2 f1 / f0: twice edges per vertex; for an edge-tangent simplicial
/// sphere this is the average kissing number of the induced packing.
Rational kissing_average(const FVector& f);

/// 8 + 4*sqrt(3), the upper bound the kissing averages are held against.
QuadNum kissing_bound();

/// Length-3 vector is the f-vector of some 3-polytope: Euler equation
/// f1 = f0 + f2 - 2 plus both facet/vertex count bounds.
bool steinitz_check(const FVector& f);

/// Dehn-Sommerville conditions of a simple 4-polytope: f1 = 2 f0 and
/// f2 = f1 + f3 - f0.
bool simple_ds_check(const FVector& f);

/// Dehn-Sommerville conditions of a simplicial 4-polytope: f2 = 2 f3
/// plus the Euler relation.
bool simplicial_ds_check(const FVector& f);

struct EResult {
  FVector f;         // (f0, f1, f2, f3) of the E-sphere
  Rational fatness;  // its fatness, exact
};

/// E-sphere counts from a simple input: (f2, 6f0, 6f0, f2), fatness
/// 6 f0 / f2. Throws std::invalid_argument unless simple_ds_check holds.
EResult e_fvector_from_simple(const FVector& fP);

/// Same sphere computed from the simplicial side: (f1, 6f3, 6f3, f1),
/// fatness 6(1 - f0/f1). Agrees with e_fvector_from_simple on the
/// reversed vector; both routes are kept separate on purpose.
EResult e_fvector_from_simplicial(const FVector& fQ);

/// Affine form a*n + b with exact integer coefficients.
struct AffineForm {
  Int a{0};
  Int b{0};
  Int eval(const Int& n) const { return a * n + b; }
};

/// A one-parameter family of 3-sphere f-vectors.
struct FVectorFamily {
  std::string name;
  std::array<AffineForm, 4> forms;

  FVector eval(const Int& n) const;
  /// Alternating sums of both coefficient rows vanish, so Euler holds
  /// identically in n.
  bool euler_identically_zero() const;
  /// Limit of fatness as n grows: ratio of leading coefficients.
  Rational fatness_limit() const;
  /// Limit of 2 f1 / f0.
  Rational kissing_limit() const;
};

FVectorFamily family_cross_chain_base();    // (4n+4, 18n+6, 28n+4, 14n+2)
FVectorFamily family_cross_chain_filled();  // (12n-4, 54n-30, 84n-52, 42n-26)
FVectorFamily family_cross_chain_e();       // (54n-30, 252n-156, 252n-156, 54n-30)
FVectorFamily family_cut600_q();            // (106n+14, 666n+54, 1120n+80, 560n+40)
FVectorFamily family_cut600_e();            // (666n+54, 3360n+240, 3360n+240, 666n+54)

struct NeighborlyCubicalResult {
  FVector f;  // (4, 2n, 3n-6, n-2) * 2^(n-2)
  Rational fatness;  // (5n-6)/(n+2)
};
/// Requires n >= 4.
NeighborlyCubicalResult neighborly_cubical_fvector(long n);

struct CrossChainResult {
  FVector base;    // chain of n cross polytopes glued facet to facet
  FVector filled;  // with the 4(n-1) concavities caulked by simplex triples
  FVector e;       // E-sphere of the filled chain
  Rational fatness_e;
};
/// Requires n >= 1; n = 1 degenerates to a single cross polytope.
CrossChainResult cross_chain_fvectors(long n);

struct Cut600ChainResult {
  FVector q;  // chain of n cut 600-cells, end caps uncut
  FVector e;  // E-sphere counts
  Rational fatness_e;
  Rational kissing;  // 2 f1(Q) / f0(Q)
};
/// Requires n >= 1; n = 1 is the plain 600-cell.
Cut600ChainResult cut600_chain_fvectors(long n);

struct CoronaResult {
  FVector f;  // simplicial sphere built from `atoms` 600-cells with
              // `bonds` icosahedral contacts and `rings` triangle links
  Rational fatness_e;  // fatness of its E-sphere, 6 f3 / f1
  Rational kissing;
};
/// Each bond replaces two cut-out vertex stars (13 vertices, 20 interior
/// facets each) by a 12-vertex icosahedral interface; each ring
/// contributes 3 shared link vertices back. Throws std::invalid_argument
/// if any count goes non-positive.
CoronaResult corona_fvector(long atoms, long bonds, long rings);

}  // namespace fatlab

#endif
