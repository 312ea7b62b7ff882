#ifndef FATLAB_JEWELS_HPP
#define FATLAB_JEWELS_HPP

#include <array>
#include <vector>

#include "fatlab/exact.hpp"

namespace fatlab {

/// Exact planar point with coordinates in Q(sqrt 3). All tile corners in
/// unit square/triangle tilings with edges at multiples of 30 degrees
/// live here.
struct PlanePoint {
  QuadNum x{Rational(0), Rational(0), 3};
  QuadNum y{Rational(0), Rational(0), 3};
};
bool operator==(const PlanePoint& p, const PlanePoint& q);
bool operator<(const PlanePoint& p, const PlanePoint& q);

/// Unit vector at angle 30*k degrees, k taken mod 12.
PlanePoint unit_direction(int k);

struct JewelTile {
  bool square{false};
  std::vector<PlanePoint> corners;  // counterclockwise, 3 or 4 of them
};

struct JewelTilings {
  std::vector<std::vector<JewelTile>> all;  // every tiling of the fixed embedding
  bool square_pair_forced{false};  // each tiling has two squares sharing a side
};

/// One strictly convex unit-edge polygon together with its tilings.
struct Jewel {
  int directions{0};             // canonical bitmask of the 12 edge directions
  int sides{0};
  std::vector<AnglePi> corners;  // interior angles in boundary order
  int forced_triangles{0};       // tile counts are determined by the area
  int forced_squares{0};
  JewelTilings tilings;
};

struct JewelCatalog {
  std::vector<Jewel> jewels;  // sorted by (sides, directions)
  int max_forced_tiles{0};    // over all zero-sum direction subsets, tiled or not
};

/// All strictly convex unit-edge polygons tiled by unit equilateral
/// triangles, up to congruence.
JewelCatalog enumerate_triangle_jewels(int threads = 1);

/// Same with unit squares allowed as well.
JewelCatalog enumerate_square_triangle_jewels(int threads = 1);

/// Minimum of the direction bitmask over the 12 rotations and their
/// reflections; equal masks mean congruent polygons.
int canonical_direction_mask(int mask);

/// Strictly convex boundary corners of the polygon spanned by a sorted
/// zero-sum direction subset, walked from the origin.
std::vector<PlanePoint> polygon_of_directions(int mask);

}  // namespace fatlab

#endif
