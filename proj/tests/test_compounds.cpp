#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fatlab/compounds.hpp"
#include "fatlab/fvector_families.hpp"
#include "fatlab/jewels.hpp"

using namespace fatlab;

namespace {

AnglePi api(long num, long den = 1) { return AnglePi(Rational(num, den)); }

int mask_of(std::initializer_list<int> dirs) {
  int m = 0;
  for (int d : dirs) m |= 1 << d;
  return m;
}

std::vector<long long> to_ll(const FVector& f) {
  std::vector<long long> out;
  for (const Int& x : f) out.push_back(static_cast<long long>(x));
  return out;
}

AtomInstance simp_atom(std::vector<long> verts) { return {&atom_simplex4(), std::move(verts)}; }

// The directions of the polygons that keep coming up. Canonical masks are
// computed by the library, so these spellings double as fixed points.
const int kTriangleMask = canonical_direction_mask(mask_of({0, 4, 8}));
const int kRhombMask = canonical_direction_mask(mask_of({0, 2, 6, 8}));
const int kHexMask = canonical_direction_mask(mask_of({0, 2, 4, 6, 8, 10}));
const int kSquareMask = canonical_direction_mask(mask_of({0, 3, 6, 9}));
const int kOctagonMask = canonical_direction_mask(mask_of({0, 1, 3, 5, 6, 7, 9, 11}));
const int kDodecagonMask = canonical_direction_mask(0xfff);

}  // namespace

TEST_CASE("canonical direction masks are rotation and reflection invariants") {
  std::mt19937 rng(411);
  for (int trial = 0; trial < 200; ++trial) {
    int mask = static_cast<int>(rng() & 0xfffu);
    if (mask == 0) continue;
    int can = canonical_direction_mask(mask);
    int rot = ((mask << 1) | (mask >> 11)) & 0xfff;
    CHECK(canonical_direction_mask(rot) == can);
    int refl = 0;
    for (int d = 0; d < 12; ++d)
      if (mask >> d & 1) refl |= 1 << ((12 - d) % 12);
    CHECK(canonical_direction_mask(refl) == can);
    CHECK(canonical_direction_mask(can) == can);
  }
  CHECK(kTriangleMask == mask_of({0, 4, 8}));
  CHECK(kHexMask == mask_of({0, 2, 4, 6, 8, 10}));
  CHECK(kDodecagonMask == 0xfff);
}

TEST_CASE("polygon_of_directions walks convex unit polygons") {
  auto tri = polygon_of_directions(kTriangleMask);
  REQUIRE(tri.size() == 3);
  CHECK(tri[0] == PlanePoint{});  // starts at the origin
  auto sq = polygon_of_directions(kSquareMask);
  CHECK(sq.size() == 4);
  CHECK_THROWS_AS(polygon_of_directions(mask_of({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("triangle jewels: triangle, rhomb, hexagon and nothing else") {
  JewelCatalog cat = enumerate_triangle_jewels();
  REQUIRE(cat.jewels.size() == 3);
  CHECK(cat.max_forced_tiles == 6);

  std::map<int, const Jewel*> by_mask;
  for (const Jewel& j : cat.jewels) by_mask[j.directions] = &j;
  REQUIRE(by_mask.count(kTriangleMask) == 1);
  REQUIRE(by_mask.count(kRhombMask) == 1);
  REQUIRE(by_mask.count(kHexMask) == 1);

  std::multiset<int> tiles;
  for (const Jewel& j : cat.jewels) {
    CHECK(j.forced_squares == 0);
    CHECK(j.sides == static_cast<int>(j.corners.size()));
    REQUIRE(!j.tilings.all.empty());
    for (const auto& t : j.tilings.all) {
      CHECK(static_cast<int>(t.size()) == j.forced_triangles);
      for (const auto& tile : t) CHECK(!tile.square);
    }
    CHECK(!j.tilings.square_pair_forced);
    tiles.insert(j.forced_triangles);
  }
  CHECK(tiles == std::multiset<int>{1, 2, 6});

  const Jewel& tri = *by_mask[kTriangleMask];
  CHECK(tri.sides == 3);
  CHECK(tri.corners == std::vector<AnglePi>(3, api(1, 3)));
  CHECK(tri.tilings.all.size() == 1);

  const Jewel& rhomb = *by_mask[kRhombMask];
  CHECK(rhomb.sides == 4);
  CHECK(rhomb.forced_triangles == 2);

  // the hexagon tiles only as six triangles about one interior point
  const Jewel& hex = *by_mask[kHexMask];
  CHECK(hex.sides == 6);
  CHECK(hex.corners == std::vector<AnglePi>(6, api(2, 3)));
  REQUIRE(hex.tilings.all.size() == 1);
  const auto& fan = hex.tilings.all[0];
  std::map<PlanePoint, int> touch;
  for (const auto& tile : fan)
    for (const auto& p : tile.corners) ++touch[p];
  int central = 0;
  for (const auto& [p, cnt] : touch)
    if (cnt == 6) ++central;
  CHECK(central == 1);
}

TEST_CASE("square-triangle jewels: the eleven shapes") {
  JewelCatalog cat = enumerate_square_triangle_jewels();
  REQUIRE(cat.jewels.size() == 11);
  CHECK(cat.max_forced_tiles == 18);

  std::map<int, const Jewel*> by_mask;
  for (const Jewel& j : cat.jewels) {
    by_mask[j.directions] = &j;
    REQUIRE(!j.tilings.all.empty());
    for (const auto& t : j.tilings.all) {
      int sq = 0, tr = 0;
      for (const auto& tile : t) (tile.square ? sq : tr)++;
      CHECK(sq == j.forced_squares);
      CHECK(tr == j.forced_triangles);
    }
  }

  // restricting to zero squares recovers the triangle catalog exactly
  JewelCatalog tri = enumerate_triangle_jewels();
  std::set<int> tri_masks, no_square_masks;
  for (const Jewel& j : tri.jewels) tri_masks.insert(j.directions);
  for (const Jewel& j : cat.jewels)
    if (j.forced_squares == 0) no_square_masks.insert(j.directions);
  CHECK(no_square_masks == tri_masks);

  REQUIRE(by_mask.count(kSquareMask) == 1);
  CHECK(by_mask[kSquareMask]->forced_squares == 1);
  CHECK(by_mask[kSquareMask]->forced_triangles == 0);
  REQUIRE(by_mask.count(kTriangleMask) == 1);

  REQUIRE(by_mask.count(kDodecagonMask) == 1);
  CHECK(by_mask[kDodecagonMask]->forced_squares == 6);
  CHECK(by_mask[kDodecagonMask]->forced_triangles == 12);

  // exactly one jewel cannot avoid two squares sharing a side
  std::vector<const Jewel*> flagged;
  for (const Jewel& j : cat.jewels)
    if (j.tilings.square_pair_forced) flagged.push_back(&j);
  REQUIRE(flagged.size() == 1);
  CHECK(flagged[0]->directions == kOctagonMask);
  CHECK(flagged[0]->sides == 8);
  CHECK(flagged[0]->forced_squares == 2);
  CHECK(flagged[0]->forced_triangles == 6);
}

TEST_CASE("edge bouquets realize the unflagged jewels as convex compounds") {
  JewelCatalog cat = enumerate_square_triangle_jewels();
  for (const Jewel& j : cat.jewels) {
    bool some_convex = false;
    bool all_flat_somewhere = true;
    for (const auto& tiling : j.tilings.all) {
      Compound c = build_edge_bouquet(tiling);
      ConvexReport rep = check_convex(c);
      if (rep.convex) some_convex = true;
      bool flat = false;
      for (const auto& r : rep.ridges)
        if (r.verdict == RidgeVerdict::Flat) flat = true;
      if (!flat) all_flat_somewhere = false;

      EdgeLink link = edge_link(c, {0, 1});
      CHECK(link.tile_count == static_cast<int>(tiling.size()));
      CHECK(link.jewel_mask == j.directions);
    }
    if (j.tilings.square_pair_forced) {
      CHECK(!some_convex);
      CHECK(all_flat_somewhere);  // adjacent squares glue two crosses flat
    } else {
      CHECK(some_convex);
    }
  }
}

TEST_CASE("check_convex judges the small handmade compounds") {
  SUBCASE("one simplex") {
    Compound c = make_compound({simp_atom({0, 1, 2, 3, 4})});
    CHECK(compound_fvector(c) == std::vector<long long>{5, 10, 10, 5});
    ConvexReport rep = check_convex(c);
    CHECK(rep.convex);
    CHECK(rep.ridges.size() == 10);
    for (const auto& r : rep.ridges) {
      CHECK(!r.interior);
      CHECK(r.total == api(1, 3));
      CHECK(r.verdict == RidgeVerdict::StrictlyConvex);
    }
  }

  SUBCASE("bipyramid: two simplices over a shared facet") {
    Compound c = make_compound({simp_atom({0, 1, 2, 3, 4}), simp_atom({0, 1, 2, 3, 5})});
    CHECK(compound_fvector(c) == std::vector<long long>{6, 14, 16, 8});
    ConvexReport rep = check_convex(c);
    CHECK(rep.convex);
    int doubled = 0;
    for (const auto& r : rep.ridges) {
      CHECK(r.verdict == RidgeVerdict::StrictlyConvex);
      if (r.total == api(2, 3)) ++doubled;
    }
    CHECK(doubled == 4);  // the four ridges of the glued facet
  }

  SUBCASE("two cross blocks meet flat") {
    Compound c = build_cross_chain(2, false);
    ConvexReport rep = check_convex(c);
    CHECK(!rep.convex);
    int flats = 0;
    for (const auto& r : rep.ridges)
      if (r.verdict == RidgeVerdict::Flat) {
        CHECK(r.total == api(1));
        ++flats;
      }
    CHECK(flats == 4);
  }

  SUBCASE("simplices on adjacent cross facets bend backwards") {
    std::vector<long> cross_gv(8);
    std::iota(cross_gv.begin(), cross_gv.end(), 0);
    Compound c = make_compound({{&atom_cross4(), cross_gv},
                                simp_atom({0, 2, 4, 6, 8}),
                                simp_atom({1, 2, 4, 6, 9})});
    ConvexReport rep = check_convex(c);
    CHECK(!rep.convex);
    bool reflex = false;
    for (const auto& r : rep.ridges)
      if (r.verts == std::vector<long>{2, 4, 6}) {
        CHECK(r.total == api(7, 6));
        CHECK(r.verdict == RidgeVerdict::Reflex);
        reflex = true;
      }
    CHECK(reflex);
  }
}

TEST_CASE("make_compound rejects malformed gluings") {
  CHECK_THROWS_AS(make_compound({}), std::invalid_argument);
  CHECK_THROWS_AS(make_compound({simp_atom({0, 1, 2, 3, 4}), simp_atom({0, 1, 2, 3, 4})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_compound({simp_atom({0, 1, 2, 3, 4}), simp_atom({5, 6, 7, 8, 9})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_compound({simp_atom({0, 1, 2, 3, 4}), simp_atom({0, 1, 2, 3, 3})}),
                  std::invalid_argument);
  // three around one facet
  CHECK_THROWS_AS(make_compound({simp_atom({0, 1, 2, 3, 4}), simp_atom({0, 1, 2, 3, 5}),
                                 simp_atom({0, 1, 2, 3, 6})}),
                  std::invalid_argument);
  // shared ridge with no facet gluing: broken fan
  CHECK_THROWS_AS(make_compound({simp_atom({0, 1, 2, 3, 4}), simp_atom({0, 1, 2, 5, 6})}),
                  std::invalid_argument);
}

TEST_CASE("convex compounds have closed sphere-like boundaries") {
  // spot-check the euler and ridge conditions directly on one compound
  Compound c = make_compound({simp_atom({0, 1, 2, 3, 4}), simp_atom({0, 1, 2, 3, 5})});
  auto f = compound_fvector(c);
  CHECK(f[0] - f[1] + f[2] - f[3] == 0);
  std::map<std::vector<long>, int> ridge_in;
  for (const auto& [key, slots] : c.facet_slots) {
    if (slots.size() != 1) continue;
    const auto& a = c.atoms[static_cast<size_t>(slots[0].atom)];
    const auto& cx = a.type->lattice.cx;
    for (long x : cx.closure(slots[0].cell))
      if (cx.dim_of(x) == 2) {
        std::vector<long> k2;
        for (long lv : cx.vertex_set(x)) k2.push_back(a.gv[static_cast<size_t>(lv)]);
        std::sort(k2.begin(), k2.end());
        ridge_in[k2] += 1;
      }
  }
  for (const auto& [k2, cnt] : ridge_in) CHECK(cnt == 2);
}

TEST_CASE("classification of convex simplex compounds") {
  auto found = classify_simplex_compounds();
  REQUIRE(found.size() == 3);
  CHECK(found[0].atoms.size() == 1);
  CHECK(found[0].fvector == std::vector<long long>{5, 10, 10, 5});
  CHECK(found[1].atoms.size() == 2);
  CHECK(found[1].fvector == std::vector<long long>{6, 14, 16, 8});
  CHECK(found[2].atoms.size() == 6);
  CHECK(found[2].fvector == std::vector<long long>{9, 27, 36, 18});

  // the six-atom compound is the hexagonal ring about a shared triangle
  std::vector<std::vector<long>> ring;
  for (long i = 0; i < 6; ++i) ring.push_back({0, 1, 2, 3 + i, 3 + (i + 1) % 6});
  CHECK(found[2].atoms == canonical_atom_sets(ring));
}

TEST_CASE("canonical_atom_sets is stable under relabeling") {
  std::vector<std::vector<long>> ring;
  for (long i = 0; i < 6; ++i) ring.push_back({0, 1, 2, 3 + i, 3 + (i + 1) % 6});
  auto can = canonical_atom_sets(ring);

  std::mt19937 rng(1105);
  std::vector<long> perm(9);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 25; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<long>> relabeled;
    for (const auto& a : ring) {
      std::vector<long> m;
      for (long v : a) m.push_back(perm[static_cast<size_t>(v)]);
      relabeled.push_back(std::move(m));
    }
    std::shuffle(relabeled.begin(), relabeled.end(), rng);
    CHECK(canonical_atom_sets(relabeled) == can);
  }

  CHECK(canonical_atom_sets({{4, 9, 13, 2, 77}}) ==
        std::vector<std::vector<long>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("census of simplices glued onto the cross polytope") {
  CrossGluingCensus census = enumerate_cross_simplex_compounds();
  CHECK(census.counts == std::array<long, 9>{1, 1, 3, 3, 6, 3, 2, 1, 1});
  CHECK(census.total == 21);
  CHECK(census.burnside_total == 21);

  // raw counts decompose into the orbit sizes
  std::array<long, 9> size_sums{};
  for (const auto& o : census.orbits) size_sums[static_cast<size_t>(o.k)] += o.size;
  CHECK(size_sums == census.raw_counts);
  CHECK(census.raw_counts[0] == 1);
  CHECK(census.raw_counts[8] == 2);  // the two parity classes
  CHECK(static_cast<long>(census.orbits.size()) == census.total);

  // rotation orbits refine the full orbits without changing the census total
  long rot_sum = 0;
  for (long x : census.rotation_counts) rot_sum += x;
  CHECK(rot_sum == census.rotation_total);
  CHECK(census.rotation_total >= census.total);
  CHECK(census.rotation_total <= 2 * census.total);

  // every representative really is a convex compound
  for (const auto& o : census.orbits) {
    std::vector<AtomInstance> atoms;
    std::vector<long> cross_gv(8);
    std::iota(cross_gv.begin(), cross_gv.end(), 0);
    atoms.push_back({&atom_cross4(), cross_gv});
    long next = 8;
    for (int m = 0; m < 16; ++m) {
      if (!(o.mask >> m & 1u)) continue;
      std::vector<long> gv;
      for (int i = 0; i < 4; ++i) gv.push_back(2 * i + (m >> i & 1));
      gv.push_back(next++);
      atoms.push_back({&atom_simplex4(), std::move(gv)});
    }
    Compound c = make_compound(std::move(atoms));
    CHECK(check_convex(c).convex);
    CHECK(compound_fvector(c)[0] == 8 + o.k);
  }
}

TEST_CASE("cross chains match the family formulas") {
  for (int n = 1; n <= 5; ++n) {
    CrossChainResult expect = cross_chain_fvectors(n);
    Compound base = build_cross_chain(n, false);
    CHECK(compound_fvector(base) == to_ll(expect.base));
    Compound filled = build_cross_chain(n, true);
    CHECK(compound_fvector(filled) == to_ll(expect.filled));
    CHECK(check_convex(filled).convex);
    if (n > 1) CHECK(!check_convex(base).convex);
  }
}

TEST_CASE("the caulked junction edges carry the flagged jewel") {
  JewelCatalog cat = enumerate_square_triangle_jewels();
  int flagged_mask = -1;
  for (const Jewel& j : cat.jewels)
    if (j.tilings.square_pair_forced) flagged_mask = j.directions;
  REQUIRE(flagged_mask >= 0);

  Compound chain = build_cross_chain(2, true);
  int hits = 0;
  for (const auto& [key, slots] : chain.edge_slots) {
    EdgeLink link = edge_link(chain, key);
    if (link.jewel_mask == flagged_mask) {
      CHECK(link.tile_count == 8);
      CHECK(link.boundary_sides.size() == 8);
      ++hits;
    }
  }
  // one edge for each pair of shared facet vertices
  CHECK(hits == 6);
}

TEST_CASE("cut 600-cell chains match the family formulas") {
  for (int n = 1; n <= 3; ++n) {
    Cut600ChainResult expect = cut600_chain_fvectors(n);
    Compound chain = build_cut600_chain(n);
    CHECK(compound_fvector(chain) == to_ll(expect.q));
    CHECK(check_convex(chain).convex);
  }
}

TEST_CASE("the glued icosahedron of a 600-cell chain") {
  Compound chain = build_cut600_chain(2);

  // the unique glued facet is the icosahedral cap
  const std::vector<long>* cap = nullptr;
  for (const auto& [key, slots] : chain.facet_slots)
    if (slots.size() == 2) {
      REQUIRE(cap == nullptr);
      cap = &key;
    }
  REQUIRE(cap != nullptr);
  REQUIRE(cap->size() == 12);

  // ridge classes inside the cap sum to 4 pi / 5, strictly convex
  ConvexReport rep = check_convex(chain);
  std::set<long> capset(cap->begin(), cap->end());
  int cap_ridges = 0;
  for (const auto& r : rep.ridges) {
    bool inside = true;
    for (long v : r.verts)
      if (!capset.count(v)) inside = false;
    if (!inside) continue;
    CHECK(r.total == api(4, 5));
    CHECK(r.verdict == RidgeVerdict::StrictlyConvex);
    ++cap_ridges;
  }
  CHECK(cap_ridges == 20);

  // each cap edge sees a hexagonal link of two trapezoids
  const auto& a0 = chain.atoms[0];
  const auto& cx = a0.type->lattice.cx;
  long cap_cell = -1;
  for (const auto& s : chain.facet_slots.at(*cap))
    if (s.atom == 0) cap_cell = s.cell;
  REQUIRE(cap_cell >= 0);
  int checked = 0;
  for (long x : cx.closure(cap_cell)) {
    if (cx.dim_of(x) != 1) continue;
    std::vector<long> ekey;
    for (long lv : cx.vertex_set(x)) ekey.push_back(a0.gv[static_cast<size_t>(lv)]);
    std::sort(ekey.begin(), ekey.end());
    EdgeLink link = edge_link(chain, ekey);
    CHECK(link.tile_count == 2);
    REQUIRE(link.corner_sums.size() == 6);
    CHECK(link.jewel_mask == -1);
    // cyclically (3/5, 3/5, 4/5) twice
    bool matched = false;
    for (int s0 = 0; s0 < 6 && !matched; ++s0) {
      bool ok = true;
      for (int i = 0; i < 6; ++i) {
        AnglePi want = (i % 3 == 2) ? api(4, 5) : api(3, 5);
        if (link.corner_sums[static_cast<size_t>((s0 + i) % 6)] != want) ok = false;
      }
      matched = ok;
    }
    CHECK(matched);
    ++checked;
  }
  CHECK(checked == 30);
}

TEST_CASE("ten doubly cut 600-cells close up around a triangle") {
  CHECK(ring_of_ten_check());
}
