#include "acceptance.hpp"

#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "fatlab/complexes.hpp"
#include "fatlab/compounds.hpp"
#include "fatlab/covers.hpp"
#include "fatlab/fvector_families.hpp"
#include "fatlab/jewels.hpp"
#include "fatlab/rng.hpp"
#include "fatlab/zoo.hpp"

namespace fatlab {
namespace {

struct Checker {
  CriterionResult* r;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      r->pass = false;
      r->notes.push_back("FAIL: " + what);
    }
  }
  void note(const std::string& what) { r->notes.push_back("note: " + what); }
};

template <typename F>
CriterionResult timed(int id, const std::string& desc, double limit_seconds, F body) {
  CriterionResult r;
  r.id = id;
  r.desc = desc;
  Checker c{&r};
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    r.pass = false;
    r.notes.push_back(std::string("FAIL: exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && r.seconds > limit_seconds) {
    r.pass = false;
    std::ostringstream os;
    os << "FAIL: runtime " << r.seconds << "s exceeds " << limit_seconds << "s";
    r.notes.push_back(os.str());
  }
  return r;
}

template <typename T>
std::string seq_str(const std::vector<T>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

bool fv_is(const FVector& f, std::vector<long long> want) {
  if (f.size() != want.size()) return false;
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != want[i]) return false;
  return true;
}

/// Face complex of the 4-cube through dimension 3: a cell is a set of
/// free coordinates plus fixed values on the rest.
CellComplex build_cube4() {
  CellComplex cx;
  std::map<std::pair<int, int>, long> id;
  for (int d = 0; d <= 3; ++d)
    for (int free = 0; free < 16; ++free) {
      if (std::popcount(static_cast<unsigned>(free)) != d) continue;
      for (int s = 0; s < 16; ++s) {
        if (s & free) continue;
        std::vector<long> bd;
        for (int c = 0; c < 4; ++c)
          if (free & (1 << c)) {
            bd.push_back(id.at({free ^ (1 << c), s}));
            bd.push_back(id.at({free ^ (1 << c), s | (1 << c)}));
          }
        id[{free, s}] = cx.add_cell(d, bd);
      }
    }
  cx.finalize();
  return cx;
}

std::vector<Int> int_diffs(const std::vector<Int>& v) {
  std::vector<Int> out;
  for (size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i + 1] - v[i]);
  return out;
}

int poly_degree(std::vector<Int> v) {
  const int max_d = static_cast<int>(v.size()) - 1;
  for (int d = 0; d <= max_d && !v.empty(); ++d) {
    bool zero = true, constant = true;
    for (const Int& x : v) {
      zero = zero && x == 0;
      constant = constant && x == v[0];
    }
    if (zero) return d - 1;
    if (constant) return d;
    v = int_diffs(v);
  }
  return -2;
}

CriterionResult ac1(const AcceptanceOptions&) {
  return timed(1, "fatness of the pinned four-dimensional f-vectors", 0, [](Checker& c) {
    c.expect(fatness3(FVector{5, 10, 10, 5}) == Rational(2), "simplex fatness != 2");
    c.expect(fatness3(FVector{16, 32, 24, 8}) == Rational(7, 3), "4-cube fatness != 7/3");
    EResult e = e_fvector_from_simplicial(FVector{120, 720, 1200, 600});
    c.expect(e.fatness == Rational(5), "E-sphere of the 600-cell: fatness != 5");
  });
}

CriterionResult ac2(const AcceptanceOptions&) {
  return timed(2, "E-construction counts and dual-route agreement", 0, [](Checker& c) {
    c.expect(fv_is(e_fvector_from_simple(FVector{16, 32, 24, 8}).f, {24, 96, 96, 24}),
             "E of the 4-cube != (24,96,96,24)");
    c.expect(fv_is(e_fvector_from_simple(FVector{600, 1200, 720, 120}).f,
                   {720, 3600, 3600, 720}),
             "E of the 120-cell != (720,3600,3600,720)");
    for (FVector q : {FVector{5, 10, 10, 5}, FVector{8, 24, 32, 16}, FVector{120, 720, 1200, 600}}) {
      FVector rev(q.rbegin(), q.rend());
      EResult a = e_fvector_from_simplicial(q);
      EResult b = e_fvector_from_simple(rev);
      c.expect(a.f == b.f && a.fatness == b.fatness,
               "dual routes disagree on " + seq_str(std::vector<Int>(q.begin(), q.end())));
    }
  });
}

CriterionResult ac3(const AcceptanceOptions&) {
  return timed(3, "cross-polytope gluing census 1,1,3,3,6,3,2,1,1 with Burnside check", 60,
               [](Checker& c) {
                 CrossGluingCensus census = enumerate_cross_simplex_compounds();
                 std::array<long, 9> want{1, 1, 3, 3, 6, 3, 2, 1, 1};
                 c.expect(census.counts == want, "orbit counts per k differ from 1,1,3,3,6,3,2,1,1");
                 c.expect(census.total == 21, "total orbit count != 21");
                 c.expect(census.burnside_total == census.total,
                          "Burnside average disagrees with the orbit count");
               });
}

CriterionResult ac4(const AcceptanceOptions& o) {
  return timed(4, "jewel catalogs: 3 triangle-only, 11 with squares, restriction consistent", 120,
               [&o](Checker& c) {
                 JewelCatalog tri = enumerate_triangle_jewels(o.threads);
                 JewelCatalog trisq = enumerate_square_triangle_jewels(o.threads);
                 c.expect(tri.jewels.size() == 3, "triangle catalog size != 3");
                 c.expect(trisq.jewels.size() == 11, "square-triangle catalog size != 11");
                 c.expect(tri.max_forced_tiles == 6, "triangle max forced tiles != 6");
                 c.expect(trisq.max_forced_tiles == 18, "square-triangle max forced tiles != 18");
                 for (const Jewel& j : tri.jewels) {
                   const Jewel* match = nullptr;
                   for (const Jewel& t : trisq.jewels)
                     if (t.directions == j.directions) match = &t;
                   if (!match) {
                     c.expect(false, "triangle jewel missing from the square-triangle catalog");
                     continue;
                   }
                   bool same = match->sides == j.sides && match->forced_squares == 0 &&
                               match->forced_triangles == j.forced_triangles;
                   c.expect(same, "restriction changes a triangle jewel's data");
                   size_t pure = 0;
                   for (const auto& tiling : match->tilings.all) {
                     bool any_square = false;
                     for (const JewelTile& t : tiling) any_square = any_square || t.square;
                     pure += !any_square;
                   }
                   c.expect(pure == j.tilings.all.size(),
                            "square-free tilings differ from the triangle-only count");
                 }
               });
}

CriterionResult ac5(const AcceptanceOptions&) {
  return timed(5, "exactly 3 convex simplex compounds, with the E counts of the third", 0,
               [](Checker& c) {
                 auto found = classify_simplex_compounds();
                 c.expect(found.size() == 3, "compound count != 3");
                 std::vector<std::vector<long long>> want{
                     {5, 10, 10, 5}, {6, 14, 16, 8}, {9, 27, 36, 18}};
                 for (size_t i = 0; i < found.size() && i < 3; ++i)
                   c.expect(found[i].fvector == want[i], "compound f-vector mismatch at index " +
                                                            std::to_string(i));
                 EResult e = e_fvector_from_simplicial(FVector{9, 27, 36, 18});
                 c.expect(fv_is(e.f, {27, 108, 108, 27}), "E of the 6-ring != (27,108,108,27)");
               });
}

CriterionResult ac6(const AcceptanceOptions&) {
  return timed(6, "polytope models: counts, Euler, and incidence structure", 0, [](Checker& c) {
    const Cell600& c600 = cell600();
    auto f600 = c600.lattice.cx.fvector();
    c.expect(f600 == std::vector<long long>{120, 720, 1200, 600},
             "600-cell f-vector != (120,720,1200,600)");
    c.expect(flag_count(c600.lattice.cx, {0, 3}) == 2400, "600-cell vertex-facet flags != 2400");
    {
      std::vector<int> per_vertex(120, 0);
      auto [t0, t1] = c600.lattice.cx.cells_of_dim(3);
      for (long t = t0; t < t1; ++t)
        for (long v : c600.lattice.cx.vertex_set(t)) ++per_vertex[static_cast<size_t>(v)];
      bool all20 = true;
      for (int k : per_vertex) all20 = all20 && k == 20;
      c.expect(all20, "some 600-cell vertex not in exactly 20 facets");
    }

    CutResult snub = build_snub24();
    c.expect(snub.lattice.cx.fvector() == std::vector<long long>{96, 432, 480, 144},
             "snub 24-cell f-vector != (96,432,480,144)");
    {
      std::map<long, FacetShape> shape;
      long icosa = 0, tets = 0;
      for (const FacetPlane& fp : snub.lattice.facets) {
        shape[fp.cell] = fp.shape;
        icosa += fp.shape == FacetShape::Icosa;
        tets += fp.shape == FacetShape::Tet;
      }
      c.expect(icosa == 24 && tets == 120, "snub 24-cell facet shapes != 24 icosahedra + 120 tets");
      long both_icosa = 0;
      auto [r0, r1] = snub.lattice.cx.cells_of_dim(2);
      for (long r = r0; r < r1; ++r) {
        const auto& tops = snub.lattice.cx.cover(r);
        if (tops.size() == 2 && shape.at(tops[0]) == FacetShape::Icosa &&
            shape.at(tops[1]) == FacetShape::Icosa)
          ++both_icosa;
      }
      c.expect(both_icosa == 96, "icosahedron-icosahedron ridge count != 96");
    }

    CutResult cut1 = cut_600cell({0});
    auto fcut = cut1.lattice.cx.fvector();
    c.expect(fcut == std::vector<long long>{119, 708, 1170, 581},
             "one-cut 600-cell f-vector != (119,708,1170,581)");
    c.expect(fcut[0] - fcut[1] + fcut[2] - fcut[3] == 0, "one-cut 600-cell Euler sum != 0");
  });
}

CriterionResult ac7(const AcceptanceOptions&) {
  return timed(7, "edge tangency radii and the hyperbolic dihedral classes", 0, [](Checker& c) {
    struct Want {
      std::string name;
      const VertexModel* m;
      const PolytopeLattice* l;
      QuadNum r2;
      QuadNum cos2;
      int sign;
    };
    Build simplex = build_simplex4();
    Build cross = build_cross4();
    const Cell600& c600 = cell600();
    std::vector<Want> want{
        {"simplex", &simplex.model, &simplex.lattice, QuadNum(Rational(3, 10)),
         QuadNum(Rational(1, 4)), 1},
        {"cross", &cross.model, &cross.lattice, QuadNum(Rational(1, 2)), QuadNum(Rational(0)), 0},
        {"600-cell", &c600.model, &c600.lattice, QuadNum{Rational(5, 8), Rational(1, 8), 5},
         QuadNum{Rational(3, 8), Rational(-1, 8), 5}, -1},
    };
    for (const Want& w : want) {
      TangencyResult t = check_edge_tangent(*w.m, *w.l);
      c.expect(t.ok, w.name + ": edge tangency fails");
      c.expect(t.ok && t.r2 == w.r2, w.name + ": tangency radius differs");
      auto [r0, r1] = w.l->cx.cells_of_dim(2);
      bool all = true;
      for (long r = r0; r < r1; ++r) {
        DihedralCos2 d = hyperbolic_dihedral_cos2(*w.m, *w.l, r);
        all = all && d.cos2 == w.cos2 && d.cos_sign == w.sign;
      }
      c.expect(all, w.name + ": some ridge has an unexpected dihedral angle");
    }
  });
}

CriterionResult ac8(const AcceptanceOptions&) {
  return timed(8, "chain families: constructed counts, limits, corrected closing forms", 0,
               [](Checker& c) {
                 FVectorFamily base = family_cross_chain_base();
                 FVectorFamily filled = family_cross_chain_filled();
                 for (long n = 1; n <= 5; ++n) {
                   CrossChainResult r = cross_chain_fvectors(n);
                   c.expect(r.base == base.eval(n), "cross-chain base formula mismatch");
                   c.expect(r.filled == filled.eval(n), "cross-chain filled formula mismatch");
                   auto built = compound_fvector(build_cross_chain(static_cast<int>(n), true));
                   bool eq = fv_is(r.filled, built);
                   c.expect(eq, "built cross chain n=" + std::to_string(n) +
                                    " differs from the filled formula");
                 }
                 c.note("filled-chain closing counts are 84n-52 and 42n-26; the alternating sum "
                        "forces both corrections");
                 c.expect(family_cross_chain_e().fatness_limit() == Rational(14, 3),
                          "cross-chain E fatness limit != 14/3");

                 FVectorFamily q = family_cut600_q();
                 c.expect(cut600_chain_fvectors(1).q == FVector{120, 720, 1200, 600},
                          "length-1 600-cell chain != the 600-cell");
                 for (long n = 1; n <= 3; ++n) {
                   auto built = compound_fvector(build_cut600_chain(static_cast<int>(n)));
                   c.expect(fv_is(q.eval(n), built),
                            "built 600-cell chain n=" + std::to_string(n) + " differs from formula");
                 }
                 c.expect(family_cut600_e().fatness_limit() == Rational(560, 111),
                          "600-cell chain E fatness limit != 560/111");
                 c.expect(q.kissing_limit() == Rational(666, 53),
                          "600-cell chain kissing limit != 666/53");
               });
}

CriterionResult ac9(const AcceptanceOptions&) {
  return timed(9, "corona counts, fatness, kissing, and the per-cap facet count", 0, [](Checker& c) {
    CoronaResult r = corona_fvector(697, 792, 96);
    c.expect(fv_is(r.f, {72840, 459360, 773040, 386520}),
             "corona f-vector != (72840,459360,773040,386520)");
    c.expect(r.fatness_e == Rational(3221, 638), "corona E fatness != 3221/638");
    c.expect(r.kissing == Rational(7656, 607), "corona kissing average != 7656/607");
    const Cell600& c600 = cell600();
    long star = 0;
    auto [t0, t1] = c600.lattice.cx.cells_of_dim(3);
    for (long t = t0; t < t1; ++t) {
      const auto& vs = c600.lattice.cx.vertex_set(t);
      star += std::binary_search(vs.begin(), vs.end(), 0L);
    }
    c.expect(star == 20, "facets through a 600-cell vertex != 20");
    c.note("each bond removes two 20-facet vertex stars; the stated per-cap count 30 is "
           "inconsistent with the assembled totals, which force 20");
  });
}

CriterionResult ac10(const AcceptanceOptions&) {
  return timed(10, "covering surfaces over prime-power alphabets: structure suite", 0,
               [](Checker& c) {
                 for (int g : {1, 2, 3, 4, 7}) {
                   CoverSurface S = build_sg_prime(g);
                   SkeletonReport r = verify_lemma9(S);
                   c.expect(r.fvector_ok, "g=" + std::to_string(g) + ": f != (q,2gq,q)");
                   c.expect(r.skeleton_complete,
                            "g=" + std::to_string(g) + ": 1-skeleton not complete");
                   c.expect(r.dual_complete_one_edge,
                            "g=" + std::to_string(g) + ": faces not pairwise one-edge adjacent");
                   c.expect(r.shared_vertices_ok,
                            "g=" + std::to_string(g) + ": face pairs do not share q-2 vertices");
                   c.expect(r.ok, "g=" + std::to_string(g) + ": structure suite fails");
                 }
               });
}

CriterionResult ac11(const AcceptanceOptions&) {
  return timed(11, "obstructing loop counts and indivisibility", 0, [](Checker& c) {
    for (int g : {1, 2, 3}) {
      CoverSurface S = build_sg_prime(g);
      auto loops = enumerate_obstructing_loops(S);
      long long L = static_cast<long long>(loops.size());
      long long q = S.q;
      c.expect(L <= q * 4 * g * (4 * g - 2) * (4 * g - 3) / 4,
               "g=" + std::to_string(g) + ": loop count above the closed-form bound");
      c.expect(L < 64LL * g * g * g * g, "g=" + std::to_string(g) + ": loop count >= 64g^4");
      IndivisibilityReport r = verify_lemma11(S, loops);
      c.expect(r.ok, "g=" + std::to_string(g) + ": indivisibility suite fails");
    }
  });
}

CriterionResult ac12(const AcceptanceOptions& o) {
  return timed(12, "loop criterion agrees with the direct check on built covers", 0,
               [&o](Checker& c) {
                 struct Round {
                   int g;
                   long long n;
                   int trials;
                   std::uint64_t stream;
                 };
                 for (Round round : {Round{1, 16, 50, 0xAC12u}, Round{2, 32, 20, 0xAC1220u}}) {
                   CoverSurface S = build_sg_prime(round.g);
                   auto loops = enumerate_obstructing_loops(S);
                   int agree = 0;
                   for (int i = 0; i < round.trials; ++i) {
                     Cocycle z = random_cocycle(
                         S, round.n, derive_seed(o.seed ^ round.stream, static_cast<std::uint64_t>(i)));
                     bool via = strongly_regular_via_loops(S, loops, z);
                     bool direct = is_strongly_regular(build_cover(S, z).cx);
                     agree += via == direct;
                   }
                   c.expect(agree == round.trials,
                            "g=" + std::to_string(round.g) + ": agreement " +
                                std::to_string(agree) + "/" + std::to_string(round.trials));
                 }
               });
}

CriterionResult ac13(const AcceptanceOptions& o) {
  return timed(13, "random covers succeed at the union-bound rate", 120, [&o](Checker& c) {
    CoverExperiment r = thm10_experiment(1, 128, 200, o.seed, o.threads);
    c.expect(r.loop_count == 10, "loop count at g=1 != 10");
    c.expect(r.fraction >= r.bound - 0.10,
             "success fraction " + std::to_string(r.fraction) + " below bound - 0.10");
  });
}

CriterionResult ac14(const AcceptanceOptions&) {
  return timed(14, "stacked spheres: product counts, capped growth, and exact degrees", 0,
               [](Checker& c) {
                 CoverSurface S = build_sg_prime(1);
                 FVector core{5, 10, 5};
                 FVector zero4{0, 0, 0, 0};
                 for (int N = 1; N <= 3; ++N) {
                   SausageResult r = sausage_fvector(core, N, zero4, zero4);
                   auto direct = product_with_path(S.cx, N).fvector();
                   c.expect(fv_is(r.f, direct),
                            "product formula differs from direct counts at N=" + std::to_string(N));
                 }
                 for (int N : {1, 5, 9})
                   c.expect(sausage_fvector(core, N, zero4, zero4).fatness == Rational(3),
                            "capless stack fatness != 3 at N=" + std::to_string(N));
                 FVector cap{3840, 7680, 3843, 3};
                 Rational prev(0);
                 bool increasing = true, below = true;
                 for (int N = 1; N <= 8; ++N) {
                   SausageResult r = sausage_fvector(core, N, cap, cap);
                   increasing = increasing && r.fatness > prev;
                   below = below && r.fatness < Rational(3);
                   prev = r.fatness;
                 }
                 c.expect(increasing && below, "capped stack fatness not strictly climbing toward 3");
                 c.expect(sausage_fvector(core, 4, zero4, zero4).fatness_limit == Rational(3),
                          "stack fatness limit != 2g+1 at g=1");

                 std::vector<Int> f0s, tops, bottoms;
                 bool all_ok = true;
                 for (int g = 1; g <= 20; ++g) {
                   SphereBudget b = sphere_budget_formula(g, Rational(1));
                   all_ok = all_ok && b.euler_zero && b.fatness_ok;
                   f0s.push_back(b.total[0]);
                   tops.push_back(b.total[1] + b.total[2]);
                   bottoms.push_back(b.total[0] + b.total[3]);
                 }
                 c.expect(all_ok, "some budget fails the Euler or fatness-floor check");
                 int d0 = poly_degree(f0s), dt = poly_degree(tops), db = poly_degree(bottoms);
                 c.expect(d0 == 12, "vertex count degree != 12");
                 c.expect(dt == 13 && db == 12, "fatness is not linear in g");
                 c.expect(d0 == 12 * (dt - db), "fatness exponent on vertices != 1/12");
               });
}

CriterionResult ac15(const AcceptanceOptions&) {
  return timed(15, "flag counts of the 4-cube and the planar triple checks", 0, [](Checker& c) {
    CellComplex cube = build_cube4();
    c.expect(cube.fvector() == std::vector<long long>{16, 32, 24, 8},
             "4-cube face counts != (16,32,24,8)");
    c.expect(flag_count(cube, {0, 1, 3}) == 192, "4-cube (0,1,3) flags != 192");
    c.expect(flag_count(cube, {0, 3}) == 64, "4-cube (0,3) flags != 64");
    c.expect(flag_count(cube, {0}) == 16, "4-cube (0) flags != vertex count");
    c.expect(steinitz_check(FVector{4, 6, 4}), "(4,6,4) rejected");
    c.expect(steinitz_check(FVector{8, 12, 6}), "(8,12,6) rejected");
    c.expect(!steinitz_check(FVector{5, 9, 5}), "(5,9,5) accepted");
  });
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  out.push_back(ac1(opts));
  out.push_back(ac2(opts));
  out.push_back(ac3(opts));
  out.push_back(ac4(opts));
  out.push_back(ac5(opts));
  out.push_back(ac6(opts));
  out.push_back(ac7(opts));
  out.push_back(ac8(opts));
  out.push_back(ac9(opts));
  out.push_back(ac10(opts));
  out.push_back(ac11(opts));
  out.push_back(ac12(opts));
  out.push_back(ac13(opts));
  out.push_back(ac14(opts));
  out.push_back(ac15(opts));
  return out;
}

}  // namespace fatlab
