#include "doctest.h"

#include <algorithm>

#include "fatlab/fvector_families.hpp"
#include "fatlab/rng.hpp"

using namespace fatlab;

TEST_CASE("steinitz_check on classic 3-polytopes") {
  CHECK(steinitz_check({4, 6, 4}));
  CHECK(steinitz_check({8, 12, 6}));
  CHECK(steinitz_check({12, 30, 20}));  // icosahedron
  CHECK_FALSE(steinitz_check({5, 9, 5}));  // Euler fails
  CHECK_FALSE(steinitz_check({100, 102, 4}));  // too few faces for the vertices
  CHECK_FALSE(steinitz_check({3, 5, 4}));
}

TEST_CASE("Dehn-Sommerville checks sort simple from simplicial") {
  CHECK(simple_ds_check({16, 32, 24, 8}));     // 4-cube
  CHECK(simple_ds_check({600, 1200, 720, 120}));  // 120-cell
  CHECK(simple_ds_check({5, 10, 10, 5}));      // simplex is both
  CHECK(simplicial_ds_check({5, 10, 10, 5}));
  CHECK_FALSE(simple_ds_check({120, 720, 1200, 600}));
  CHECK(simplicial_ds_check({120, 720, 1200, 600}));
  CHECK(simplicial_ds_check({8, 24, 32, 16}));
  CHECK_FALSE(simplicial_ds_check({16, 32, 24, 8}));
}

TEST_CASE("E-sphere counts from the simple side") {
  auto cube = e_fvector_from_simple({16, 32, 24, 8});
  CHECK(cube.f == FVector{24, 96, 96, 24});
  CHECK(cube.fatness == Rational(4));

  auto c120 = e_fvector_from_simple({600, 1200, 720, 120});
  CHECK(c120.f == FVector{720, 3600, 3600, 720});
  CHECK(c120.fatness == Rational(5));

  auto simplex = e_fvector_from_simple({5, 10, 10, 5});
  CHECK(simplex.f == FVector{10, 30, 30, 10});
  CHECK(simplex.fatness == Rational(3));

  CHECK_THROWS_AS(e_fvector_from_simple({120, 720, 1200, 600}), std::invalid_argument);
}

TEST_CASE("E-sphere counts from the simplicial side") {
  auto cross = e_fvector_from_simplicial({8, 24, 32, 16});
  CHECK(cross.f == FVector{24, 96, 96, 24});
  CHECK(cross.fatness == Rational(4));

  auto six = e_fvector_from_simplicial({9, 27, 36, 18});
  CHECK(six.f == FVector{27, 108, 108, 27});
  CHECK(six.fatness == Rational(4));

  auto capped = e_fvector_from_simplicial({9, 28, 38, 19});
  CHECK(capped.f == FVector{28, 114, 114, 28});

  auto c600 = e_fvector_from_simplicial({120, 720, 1200, 600});
  CHECK(c600.f == FVector{720, 3600, 3600, 720});
  CHECK(c600.fatness == Rational(5));

  CHECK_THROWS_AS(e_fvector_from_simplicial({16, 32, 24, 8}), std::invalid_argument);
}

TEST_CASE("the two E routes agree through duality, never collapsed") {
  auto rng = make_rng(derive_seed(31, 0));
  for (int t = 0; t < 2000; ++t) {
    Int f0 = static_cast<long long>(uniform_below(rng, 996)) + 5;
    Int f1 = f0 + 1 + static_cast<long long>(uniform_below(rng, 2000));
    FVector fq{f0, f1, 2 * (f1 - f0), f1 - f0};
    REQUIRE(simplicial_ds_check(fq));
    FVector rev(fq.rbegin(), fq.rend());
    REQUIRE(simple_ds_check(rev));
    auto a = e_fvector_from_simplicial(fq);
    auto b = e_fvector_from_simple(rev);
    CHECK(a.f == b.f);
    CHECK(a.fatness == b.fatness);
    // fatness caps are strict
    CHECK(a.fatness < 6);
    CHECK(fatness3(rev) < 3);
  }
}

TEST_CASE("fatness is self-dual and exact") {
  CHECK(fatness3({120, 720, 1200, 600}) == Rational(1920, 720));
  CHECK(fatness3({120, 720, 1200, 600}) == Rational(8, 3));
  CHECK(fatness3({600, 1200, 720, 120}) == Rational(8, 3));
  auto rng = make_rng(derive_seed(31, 1));
  for (int t = 0; t < 1000; ++t) {
    FVector f;
    for (int i = 0; i < 4; ++i)
      f.push_back(static_cast<long long>(uniform_below(rng, 10000)) + 1);
    FVector rev(f.rbegin(), f.rend());
    CHECK(fatness3(f) == fatness3(rev));
  }
  CHECK(fatness_surface({5, 10, 5}) == Rational(1));
  CHECK(fatness_surface({9, 54, 9}) == Rational(3));
}

TEST_CASE("neighborly cubical spheres approach fatness 5") {
  auto n4 = neighborly_cubical_fvector(4);
  CHECK(n4.f == FVector{16, 32, 24, 8});
  CHECK(n4.fatness == Rational(7, 3));

  auto n10 = neighborly_cubical_fvector(10);
  CHECK(n10.f == FVector{1024, 5120, 6144, 2048});
  CHECK(n10.fatness == Rational(11, 3));

  auto n63 = neighborly_cubical_fvector(63);
  CHECK(n63.f[0].str() == "9223372036854775808");  // 2^63 overflows int64 on purpose
  CHECK(decimal_str(n63.fatness) == "4.753846");

  for (long n : {4L, 5L, 10L, 100L, 1000L}) {
    auto r = neighborly_cubical_fvector(n);
    CHECK(r.f[0] - r.f[1] + r.f[2] - r.f[3] == 0);
    CHECK(Rational(5) - r.fatness == Rational(16, n + 2));
  }
  CHECK_THROWS_AS(neighborly_cubical_fvector(3), std::invalid_argument);
}

TEST_CASE("cross polytope chains and their E-spheres") {
  auto c1 = cross_chain_fvectors(1);
  CHECK(c1.base == FVector{8, 24, 32, 16});
  CHECK(c1.filled == c1.base);  // no junctions, nothing to caulk
  CHECK(c1.e == FVector{24, 96, 96, 24});

  auto c2 = cross_chain_fvectors(2);
  CHECK(c2.base == FVector{12, 42, 60, 30});
  CHECK(c2.filled == FVector{20, 78, 116, 58});
  CHECK(c2.e == FVector{78, 348, 348, 78});
  CHECK(c2.fatness_e == Rational(348 + 348, 78 + 78));

  CHECK(family_cross_chain_e().fatness_limit() == Rational(14, 3));
  CHECK(decimal_str(Rational(14, 3)) == "4.666667");
}

TEST_CASE("cut 600-cell chains: fatness and kissing limits") {
  auto c1 = cut600_chain_fvectors(1);
  CHECK(c1.q == FVector{120, 720, 1200, 600});
  CHECK(c1.e == FVector{720, 3600, 3600, 720});
  CHECK(c1.fatness_e == Rational(5));
  CHECK(c1.kissing == Rational(12));

  auto c2 = cut600_chain_fvectors(2);
  CHECK(c2.q == FVector{226, 1386, 2320, 1160});
  CHECK(c2.e == FVector{1386, 6960, 6960, 1386});

  CHECK(family_cut600_e().fatness_limit() == Rational(560, 111));
  CHECK(decimal_str(Rational(560, 111)) == "5.045045");
  CHECK(family_cut600_q().kissing_limit() == Rational(666, 53));
  CHECK(decimal_str(Rational(666, 53)) == "12.566038");
}

TEST_CASE("corona counts reproduce the frozen totals") {
  auto big = corona_fvector(697, 792, 96);
  CHECK(big.f == FVector{72840, 459360, 773040, 386520});
  CHECK(big.fatness_e == Rational(3221, 638));
  CHECK(decimal_str(big.fatness_e) == "5.048589");
  CHECK(big.kissing == Rational(7656, 607));
  CHECK(decimal_str(big.kissing) == "12.612850");

  auto single = corona_fvector(1, 0, 0);
  CHECK(single.f == FVector{120, 720, 1200, 600});
  CHECK(single.kissing == Rational(12));

  CHECK_THROWS_AS(corona_fvector(1, 100, 0), std::invalid_argument);
  CHECK_THROWS_AS(corona_fvector(0, 0, 0), std::invalid_argument);
}

TEST_CASE("kissing averages sit below 8 + 4 sqrt 3") {
  CHECK(quad_decimal_str(kissing_bound()) == "14.928203");
  for (auto k : {Rational(12), Rational(666, 53), Rational(7656, 607)}) {
    QuadNum as_quad(k, Rational(0), 3);
    CHECK(quad_cmp(as_quad, kissing_bound()) < 0);
  }
}

TEST_CASE("family formulas satisfy Euler identically and stay positive") {
  for (auto fam : {family_cross_chain_base(), family_cross_chain_filled(),
                   family_cross_chain_e(), family_cut600_q(), family_cut600_e()}) {
    CAPTURE(fam.name);
    CHECK(fam.euler_identically_zero());
    for (long n = 1; n <= 100; ++n) {
      auto f = fam.eval(n);
      CHECK(f[0] - f[1] + f[2] - f[3] == 0);
      for (const auto& x : f) CHECK(x > 0);
    }
  }
}

TEST_CASE("bad lengths and degenerate inputs are rejected") {
  CHECK_THROWS_AS(fatness3({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(fatness_surface({1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(kissing_average({0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(steinitz_check({1, 2}), std::invalid_argument);
}
