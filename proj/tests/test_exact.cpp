#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "fatlab/exact.hpp"
#include "fatlab/rng.hpp"

using namespace fatlab;

TEST_CASE("decimal_str renders with half-away-from-zero rounding") {
  CHECK(decimal_str(Rational(1, 3)) == "0.333333");
  CHECK(decimal_str(Rational(2, 3)) == "0.666667");
  CHECK(decimal_str(Rational(3221, 638)) == "5.048589");
  CHECK(decimal_str(Rational(0)) == "0.000000");
  CHECK(decimal_str(Rational(-1, 3)) == "-0.333333");
  CHECK(decimal_str(Rational(25, 10), 0) == "3");
  CHECK(decimal_str(Rational(-25, 10), 0) == "-3");
  CHECK(decimal_str(Rational(15, 100), 1) == "0.2");
  CHECK(decimal_str(Rational(1, 8), 6) == "0.125000");
  CHECK(decimal_str(Rational(5), 2) == "5.00");
}

TEST_CASE("quad_sign settles mixed-sign cases exactly") {
  CHECK(quad_sign(QuadNum(Rational(-2), Rational(1), 5)) == 1);   // sqrt(5) > 2
  CHECK(quad_sign(QuadNum(Rational(1), Rational(-1), 5)) == -1);  // 1 < sqrt(5)
  CHECK(quad_sign(QuadNum(Rational(2), Rational(-1), 3)) == 1);   // 2 > sqrt(3)
  CHECK(quad_sign(QuadNum(Rational(-2), Rational(1), 3)) == -1);
  CHECK(quad_sign(QuadNum(Rational(0), Rational(0), 5)) == 0);
  CHECK(quad_sign(QuadNum(Rational(0), Rational(-3), 5)) == -1);
  CHECK(quad_sign(QuadNum(Rational(7, 2), Rational(0), 5)) == 1);
  // continued-fraction convergents of sqrt(5): 161/72 lies just above
  // (161^2 = 25921 > 25920 = 5 * 72^2), 682/305 just below
  CHECK(quad_sign(QuadNum(Rational(-161, 72), Rational(1), 5)) == -1);
  CHECK(quad_sign(QuadNum(Rational(-682, 305), Rational(1), 5)) == 1);
  // 2889/1292 squares to 8346321/1669264, just above 5
  CHECK(quad_sign(QuadNum(Rational(-2889, 1292), Rational(1), 5)) == -1);
}

TEST_CASE("golden ratio identities hold in Q(sqrt(5))") {
  QuadNum phi(Rational(1, 2), Rational(1, 2), 5);
  QuadNum one(Rational(1), Rational(0), 5);
  CHECK(phi * phi == phi + one);
  CHECK(one / phi == phi - one);
  CHECK(quad_cmp(phi, one) == 1);
  CHECK(quad_sign(phi * phi - phi - one) == 0);
  CHECK(quad_decimal_str(phi) == "1.618034");
  QuadNum kiss(Rational(8), Rational(4), 3);
  CHECK(quad_decimal_str(kiss) == "14.928203");
  CHECK(quad_str(phi) == "1/2+1/2*sqrt(5)");
  CHECK(quad_str(one - phi) == "1/2-1/2*sqrt(5)");
  CHECK(quad_str(QuadNum(Rational(3), Rational(0), 5)) == "3");
}

TEST_CASE("QuadNum radicand tags: rational sides adapt, true mixes throw") {
  QuadNum r3(Rational(2), Rational(0), 3);
  QuadNum s5(Rational(1), Rational(1), 5);
  CHECK((r3 + s5).d == 5);
  QuadNum s3(Rational(1), Rational(1), 3);
  CHECK_THROWS_AS(s3 + s5, std::logic_error);
  CHECK_THROWS_AS(s3 * s5, std::logic_error);
  CHECK_THROWS_AS(s5 / QuadNum(Rational(0), Rational(0), 5), std::domain_error);
}

TEST_CASE("quad_sign agrees with long double evaluation off the zero set") {
  auto rng = make_rng(derive_seed(20260101, 0));
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    long d = std::vector<long>{2, 3, 5}[uniform_below(rng, 3)];
    auto small_rat = [&]() {
      long long num = static_cast<long long>(uniform_below(rng, 2001)) - 1000;
      long long den = static_cast<long long>(uniform_below(rng, 1000)) + 1;
      return Rational(num, den);
    };
    QuadNum x(small_rat(), small_rat(), d);
    long double approx = x.a.convert_to<long double>() +
                         x.b.convert_to<long double>() * sqrtl(static_cast<long double>(d));
    int s = quad_sign(x);
    if (s == 0) {
      CHECK(fabsl(approx) < 1e-9L);
    } else {
      // nonzero values here are bounded away from 0 far beyond long
      // double error, since denominators are at most 1000
      REQUIRE(fabsl(approx) > 1e-9L);
      CHECK((approx > 0 ? 1 : -1) == s);
      ++checked;
    }
  }
  CHECK(checked > 9000);
}

TEST_CASE("ModNum normalizes and rejects bad inverses") {
  CHECK(ModNum(-3, 7).v == 4);
  CHECK(ModNum(14, 7).v == 0);
  CHECK(mod_inv(ModNum(3, 7)) == ModNum(5, 7));
  CHECK_THROWS_AS(mod_inv(ModNum(2, 4)), std::domain_error);
  CHECK_THROWS_AS(ModNum(1, 5) + ModNum(1, 7), std::logic_error);
}

TEST_CASE("ModNum satisfies the field axioms exhaustively mod 13") {
  const long long p = 13;
  for (long long a = 0; a < p; ++a) {
    ModNum x(a, p);
    CHECK(x + ModNum(0, p) == x);
    CHECK(x * ModNum(1, p) == x);
    CHECK(x + (-x) == ModNum(0, p));
    if (a != 0) CHECK(x * mod_inv(x) == ModNum(1, p));
    for (long long b = 0; b < p; ++b) {
      ModNum y(b, p);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      for (long long c = 0; c < p; ++c) {
        ModNum z(c, p);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }
}

TEST_CASE("composite moduli stay a ring: inverses fail only where gcd > 1") {
  const long long n = 12;
  for (long long a = 0; a < n; ++a) {
    bool coprime = std::gcd(a, n) == 1;
    if (coprime)
      CHECK(ModNum(a, n) * mod_inv(ModNum(a, n)) == ModNum(1, n));
    else
      CHECK_THROWS_AS(mod_inv(ModNum(a, n)), std::domain_error);
  }
}

TEST_CASE("mod_generator finds the least primitive root") {
  CHECK(mod_generator(2) == 1);
  CHECK(mod_generator(5) == 2);
  CHECK(mod_generator(7) == 3);
  CHECK(mod_generator(13) == 2);
  CHECK(mod_generator(17) == 3);
}

TEST_CASE("is_prime_power classifies small arguments") {
  long p = 0;
  int k = 0;
  CHECK(is_prime_power(9, &p, &k));
  CHECK(p == 3);
  CHECK(k == 2);
  CHECK(is_prime_power(81, &p, &k));
  CHECK(p == 3);
  CHECK(k == 4);
  CHECK(is_prime_power(13, &p, &k));
  CHECK(k == 1);
  CHECK_FALSE(is_prime_power(6));
  CHECK_FALSE(is_prime_power(1));
  CHECK_FALSE(is_prime_power(0));
  CHECK_FALSE(is_prime_power(21));
}

TEST_CASE("gf_make rejects non prime powers") {
  CHECK_THROWS_AS(gf_make(6), std::invalid_argument);
  CHECK_THROWS_AS(gf_make(1), std::invalid_argument);
  CHECK_THROWS_AS(gf_make(12), std::invalid_argument);
}

TEST_CASE("F9 uses modulus x^2+1 and generator 1+x") {
  auto f9 = gf_make(9);
  CHECK(f9.q() == 9);
  CHECK(f9.p() == 3);
  CHECK(f9.k() == 2);
  CHECK(f9.modulus_low() == std::vector<long>{1, 0});
  CHECK(f9.generator() == 4);  // 1 + x under e = c0 + 3 c1
  auto view = f9.decode(4);
  CHECK(view.coeffs == std::vector<long>{1, 1});
  CHECK(f9.encode({1, 1}) == 4);
  // x * x = -1 under x^2 + 1
  long x = f9.encode({0, 1});
  CHECK(f9.mul(x, x) == f9.neg(1));
}

TEST_CASE("prime fields match ModNum arithmetic") {
  auto f13 = gf_make(13);
  CHECK(f13.generator() == 2);
  auto f5 = gf_make(5);
  CHECK(f5.generator() == 2);
  for (long a = 0; a < 13; ++a)
    for (long b = 0; b < 13; ++b) {
      CHECK(f13.add(a, b) == (a + b) % 13);
      CHECK(f13.mul(a, b) == (a * b) % 13);
    }
}

TEST_CASE("F9 satisfies the field axioms exhaustively") {
  auto f = gf_make(9);
  const long q = 9;
  for (long a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (long b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      for (long c = 0; c < q; ++c) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_CASE("larger fields pass sampled axiom checks and generator order") {
  for (long q : {8L, 25L, 27L, 49L, 81L}) {
    CAPTURE(q);
    auto f = gf_make(q);
    // generator really has order q-1
    long x = f.generator();
    long ord = 1;
    long y = x;
    while (y != 1) {
      y = f.mul(y, x);
      ++ord;
    }
    CHECK(ord == q - 1);
    for (long a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, q - 1) == 1);
    }
    auto rng = make_rng(derive_seed(7, static_cast<std::uint64_t>(q)));
    for (int t = 0; t < 20000; ++t) {
      long a = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(q)));
      long b = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(q)));
      long c = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(q)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    }
  }
}

TEST_CASE("GF pow handles negative exponents via inverses") {
  auto f = gf_make(27);
  long g = f.generator();
  CHECK(f.mul(f.pow(g, 5), f.pow(g, -5)) == 1);
  CHECK(f.pow(g, -1) == f.inv(g));
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("AnglePi arithmetic is exact") {
  for (int k = 2; k <= 15; ++k) {
    CHECK(Rational(k) * AnglePi(Rational(1, k)) == AnglePi(Rational(1)));
  }
  AnglePi fifth(Rational(1, 5));
  AnglePi sum = fifth + fifth + fifth + fifth + fifth;
  CHECK(sum == AnglePi(Rational(1)));
  CHECK(AnglePi(Rational(9, 5)) != AnglePi(Rational(2)));
  CHECK(AnglePi(Rational(1, 3)) < AnglePi(Rational(1, 2)));
}

TEST_CASE("angle_cos2_sign matches the closed forms") {
  auto [c15, s15] = angle_cos2_sign(AnglePi(Rational(1, 5)));
  CHECK(c15 == QuadNum(Rational(3, 8), Rational(1, 8), 5));  // (3+sqrt5)/8
  CHECK(s15 == 1);
  auto [c13, s13] = angle_cos2_sign(AnglePi(Rational(1, 3)));
  CHECK(c13 == QuadNum(Rational(1, 4), Rational(0), 5));
  CHECK(s13 == 1);
  auto [c25, s25] = angle_cos2_sign(AnglePi(Rational(2, 5)));
  CHECK(c25 == QuadNum(Rational(3, 8), Rational(-1, 8), 5));  // (3-sqrt5)/8
  CHECK(s25 == 1);
  auto [c12, s12] = angle_cos2_sign(AnglePi(Rational(1, 2)));
  CHECK(quad_sign(c12) == 0);
  CHECK(s12 == 0);
  auto [c35, s35] = angle_cos2_sign(AnglePi(Rational(3, 5)));
  CHECK(c35 == c25);
  CHECK(s35 == -1);
  auto [c1, s1] = angle_cos2_sign(AnglePi(Rational(1)));
  CHECK(c1 == QuadNum(Rational(1), Rational(0), 5));
  CHECK(s1 == -1);
  CHECK_THROWS_AS(angle_cos2_sign(AnglePi(Rational(1, 7))), std::domain_error);
  // cos^2(pi/5) + cos^2(2pi/5) = (3+sqrt5)/8 + (3-sqrt5)/8 = 3/4
  CHECK(c15 + c25 == QuadNum(Rational(3, 4), Rational(0), 5));
}

TEST_CASE("derive_seed decorrelates and uniform_below stays in range") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(42, 7) == derive_seed(42, 7));
  auto rng = make_rng(123);
  for (int i = 0; i < 1000; ++i) CHECK(uniform_below(rng, 10) < 10);
  // determinism across separately constructed engines
  auto r1 = make_rng(derive_seed(9, 9));
  auto r2 = make_rng(derive_seed(9, 9));
  for (int i = 0; i < 100; ++i) CHECK(r1() == r2());
  CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
}

TEST_CASE("uniform_below is unbiased over a coarse histogram") {
  auto rng = make_rng(derive_seed(555, 1));
  const std::uint64_t n = 7;
  std::vector<int> hist(n, 0);
  const int trials = 70000;
  for (int i = 0; i < trials; ++i) ++hist[uniform_below(rng, n)];
  for (std::uint64_t b = 0; b < n; ++b) {
    // expected 10000 per bucket; 5 sigma is about 480
    CHECK(hist[b] > 9500);
    CHECK(hist[b] < 10500);
  }
}
