#ifndef FATLAB_EXACT_HPP
#define FATLAB_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fatlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sign of a rational as -1, 0, +1.
int rat_sign(const Rational& r);

/// Decimal expansion of r with `places` digits after the point,
/// rounded half away from zero. Deterministic, no floating point.
std::string decimal_str(const Rational& r, int places = 6);

/// Element of Q(sqrt(d)): value a + b*sqrt(d).
/// d must be a positive non-square integer; it is a tag carried along,
/// ops require equal tags unless one side is rational (b == 0).
struct QuadNum {
  Rational a{0};
  Rational b{0};
  long d{5};

  QuadNum() = default;
  QuadNum(Rational a_, Rational b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {}
  explicit QuadNum(Rational a_, long d_ = 5) : a(std::move(a_)), d(d_) {}

  bool is_rational() const { return b == 0; }
};

QuadNum operator+(const QuadNum& x, const QuadNum& y);
QuadNum operator-(const QuadNum& x, const QuadNum& y);
QuadNum operator-(const QuadNum& x);
QuadNum operator*(const QuadNum& x, const QuadNum& y);
QuadNum operator*(const Rational& c, const QuadNum& x);
QuadNum operator/(const QuadNum& x, const QuadNum& y);
bool operator==(const QuadNum& x, const QuadNum& y);
bool operator!=(const QuadNum& x, const QuadNum& y);

/// Sign of a + b*sqrt(d) as -1, 0, +1. Exact: when the two terms have
/// opposite signs the comparison a^2 vs b^2 d decides.
int quad_sign(const QuadNum& x);

/// quad_sign(x - y); requires compatible tags.
int quad_cmp(const QuadNum& x, const QuadNum& y);

/// Decimal expansion of a + b*sqrt(d), same rounding convention as
/// decimal_str. sqrt(d) is approximated to 20 guard digits, which is
/// exact enough for 6-place output of any value arising here.
std::string quad_decimal_str(const QuadNum& x, int places = 6);

/// Exact rendering such as "3/2+1/2*sqrt(5)"; pure rationals print as "3/2".
std::string quad_str(const QuadNum& x);

/// Residue v mod n with 0 <= v < n. Binary ops require equal moduli.
struct ModNum {
  long long v{0};
  long long n{1};

  ModNum() = default;
  ModNum(long long value, long long modulus);
};

ModNum operator+(ModNum x, ModNum y);
ModNum operator-(ModNum x, ModNum y);
ModNum operator-(ModNum x);
ModNum operator*(ModNum x, ModNum y);
bool operator==(ModNum x, ModNum y);
bool operator!=(ModNum x, ModNum y);

/// Multiplicative inverse; throws std::domain_error when gcd(v, n) != 1.
ModNum mod_inv(ModNum x);

/// Least generator of (Z/p)^*, p prime.
long long mod_generator(long long p);

/// View of a finite-field element as a coefficient vector over F_p,
/// coeffs[i] multiplying x^i, size k.
struct GFElem {
  long p{0};
  int k{0};
  std::vector<long> coeffs;
};

/// F_q for q = p^k, table based. Elements are indices 0..q-1 under the
/// encoding e = sum_i c_i p^i (c_0 least significant); 0 and 1 are the
/// additive and multiplicative identities. Value semantics, safe to copy.
class GFContext {
public:
  long q() const { return q_; }
  long p() const { return p_; }
  int k() const { return k_; }

  long add(long x, long y) const { return add_[x * q_ + y]; }
  long sub(long x, long y) const { return add_[x * q_ + neg_[y]]; }
  long neg(long x) const { return neg_[x]; }
  long mul(long x, long y) const { return mul_[x * q_ + y]; }
  long inv(long x) const;
  long pow(long x, long e) const;

  /// Least encoded element of multiplicative order q-1.
  long generator() const { return gen_; }

  GFElem decode(long x) const;
  long encode(const std::vector<long>& coeffs) const;

  /// Modulus polynomial x^k + sum_i modulus_low[i] x^i (meaningful for k > 1).
  const std::vector<long>& modulus_low() const { return mod_low_; }

  friend GFContext gf_make(long q);

private:
  GFContext() = default;

  long q_{0};
  long p_{0};
  int k_{0};
  long gen_{0};
  std::vector<long> add_, mul_, neg_, inv_;
  std::vector<long> mod_low_;
};

/// Builds F_q. Throws std::invalid_argument unless q is a prime power.
/// For k > 1 the modulus is the first irreducible monic polynomial of
/// degree k in encoding order of its low coefficients.
GFContext gf_make(long q);

/// True iff q is a prime power p^k, k >= 1; reports p and k.
bool is_prime_power(long q, long* p_out = nullptr, int* k_out = nullptr);

/// Rational multiple of pi: the angle coeff * pi. Used for dihedral
/// bookkeeping where sums are compared against pi and 2*pi exactly.
struct AnglePi {
  Rational coeff{0};

  AnglePi() = default;
  explicit AnglePi(Rational c) : coeff(std::move(c)) {}
};

AnglePi operator+(const AnglePi& x, const AnglePi& y);
AnglePi operator-(const AnglePi& x, const AnglePi& y);
AnglePi operator*(const Rational& c, const AnglePi& x);
bool operator==(const AnglePi& x, const AnglePi& y);
bool operator!=(const AnglePi& x, const AnglePi& y);
bool operator<(const AnglePi& x, const AnglePi& y);

/// cos^2 of the angle as an element of Q(sqrt(5)) together with the sign
/// of cos itself. Supports coeff in {1/5, 1/3, 2/5, 1/2, 3/5, 1}; throws
/// std::domain_error otherwise.
std::pair<QuadNum, int> angle_cos2_sign(const AnglePi& angle);

}  // namespace fatlab

#endif
