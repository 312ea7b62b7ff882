#include "fatlab/exact.hpp"

#include <algorithm>

namespace fatlab {

namespace {

Int pow10_int(int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

int rat_sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

std::string decimal_str(const Rational& r, int places) {
  if (places < 0) throw std::invalid_argument("decimal_str: negative places");
  Int num = numerator(r);
  Int den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  Int scale = pow10_int(places);
  // round half away from zero
  Int scaled = (num * scale * 2 + den) / (den * 2);
  std::string out;
  if (places == 0) {
    out = scaled.str();
  } else {
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<size_t>(places) - frac.size(), '0');
    out = ip.str() + "." + frac;
  }
  if (neg && scaled != 0) out.insert(out.begin(), '-');
  return out;
}

namespace {

// Radicand for the result of a binary op; a rational side adopts the
// other side's tag.
long join_tag(const QuadNum& x, const QuadNum& y) {
  if (x.b == 0) return y.d;
  if (y.b == 0) return x.d;
  if (x.d != y.d) throw std::logic_error("QuadNum: mixed radicands");
  return x.d;
}

}  // namespace

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  return {x.a + y.a, x.b + y.b, join_tag(x, y)};
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) {
  return {x.a - y.a, x.b - y.b, join_tag(x, y)};
}

QuadNum operator-(const QuadNum& x) { return {-x.a, -x.b, x.d}; }

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  long d = join_tag(x, y);
  return {x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d};
}

QuadNum operator*(const Rational& c, const QuadNum& x) {
  return {c * x.a, c * x.b, x.d};
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) {
  long d = join_tag(x, y);
  // multiply by the conjugate; the norm a^2 - b^2 d vanishes only at 0
  // since d is a non-square
  Rational norm = y.a * y.a - y.b * y.b * d;
  if (norm == 0) throw std::domain_error("QuadNum: division by zero");
  QuadNum num{x.a * y.a - x.b * y.b * d, x.b * y.a - x.a * y.b, d};
  return {num.a / norm, num.b / norm, d};
}

bool operator==(const QuadNum& x, const QuadNum& y) {
  if (x.a != y.a || x.b != y.b) return false;
  return x.b == 0 || x.d == y.d;
}

bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }

int quad_sign(const QuadNum& x) {
  int sa = rat_sign(x.a);
  int sb = rat_sign(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: |a| vs |b| sqrt(d), squared
  Rational lhs = x.a * x.a;
  Rational rhs = x.b * x.b * x.d;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

int quad_cmp(const QuadNum& x, const QuadNum& y) { return quad_sign(x - y); }

std::string quad_decimal_str(const QuadNum& x, int places) {
  if (x.b == 0) return decimal_str(x.a, places);
  int guard = places + 20;
  Int scale = pow10_int(guard);
  // floor(sqrt(d) * 10^guard); error below 10^-guard
  Int root = sqrt(Int(x.d) * scale * scale);
  Rational approx = Rational(root, scale);
  return decimal_str(x.a + x.b * approx, places);
}

std::string quad_str(const QuadNum& x) {
  std::string sd = "sqrt(" + std::to_string(x.d) + ")";
  if (x.b == 0) return x.a.str();
  std::string bs;
  Rational babs = x.b < 0 ? Rational(-x.b) : x.b;
  if (babs == 1)
    bs = sd;
  else
    bs = babs.str() + "*" + sd;
  if (x.a == 0) return (x.b < 0 ? "-" : "") + bs;
  return x.a.str() + (x.b < 0 ? "-" : "+") + bs;
}

ModNum::ModNum(long long value, long long modulus) : n(modulus) {
  if (modulus <= 0) throw std::invalid_argument("ModNum: modulus must be positive");
  v = value % n;
  if (v < 0) v += n;
}

namespace {

long long same_mod(ModNum x, ModNum y) {
  if (x.n != y.n) throw std::logic_error("ModNum: mixed moduli");
  return x.n;
}

}  // namespace

ModNum operator+(ModNum x, ModNum y) { return {x.v + y.v, same_mod(x, y)}; }
ModNum operator-(ModNum x, ModNum y) { return {x.v - y.v, same_mod(x, y)}; }
ModNum operator-(ModNum x) { return {-x.v, x.n}; }

ModNum operator*(ModNum x, ModNum y) {
  long long n = same_mod(x, y);
  return {static_cast<long long>(static_cast<__int128>(x.v) * y.v % n), n};
}

bool operator==(ModNum x, ModNum y) { return x.v == y.v && x.n == y.n; }
bool operator!=(ModNum x, ModNum y) { return !(x == y); }

ModNum mod_inv(ModNum x) {
  // extended Euclid on (v, n)
  long long a = x.v, b = x.n;
  long long s0 = 1, s1 = 0;
  while (b != 0) {
    long long qd = a / b;
    long long tmp = a - qd * b;
    a = b;
    b = tmp;
    tmp = s0 - qd * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (a != 1) throw std::domain_error("ModNum: not invertible");
  return {s0, x.n};
}

namespace {

long long mod_pow_ll(long long base, long long exp, long long n) {
  long long r = 1 % n;
  base %= n;
  if (base < 0) base += n;
  while (exp > 0) {
    if (exp & 1) r = static_cast<long long>(static_cast<__int128>(r) * base % n);
    base = static_cast<long long>(static_cast<__int128>(base) * base % n);
    exp >>= 1;
  }
  return r;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> fs;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      fs.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

long long mod_generator(long long p) {
  if (p < 2) throw std::invalid_argument("mod_generator: p < 2");
  if (p == 2) return 1;
  auto fs = prime_factors(p - 1);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long f : fs) {
      if (mod_pow_ll(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("mod_generator: none found; p not prime?");
}

bool is_prime_power(long q, long* p_out, int* k_out) {
  if (q < 2) return false;
  long p = q;
  for (long f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  long m = q;
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

namespace {

// Dense polynomials over F_p, coeffs[i] on x^i, possibly with high zeros.

int poly_deg(const std::vector<long>& f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[static_cast<size_t>(d)] == 0) --d;
  return d;
}

std::vector<long> poly_mul(const std::vector<long>& f, const std::vector<long>& g, long p) {
  std::vector<long> r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + f[i] * g[j]) % p;
  return r;
}

// Remainder of f by monic g.
std::vector<long> poly_rem(std::vector<long> f, const std::vector<long>& g, long p) {
  int dg = poly_deg(g);
  for (int df = poly_deg(f); df >= dg; df = poly_deg(f)) {
    long c = f[static_cast<size_t>(df)];
    for (int i = 0; i <= dg; ++i) {
      size_t idx = static_cast<size_t>(df - dg + i);
      f[idx] = ((f[idx] - c * g[static_cast<size_t>(i)]) % p + p) % p;
    }
  }
  return f;
}

bool poly_is_zero(const std::vector<long>& f) { return poly_deg(f) < 0; }

// Monic irreducibles of each degree 1..dmax, by trial division against
// the lower degrees already collected.
std::vector<std::vector<long>> irreducibles_up_to(long p, int dmax) {
  std::vector<std::vector<long>> irr;
  for (int d = 1; d <= dmax; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long e = 0; e < count; ++e) {
      std::vector<long> f(static_cast<size_t>(d) + 1, 0);
      long t = e;
      for (int i = 0; i < d; ++i) {
        f[static_cast<size_t>(i)] = t % p;
        t /= p;
      }
      f[static_cast<size_t>(d)] = 1;
      bool red = false;
      for (const auto& g : irr) {
        if (2 * poly_deg(g) > d) break;
        if (poly_is_zero(poly_rem(f, g, p))) {
          red = true;
          break;
        }
      }
      if (!red) irr.push_back(std::move(f));
    }
  }
  return irr;
}

bool poly_irreducible(const std::vector<long>& f, long p,
                      const std::vector<std::vector<long>>& small_irr) {
  int d = poly_deg(f);
  for (const auto& g : small_irr) {
    if (2 * poly_deg(g) > d) break;
    if (poly_is_zero(poly_rem(f, g, p))) return false;
  }
  return true;
}

}  // namespace

long GFContext::inv(long x) const {
  if (x == 0) throw std::domain_error("GFContext: inverse of zero");
  return inv_[static_cast<size_t>(x)];
}

long GFContext::pow(long x, long e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  long r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

GFElem GFContext::decode(long x) const {
  GFElem e;
  e.p = p_;
  e.k = k_;
  e.coeffs.assign(static_cast<size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    e.coeffs[static_cast<size_t>(i)] = x % p_;
    x /= p_;
  }
  return e;
}

long GFContext::encode(const std::vector<long>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_)
    throw std::invalid_argument("GFContext: too many coefficients");
  long e = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    long c = ((coeffs[i] % p_) + p_) % p_;
    e = e * p_ + c;
  }
  return e;
}

GFContext gf_make(long q) {
  long p = 0;
  int k = 0;
  if (!is_prime_power(q, &p, &k))
    throw std::invalid_argument("gf_make: q is not a prime power");

  GFContext ctx;
  ctx.q_ = q;
  ctx.p_ = p;
  ctx.k_ = k;

  std::vector<long> modulus;  // monic, degree k
  if (k > 1) {
    auto small_irr = irreducibles_up_to(p, k / 2);
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long e = 0; e < count; ++e) {
      std::vector<long> f(static_cast<size_t>(k) + 1, 0);
      long t = e;
      for (int i = 0; i < k; ++i) {
        f[static_cast<size_t>(i)] = t % p;
        t /= p;
      }
      f[static_cast<size_t>(k)] = 1;
      if (poly_irreducible(f, p, small_irr)) {
        modulus = f;
        ctx.mod_low_.assign(f.begin(), f.end() - 1);
        break;
      }
    }
  }

  auto decode_vec = [&](long x) {
    std::vector<long> c(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      c[static_cast<size_t>(i)] = x % p;
      x /= p;
    }
    return c;
  };
  auto encode_vec = [&](const std::vector<long>& c) {
    long e = 0;
    for (size_t i = static_cast<size_t>(k); i-- > 0;)
      e = e * p + (i < c.size() ? c[i] : 0);
    return e;
  };

  ctx.add_.assign(static_cast<size_t>(q) * q, 0);
  ctx.mul_.assign(static_cast<size_t>(q) * q, 0);
  ctx.neg_.assign(static_cast<size_t>(q), 0);
  ctx.inv_.assign(static_cast<size_t>(q), -1);

  for (long x = 0; x < q; ++x) {
    auto cx = decode_vec(x);
    std::vector<long> cn(cx.size());
    for (size_t i = 0; i < cx.size(); ++i) cn[i] = (p - cx[i]) % p;
    ctx.neg_[static_cast<size_t>(x)] = encode_vec(cn);
    for (long y = 0; y < q; ++y) {
      auto cy = decode_vec(y);
      std::vector<long> cs(cx.size());
      for (size_t i = 0; i < cx.size(); ++i) cs[i] = (cx[i] + cy[i]) % p;
      ctx.add_[static_cast<size_t>(x) * q + y] = encode_vec(cs);
      std::vector<long> cm = poly_mul(cx, cy, p);
      if (k > 1) cm = poly_rem(std::move(cm), modulus, p);
      ctx.mul_[static_cast<size_t>(x) * q + y] = encode_vec(cm);
    }
  }

  for (long x = 1; x < q; ++x) {
    for (long y = 1; y < q; ++y) {
      if (ctx.mul_[static_cast<size_t>(x) * q + y] == 1) {
        ctx.inv_[static_cast<size_t>(x)] = y;
        break;
      }
    }
    if (ctx.inv_[static_cast<size_t>(x)] < 0)
      throw std::logic_error("gf_make: element without inverse; modulus not irreducible?");
  }

  // least encoded element of full multiplicative order
  ctx.gen_ = 0;
  for (long cand = 1; cand < q && ctx.gen_ == 0; ++cand) {
    long x = cand;
    long ord = 1;
    while (x != 1) {
      x = ctx.mul_[static_cast<size_t>(x) * q + cand];
      ++ord;
    }
    if (ord == q - 1) ctx.gen_ = cand;
  }
  if (ctx.gen_ == 0 && q > 2)
    throw std::logic_error("gf_make: no generator found");
  if (q == 2) ctx.gen_ = 1;

  return ctx;
}

AnglePi operator+(const AnglePi& x, const AnglePi& y) { return AnglePi(x.coeff + y.coeff); }
AnglePi operator-(const AnglePi& x, const AnglePi& y) { return AnglePi(x.coeff - y.coeff); }
AnglePi operator*(const Rational& c, const AnglePi& x) { return AnglePi(c * x.coeff); }
bool operator==(const AnglePi& x, const AnglePi& y) { return x.coeff == y.coeff; }
bool operator!=(const AnglePi& x, const AnglePi& y) { return !(x == y); }
bool operator<(const AnglePi& x, const AnglePi& y) { return x.coeff < y.coeff; }

std::pair<QuadNum, int> angle_cos2_sign(const AnglePi& angle) {
  const Rational& c = angle.coeff;
  if (c == Rational(1, 5)) return {QuadNum(Rational(3, 8), Rational(1, 8), 5), 1};
  if (c == Rational(1, 3)) return {QuadNum(Rational(1, 4), Rational(0), 5), 1};
  if (c == Rational(2, 5)) return {QuadNum(Rational(3, 8), Rational(-1, 8), 5), 1};
  if (c == Rational(1, 2)) return {QuadNum(Rational(0), Rational(0), 5), 0};
  if (c == Rational(3, 5)) return {QuadNum(Rational(3, 8), Rational(-1, 8), 5), -1};
  if (c == Rational(1)) return {QuadNum(Rational(1), Rational(0), 5), -1};
  throw std::domain_error("angle_cos2_sign: unsupported angle");
}

}  // namespace fatlab
