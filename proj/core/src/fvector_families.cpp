#include "fatlab/fvector_families.hpp"

#include <stdexcept>

namespace fatlab {

namespace {

void need_len(const FVector& f, size_t n, const char* who) {
  if (f.size() != n) throw std::invalid_argument(std::string(who) + ": wrong f-vector length");
}

}  // namespace

Rational fatness3(const FVector& f) {
  need_len(f, 4, "fatness3");
  if (f[0] + f[3] <= 0) throw std::invalid_argument("fatness3: f0 + f3 must be positive");
  return Rational(f[1] + f[2], f[0] + f[3]);
}

Rational fatness_surface(const FVector& f) {
  need_len(f, 3, "fatness_surface");
  if (f[0] + f[2] <= 0) throw std::invalid_argument("fatness_surface: f0 + f2 must be positive");
  return Rational(f[1], f[0] + f[2]);
}

Rational kissing_average(const FVector& f) {
  if (f.empty() || f[0] <= 0) throw std::invalid_argument("kissing_average: need f0 > 0");
  if (f.size() < 2) throw std::invalid_argument("kissing_average: need f1");
  return Rational(2 * f[1], f[0]);
}

QuadNum kissing_bound() { return QuadNum(Rational(8), Rational(4), 3); }

bool steinitz_check(const FVector& f) {
  need_len(f, 3, "steinitz_check");
  if (f[0] < 4 || f[2] < 4) return false;
  return f[1] == f[0] + f[2] - 2 && f[2] <= 2 * f[0] - 4 && f[0] <= 2 * f[2] - 4;
}

bool simple_ds_check(const FVector& f) {
  need_len(f, 4, "simple_ds_check");
  return f[1] == 2 * f[0] && f[2] == f[1] + f[3] - f[0];
}

bool simplicial_ds_check(const FVector& f) {
  need_len(f, 4, "simplicial_ds_check");
  return f[2] == 2 * f[3] && f[0] - f[1] + f[2] - f[3] == 0;
}

EResult e_fvector_from_simple(const FVector& fP) {
  if (!simple_ds_check(fP))
    throw std::invalid_argument("e_fvector_from_simple: input is not simple");
  EResult r;
  r.f = {fP[2], 6 * fP[0], 6 * fP[0], fP[2]};
  r.fatness = Rational(6 * fP[0], fP[2]);
  return r;
}

EResult e_fvector_from_simplicial(const FVector& fQ) {
  if (!simplicial_ds_check(fQ))
    throw std::invalid_argument("e_fvector_from_simplicial: input is not simplicial");
  EResult r;
  r.f = {fQ[1], 6 * fQ[3], 6 * fQ[3], fQ[1]};
  r.fatness = Rational(6) * (Rational(1) - Rational(fQ[0], fQ[1]));
  return r;
}

FVector FVectorFamily::eval(const Int& n) const {
  FVector f;
  f.reserve(4);
  for (const auto& form : forms) f.push_back(form.eval(n));
  return f;
}

bool FVectorFamily::euler_identically_zero() const {
  Int sa = forms[0].a - forms[1].a + forms[2].a - forms[3].a;
  Int sb = forms[0].b - forms[1].b + forms[2].b - forms[3].b;
  return sa == 0 && sb == 0;
}

Rational FVectorFamily::fatness_limit() const {
  return Rational(forms[1].a + forms[2].a, forms[0].a + forms[3].a);
}

Rational FVectorFamily::kissing_limit() const {
  return Rational(2 * forms[1].a, forms[0].a);
}

FVectorFamily family_cross_chain_base() {
  return {"cross-chain-base", {AffineForm{4, 4}, {18, 6}, {28, 4}, {14, 2}}};
}

FVectorFamily family_cross_chain_filled() {
  return {"cross-chain-filled", {AffineForm{12, -4}, {54, -30}, {84, -52}, {42, -26}}};
}

FVectorFamily family_cross_chain_e() {
  return {"cross-chain-e", {AffineForm{54, -30}, {252, -156}, {252, -156}, {54, -30}}};
}

FVectorFamily family_cut600_q() {
  return {"cut600-chain-q", {AffineForm{106, 14}, {666, 54}, {1120, 80}, {560, 40}}};
}

FVectorFamily family_cut600_e() {
  return {"cut600-chain-e", {AffineForm{666, 54}, {3360, 240}, {3360, 240}, {666, 54}}};
}

NeighborlyCubicalResult neighborly_cubical_fvector(long n) {
  if (n < 4) throw std::invalid_argument("neighborly_cubical_fvector: n must be at least 4");
  Int scale = Int(1) << (n - 2);
  NeighborlyCubicalResult r;
  r.f = {4 * scale, 2 * n * scale, (3 * n - 6) * scale, (n - 2) * scale};
  r.fatness = Rational(5 * n - 6, n + 2);
  return r;
}

CrossChainResult cross_chain_fvectors(long n) {
  if (n < 1) throw std::invalid_argument("cross_chain_fvectors: n must be at least 1");
  CrossChainResult r;
  r.base = family_cross_chain_base().eval(n);
  // each of the 4(n-1) junction concavities is caulked by three simplices
  // adding (2, 9, 14, 7)
  r.filled = family_cross_chain_filled().eval(n);
  const long caulk[4] = {2, 9, 14, 7};
  FVector check = r.base;
  for (size_t i = 0; i < 4; ++i) check[i] += Int(4) * (n - 1) * caulk[i];
  if (check != r.filled)
    throw std::logic_error("cross_chain_fvectors: filled formula out of sync");
  auto e = e_fvector_from_simplicial(r.filled);
  r.e = e.f;
  r.fatness_e = e.fatness;
  if (r.e != family_cross_chain_e().eval(n))
    throw std::logic_error("cross_chain_fvectors: E formula out of sync");
  return r;
}

Cut600ChainResult cut600_chain_fvectors(long n) {
  if (n < 1) throw std::invalid_argument("cut600_chain_fvectors: n must be at least 1");
  Cut600ChainResult r;
  r.q = family_cut600_q().eval(n);
  auto e = e_fvector_from_simplicial(r.q);
  r.e = e.f;
  r.fatness_e = e.fatness;
  if (r.e != family_cut600_e().eval(n))
    throw std::logic_error("cut600_chain_fvectors: E formula out of sync");
  r.kissing = kissing_average(r.q);
  return r;
}

CoronaResult corona_fvector(long atoms, long bonds, long rings) {
  if (atoms < 1 || bonds < 0 || rings < 0)
    throw std::invalid_argument("corona_fvector: counts out of range");
  // each bond cuts a 13-vertex, 20-facet vertex star out of both of its
  // atoms and splices in one shared 12-vertex icosahedral interface;
  // each ring returns 3 link vertices shared around a triangle
  Int f3 = Int(600) * atoms - Int(2 * 20) * bonds;
  Int f0 = Int(120) * atoms - Int(2 * 13) * bonds + Int(12) * bonds + Int(3) * rings;
  if (f3 <= 0 || f0 <= 0) throw std::invalid_argument("corona_fvector: counts go non-positive");
  Int f1 = f0 + f3;
  Int f2 = 2 * f3;
  CoronaResult r;
  r.f = {f0, f1, f2, f3};
  if (!simplicial_ds_check(r.f))
    throw std::logic_error("corona_fvector: output not simplicial");
  r.fatness_e = Rational(6 * f3, f1);
  r.kissing = kissing_average(r.f);
  return r;
}

}  // namespace fatlab
