#include "wildclust/gf2m.hpp"

#include <bit>
#include <string>

#include "wildclust/errors.hpp"

namespace wildclust {

namespace {

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0;
  std::uint64_t aa = a;
  while (b) {
    if (b & 1u) r ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t f2_mod(std::uint64_t a, std::uint32_t m) {
  int dm = f2_degree(m);
  for (int d = 63; d >= dm; --d)
    if ((a >> d) & 1u) a ^= static_cast<std::uint64_t>(m) << (d - dm);
  return a;
}

}  // namespace

int f2_degree(std::uint32_t poly) { return poly == 0 ? -1 : 31 - std::countl_zero(poly); }

bool is_irreducible_f2(std::uint32_t poly) {
  int d = f2_degree(poly);
  if (d < 1) return false;
  for (std::uint32_t g = 2; f2_degree(g) <= d / 2; ++g)
    if (f2_mod(poly, g) == 0) return false;
  return true;
}

std::uint32_t default_modulus(int m) {
  for (std::uint32_t p = (1u << m); p < (2u << m); ++p)
    if (is_irreducible_f2(p)) return p;
  fail(Errc::UnsupportedDegree, "no irreducible polynomial of degree " + std::to_string(m));
}

GF2m::GF2m(int m, std::uint32_t modulus) : m_(m), mod_(modulus) {
  if (m < 1 || m > 16) fail(Errc::UnsupportedDegree, "m = " + std::to_string(m) + " outside 1..16");
  if (f2_degree(modulus) != m)
    fail(Errc::ReduciblePresentation, "presentation degree does not match m");
  if (!is_irreducible_f2(modulus))
    fail(Errc::ReduciblePresentation, "presentation polynomial is reducible over F_2");
}

ResElem GF2m::mul(ResElem a, ResElem b) const {
  return static_cast<ResElem>(f2_mod(clmul(a, b), mod_));
}

ResElem GF2m::pow(ResElem a, std::uint64_t k) const {
  ResElem r = 1;
  while (k) {
    if (k & 1u) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

ResElem GF2m::inv(ResElem a) const {
  if (a == 0) fail(Errc::InternalInvariantViolation, "inverse of zero residue");
  return pow(a, (1ull << m_) - 2);
}

ResElem GF2m::frob_iter(ResElem c, int k) const {
  for (int i = 0; i < k; ++i) c = mul(c, c);
  return c;
}

void trim(ResPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ResPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i]) return i;
  return -1;
}

int low_degree(const ResPoly& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i]) return static_cast<int>(i);
  return -1;
}

ResElem eval(const GF2m& k, const ResPoly& p, ResElem x) {
  ResElem r = 0;
  for (size_t i = p.size(); i-- > 0;) r = k.mul(r, x) ^ p[i];
  return r;
}

}  // namespace wildclust
