#pragma once

#include <cstdint>
#include <vector>

namespace wildclust {

// F_{2^m} for m <= 16, elements as bit vectors in the polynomial basis of the
// presentation modulus (bit m set).
using ResElem = std::uint32_t;

class GF2m {
 public:
  GF2m() = default;
  // Throws UnsupportedDegree / ReduciblePresentation.
  GF2m(int m, std::uint32_t modulus);

  int m() const { return m_; }
  std::uint32_t modulus() const { return mod_; }
  std::uint32_t size() const { return 1u << m_; }

  ResElem add(ResElem a, ResElem b) const { return a ^ b; }
  ResElem mul(ResElem a, ResElem b) const;
  ResElem sqr(ResElem a) const { return mul(a, a); }
  ResElem pow(ResElem a, std::uint64_t k) const;
  ResElem inv(ResElem a) const;  // a != 0
  // c^(2^(m-1)); the Frobenius is bijective so this is the unique root.
  ResElem sqrt(ResElem c) const { return frob_iter(c, m_ - 1); }
  ResElem frob_iter(ResElem c, int k) const;

  bool operator==(const GF2m& o) const { return m_ == o.m_ && mod_ == o.mod_; }

 private:
  int m_ = 1;
  std::uint32_t mod_ = 0b11;
};

// Irreducibility over F_2 by trial division (degree <= 16).
bool is_irreducible_f2(std::uint32_t poly);
int f2_degree(std::uint32_t poly);
// Smallest irreducible polynomial of degree m (as an integer bit pattern).
std::uint32_t default_modulus(int m);

// Polynomials over F_{2^m}, index = degree. Trailing zeros trimmed by helpers.
using ResPoly = std::vector<ResElem>;
void trim(ResPoly& p);
int degree(const ResPoly& p);   // -1 for zero
int low_degree(const ResPoly& p);  // -1 for zero
ResElem eval(const GF2m& k, const ResPoly& p, ResElem x);

}  // namespace wildclust
