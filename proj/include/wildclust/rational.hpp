#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wildclust {

using Q = mpq_class;

inline Q make_q(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" always, including q = 1.
std::string q_to_string(const Q& x);
// Accepts "p/q", "p", and surrounding whitespace. Throws SchemaError.
Q q_from_string(const std::string& s);

mpz_class q_floor(const Q& x);
mpz_class q_ceil(const Q& x);
bool q_is_integer(const Q& x);
long q_to_long(const Q& x);  // requires integral value fitting a long

// Largest rational g with every x_i / g integral (all x_i nonzero).
Q q_gcd(const std::vector<Q>& xs);
long lcm_long(long a, long b);

}  // namespace wildclust
