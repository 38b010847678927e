#include "wildclust/rational.hpp"

#include <cctype>
#include <numeric>

#include "wildclust/errors.hpp"

namespace wildclust {

std::string q_to_string(const Q& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Q q_from_string(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) fail(Errc::SchemaError, "empty rational");
  auto slash = t.find('/');
  auto valid_int = [](const std::string& u) {
    if (u.empty()) return false;
    size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) fail(Errc::SchemaError, "bad rational '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) fail(Errc::SchemaError, "zero denominator in '" + s + "'");
  Q r(n, d);
  r.canonicalize();
  return r;
}

mpz_class q_floor(const Q& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

mpz_class q_ceil(const Q& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

bool q_is_integer(const Q& x) { return x.get_den() == 1; }

long q_to_long(const Q& x) {
  if (!q_is_integer(x) || !x.get_num().fits_slong_p())
    fail(Errc::InternalInvariantViolation, "rational " + q_to_string(x) + " is not a small integer");
  return x.get_num().get_si();
}

Q q_gcd(const std::vector<Q>& xs) {
  mpz_class g = 0, l = 1;
  for (const Q& x : xs) {
    mpz_class n = abs(x.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  Q r(g, l);
  r.canonicalize();
  return r;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace wildclust
