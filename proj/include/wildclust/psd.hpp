#pragma once

// Part-square decompositions h = sigma (q^2 + rho) and the t-function b -> t(D_{0,b}).
//
// sigma is a unit scalar; over an algebraic closure it is a square, so the
// decomposition has the same t as an honest one.

#include <optional>
#include <random>
#include <vector>

#include "wildclust/plfun.hpp"
#include "wildclust/valpoly.hpp"

namespace wildclust {

struct PsdOptions {
  int max_iterations = 64;
  int max_e = 256;
  // When set, every square-root lift gets random higher digits.
  std::mt19937_64* jitter = nullptr;
};

struct PSD {
  ValPoly h;  // working copy, re-embedded if the tower grew
  ValPoly q, rho;
  Elem sigma;
  Depth at;
  Tick h_tick;
  // rho's tick minus h's; nullopt once rho is provably beyond the ceiling.
  std::optional<Tick> t;
  std::vector<int> rho_active;
  int iterations = 0;

  bool at_ceiling() const;
  // At the ceiling or the reduction of rho is not a square.
  bool good() const;
  Q truncated() const;
  // Slope of the truncated t in the direction of at.side (0 if side is 0).
  Q one_sided_slope() const;
};

bool is_square_reduction(const ResPoly& r);

PSD trivial_decomposition(const ValPoly& h, const Depth& d);
// One improvement step. Throws NotImprovable if the decomposition is already good.
PSD improve_once(const PSD& p, const PsdOptions& opts = {});
PSD good_decomposition_at(const ValPoly& h, const Depth& d, const PsdOptions& opts = {});

// Truncated t of h at D_{0,b}.
Q t_value(const ValPoly& h, const Q& b, const PsdOptions& opts = {});
// Truncated t of prod (x - a) at the disc.
Q t_value(const std::vector<Elem>& roots, const Disc& D, const PsdOptions& opts = {});

struct TSample {
  Q x, value, left_slope, right_slope;
};
TSample t_sample(const ValPoly& h, const Q& b, const PsdOptions& opts = {});

// Exact b -> truncated t(D_{0,b}) on [lo, hi], assuming it is concave there.
// Outside [lo, hi] the function continues with the one-sided slopes at the ends.
PLFun t_fun_reconstruct(const ValPoly& h, const Q& lo, const Q& hi, const PsdOptions& opts = {});
PLFun t_fun_reconstruct(const std::vector<Elem>& roots, const Elem& alpha, const Q& lo, const Q& hi,
                        const PsdOptions& opts = {});

}  // namespace wildclust
