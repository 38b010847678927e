#pragma once

// Continuous piecewise-linear functions Q -> Q with finitely many breakpoints.

#include <ostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wildclust/rational.hpp"

namespace wildclust {

class PLFun {
 public:
  PLFun() : ys_{Q(0)}, slopes_{Q(0)} {}

  static PLFun constant(const Q& c);
  static PLFun line(const Q& slope, const Q& intercept);
  // Minimum of the lines y = slope * x + intercept.
  static PLFun lower_envelope(const std::vector<std::pair<Q, Q>>& lines);
  // Interpolates (xs, ys) with the given outer slopes. xs strictly increasing, nonempty.
  static PLFun from_points(const std::vector<Q>& xs, const std::vector<Q>& ys, const Q& left_slope,
                           const Q& right_slope);

  Q operator()(const Q& x) const;
  Q left_slope(const Q& x) const;
  Q right_slope(const Q& x) const;

  const std::vector<Q>& breakpoints() const { return xs_; }
  // slopes()[i] is the slope left of breakpoints()[i]; the last entry is the final slope.
  const std::vector<Q>& slopes() const { return slopes_; }
  Q value_at_breakpoint(size_t i) const { return ys_[i]; }

  PLFun min(const PLFun& o) const;
  PLFun clamp_above(const Q& c) const { return min(constant(c)); }
  // x -> f(sign * x + c), sign = +1 or -1.
  PLFun compose_affine(int sign, const Q& c) const;

  // Least x >= from with f(x) >= level, for a function that reaches it.
  std::optional<Q> first_reach(const Q& level, const Q& from) const;
  bool is_concave() const;
  bool is_nondecreasing() const;

  bool operator==(const PLFun& o) const {
    return xs_ == o.xs_ && ys_ == o.ys_ && slopes_ == o.slopes_;
  }
  std::string to_string() const;

 private:
  void canonicalize();
  size_t piece(const Q& x) const;  // index into slopes_ of the piece containing x (left-closed)

  // If xs_ is empty the function is slopes_[0] * x + ys_[0].
  std::vector<Q> xs_, ys_, slopes_;
};

inline std::ostream& operator<<(std::ostream& os, const PLFun& f) { return os << f.to_string(); }

}  // namespace wildclust
