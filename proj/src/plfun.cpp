#include "wildclust/plfun.hpp"

#include <algorithm>
#include <sstream>

#include "wildclust/errors.hpp"

namespace wildclust {

PLFun PLFun::constant(const Q& c) { return line(0, c); }

PLFun PLFun::line(const Q& slope, const Q& intercept) {
  PLFun f;
  f.xs_.clear();
  f.ys_ = {intercept};
  f.slopes_ = {slope};
  return f;
}

PLFun PLFun::from_points(const std::vector<Q>& xs, const std::vector<Q>& ys, const Q& left_slope,
                         const Q& right_slope) {
  check(!xs.empty() && xs.size() == ys.size(), "from_points: bad sizes");
  PLFun f;
  f.xs_ = xs;
  f.ys_ = ys;
  f.slopes_.clear();
  f.slopes_.push_back(left_slope);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    check(xs[i] < xs[i + 1], "from_points: xs not increasing");
    f.slopes_.push_back((ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]));
  }
  f.slopes_.push_back(right_slope);
  f.canonicalize();
  return f;
}

void PLFun::canonicalize() {
  if (xs_.empty()) return;
  std::vector<Q> xs, ys, sl;
  sl.push_back(slopes_[0]);
  for (size_t i = 0; i < xs_.size(); ++i) {
    if (slopes_[i + 1] == sl.back()) continue;
    xs.push_back(xs_[i]);
    ys.push_back(ys_[i]);
    sl.push_back(slopes_[i + 1]);
  }
  if (xs.empty()) {
    // Straight line: store its intercept.
    Q intercept = ys_[0] - slopes_[0] * xs_[0];
    xs_.clear();
    ys_ = {intercept};
    slopes_ = {sl[0]};
    return;
  }
  xs_ = std::move(xs);
  ys_ = std::move(ys);
  slopes_ = std::move(sl);
}

size_t PLFun::piece(const Q& x) const {
  // number of breakpoints <= x
  return static_cast<size_t>(std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
}

Q PLFun::operator()(const Q& x) const {
  if (xs_.empty()) return slopes_[0] * x + ys_[0];
  size_t p = piece(x);
  if (p == 0) return ys_[0] + slopes_[0] * (x - xs_[0]);
  return ys_[p - 1] + slopes_[p] * (x - xs_[p - 1]);
}

Q PLFun::right_slope(const Q& x) const {
  if (xs_.empty()) return slopes_[0];
  return slopes_[piece(x)];
}

Q PLFun::left_slope(const Q& x) const {
  if (xs_.empty()) return slopes_[0];
  size_t n = static_cast<size_t>(std::lower_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
  return slopes_[n];
}

PLFun PLFun::lower_envelope(const std::vector<std::pair<Q, Q>>& lines) {
  check(!lines.empty(), "lower_envelope of no lines");
  PLFun f = line(lines[0].first, lines[0].second);
  for (size_t i = 1; i < lines.size(); ++i) f = f.min(line(lines[i].first, lines[i].second));
  return f;
}

PLFun PLFun::min(const PLFun& o) const {
  std::vector<Q> cand = xs_;
  cand.insert(cand.end(), o.xs_.begin(), o.xs_.end());
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  auto diff = [&](const Q& x) -> Q { return (*this)(x) - o(x); };
  std::vector<Q> pts = cand;
  if (cand.empty()) {
    Q ds = slopes_[0] - o.slopes_[0];
    if (ds != 0) pts.push_back((o.ys_[0] - ys_[0]) / ds);
  } else {
    Q dl = left_slope(cand.front()) - o.left_slope(cand.front());
    Q d0 = diff(cand.front());
    if (dl != 0) {
      Q x = cand.front() - d0 / dl;
      if (x < cand.front()) pts.push_back(x);
    }
    for (size_t i = 0; i + 1 < cand.size(); ++i) {
      Q a = diff(cand[i]), b = diff(cand[i + 1]);
      if ((a < 0 && b > 0) || (a > 0 && b < 0))
        pts.push_back(cand[i] + a / (a - b) * (cand[i + 1] - cand[i]));
    }
    Q dr = right_slope(cand.back()) - o.right_slope(cand.back());
    Q d1 = diff(cand.back());
    if (dr != 0) {
      Q x = cand.back() - d1 / dr;
      if (x > cand.back()) pts.push_back(x);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) pts.push_back(0);
  std::vector<Q> ys;
  for (const Q& x : pts) ys.push_back(std::min((*this)(x), o(x)));
  Q xl = pts.front() - 1, xr = pts.back() + 1;
  Q ls = (*this)(xl) <= o(xl) ? left_slope(pts.front()) : o.left_slope(pts.front());
  if ((*this)(xl) == o(xl)) ls = std::max(left_slope(pts.front()), o.left_slope(pts.front()));
  Q rs = (*this)(xr) <= o(xr) ? right_slope(pts.back()) : o.right_slope(pts.back());
  if ((*this)(xr) == o(xr)) rs = std::min(right_slope(pts.back()), o.right_slope(pts.back()));
  return from_points(pts, ys, ls, rs);
}

PLFun PLFun::compose_affine(int sign, const Q& c) const {
  check(sign == 1 || sign == -1, "compose_affine: sign must be +-1");
  if (xs_.empty()) return line(slopes_[0] * sign, ys_[0] + slopes_[0] * c);
  std::vector<Q> xs, ys;
  for (size_t i = 0; i < xs_.size(); ++i) {
    xs.push_back(sign == 1 ? xs_[i] - c : c - xs_[i]);
    ys.push_back(ys_[i]);
  }
  Q ls = slopes_.front(), rs = slopes_.back();
  if (sign == -1) {
    std::reverse(xs.begin(), xs.end());
    std::reverse(ys.begin(), ys.end());
    Q nl = -rs, nr = -ls;
    return from_points(xs, ys, nl, nr);
  }
  return from_points(xs, ys, ls, rs);
}

std::optional<Q> PLFun::first_reach(const Q& level, const Q& from) const {
  if ((*this)(from) >= level) return from;
  std::vector<Q> pts;
  for (const Q& x : xs_)
    if (x > from) pts.push_back(x);
  Q a = from;
  for (const Q& b : pts) {
    if ((*this)(b) >= level) {
      Q s = right_slope(a);
      return a + (level - (*this)(a)) / s;
    }
    a = b;
  }
  Q s = right_slope(a);
  if (s <= 0) return std::nullopt;
  return a + (level - (*this)(a)) / s;
}

bool PLFun::is_concave() const {
  for (size_t i = 0; i + 1 < slopes_.size(); ++i)
    if (slopes_[i + 1] > slopes_[i]) return false;
  return true;
}

bool PLFun::is_nondecreasing() const {
  for (const Q& s : slopes_)
    if (s < 0) return false;
  return true;
}

std::string PLFun::to_string() const {
  std::ostringstream os;
  if (xs_.empty()) {
    os << "line(slope " << q_to_string(slopes_[0]) << ", f(0) = " << q_to_string(ys_[0]) << ")";
    return os.str();
  }
  os << "pl(slope " << q_to_string(slopes_[0]);
  for (size_t i = 0; i < xs_.size(); ++i)
    os << " | (" << q_to_string(xs_[i]) << ", " << q_to_string(ys_[i]) << ") slope "
       << q_to_string(slopes_[i + 1]);
  os << ")";
  return os.str();
}

}  // namespace wildclust
