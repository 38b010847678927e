#include "wildclust/valid_discs.hpp"

#include <algorithm>

#include "wildclust/errors.hpp"
#include "wildclust/parallel.hpp"

namespace wildclust {

namespace {

const Q kTwo(2);

// Slopes of t on [0, b0] must be decreasing odd integers in [1, bound].
void check_side_slopes(const PLFun& t, const Q& b0, long bound, const char* which) {
  std::vector<Q> xs{Q(0)};
  for (const Q& x : t.breakpoints())
    if (x > 0 && x < b0) xs.push_back(x);
  xs.push_back(b0);
  std::optional<Q> prev;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] == xs[i + 1]) continue;
    Q s = (t(xs[i + 1]) - t(xs[i])) / (xs[i + 1] - xs[i]);
    bool ok = q_is_integer(s) && s > 0 && s <= bound && q_to_long(s) % 2 == 1 && (!prev || s <= *prev);
    check(ok, std::string(which) + " has slope " + q_to_string(s) + " outside the odd range 1.." +
                  std::to_string(bound));
    prev = s;
  }
}

}  // namespace

const char* to_string(Viability v) {
  switch (v) {
    case Viability::none: return "none";
    case Viability::semi_viable: return "semi_viable";
    case Viability::viable: return "viable";
  }
  return "?";
}

const char* to_string(Uebereven u) {
  switch (u) {
    case Uebereven::neither: return "neither";
    case Uebereven::semi_uebereven: return "semi_uebereven";
    case Uebereven::uebereven: return "uebereven";
  }
  return "?";
}

std::pair<ValPoly, ValPoly> standard_forms(const ClusterTree& tree, int s, int alpha) {
  const Cluster& c = tree.node(s);
  check(c.d_plus && c.d_minus, "standard forms need a proper non-singleton cluster");
  check(c.contains(alpha), "center must be a member of the cluster");
  const auto& R = tree.roots();
  const FieldContext& ctx = R[alpha].ctx();
  auto pi_units = [&](const Q& d) {
    Q k = d * ctx.e;
    if (!q_is_integer(k)) fail(Errc::ValueGroupGap, "depth " + q_to_string(d) + " not in the value group");
    return static_cast<std::int64_t>(q_to_long(k));
  };
  const std::int64_t kp = pi_units(*c.d_plus), km = pi_units(*c.d_minus);
  std::vector<Elem> up, um;
  for (int i = 0; i < static_cast<int>(R.size()); ++i) {
    if (i == alpha) continue;
    Elem d = R[i] - R[alpha];
    if (c.contains(i))
      up.push_back(d.mul_pi(-kp));
    else
      um.push_back(d.inverse().mul_pi(km));
  }
  return {ValPoly::from_reciprocal_roots(ctx, up), ValPoly::from_reciprocal_roots(ctx, um)};
}

std::pair<PLFun, PLFun> t_side_functions(const ClusterTree& tree, int s, int alpha, const PsdOptions& opts) {
  auto [fp, fm] = standard_forms(tree, s, alpha);
  return {t_fun_reconstruct(fp, 0, kTwo, opts), t_fun_reconstruct(fm, 0, kTwo, opts)};
}

std::pair<Q, std::optional<int>> b0_and_slope(const PLFun& t) {
  auto b0 = t.first_reach(kTwo, Q(0));
  if (!b0) fail(Errc::NeverReachesCeiling, "t never reaches 2: " + t.to_string());
  if (*b0 == 0) return {*b0, std::nullopt};
  Q s = t.left_slope(*b0);
  check(q_is_integer(s), "non-integral slope at b0");
  return {*b0, static_cast<int>(q_to_long(s))};
}

ClusterAnalysis analyze_cluster(const ClusterTree& tree, int s, const AnalysisOptions& opts,
                                std::optional<int> alpha) {
  const Cluster& c = tree.node(s);
  ClusterAnalysis a;
  a.cluster = s;
  a.even = c.even() && c.d_minus.has_value();
  a.center = alpha ? *alpha : c.members[0];
  if (!a.even) return a;

  std::tie(a.t_plus, a.t_minus) = t_side_functions(tree, s, a.center, opts.psd);
  std::tie(a.b0_plus, a.lambda_plus) = b0_and_slope(a.t_plus);
  std::tie(a.b0_minus, a.lambda_minus) = b0_and_slope(a.t_minus);
  const long n = static_cast<long>(c.size());
  const long rest = static_cast<long>(tree.roots().size()) - n;
  check_side_slopes(a.t_plus, a.b0_plus, n - 1, "t_plus");
  check_side_slopes(a.t_minus, a.b0_minus, rest, "t_minus");
  a.B = a.b0_plus + a.b0_minus;
  check(a.B >= 0 && a.B <= 4, "threshold " + q_to_string(a.B) + " outside [0, 4]");

  const Q delta = *c.delta();
  if (delta >= a.B) {
    Q bp = *c.d_plus - a.b0_plus, bm = *c.d_minus + a.b0_minus;
    a.J = std::make_pair(bm, bp);
    a.valid_depths.push_back(bm);
    if (bp != bm) a.valid_depths.push_back(bp);
    a.viability = delta > a.B ? Viability::viable : Viability::semi_viable;
  }
  return a;
}

std::vector<ClusterAnalysis> analyze_all(const ClusterTree& tree, const AnalysisOptions& opts) {
  std::vector<ClusterAnalysis> out(tree.size());
  parallel_for(out.size(), opts.jobs, [&](size_t i) { out[i] = analyze_cluster(tree, static_cast<int>(i), opts); });

  for (int i = tree.size(); i-- > 0;) {
    ClusterAnalysis& a = out[i];
    const Cluster& c = tree.node(i);
    if (a.viability == Viability::none) continue;
    bool all_viable = true, all_semi = true, all_plus_full = true;
    for (int ch : c.children) {
      const ClusterAnalysis& b = out[ch];
      all_viable = all_viable && b.viability == Viability::viable;
      all_semi = all_semi && b.viability != Viability::none;
      all_plus_full = all_plus_full && b.even && b.t_plus(*tree.node(ch).delta()) == kTwo;
    }
    if (a.viability == Viability::viable && all_viable)
      a.ue = Uebereven::uebereven;
    else if (all_semi)
      a.ue = Uebereven::semi_uebereven;
    if (a.ue != Uebereven::neither)
      check(a.b0_plus == 0, "semi-uebereven cluster with b0_plus = " + q_to_string(a.b0_plus));
    if (all_plus_full) check(a.t_plus(Q(0)) == kTwo, "children all full but t_plus(0) < 2");
  }
  // The propagation check applies to non-viable clusters as well.
  for (int i = 0; i < tree.size(); ++i) {
    const ClusterAnalysis& a = out[i];
    if (!a.even || a.viability != Viability::none) continue;
    bool all_plus_full = true;
    for (int ch : tree.node(i).children)
      all_plus_full = all_plus_full && out[ch].even && out[ch].t_plus(*tree.node(ch).delta()) == kTwo;
    if (all_plus_full) check(a.t_plus(Q(0)) == kTwo, "children all full but t_plus(0) < 2");
  }
  return out;
}

Q threshold(const ClusterTree& tree, int s, const PsdOptions& opts) {
  AnalysisOptions o;
  o.psd = opts;
  ClusterAnalysis a = analyze_cluster(tree, s, o);
  check(a.even, "threshold of an odd cluster");
  return a.B;
}

PLFun t_R_on_interval(const ClusterTree& tree, const ClusterAnalysis& a) {
  if (!a.even) return PLFun::constant(0);
  const Cluster& c = tree.node(a.cluster);
  return a.t_plus.compose_affine(-1, *c.d_plus).min(a.t_minus.compose_affine(1, -*c.d_minus));
}

}  // namespace wildclust
