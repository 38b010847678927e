#include "wildclust/special_fiber.hpp"

#include <algorithm>

#include "wildclust/errors.hpp"

namespace wildclust {

namespace {

int ell_from_right(const Q& d) {
  if (d >= 0) return 0;
  if (!q_is_integer(d) || q_to_long(d) % 2 == 0)
    fail(Errc::IndeterminateEll, "right derivative " + q_to_string(d) + " is neither >= 0 nor odd");
  return static_cast<int>(1 - q_to_long(d));
}

int ell_from_left(const Q& d) {
  if (d <= 0) return 0;
  if (!q_is_integer(d) || q_to_long(d) % 2 == 0)
    fail(Errc::IndeterminateEll, "left derivative " + q_to_string(d) + " is neither <= 0 nor odd");
  return static_cast<int>(1 + q_to_long(d));
}

}  // namespace

int toric_rank(const std::vector<ClusterAnalysis>& analyses) {
  int viable = 0, ue = 0;
  for (const auto& a : analyses) {
    viable += a.viability == Viability::viable;
    ue += a.ue == Uebereven::uebereven;
  }
  return viable - ue;
}

int two_rank(const std::vector<ClusterAnalysis>& analyses) {
  int semi = 0, viable = 0;
  for (const auto& a : analyses) {
    semi += a.viability != Viability::none && a.ue == Uebereven::neither;
    viable += a.viability == Viability::viable && a.ue != Uebereven::uebereven;
  }
  int r = semi - viable;
  check(r >= 0, "negative 2-rank");
  return r;
}

Q node_thickness(const ClusterAnalysis& a, const Q& v_pi) {
  check(a.viability == Viability::viable && a.J, "thickness of a non-viable cluster");
  return (a.J->second - a.J->first) / v_pi;
}

std::map<std::string, int> ell_profile(const ClusterTree& tree, const std::vector<ClusterAnalysis>& analyses,
                                       int center, const Q& b) {
  std::map<std::string, int> ell;
  int s = tree.cluster_at(center, b);
  const Cluster& c = tree.node(s);
  PLFun t = t_R_on_interval(tree, analyses[s]);
  ell["inf"] = ell_from_left(t.left_slope(b));
  if (!c.d_plus || b < *c.d_plus) {
    ell["c" + std::to_string(s)] = ell_from_right(t.right_slope(b));
  } else {
    for (int ch : c.children) {
      PLFun tc = t_R_on_interval(tree, analyses[ch]);
      ell["c" + std::to_string(ch)] = ell_from_right(tc.right_slope(b));
    }
  }
  for (const auto& [k, v] : ell) check(v == 0 || (v >= 2 && v % 2 == 0), "ell " + k + " not even");
  return ell;
}

int component_genus(const std::map<std::string, int>& ell) {
  int sum = 0;
  for (const auto& [k, v] : ell) sum += v;
  check(sum % 2 == 0, "odd ell sum");
  return -1 + sum / 2;
}

int branch_count(const std::vector<int>& linked, const std::vector<ClusterAnalysis>& analyses) {
  if (linked.empty()) return 1;
  if (linked.size() == 1) return analyses[linked[0]].viability == Viability::viable ? 1 : 2;
  int m = 0;
  for (int i : linked) m += analyses[i].viability != Viability::viable;
  return m;
}

int two_rank_via_branch_counts(const std::vector<ComponentRecord>& comps) {
  int r = 0;
  for (const auto& c : comps) r += std::max(c.branch_count - 1, 0);
  return r;
}

SpecialFiberReport assemble_report(const ClusterTree& tree, const std::vector<ClusterAnalysis>& analyses,
                                   std::optional<Q> v_pi) {
  SpecialFiberReport rep;
  rep.genus = tree.genus();
  rep.toric_rank = toric_rank(analyses);
  rep.two_rank = two_rank(analyses);
  rep.abelian_rank = rep.genus - rep.toric_rank;
  check(rep.abelian_rank >= 0, "toric rank exceeds the genus");
  check(rep.two_rank <= rep.abelian_rank, "2-rank exceeds the abelian rank");

  // Valid discs, deduplicated by depth and the roots they contain.
  auto find_component = [&](int center, const Q& depth) -> int {
    for (size_t i = 0; i < rep.components.size(); ++i) {
      const auto& c = rep.components[i];
      if (c.depth != depth) continue;
      const auto& d = tree.dist(center, c.center);
      if (center == c.center || (d && *d >= depth)) return static_cast<int>(i);
    }
    return -1;
  };
  for (const auto& a : analyses) {
    for (const Q& b : a.valid_depths) {
      if (find_component(a.center, b) >= 0) continue;
      ComponentRecord comp;
      comp.center = a.center;
      comp.depth = b;
      comp.linked = linked_clusters(Disc{tree.roots()[a.center], b}, tree);
      comp.ell = ell_profile(tree, analyses, a.center, b);
      int g = component_genus(comp.ell);
      comp.irreducible = g >= 0;
      if (g >= 0) comp.genus = g;
      comp.branch_count = branch_count(comp.linked, analyses);
      rep.components.push_back(std::move(comp));
    }
  }

  // A split cover sits exactly at D_{s, d_plus(s)} for uebereven s, and conversely.
  for (const auto& comp : rep.components) {
    bool ue_here = false;
    for (const auto& a : analyses)
      if (a.ue == Uebereven::uebereven && *tree.node(a.cluster).d_plus == comp.depth &&
          tree.node(a.cluster).contains(comp.center))
        ue_here = true;
    check(ue_here == !comp.irreducible, "split components and uebereven clusters do not match");
  }

  std::vector<Q> raws;
  for (const auto& a : analyses) {
    if (a.viability != Viability::viable) continue;
    NodeRecord n;
    n.cluster = a.cluster;
    n.raw = a.J->second - a.J->first;
    check(n.raw > 0, "viable cluster with b_plus <= b_minus");
    n.lower = find_component(a.center, a.J->first);
    n.upper = find_component(a.center, a.J->second);
    raws.push_back(n.raw);
    rep.nodes.push_back(n);
  }
  if (v_pi) {
    check(*v_pi > 0, "uniformizer valuation must be positive");
    rep.v_pi = *v_pi;
  } else {
    long l = 1;
    for (const Q& r : raws) l = lcm_long(l, static_cast<long>(mpz_class(r.get_den()).get_si()));
    rep.v_pi = Q(1, l);
    rep.v_pi.canonicalize();
  }
  for (auto& n : rep.nodes) n.thickness = n.raw / rep.v_pi;

  rep.two_rank_branch = two_rank_via_branch_counts(rep.components);
  check(rep.two_rank == rep.two_rank_branch,
        "2-rank " + std::to_string(rep.two_rank) + " disagrees with branch-count route " +
            std::to_string(rep.two_rank_branch));

  int genera = 0;
  bool many_linked = false;
  for (const auto& c : rep.components) {
    genera += c.genus.value_or(0);
    many_linked = many_linked || c.linked.size() >= 3;
  }
  check(rep.toric_rank + genera <= rep.genus, "component genera exceed the abelian rank");
  rep.incomplete = many_linked || rep.toric_rank + genera < rep.genus;
  return rep;
}

}  // namespace wildclust
