#include "wildclust/clusters.hpp"

#include <algorithm>
#include <numeric>

#include "wildclust/errors.hpp"

namespace wildclust {

std::optional<Q> Cluster::delta() const {
  if (!d_plus || !d_minus) return std::nullopt;
  return *d_plus - *d_minus;
}

bool Cluster::contains(int root) const { return std::binary_search(members.begin(), members.end(), root); }

int ClusterTree::cluster_at(int root, const Q& b) const {
  int best = -1;
  for (int i = 0; i < size(); ++i) {
    const Cluster& c = nodes_[i];
    if (!c.contains(root)) continue;
    bool lo = !c.d_minus || *c.d_minus < b;
    bool hi = !c.d_plus || b <= *c.d_plus;
    if (lo && hi) best = i;
  }
  check(best >= 0, "no cluster at the given depth");
  return best;
}

int ClusterTree::singleton_of(int root) const {
  for (int i = 0; i < size(); ++i)
    if (nodes_[i].singleton() && nodes_[i].members[0] == root) return i;
  fail(Errc::InternalInvariantViolation, "missing singleton");
}

ClusterTree build_cluster_tree(const std::vector<Elem>& roots) {
  const int n = static_cast<int>(roots.size());
  if (n == 0 || n % 2 == 0)
    fail(Errc::EvenDegreeUnsupported, "need an odd number of roots, got " + std::to_string(n));
  std::vector<std::vector<std::optional<Q>>> dist(n, std::vector<std::optional<Q>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Elem d = roots[i] - roots[j];
      if (d.is_zero())
        fail(Errc::IndistinctRoots, "roots " + std::to_string(i) + " and " + std::to_string(j) +
                                        " agree to precision " + q_to_string(d.precision()));
      dist[i][j] = dist[j][i] = d.val();
    }

  std::vector<Cluster> nodes;
  Cluster top;
  top.members.resize(n);
  std::iota(top.members.begin(), top.members.end(), 0);
  nodes.push_back(top);
  for (size_t k = 0; k < nodes.size(); ++k) {
    std::vector<int> mem = nodes[k].members;
    if (mem.size() == 1) continue;
    Q d = *dist[mem[0]][mem[1]];
    for (size_t a = 0; a < mem.size(); ++a)
      for (size_t b = a + 1; b < mem.size(); ++b) d = std::min(d, *dist[mem[a]][mem[b]]);
    nodes[k].d_plus = d;
    // classes of v > d; transitive by the ultrametric inequality
    std::vector<bool> used(mem.size(), false);
    for (size_t a = 0; a < mem.size(); ++a) {
      if (used[a]) continue;
      Cluster c;
      c.parent = static_cast<int>(k);
      c.d_minus = d;
      for (size_t b = a; b < mem.size(); ++b)
        if (!used[b] && (b == a || *dist[mem[a]][mem[b]] > d)) {
          used[b] = true;
          c.members.push_back(mem[b]);
        }
      nodes[k].children.push_back(static_cast<int>(nodes.size()));
      nodes.push_back(std::move(c));
    }
    check(nodes[k].children.size() >= 2, "cluster with fewer than two children");
  }
  return ClusterTree(roots, std::move(nodes), std::move(dist));
}

std::vector<int> linked_clusters(const Disc& D, const ClusterTree& tree) {
  std::vector<int> out;
  for (int i = 0; i < tree.size(); ++i) {
    const Cluster& c = tree.node(i);
    if (c.d_minus && D.depth < *c.d_minus) continue;
    if (c.d_plus && D.depth > *c.d_plus) continue;
    Elem diff = tree.roots()[c.members[0]] - D.center;
    if (!diff.is_zero() && diff.val() < D.depth) continue;
    out.push_back(i);
  }
  return out;
}

std::vector<int> even_clusters(const ClusterTree& tree) {
  std::vector<int> out;
  for (int i = 0; i < tree.size(); ++i)
    if (tree.node(i).even() && tree.node(i).d_minus) out.push_back(i);
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
    const Cluster& x = tree.node(a);
    const Cluster& y = tree.node(b);
    if (*x.d_plus != *y.d_plus) return *x.d_plus < *y.d_plus;
    return x.members[0] < y.members[0];
  });
  return out;
}

}  // namespace wildclust
