#pragma once

// Cluster picture of a finite set of roots under the 2-adic ultrametric.

#include <optional>
#include <vector>

#include "wildclust/local_field.hpp"
#include "wildclust/rational.hpp"
#include "wildclust/valpoly.hpp"

namespace wildclust {

struct Cluster {
  std::vector<int> members;  // sorted root indices
  std::optional<Q> d_plus;   // nullopt: +infinity (singletons)
  std::optional<Q> d_minus;  // nullopt: -infinity (the whole set)
  int parent = -1;
  std::vector<int> children;

  size_t size() const { return members.size(); }
  bool even() const { return members.size() % 2 == 0; }
  bool singleton() const { return members.size() == 1; }
  // d_plus - d_minus when both are finite.
  std::optional<Q> delta() const;
  bool contains(int root) const;
};

class ClusterTree {
 public:
  ClusterTree() = default;
  ClusterTree(std::vector<Elem> roots, std::vector<Cluster> nodes, std::vector<std::vector<std::optional<Q>>> dist)
      : roots_(std::move(roots)), nodes_(std::move(nodes)), dist_(std::move(dist)) {}

  const std::vector<Elem>& roots() const { return roots_; }
  const std::vector<Cluster>& nodes() const { return nodes_; }
  const Cluster& node(int i) const { return nodes_[i]; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int genus() const { return static_cast<int>(roots_.size() - 1) / 2; }
  // v(a_i - a_j); nullopt for i == j.
  const std::optional<Q>& dist(int i, int j) const { return dist_[i][j]; }
  // Smallest cluster containing the root with d_minus < b <= d_plus.
  int cluster_at(int root, const Q& b) const;
  int singleton_of(int root) const;

 private:
  std::vector<Elem> roots_;
  std::vector<Cluster> nodes_;  // node 0 is the whole set; parents precede children
  std::vector<std::vector<std::optional<Q>>> dist_;
};

// Throws IndistinctRoots, EvenDegreeUnsupported.
ClusterTree build_cluster_tree(const std::vector<Elem>& roots);
// Clusters s with d_minus(s) <= depth <= d_plus(s) whose members lie in D.
std::vector<int> linked_clusters(const Disc& D, const ClusterTree& tree);
// Even proper clusters ordered by depth, then by first member.
std::vector<int> even_clusters(const ClusterTree& tree);

}  // namespace wildclust
