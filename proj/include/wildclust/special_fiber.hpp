#pragma once

// Toric rank, 2-rank, component genera and node thicknesses of the special fiber.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wildclust/clusters.hpp"
#include "wildclust/valid_discs.hpp"

namespace wildclust {

struct ComponentRecord {
  int center = -1;  // root index
  Q depth;
  std::vector<int> linked;  // linked clusters, by index
  bool separable = true;
  bool irreducible = true;
  std::optional<int> genus;  // unset when split
  // Marked point -> ell. Keys are "inf" and cluster indices as "c<i>".
  std::map<std::string, int> ell;
  int branch_count = 0;
};

struct NodeRecord {
  int cluster = -1;
  Q raw;        // b_plus - b_minus in v-units
  Q thickness;  // raw / v(pi)
  int count = 2;
  int lower = -1, upper = -1;  // component indices at b_minus and b_plus
};

struct SpecialFiberReport {
  int genus = 0;
  int toric_rank = 0;
  int two_rank = 0;
  int two_rank_branch = 0;
  int abelian_rank = 0;
  Q v_pi;
  std::vector<ComponentRecord> components;
  std::vector<NodeRecord> nodes;
  bool incomplete = false;
};

int toric_rank(const std::vector<ClusterAnalysis>& analyses);
int two_rank(const std::vector<ClusterAnalysis>& analyses);
Q node_thickness(const ClusterAnalysis& a, const Q& v_pi);

// ell at infinity and at the marked points towards the roots, for the valid disc D_{alpha,b}.
std::map<std::string, int> ell_profile(const ClusterTree& tree, const std::vector<ClusterAnalysis>& analyses,
                                       int center, const Q& b);
// -1 + (1/2) sum ell; -1 means the cover splits.
int component_genus(const std::map<std::string, int>& ell);
int branch_count(const std::vector<int>& linked, const std::vector<ClusterAnalysis>& analyses);
int two_rank_via_branch_counts(const std::vector<ComponentRecord>& comps);

// v_pi unset: the coarsest uniformizer making all thicknesses integral.
SpecialFiberReport assemble_report(const ClusterTree& tree, const std::vector<ClusterAnalysis>& analyses,
                                   std::optional<Q> v_pi = std::nullopt);

}  // namespace wildclust
