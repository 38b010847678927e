#pragma once

// Per-cluster analysis: standard forms, one-sided t-functions, threshold B and
// the valid discs linked to each even cluster.

#include <optional>
#include <utility>
#include <vector>

#include "wildclust/clusters.hpp"
#include "wildclust/plfun.hpp"
#include "wildclust/psd.hpp"

namespace wildclust {

enum class Viability { none, semi_viable, viable };
enum class Uebereven { neither, semi_uebereven, uebereven };

const char* to_string(Viability v);
const char* to_string(Uebereven u);

struct ClusterAnalysis {
  int cluster = -1;
  bool even = false;
  int center = -1;  // root index used as alpha
  PLFun t_plus, t_minus;
  Q b0_plus, b0_minus;
  std::optional<int> lambda_plus, lambda_minus;
  Q B;
  std::optional<std::pair<Q, Q>> J;  // [b_minus, b_plus]
  std::vector<Q> valid_depths;       // ascending
  Viability viability = Viability::none;
  Uebereven ue = Uebereven::neither;
};

struct AnalysisOptions {
  PsdOptions psd;
  int jobs = 1;
};

// f_plus = prod_{a in s, a != alpha} (1 - (a - alpha) z / beta_plus),
// f_minus = prod_{a not in s} (1 - beta_minus z / (a - alpha)), v(beta_pm) = d_pm(s).
std::pair<ValPoly, ValPoly> standard_forms(const ClusterTree& tree, int s, int alpha);
// t_plus and t_minus, reconstructed on [0, 2].
std::pair<PLFun, PLFun> t_side_functions(const ClusterTree& tree, int s, int alpha,
                                         const PsdOptions& opts = {});
// Least b >= 0 with t(b) = 2 and the left slope there (unset when b0 = 0).
std::pair<Q, std::optional<int>> b0_and_slope(const PLFun& t);

// Analysis of one cluster with center alpha (default: first member). Viability
// is filled in; uebereven flags need the whole tree, see analyze_all.
ClusterAnalysis analyze_cluster(const ClusterTree& tree, int s, const AnalysisOptions& opts = {},
                                std::optional<int> alpha = std::nullopt);
// Index = cluster index.
std::vector<ClusterAnalysis> analyze_all(const ClusterTree& tree, const AnalysisOptions& opts = {});
Q threshold(const ClusterTree& tree, int s, const PsdOptions& opts = {});

// b -> t^R(D_{s,b}) on I(s) from the two side functions; constant 0 for odd clusters.
PLFun t_R_on_interval(const ClusterTree& tree, const ClusterAnalysis& a);

}  // namespace wildclust
