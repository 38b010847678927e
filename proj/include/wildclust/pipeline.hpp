#pragma once

// Input -> cluster tree -> per-cluster analysis -> special fiber report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildclust/input_spec.hpp"
#include "wildclust/report.hpp"
#include "wildclust/special_fiber.hpp"

namespace wildclust {

struct RunOptions {
  std::optional<int> N;
  std::optional<int> max_iters;
  std::optional<Q> uniformizer;
  int jobs = 1;
  std::uint64_t seed = 0;  // metadata only
};

struct Analysis {
  Instance inst;
  ClusterTree tree;
  std::vector<ClusterAnalysis> analyses;
  SpecialFiberReport fiber;
};

Analysis run_analysis(const InputSpec& in, const RunOptions& opts, const InstanceOptions& iopts = {});
ReportDocument make_report(const InputSpec& in, const Analysis& a, const RunOptions& opts);
ReportDocument analyze(const InputSpec& in, const RunOptions& opts = {});

struct SweepRow {
  long k = 0;
  Q v_lambda;
  std::vector<Q> B;  // per even cluster, in depth order
  int valid_discs = 0;
  int toric_rank = 0;
  int two_rank = 0;
  std::vector<Q> thickness;
};

// One row per k in the input's sweep spec; rows in input order regardless of jobs.
std::vector<SweepRow> sweep(const InputSpec& in, const RunOptions& opts = {});

}  // namespace wildclust
