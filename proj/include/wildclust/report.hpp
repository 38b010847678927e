#pragma once

// Serializable analysis report. Rationals are "p/q" strings, infinities "inf"/"-inf".

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wildclust/rational.hpp"

namespace wildclust {

inline constexpr const char* kToolName = "wildclust";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct ClusterEntry {
  int id = 0;
  std::vector<int> members;
  int parent = -1;
  std::vector<int> children;
  std::optional<Q> d_plus, d_minus;  // unset: infinite
  bool even = false;
  // Even proper clusters only.
  std::optional<Q> B, b0_plus, b0_minus;
  std::optional<int> lambda_plus, lambda_minus;
  std::optional<std::pair<Q, Q>> J;
  std::vector<Q> valid_discs;
  std::string viability = "none";
  std::string uebereven = "neither";

  bool operator==(const ClusterEntry&) const = default;
};

struct ComponentEntry {
  int center = 0;
  Q depth;
  std::vector<int> linked;
  bool separable = true;
  bool irreducible = true;
  std::optional<int> genus;
  std::map<std::string, int> ell;
  int branch_count = 0;

  bool operator==(const ComponentEntry&) const = default;
};

struct NodeEntry {
  int cluster = 0;
  Q raw, thickness;
  int count = 2;
  int lower = -1, upper = -1;

  bool operator==(const NodeEntry&) const = default;
};

struct ReportDocument {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  int schema = kSchemaVersion;
  std::uint64_t seed = 0;
  nlohmann::json input;
  int m = 1, e = 1, N = 1;
  std::uint32_t modulus = 3;
  int genus = 0;
  std::vector<ClusterEntry> clusters;
  int toric_rank = 0, two_rank = 0, two_rank_branch = 0, abelian_rank = 0;
  Q v_pi;
  std::vector<ComponentEntry> components;
  std::vector<NodeEntry> nodes;
  bool complete = true;

  bool operator==(const ReportDocument&) const = default;
};

nlohmann::json to_json(const ReportDocument& r);
// Throws SchemaError.
ReportDocument report_from_json(const nlohmann::json& j);

}  // namespace wildclust
