#pragma once

#include <string>
#include <vector>

#include "wildclust/pipeline.hpp"
#include "wildclust/report.hpp"

namespace wildclust {

std::string emit_json(const ReportDocument& r);
// One vertex per component, doubled edges for the nodes of viable clusters.
std::string emit_dot(const ReportDocument& r);
// Nested parentheses; roots by index, relative depths as subscripts.
std::string emit_picture(const ReportDocument& r);
std::string emit_cluster_csv(const ReportDocument& r);
std::string emit_sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace wildclust
