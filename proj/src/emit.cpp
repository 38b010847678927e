#include "wildclust/emit.hpp"

#include <functional>
#include <sstream>

namespace wildclust {

namespace {

std::string join(const std::vector<Q>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ";";
    s += q_to_string(xs[i]);
  }
  return s;
}

}  // namespace

std::string emit_json(const ReportDocument& r) { return to_json(r).dump(2) + "\n"; }

std::string emit_dot(const ReportDocument& r) {
  std::ostringstream os;
  os << "graph special_fiber {\n";
  os << "  label=\"toric rank " << r.toric_rank << ", 2-rank " << r.two_rank << ", genus " << r.genus << "\";\n";
  for (size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    os << "  v" << i << " [label=\"D(a" << c.center << ", " << q_to_string(c.depth) << ")\\n";
    if (c.genus)
      os << "genus " << *c.genus;
    else
      os << "split";
    os << (c.separable ? ", separable" : ", inseparable") << "\"];\n";
  }
  for (const auto& n : r.nodes) {
    if (n.lower < 0 || n.upper < 0) continue;
    for (int k = 0; k < n.count; ++k)
      os << "  v" << n.lower << " -- v" << n.upper << " [label=\"" << q_to_string(n.thickness) << "\"];\n";
  }
  if (!r.complete) os << "  incomplete [shape=box, style=dashed, label=\"incomplete\"];\n";
  os << "}\n";
  return os.str();
}

std::string emit_picture(const ReportDocument& r) {
  std::function<std::string(int)> rec = [&](int id) -> std::string {
    const ClusterEntry& c = r.clusters[id];
    if (c.members.size() == 1) return "a" + std::to_string(c.members[0]);
    std::string s = "(";
    for (size_t i = 0; i < c.children.size(); ++i) {
      if (i) s += " ";
      s += rec(c.children[i]);
    }
    s += ")";
    if (c.d_minus) s += "_" + q_to_string(*c.d_plus - *c.d_minus);
    else if (c.d_plus) s += "_" + q_to_string(*c.d_plus);
    return s;
  };
  if (r.clusters.empty()) return "\n";
  return rec(0) + "\n";
}

std::string emit_cluster_csv(const ReportDocument& r) {
  std::ostringstream os;
  os << "id,size,parity,d_plus,d_minus,B,b_minus,b_plus,viability,uebereven\n";
  for (const auto& c : r.clusters) {
    os << c.id << "," << c.members.size() << "," << (c.even ? "even" : "odd") << ","
       << (c.d_plus ? q_to_string(*c.d_plus) : "inf") << "," << (c.d_minus ? q_to_string(*c.d_minus) : "-inf") << ","
       << (c.B ? q_to_string(*c.B) : "") << "," << (c.J ? q_to_string(c.J->first) : "") << ","
       << (c.J ? q_to_string(c.J->second) : "") << "," << c.viability << "," << c.uebereven << "\n";
  }
  return os.str();
}

std::string emit_sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "k,v_lambda,B,valid_discs,toric_rank,two_rank,thicknesses\n";
  for (const auto& row : rows)
    os << row.k << "," << q_to_string(row.v_lambda) << "," << join(row.B) << "," << row.valid_discs << ","
       << row.toric_rank << "," << row.two_rank << "," << join(row.thickness) << "\n";
  return os.str();
}

}  // namespace wildclust
