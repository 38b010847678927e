#include "wildclust/report.hpp"

#include "wildclust/errors.hpp"

namespace wildclust {

using nlohmann::json;

namespace {

json qj(const Q& x) { return q_to_string(x); }

json opt_q(const std::optional<Q>& x, const char* inf) { return x ? qj(*x) : json(inf); }

json opt_int(const std::optional<int>& x) { return x ? json(*x) : json(nullptr); }

json q_list(const std::vector<Q>& xs) {
  json a = json::array();
  for (const Q& x : xs) a.push_back(qj(x));
  return a;
}

const json& at(const json& j, const char* k) {
  if (!j.is_object() || !j.contains(k)) fail(Errc::SchemaError, std::string("report: missing \"") + k + "\"");
  return j.at(k);
}

Q q_of(const json& j) {
  if (!j.is_string()) fail(Errc::SchemaError, "report: expected a rational string");
  return q_from_string(j.get<std::string>());
}

std::optional<Q> opt_q_of(const json& j) {
  if (j.is_string() && (j == "inf" || j == "-inf")) return std::nullopt;
  if (j.is_null()) return std::nullopt;
  return q_of(j);
}

std::optional<int> opt_int_of(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

std::vector<Q> q_list_of(const json& j) {
  std::vector<Q> out;
  for (const auto& x : j) out.push_back(q_of(x));
  return out;
}

}  // namespace

json to_json(const ReportDocument& r) {
  json clusters = json::array();
  for (const auto& c : r.clusters) {
    json o = {{"id", c.id},
              {"members", c.members},
              {"parent", c.parent},
              {"children", c.children},
              {"d_plus", opt_q(c.d_plus, "inf")},
              {"d_minus", opt_q(c.d_minus, "-inf")},
              {"delta", c.d_plus && c.d_minus ? qj(*c.d_plus - *c.d_minus) : json("inf")},
              {"parity", c.even ? "even" : "odd"}};
    if (c.B) {
      o["analysis"] = {{"B", qj(*c.B)},
                       {"b0_plus", qj(*c.b0_plus)},
                       {"b0_minus", qj(*c.b0_minus)},
                       {"lambda_plus", opt_int(c.lambda_plus)},
                       {"lambda_minus", opt_int(c.lambda_minus)},
                       {"J", c.J ? json::array({qj(c.J->first), qj(c.J->second)}) : json(nullptr)},
                       {"valid_discs", q_list(c.valid_discs)},
                       {"viability", c.viability},
                       {"uebereven", c.uebereven}};
    }
    clusters.push_back(o);
  }
  json comps = json::array();
  for (const auto& c : r.components) {
    json ell = json::object();
    for (const auto& [k, v] : c.ell) ell[k] = v;
    comps.push_back({{"center", c.center},
                     {"depth", qj(c.depth)},
                     {"linked", c.linked},
                     {"separable", c.separable},
                     {"irreducible", c.irreducible},
                     {"genus", c.genus ? json(*c.genus) : json("split")},
                     {"ell", ell},
                     {"branch_count", c.branch_count}});
  }
  json nodes = json::array();
  for (const auto& n : r.nodes)
    nodes.push_back({{"cluster", n.cluster},
                     {"raw", qj(n.raw)},
                     {"thickness", qj(n.thickness)},
                     {"count", n.count},
                     {"lower", n.lower},
                     {"upper", n.upper}});
  return {{"tool", r.tool},
          {"version", r.version},
          {"schema", r.schema},
          {"seed", r.seed},
          {"input", r.input},
          {"field", {{"m", r.m}, {"e", r.e}, {"N", r.N}, {"modulus", r.modulus}}},
          {"genus", r.genus},
          {"clusters", clusters},
          {"global",
           {{"toric_rank", r.toric_rank},
            {"two_rank", r.two_rank},
            {"two_rank_branch_counts", r.two_rank_branch},
            {"abelian_rank", r.abelian_rank}}},
          {"uniformizer_valuation", qj(r.v_pi)},
          {"components", comps},
          {"nodes", nodes},
          {"complete", r.complete}};
}

ReportDocument report_from_json(const json& j) {
  try {
    ReportDocument r;
    r.tool = at(j, "tool").get<std::string>();
    r.version = at(j, "version").get<std::string>();
    r.schema = at(j, "schema").get<int>();
    if (r.schema != kSchemaVersion) fail(Errc::SchemaError, "unsupported report schema version");
    r.seed = at(j, "seed").get<std::uint64_t>();
    r.input = at(j, "input");
    const json& f = at(j, "field");
    r.m = at(f, "m").get<int>();
    r.e = at(f, "e").get<int>();
    r.N = at(f, "N").get<int>();
    r.modulus = at(f, "modulus").get<std::uint32_t>();
    r.genus = at(j, "genus").get<int>();
    for (const auto& o : at(j, "clusters")) {
      ClusterEntry c;
      c.id = at(o, "id").get<int>();
      c.members = at(o, "members").get<std::vector<int>>();
      c.parent = at(o, "parent").get<int>();
      c.children = at(o, "children").get<std::vector<int>>();
      c.d_plus = opt_q_of(at(o, "d_plus"));
      c.d_minus = opt_q_of(at(o, "d_minus"));
      c.even = at(o, "parity") == "even";
      if (o.contains("analysis")) {
        const json& a = o["analysis"];
        c.B = q_of(at(a, "B"));
        c.b0_plus = q_of(at(a, "b0_plus"));
        c.b0_minus = q_of(at(a, "b0_minus"));
        c.lambda_plus = opt_int_of(at(a, "lambda_plus"));
        c.lambda_minus = opt_int_of(at(a, "lambda_minus"));
        const json& J = at(a, "J");
        if (!J.is_null()) c.J = std::make_pair(q_of(J.at(0)), q_of(J.at(1)));
        c.valid_discs = q_list_of(at(a, "valid_discs"));
        c.viability = at(a, "viability").get<std::string>();
        c.uebereven = at(a, "uebereven").get<std::string>();
      }
      r.clusters.push_back(std::move(c));
    }
    const json& g = at(j, "global");
    r.toric_rank = at(g, "toric_rank").get<int>();
    r.two_rank = at(g, "two_rank").get<int>();
    r.two_rank_branch = at(g, "two_rank_branch_counts").get<int>();
    r.abelian_rank = at(g, "abelian_rank").get<int>();
    r.v_pi = q_of(at(j, "uniformizer_valuation"));
    for (const auto& o : at(j, "components")) {
      ComponentEntry c;
      c.center = at(o, "center").get<int>();
      c.depth = q_of(at(o, "depth"));
      c.linked = at(o, "linked").get<std::vector<int>>();
      c.separable = at(o, "separable").get<bool>();
      c.irreducible = at(o, "irreducible").get<bool>();
      const json& gen = at(o, "genus");
      if (!gen.is_string()) c.genus = gen.get<int>();
      for (auto it = at(o, "ell").begin(); it != at(o, "ell").end(); ++it) c.ell[it.key()] = it.value().get<int>();
      c.branch_count = at(o, "branch_count").get<int>();
      r.components.push_back(std::move(c));
    }
    for (const auto& o : at(j, "nodes")) {
      NodeEntry n;
      n.cluster = at(o, "cluster").get<int>();
      n.raw = q_of(at(o, "raw"));
      n.thickness = q_of(at(o, "thickness"));
      n.count = at(o, "count").get<int>();
      n.lower = at(o, "lower").get<int>();
      n.upper = at(o, "upper").get<int>();
      r.nodes.push_back(n);
    }
    r.complete = at(j, "complete").get<bool>();
    return r;
  } catch (const json::exception& e) {
    fail(Errc::SchemaError, std::string("report: ") + e.what());
  }
}

}  // namespace wildclust
