#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "wildclust/emit.hpp"
#include "wildclust/errors.hpp"
#include "wildclust/input_spec.hpp"
#include "wildclust/pipeline.hpp"
#include "wildclust/report.hpp"

using namespace wildclust;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputSpec load(const std::string& name) { return parse_input_text(slurp(std::string(WILDCLUST_INPUTS) + "/" + name)); }

Errc schema_code(const std::string& text) {
  try {
    parse_input_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InternalInvariantViolation;
}

int run_cli(const std::string& args, const std::string& out = "/dev/null") {
  std::string cmd = std::string(WILDCLUST_CLI) + " " + args + " > " + out + " 2>/dev/null";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("input parsing") {
  InputSpec in = load("example1.json");
  CHECK(in.m == 3);
  CHECK(in.e == 1);
  CHECK(in.roots.size() == 5);
  CHECK(in.roots[2].hensel);
  CHECK(in.presentation == std::vector<int>{1, 1, 0, 1});
  // round trip through the canonical form
  InputSpec again = parse_input(to_json(in));
  CHECK(to_json(again) == to_json(in));
  Instance inst = instantiate(in);
  CHECK(inst.roots.size() == 5);
  CHECK(inst.ctx.N == 48);  // 8 (1 + 5)
}

TEST_CASE("schema errors") {
  CHECK(schema_code("not json") == Errc::SchemaError);
  CHECK(schema_code(R"({"roots": [0, 1, 2]})") == Errc::SchemaError);
  CHECK(schema_code(R"({"field": {"m": 1, "e": 1}, "roots": [0, 1, 2], "extra": 1})") == Errc::SchemaError);
  CHECK(schema_code(R"({"field": {"m": 0, "e": 1}, "roots": [0, 1, 2]})") == Errc::SchemaError);
  CHECK(schema_code(R"({"field": {"m": 1, "e": 1}, "roots": "x"})") == Errc::SchemaError);
  CHECK(schema_code(R"({"field": {"m": 1, "e": 1}, "roots": [0, {"bogus": 1}, 2]})") == Errc::SchemaError);
  CHECK(schema_code(R"({"field": {"m": 1, "e": 1}, "roots": [0, 1, 2], "options": {"uniformizer_valuation": "1/0"}})") ==
        Errc::SchemaError);
}

TEST_CASE("report json round trip") {
  ReportDocument r = analyze(load("example2_g2.json"));
  json j = to_json(r);
  ReportDocument back = report_from_json(j);
  CHECK(back == r);
  CHECK(to_json(back) == j);
  CHECK(j["global"]["toric_rank"] == 1);
  CHECK(j["complete"] == true);
  CHECK_THROWS_AS(report_from_json(json::object()), Error);
}

TEST_CASE("emitters") {
  ReportDocument r = analyze(load("example1.json"));
  std::string dot = emit_dot(r);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("--") != std::string::npos);
  CHECK(emit_picture(r) == "((a0 a1)_5/1 a2 a3 a4)_0/1\n");
  std::string csv = emit_cluster_csv(r);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(r.clusters.size()));
  auto rows = sweep(load("example1_sweep.json"));
  std::string sc = emit_sweep_csv(rows);
  CHECK(sc.rfind("k,v_lambda,B,valid_discs,toric_rank,two_rank,thicknesses\n", 0) == 0);
}

TEST_CASE("output does not depend on the job count") {
  InputSpec in = load("example2_g2.json");
  RunOptions one, many;
  many.jobs = 4;
  CHECK(emit_json(analyze(in, one)) == emit_json(analyze(in, many)));
  InputSpec sw = load("example1_sweep.json");
  CHECK(emit_sweep_csv(sweep(sw, one)) == emit_sweep_csv(sweep(sw, many)));
}

TEST_CASE("sweep counts across the threshold") {
  auto rows = sweep(load("example1_sweep.json"));
  std::vector<int> discs, tor, two;
  for (auto& r : rows) {
    discs.push_back(r.valid_discs);
    tor.push_back(r.toric_rank);
    two.push_back(r.two_rank);
  }
  CHECK(discs == std::vector<int>{0, 0, 1, 2, 2, 2});
  CHECK(tor == std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(two == std::vector<int>{0, 0, 1, 0, 0, 0});
  auto rows2 = sweep(load("example2_g2_sweep.json"));
  REQUIRE(rows2.size() == 5);
  CHECK(rows2[0].v_lambda == make_q(7, 3));
  CHECK(rows2[0].valid_discs == 0);
  CHECK(rows2[1].valid_discs == 1);
  CHECK(rows2[1].two_rank == 1);
  CHECK(rows2[2].valid_discs == 2);
}

TEST_CASE("exit codes") {
  const std::string in = std::string(WILDCLUST_INPUTS) + "/example1.json";
  CHECK(run_cli("analyze -i " + in) == 0);
  CHECK(run_cli("analyze -f dot -i " + in) == 0);
  CHECK(run_cli("sweep -i " + std::string(WILDCLUST_INPUTS) + "/example1_sweep.json") == 0);
  CHECK(run_cli("analyze -i /nonexistent.json") == 1);
  const std::string tmp = std::string(WILDCLUST_TMP) + "/bad.json";
  std::ofstream(tmp) << R"({"field": {"m": 1, "e": 1}, "roots": [0, 1]})";
  CHECK(run_cli("analyze -i " + tmp) == 1);
  std::ofstream(tmp) << R"({"field": {"m": "x"}, "roots": [0, 1, 2]})";
  CHECK(run_cli("analyze -i " + tmp) == 1);
  // the first two roots coincide at precision 2
  CHECK(run_cli("analyze --precision 2 -i " + in) == 1);
  CHECK(run_cli("analyze --max-iters 1 -i " + in) == 3);
  // leading coefficient zero
  std::ofstream(tmp) << R"({"field": {"m": 1, "e": 1}, "roots": [0, 1, 3], "leading_coefficient": 0})";
  CHECK(run_cli("analyze -i " + tmp) == 1);
  // sweep over an input without a sweep block
  CHECK(run_cli("sweep -i " + in) == 1);
  const std::string out = std::string(WILDCLUST_TMP) + "/out.json";
  REQUIRE(run_cli("analyze -j 3 -i " + in, out) == 0);
  json j = json::parse(slurp(out));
  CHECK(j["tool"] == "wildclust");
  CHECK(j["genus"] == 2);
}
