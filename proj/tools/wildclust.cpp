// wildclust: cluster pictures and special fibers of y^2 = f(x) over 2-adic fields.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "wildclust/emit.hpp"
#include "wildclust/errors.hpp"
#include "wildclust/pipeline.hpp"

using namespace wildclust;

namespace {

int exit_code(Errc c) {
  switch (c) {
    case Errc::IterationCapExceeded:
    case Errc::PrecisionExhausted:
      return 3;
    case Errc::InternalInvariantViolation:
    case Errc::InconsistentSlope:
    case Errc::IndeterminateEll:
    case Errc::NeverReachesCeiling:
    case Errc::NotImprovable:
    case Errc::ValueGroupGap:
    case Errc::ResidueFieldTooSmall:
    case Errc::ZeroPolynomial:
      return 2;
    default:
      return 1;
  }
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) fail(Errc::SchemaError, "cannot open " + path);
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster pictures, valid discs and special-fiber invariants of y^2 = f(x) over 2-adic fields"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format;
  std::optional<int> precision, max_iters;
  std::string uniformizer;
  int jobs = 1;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "input JSON file ('-' for stdin)");
    sub->add_option("--precision", precision, "working precision N in units of v(2)")->check(CLI::Range(1, 120));
    sub->add_option("--max-iters", max_iters, "cap on improvement steps per decomposition")->check(CLI::PositiveNumber);
    sub->add_option("--uniformizer", uniformizer, "v(pi) for thicknesses, as p/q");
    sub->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--seed", seed, "recorded in the report metadata");
  };
  CLI::App* an = app.add_subcommand("analyze", "analyze one curve");
  add_common(an);
  an->add_option("-f,--format", format, "json | dot | picture | csv")
      ->check(CLI::IsMember({"json", "dot", "picture", "csv"}));
  CLI::App* sw = app.add_subcommand("sweep", "scan one root over lambda = pi^(k e/d)");
  add_common(sw);
  sw->add_option("-f,--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    InputSpec in = parse_input_text(read_input(input));
    RunOptions opts;
    opts.N = precision;
    opts.max_iters = max_iters;
    if (!uniformizer.empty()) {
      opts.uniformizer = q_from_string(uniformizer);
      if (*opts.uniformizer <= 0) fail(Errc::SchemaError, "--uniformizer must be positive");
    }
    opts.jobs = jobs;
    opts.seed = seed;

    if (an->parsed()) {
      ReportDocument r = analyze(in, opts);
      if (format.empty() || format == "json") std::cout << emit_json(r);
      else if (format == "dot") std::cout << emit_dot(r);
      else if (format == "picture") std::cout << emit_picture(r);
      else std::cout << emit_cluster_csv(r);
    } else {
      auto rows = sweep(in, opts);
      if (format == "json") {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& row : rows) {
          nlohmann::json B = nlohmann::json::array(), th = nlohmann::json::array();
          for (const Q& b : row.B) B.push_back(q_to_string(b));
          for (const Q& t : row.thickness) th.push_back(q_to_string(t));
          a.push_back({{"k", row.k},
                       {"v_lambda", q_to_string(row.v_lambda)},
                       {"B", B},
                       {"valid_discs", row.valid_discs},
                       {"toric_rank", row.toric_rank},
                       {"two_rank", row.two_rank},
                       {"thicknesses", th}});
        }
        std::cout << a.dump(2) << "\n";
      } else {
        std::cout << emit_sweep_csv(rows);
      }
    }
  } catch (const Error& e) {
    std::cerr << "wildclust: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "wildclust: internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
