#include "wildclust/pipeline.hpp"

#include "wildclust/errors.hpp"
#include "wildclust/parallel.hpp"

namespace wildclust {

Analysis run_analysis(const InputSpec& in, const RunOptions& opts, const InstanceOptions& iopts) {
  InstanceOptions io = iopts;
  if (opts.N) io.N = opts.N;
  Analysis a{instantiate(in, io), {}, {}, {}};
  a.tree = build_cluster_tree(a.inst.roots);
  AnalysisOptions ao;
  ao.psd.max_iterations = opts.max_iters.value_or(in.max_improve_iterations);
  ao.jobs = opts.jobs;
  a.analyses = analyze_all(a.tree, ao);
  std::optional<Q> vpi = opts.uniformizer ? opts.uniformizer : in.uniformizer_valuation;
  a.fiber = assemble_report(a.tree, a.analyses, vpi);
  return a;
}

ReportDocument make_report(const InputSpec& in, const Analysis& a, const RunOptions& opts) {
  ReportDocument r;
  r.seed = opts.seed;
  r.input = to_json(in);
  r.m = a.inst.ctx.m();
  r.e = a.inst.ctx.e;
  r.N = a.inst.ctx.N;
  r.modulus = a.inst.ctx.k.modulus();
  r.genus = a.tree.genus();
  for (int i = 0; i < a.tree.size(); ++i) {
    const Cluster& c = a.tree.node(i);
    const ClusterAnalysis& an = a.analyses[i];
    ClusterEntry e;
    e.id = i;
    e.members = c.members;
    e.parent = c.parent;
    e.children = c.children;
    e.d_plus = c.d_plus;
    e.d_minus = c.d_minus;
    e.even = c.even();
    if (an.even) {
      e.B = an.B;
      e.b0_plus = an.b0_plus;
      e.b0_minus = an.b0_minus;
      e.lambda_plus = an.lambda_plus;
      e.lambda_minus = an.lambda_minus;
      e.J = an.J;
      e.valid_discs = an.valid_depths;
      e.viability = to_string(an.viability);
      e.uebereven = to_string(an.ue);
    }
    r.clusters.push_back(std::move(e));
  }
  const SpecialFiberReport& f = a.fiber;
  r.toric_rank = f.toric_rank;
  r.two_rank = f.two_rank;
  r.two_rank_branch = f.two_rank_branch;
  r.abelian_rank = f.abelian_rank;
  r.v_pi = f.v_pi;
  for (const auto& c : f.components)
    r.components.push_back(ComponentEntry{c.center, c.depth, c.linked, c.separable, c.irreducible, c.genus,
                                          c.ell, c.branch_count});
  for (const auto& n : f.nodes)
    r.nodes.push_back(NodeEntry{n.cluster, n.raw, n.thickness, n.count, n.lower, n.upper});
  r.complete = !f.incomplete;
  return r;
}

ReportDocument analyze(const InputSpec& in, const RunOptions& opts) {
  return make_report(in, run_analysis(in, opts), opts);
}

std::vector<SweepRow> sweep(const InputSpec& in, const RunOptions& opts) {
  if (!in.sweep) fail(Errc::SchemaError, "input has no options.sweep");
  const SweepSpec& sw = *in.sweep;
  std::vector<SweepRow> rows(sw.k_values.size());
  RunOptions inner = opts;
  inner.jobs = 1;
  parallel_for(rows.size(), opts.jobs, [&](size_t i) {
    InstanceOptions io;
    io.sweep_root = sw.root_index;
    io.sweep_k = sw.k_values[i];
    io.sweep_den = sw.denominator;
    Analysis a = run_analysis(in, inner, io);
    SweepRow& row = rows[i];
    row.k = sw.k_values[i];
    row.v_lambda = a.inst.roots[sw.root_index].val();
    for (int s : even_clusters(a.tree)) row.B.push_back(a.analyses[s].B);
    row.valid_discs = static_cast<int>(a.fiber.components.size());
    row.toric_rank = a.fiber.toric_rank;
    row.two_rank = a.fiber.two_rank;
    for (const auto& n : a.fiber.nodes) row.thickness.push_back(n.thickness);
  });
  return rows;
}

}  // namespace wildclust
