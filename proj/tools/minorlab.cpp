// minorlab: desk-scale verification runs for the small-graph minor lab.
//
// Exit codes: 0 = verified / found as expected, 1 = counterexample or not
// found, 2 = usage or runtime error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "minorlab/canonical.hpp"
#include "minorlab/enumerate.hpp"
#include "minorlab/graph6.hpp"
#include "minorlab/lemmas.hpp"
#include "minorlab/minor.hpp"
#include "minorlab/named.hpp"
#include "minorlab/parallel.hpp"

namespace {

using namespace minorlab;

void print_summary(const LemmaReport& r) {
  std::cout << r.id << ": " << (r.verified() ? "verified" : "COUNTEREXAMPLE") << ", "
            << r.instances_checked << " instances, " << r.counterexamples.size()
            << " counterexamples, " << r.witnesses_stored << " witnesses, "
            << static_cast<long long>(r.wall_ms) << " ms\n";
  for (const auto& c : r.counterexamples)
    std::cout << "  counterexample " << c.graph6 << " : " << c.context << "\n";
}

int report_exit(const LemmaReport& r) { return r.verified() ? 0 : 1; }

Graph parse_pattern_graph(const std::string& text) {
  if (auto named = parse_named(text)) return build(*named);
  return graph6_decode(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"small-graph minor verification lab"};
  app.require_subcommand(1);

  int jobs = 0;  // 0 = all cores; MINORLAB_JOBS overrides any --jobs value

  auto* verify = app.add_subcommand("verify", "exhaustively verify one numbered claim");
  int lemma_id = 0;
  std::optional<int> cap;
  std::string out_dir;
  bool resume = false;
  verify->add_option("--lemma", lemma_id, "claim id in {1..7, 9, 10, 11}")->required();
  verify->add_option("--cap", cap, "size cap (max cockade order / max n / sample count)");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--out", out_dir, "report + witness directory");
  verify->add_flag("--resume", resume, "resume from a checkpoint when available");

  auto* lemma8 = app.add_subcommand("lemma8", "minor-free survivors of the degree-6 enumeration");
  int lemma8_n = 9;
  lemma8->add_option("--n", lemma8_n, "vertex count (9, 10, or 11)")->required();
  lemma8->add_option("--jobs", jobs, "worker threads");
  lemma8->add_option("--out", out_dir, "report + witness directory");
  lemma8->add_flag("--resume", resume, "resume from the chunk checkpoint");

  auto* theorem = app.add_subcommand("theorem", "edge-threshold dichotomy check for small t");
  int theorem_t = 5, theorem_nmax = 7;
  theorem->add_option("--t", theorem_t, "clique order (5 or 6)")->required();
  theorem->add_option("--nmax", theorem_nmax, "largest vertex count (<= 8)")->required();
  theorem->add_option("--jobs", jobs, "worker threads");
  theorem->add_option("--out", out_dir, "report directory");

  auto* spot2 = app.add_subcommand("spot2", "randomized dichotomy samples at the 6n-20 bound");
  int spot_samples = 100;
  uint64_t spot_seed = 1;
  spot2->add_option("--samples", spot_samples, "sample count")->required();
  spot2->add_option("--seed", spot_seed, "random seed")->required();
  spot2->add_option("--jobs", jobs, "worker threads");
  spot2->add_option("--out", out_dir, "report directory");

  auto* minor = app.add_subcommand("minor", "test one host for one pattern minor");
  std::string host_text, pattern_text;
  minor->add_option("--host", host_text, "host graph, graph6")->required();
  minor->add_option("--pattern", pattern_text, "pattern: name (K7, K7-, K9=s, K9=d, K2,2,2,2,2, "
                                               "C9bar, petersen, ...) or graph6")
      ->required();

  auto* gen = app.add_subcommand("gen", "stream one graph6 line per isomorphism class");
  int gen_n = 0, gen_min_degree = 0;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--min-degree", gen_min_degree, "minimum degree")->required();
  gen->add_option("--jobs", jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    RunOptions opts;
    opts.jobs = jobs;
    opts.out_dir = out_dir;
    opts.resume = resume;

    if (verify->parsed()) {
      LemmaReport r = verify_lemma(lemma_id, cap, opts);
      print_summary(r);
      return report_exit(r);
    }
    if (lemma8->parsed()) {
      LemmaReport r = verify_lemma8(lemma8_n, opts);
      print_summary(r);
      return report_exit(r);
    }
    if (theorem->parsed()) {
      LemmaReport r = check_theorem(theorem_t, theorem_nmax, opts);
      print_summary(r);
      return report_exit(r);
    }
    if (spot2->parsed()) {
      LemmaReport r = spot_check_theorem2(spot_samples, spot_seed, opts);
      print_summary(r);
      return report_exit(r);
    }
    if (minor->parsed()) {
      Graph host = graph6_decode(host_text);
      Graph pattern = parse_pattern_graph(pattern_text);
      auto model = has_minor(host, pattern);
      if (!model) {
        std::cout << "none\n";
        return 1;
      }
      for (size_t i = 0; i < model->branch_sets.size(); ++i) {
        std::cout << "branch_set " << i << ":";
        for (int v : model->branch_sets[i].to_vector()) std::cout << " " << v;
        std::cout << "\n";
      }
      return 0;
    }
    if (gen->parsed()) {
      EnumFilter filter{gen_n, gen_min_degree, std::nullopt, std::nullopt};
      EnumPlan plan = plan_min_degree(filter);
      int nchunks = static_cast<int>(plan.frontier.size());
      std::vector<std::vector<std::string>> lines(nchunks);
      parallel_chunks(nchunks, resolve_jobs(jobs), [&](int chunk) {
        run_chunk(plan, filter, chunk, [&](const Graph& g, const CanonicalForm&) {
          lines[chunk].push_back(graph6_encode(g));
        });
      });
      for (const auto& chunk_lines : lines)
        for (const auto& line : chunk_lines) std::cout << line << "\n";
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
