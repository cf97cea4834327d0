#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mixwalk/harness.hpp"
#include "mixwalk/io.hpp"

using namespace mixwalk;

namespace {

struct Opts {
  int n = 0, k = 0, s = 0;
  double eps = 0.1;
  double gamma = 0.05;
  std::string weak = "plugin";
  long budget = 64;
  std::string dnf_file, dist_file, graph_file, config_file, out_dir;
  std::uint64_t seed = 1;
  int reps = 1;
};

void add_common(CLI::App* c, Opts& o) {
  c->add_option("--seed", o.seed, "batch seed; run i uses a seed derived from it");
  c->add_option("--reps", o.reps, "number of runs")->check(CLI::PositiveNumber);
  c->add_option("--config", o.config_file, "learner config JSON file");
  c->add_option("--out", o.out_dir, "directory for report.csv/report.txt and per-run artifacts");
}

void add_dnf_common(CLI::App* c, Opts& o) {
  c->add_option("--n", o.n, "dimension (generator)");
  c->add_option("--k", o.k, "term width (generator)");
  c->add_option("--s", o.s, "term count (generator)");
  c->add_option("--dnf", o.dnf_file,
                "fixed target DNF file (overrides --n/--k/--s)");
  c->add_option("--dist", o.dist_file,
                "sample distribution JSON file (default: uniform)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locally-mixing walk experiments: list-decoding, DNF learning, graph analysis"};
  app.require_subcommand(1);
  Opts o;

  CLI::App* ld = app.add_subcommand("listdecode",
                                    "two-stage list-decoding of a target term");
  add_dnf_common(ld, o);
  add_common(ld, o);
  ld->add_option("--budget", o.budget, "satisfying-start draw budget")
      ->check(CLI::PositiveNumber);

  CLI::App* le = app.add_subcommand("learn-exact",
                                    "learn an exact-k DNF with membership queries");
  add_dnf_common(le, o);
  add_common(le, o);
  le->add_option("--eps", o.eps, "target error");

  CLI::App* lk = app.add_subcommand("learn-smallk",
                                    "learn a small-width DNF by greedy covering");
  add_dnf_common(lk, o);
  add_common(lk, o);
  lk->add_option("--eps", o.eps, "target error");

  CLI::App* bo = app.add_subcommand("boost",
                                    "run the covering booster around a weak learner");
  add_dnf_common(bo, o);
  add_common(bo, o);
  bo->add_option("--gamma", o.gamma, "booster accuracy");
  bo->add_option("--weak", o.weak, "weak learner: plugin | cheat")
      ->check(CLI::IsMember({"plugin", "cheat"}));

  CLI::App* gr = app.add_subcommand("graph", "multigraph analysis");
  gr->require_subcommand(1);
  CLI::App* ga = gr->add_subcommand("analyze",
                                    "spectrum, conductance and expansion checks");
  ga->add_option("--n", o.n, "vertex count (generator)");
  ga->add_option("--graph", o.graph_file, "fixed graph file");
  add_common(ga, o);
  CLI::App* gm = gr->add_subcommand("mix", "exact mixing time vs spectral bound");
  gm->add_option("--n", o.n, "vertex count (generator)");
  gm->add_option("--graph", o.graph_file, "fixed graph file");
  add_common(gm, o);

  CLI::App* cd = app.add_subcommand("config-dump",
                                    "print the default learner config as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (cd->parsed()) {
    std::cout << config_to_json(LearnerConfig{});
    return 0;
  }

  try {
    ExperimentSpec spec;
    CLI::App* sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    if (name == "graph")
      name += "-" + sub->get_subcommands().front()->get_name();
    spec.task = task_of(name);

    spec.n = o.n;
    spec.k = o.k;
    spec.s = o.s;
    spec.eps = o.eps;
    spec.gamma = o.gamma;
    spec.weak = o.weak;
    spec.start_budget = o.budget;
    spec.seed = o.seed;
    spec.reps = o.reps;
    spec.out_dir = o.out_dir;

    if (!o.dnf_file.empty()) {
      Dnf f = dnf_from_text(read_file(o.dnf_file));
      spec.n = f.n;
      spec.k = f.exact_k();
      spec.s = f.s();
      spec.target = std::move(f);
    }
    if (!o.dist_file.empty())
      spec.dist = dist_from_json(read_file(o.dist_file));
    if (!o.graph_file.empty())
      spec.graph = graph_from_text(read_file(o.graph_file));
    if (!o.config_file.empty())
      spec.cfg = config_from_json(read_file(o.config_file));

    ExperimentReport rep = run(spec);
    std::cout << report_text(rep);
    if (!spec.out_dir.empty())
      std::cout << "reports written to " << spec.out_dir << "\n";
    return rep.all_completed() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
