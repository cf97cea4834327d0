#include "mixwalk/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "mixwalk/gen.hpp"
#include "mixwalk/spectral.hpp"
#include "mixwalk/walker.hpp"
#include "mixwalk/walkmat.hpp"

namespace mixwalk {

std::string task_name(Task t) {
  switch (t) {
    case Task::ListDecode: return "listdecode";
    case Task::LearnExact: return "learn-exact";
    case Task::LearnSmallK: return "learn-smallk";
    case Task::Boost: return "boost";
    case Task::GraphAnalyze: return "graph-analyze";
    case Task::GraphMix: return "graph-mix";
  }
  throw std::logic_error("task_name: bad enum");
}

Task task_of(const std::string& name) {
  if (name == "listdecode") return Task::ListDecode;
  if (name == "learn-exact") return Task::LearnExact;
  if (name == "learn-smallk") return Task::LearnSmallK;
  if (name == "boost") return Task::Boost;
  if (name == "graph-analyze") return Task::GraphAnalyze;
  if (name == "graph-mix") return Task::GraphMix;
  throw std::runtime_error("unknown task: " + name);
}

static bool is_dnf_task(Task t) {
  return t == Task::ListDecode || t == Task::LearnExact ||
         t == Task::LearnSmallK || t == Task::Boost;
}

void ExperimentSpec::validate() const {
  if (reps < 1) throw std::invalid_argument("spec: reps must be >= 1");
  if (is_dnf_task(task)) {
    if (n < 1 || n > 64)
      throw std::invalid_argument("spec: n out of range [1,64]");
    if (target) {
      target->validate();
      if (target->n != n)
        throw std::invalid_argument("spec: target dimension differs from n");
      if (s != target->s())
        throw std::invalid_argument("spec: s differs from the target's size");
      if (k > 0 && target->exact_k() != k)
        throw std::invalid_argument("spec: target terms are not width k");
    } else {
      if (k < 1 || k > n)
        throw std::invalid_argument("spec: generator needs 1 <= k <= n");
      if (s < 1) throw std::invalid_argument("spec: generator needs s >= 1");
    }
    if (dist) {
      dist->validate();
      if (dist->n != n)
        throw std::invalid_argument("spec: distribution arity differs from n");
    }
    if (task == Task::LearnExact || task == Task::LearnSmallK)
      if (!(eps > 0 && eps < 1))
        throw std::invalid_argument("spec: eps must be in (0,1)");
    if (task == Task::Boost) {
      if (!(gamma > 0 && gamma <= 0.5))
        throw std::invalid_argument("spec: gamma must be in (0,1/2]");
      if (weak != "plugin" && weak != "cheat")
        throw std::invalid_argument("spec: weak must be 'plugin' or 'cheat'");
    }
    if (task == Task::ListDecode && start_budget < 1)
      throw std::invalid_argument("spec: start_budget must be >= 1");
    bool needs_k = task == Task::LearnExact || task == Task::LearnSmallK ||
                   (task == Task::Boost && weak == "plugin");
    if (needs_k && k < 1)
      throw std::invalid_argument("spec: this task needs k >= 1");
  } else {
    if (graph) {
      graph->validate();
      if (!connected(*graph))
        throw std::invalid_argument("spec: graph must be connected");
      if (task == Task::GraphMix && !graph->is_nice())
        throw std::invalid_argument(
            "spec: graph-mix needs a nice graph (lazy chain)");
    } else if (n < 2 || n > 2000) {
      throw std::invalid_argument("spec: graph generator needs 2 <= n <= 2000");
    }
  }
  cfg.validate();
}

// ------------------------------------------------------------- aggregates

double ExperimentReport::success_rate() const {
  if (records.empty()) return 0;
  long hits = 0;
  for (const RunRecord& r : records) hits += r.success ? 1 : 0;
  return double(hits) / double(records.size());
}

double ExperimentReport::mean_queries() const {
  if (records.empty()) return 0;
  double total = 0;
  for (const RunRecord& r : records) total += double(r.queries);
  return total / double(records.size());
}

long ExperimentReport::max_queries() const {
  long m = 0;
  for (const RunRecord& r : records) m = std::max(m, r.queries);
  return m;
}

bool ExperimentReport::all_completed() const {
  for (const RunRecord& r : records)
    if (!r.completed) return false;
  return true;
}

// ------------------------------------------------------------ weak cheat

WeakTermLearner cheating_weak_learner(Dnf target, int probe_draws) {
  if (probe_draws < 1)
    throw std::invalid_argument("cheating_weak_learner: probe_draws < 1");
  target.validate();
  return [target, probe_draws](Oracle&, const Sampler& d, double,
                               Rng& rng) -> std::optional<Term> {
    std::vector<long> cnt(target.terms.size(), 0);
    long positives = 0;
    for (int i = 0; i < probe_draws; ++i) {
      Assign x = d(rng);
      if (!target.eval(x)) continue;
      ++positives;
      for (std::size_t j = 0; j < target.terms.size(); ++j)
        if (target.terms[j].sat(x)) ++cnt[j];
    }
    if (positives == 0) return std::nullopt;
    std::size_t best =
        std::max_element(cnt.begin(), cnt.end()) - cnt.begin();
    if (cnt[best] == 0) return std::nullopt;
    return target.terms[best];
  };
}

// --------------------------------------------------------------- formatting

static std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

static std::string fmt_f3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// ------------------------------------------------------------ the dispatch

namespace {

struct ArtifactDir {
  std::string dir;  // empty: artifacts disabled
  void put(const std::string& name, const std::string& content) const {
    if (!dir.empty()) write_file(dir + "/" + name, content);
  }
};

Dnf resolve_target(const ExperimentSpec& spec, Rng& rng, const ArtifactDir& art,
                   int index) {
  if (spec.target) return *spec.target;
  Dnf f = gen_random_exact_dnf(spec.n, spec.k, spec.s, rng);
  art.put("target_run" + std::to_string(index) + ".dnf", dnf_to_text(f));
  return f;
}

SampleDistribution resolve_dist(const ExperimentSpec& spec) {
  return spec.dist ? *spec.dist : SampleDistribution::uniform(spec.n);
}

MultiGraph resolve_graph(const ExperimentSpec& spec, Rng& rng,
                         const ArtifactDir& art, int index) {
  if (spec.graph) return *spec.graph;
  MultiGraph g = make_nice(gen_connected_multigraph(spec.n, rng));
  art.put("graph_run" + std::to_string(index) + ".txt", graph_to_text(g));
  return g;
}

ErrorMode error_mode_for(const SampleDistribution& d, int n) {
  if (d.kind == SampleDistribution::Kind::Explicit || n <= 16)
    return ErrorMode::Exhaustive;
  return ErrorMode::Sampled;
}

void run_listdecode(const ExperimentSpec& spec, RunRecord& rec, Rng& rng,
                    const ArtifactDir& art) {
  Dnf f = resolve_target(spec, rng, art, rec.index);
  SampleDistribution d = resolve_dist(spec);
  Oracle o = oracle_of(f);
  SatWalkOracle w{o};
  WalkConfig wc = spec.cfg.walk;
  wc.seed = derive_seed(rec.seed, 0xA11);
  ListDecodeResult res = list_decode(w, d, wc, spec.start_budget, rng);
  rec.queries = o.queries();

  bool hit = false;
  for (const GeneratedTerm& gt : res.terms)
    if (std::find(f.terms.begin(), f.terms.end(), gt.term) != f.terms.end())
      hit = true;
  rec.success = hit;
  rec.error = hit ? 0.0 : 1.0;
  rec.note = "terms=" + std::to_string(res.terms.size()) +
             " starts_tried=" + std::to_string(res.starts_tried);

  std::ostringstream out;
  out << "# start=" << res.start << " starts_tried=" << res.starts_tried
      << " terms=" << res.terms.size() << "\n";
  for (const GeneratedTerm& gt : res.terms) {
    out << gt.term.str() << " | t=" << gt.t << " ell=" << gt.ell
        << " repeat=" << gt.repeat << "\n";
  }
  art.put("terms_run" + std::to_string(rec.index) + ".txt", out.str());
}

void finish_learning_record(const ExperimentSpec& spec, RunRecord& rec,
                            Rng& rng, const ArtifactDir& art, Oracle& o,
                            const SampleDistribution& d, const Dnf& h,
                            double err_target, double size_cap) {
  rec.queries = o.queries();
  rec.error =
      estimate_error(h, o, d, error_mode_for(d, spec.n), 4000, rng);
  rec.success =
      rec.error <= err_target + 1e-12 && double(h.s()) <= size_cap + 1e-9;
  rec.note = "terms=" + std::to_string(h.s());
  art.put("hypothesis_run" + std::to_string(rec.index) + ".dnf",
          dnf_to_text(h));
}

void run_learn_exact(const ExperimentSpec& spec, RunRecord& rec, Rng& rng,
                     const ArtifactDir& art) {
  Dnf f = resolve_target(spec, rng, art, rec.index);
  SampleDistribution d = resolve_dist(spec);
  Oracle o = oracle_of(f);
  Sampler samp = as_sampler(d);
  WeakTermLearner weak = make_exact_learn_weak(spec.k, spec.s, spec.cfg);
  BoostResult br = dnf_learn(o, samp, weak, spec.eps, spec.s, spec.cfg, rng);
  finish_learning_record(spec, rec, rng, art, o, d, br.h, spec.eps,
                         8.0 * spec.s * std::log(1.0 / spec.eps));
}

void run_learn_smallk(const ExperimentSpec& spec, RunRecord& rec, Rng& rng,
                      const ArtifactDir& art) {
  Dnf f = resolve_target(spec, rng, art, rec.index);
  SampleDistribution d = resolve_dist(spec);
  Oracle o = oracle_of(f);
  Dnf h = learn_small_k(o, d, spec.k, spec.s, spec.eps, spec.cfg.delta,
                        spec.cfg, rng);
  double size_cap = double(spec.s) * std::ceil(std::log2(2.0 / spec.eps));
  finish_learning_record(spec, rec, rng, art, o, d, h, spec.eps, size_cap);
}

void run_boost(const ExperimentSpec& spec, RunRecord& rec, Rng& rng,
               const ArtifactDir& art) {
  Dnf f = resolve_target(spec, rng, art, rec.index);
  SampleDistribution d = resolve_dist(spec);
  Oracle o = oracle_of(f);
  Sampler samp = as_sampler(d);
  WeakTermLearner weak = spec.weak == "cheat"
                             ? cheating_weak_learner(f)
                             : make_exact_learn_weak(spec.k, spec.s, spec.cfg);
  BoostResult br =
      dnf_learn(o, samp, weak, spec.gamma, spec.s, spec.cfg, rng);
  finish_learning_record(spec, rec, rng, art, o, d, br.h, 4.0 * spec.gamma,
                         8.0 * spec.s * std::log(1.0 / spec.gamma));
}

void run_graph_analyze(const ExperimentSpec& spec, RunRecord& rec, Rng& rng,
                       const ArtifactDir& art) {
  MultiGraph g = resolve_graph(spec, rng, art, rec.index);
  SpectralSummary sp = normalized_laplacian_spectrum(g);
  double l2 = sp.lambda2();

  std::ostringstream out;
  out << "N=" << g.N << " vol=" << g.vol_all() << " nice="
      << (g.is_nice() ? 1 : 0) << " connected=" << (connected(g) ? 1 : 0)
      << "\n";
  out << "lambda2=" << fmt_g(l2) << " lambda_max="
      << fmt_g(sp.evals.empty() ? 0.0 : sp.evals.back()) << "\n";

  if (g.N <= 18) {
    Rat phi = phi_graph_bruteforce(g);
    double p = boost::rational_cast<double>(phi);
    rec.error = p;
    rec.success =
        l2 / 2 <= p + 1e-9 && p <= std::sqrt(2 * l2) + 1e-6;
    rec.note = "lambda2=" + fmt_g(l2) + " phi=" + fmt_g(p);
    out << "phi=" << phi.numerator() << "/" << phi.denominator() << " ("
        << fmt_g(p) << ")\n";
    out << "cheeger_ok=" << (rec.success ? 1 : 0) << "\n";
  } else {
    rec.error = l2;
    rec.success = true;
    rec.note = "lambda2=" + fmt_g(l2) + " (brute cut skipped: N > 18)";
    out << "phi=skipped (N > 18)\n";
  }
  art.put("analysis_run" + std::to_string(rec.index) + ".txt", out.str());
}

void run_graph_mix(const ExperimentSpec& spec, RunRecord& rec, Rng& rng,
                   const ArtifactDir& art) {
  MultiGraph g = resolve_graph(spec, rng, art, rec.index);
  SpectralSummary sp = normalized_laplacian_spectrum(g);
  VertexDistribution pi = stationary(g);
  double pi_min = *std::min_element(pi.begin(), pi.end());
  long bound = (long)std::ceil((1.0 / sp.lambda2()) * std::log(4.0 / pi_min));
  long t = mixing_time_exact(g, 0.25);
  rec.success = t <= bound;
  rec.error = double(t) / double(bound);
  rec.note = "t=" + std::to_string(t) + " bound=" + std::to_string(bound);
}

void run_one(const ExperimentSpec& spec, RunRecord& rec, Rng& rng,
             const ArtifactDir& art) {
  switch (spec.task) {
    case Task::ListDecode: return run_listdecode(spec, rec, rng, art);
    case Task::LearnExact: return run_learn_exact(spec, rec, rng, art);
    case Task::LearnSmallK: return run_learn_smallk(spec, rec, rng, art);
    case Task::Boost: return run_boost(spec, rec, rng, art);
    case Task::GraphAnalyze: return run_graph_analyze(spec, rec, rng, art);
    case Task::GraphMix: return run_graph_mix(spec, rec, rng, art);
  }
  throw std::logic_error("run_one: bad task enum");
}

}  // namespace

// -------------------------------------------------------------------- run

ExperimentReport run(const ExperimentSpec& spec) {
  spec.validate();
  ExperimentReport rep;
  rep.spec = spec;

  ArtifactDir art{spec.out_dir};
  if (!art.dir.empty()) std::filesystem::create_directories(art.dir);

  for (int i = 0; i < spec.reps; ++i) {
    RunRecord rec;
    rec.index = i;
    rec.seed = derive_seed(spec.seed, std::uint64_t(i) + 1);
    Rng rng(rec.seed);
    auto t0 = std::chrono::steady_clock::now();
    try {
      run_one(spec, rec, rng, art);
      rec.completed = true;
    } catch (const std::exception& e) {
      rec.completed = false;
      rec.success = false;
      rec.note = e.what();
    }
    rec.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    rep.records.push_back(std::move(rec));
  }

  if (!art.dir.empty()) {
    write_file(art.dir + "/report.csv", report_csv(rep));
    write_file(art.dir + "/report.txt", report_text(rep));
  }
  return rep;
}

// ---------------------------------------------------------------- reports

std::string report_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "seed,task,n,k,s,success,queries,error,seconds\n";
  for (const RunRecord& rec : r.records) {
    out << rec.seed << ',' << task_name(r.spec.task) << ',' << r.spec.n << ','
        << r.spec.k << ',' << r.spec.s << ',' << (rec.success ? 1 : 0) << ','
        << rec.queries << ',' << fmt_g(rec.error) << ','
        << fmt_f3(rec.seconds) << '\n';
  }
  return out.str();
}

std::string report_text(const ExperimentReport& r) {
  std::ostringstream out;
  const ExperimentSpec& s = r.spec;
  out << "task: " << task_name(s.task) << "\n";
  out << "n=" << s.n << " k=" << s.k << " s=" << s.s << " reps=" << s.reps
      << " seed=" << s.seed << "\n";
  switch (s.task) {
    case Task::ListDecode:
      out << "start_budget=" << s.start_budget << "\n";
      break;
    case Task::LearnExact:
    case Task::LearnSmallK:
      out << "eps=" << fmt_g(s.eps) << "\n";
      break;
    case Task::Boost:
      out << "gamma=" << fmt_g(s.gamma) << " weak=" << s.weak << "\n";
      break;
    default:
      break;
  }
  if (is_dnf_task(s.task))
    out << "instance: " << (s.target ? "fixed target" : "generated per run")
        << "\n";
  else
    out << "instance: " << (s.graph ? "fixed graph" : "generated per run")
        << "\n";

  long done = 0;
  for (const RunRecord& rec : r.records) done += rec.completed ? 1 : 0;
  out << "completed: " << done << "/" << r.records.size() << "\n";
  out << "successes: " << (long)std::lround(r.success_rate() *
                                            double(r.records.size()))
      << "/" << r.records.size() << " (rate " << fmt_g(r.success_rate())
      << ")\n";
  out << "queries: mean " << fmt_g(r.mean_queries()) << " max "
      << r.max_queries() << "\n";
  out << "per-run:\n";
  for (const RunRecord& rec : r.records) {
    out << "  [" << rec.index << "] seed=" << rec.seed << " ";
    if (!rec.completed) {
      out << "ERROR: " << rec.note << "\n";
      continue;
    }
    out << (rec.success ? "success" : "fail") << " queries=" << rec.queries
        << " error=" << fmt_g(rec.error);
    if (!rec.note.empty()) out << " | " << rec.note;
    out << "\n";
  }
  return out.str();
}

std::string csv_without_seconds(const std::string& csv) {
  std::ostringstream out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.rfind(',');
    out << (pos == std::string::npos ? line : line.substr(0, pos)) << '\n';
  }
  return out.str();
}

}  // namespace mixwalk
