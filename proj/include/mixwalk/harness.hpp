#pragma once
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mixwalk/graph.hpp"
#include "mixwalk/io.hpp"
#include "mixwalk/learner.hpp"

namespace mixwalk {

// Batch experiment driver. One spec describes `reps` runs of a single task;
// each run gets its own seed derived from the batch seed and the run index,
// so any CSV row can be reproduced in isolation.

enum class Task {
  ListDecode,
  LearnExact,
  LearnSmallK,
  Boost,
  GraphAnalyze,
  GraphMix,
};

std::string task_name(Task t);
Task task_of(const std::string& name);  // throws on unknown name

struct ExperimentSpec {
  Task task = Task::ListDecode;
  // instance generator parameters; ignored fields stay 0
  int n = 0;
  int k = 0;
  int s = 0;
  double eps = 0.1;     // learn-exact / learn-smallk accuracy
  double gamma = 0.05;  // boost accuracy
  std::string weak = "plugin";  // boost weak learner: plugin | cheat
  long start_budget = 64;       // listdecode satisfying-draw budget

  // fixed instances; absent means "generate one per run from the run seed"
  std::optional<Dnf> target;
  std::optional<SampleDistribution> dist;  // default: uniform(n)
  std::optional<MultiGraph> graph;

  LearnerConfig cfg;
  std::uint64_t seed = 1;
  int reps = 1;
  std::string out_dir;  // empty: no files written

  void validate() const;
};

struct RunRecord {
  std::uint64_t seed = 0;
  int index = 0;
  bool completed = false;  // false: an exception ended the run (see note)
  bool success = false;
  long queries = 0;
  double error = std::numeric_limits<double>::quiet_NaN();
  double seconds = 0;
  std::string note;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<RunRecord> records;

  double success_rate() const;  // exact mean of the success flags
  double mean_queries() const;
  long max_queries() const;
  bool all_completed() const;
};

// executes spec.reps runs with seeds derive_seed(spec.seed, index + 1);
// per-run exceptions are recorded, not rethrown. With out_dir set, writes
// report.csv, report.txt and per-run artifacts there.
ExperimentReport run(const ExperimentSpec& spec);

// fixed column order: seed,task,n,k,s,success,queries,error,seconds
std::string report_csv(const ExperimentReport& r);
std::string report_text(const ExperimentReport& r);
// the csv with the trailing seconds column removed from every row, for
// byte-exact determinism comparisons
std::string csv_without_seconds(const std::string& csv);

// weak learner that knows the target: estimates each true term's positive
// mass under the requested distribution and returns the best one. Used to
// exercise the booster contract in isolation.
WeakTermLearner cheating_weak_learner(Dnf target, int probe_draws = 800);

}  // namespace mixwalk
