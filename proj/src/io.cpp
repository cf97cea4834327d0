#include "mixwalk/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mixwalk {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

// ---------------------------------------------------------------- DNF text

std::string dnf_to_text(const Dnf& f) {
  std::ostringstream out;
  out << f.n << ' ' << f.exact_k() << ' ' << f.s() << '\n';
  for (const Term& t : f.terms) {
    bool first = true;
    for (int lit : t.lits()) {
      if (!first) out << ' ';
      out << lit;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Dnf dnf_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("dnf parse: empty input");
  std::istringstream hdr(line);
  int n = 0, k = -1, s = -1;
  if (!(hdr >> n >> k >> s))
    throw std::runtime_error("dnf parse: header must be 'n k s'");
  std::string junk;
  if (hdr >> junk)
    throw std::runtime_error("dnf parse: trailing tokens in header");
  if (n < 1 || n > 64)
    throw std::runtime_error("dnf parse: n out of range [1,64]");
  if (k < 0 || k > n) throw std::runtime_error("dnf parse: k out of range");
  if (s < 0) throw std::runtime_error("dnf parse: negative term count");

  Dnf f;
  f.n = n;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> lits;
    int lit;
    while (ls >> lit) {
      if (lit == 0 || lit > n || lit < -n)
        throw std::runtime_error("dnf parse: literal out of range: " +
                                 std::to_string(lit));
      lits.push_back(lit);
    }
    if (!ls.eof())
      throw std::runtime_error("dnf parse: non-integer token in term line");
    if (lits.empty()) continue;  // blank line
    Term t = Term::from_lits(lits);
    if (!t.wellformed() || t.width() != (int)lits.size())
      throw std::runtime_error(
          "dnf parse: contradictory or duplicate literal in term");
    f.terms.push_back(t);
  }
  if (f.s() != s)
    throw std::runtime_error("dnf parse: header says " + std::to_string(s) +
                             " terms, found " + std::to_string(f.s()));
  if (k > 0 && f.exact_k() != k)
    throw std::runtime_error("dnf parse: terms are not all width " +
                             std::to_string(k));
  f.validate();
  return f;
}

// --------------------------------------------------------- distribution JSON

std::string dist_to_json(const SampleDistribution& d) {
  json j;
  switch (d.kind) {
    case SampleDistribution::Kind::Uniform:
      j["type"] = "uniform";
      j["n"] = d.n;
      break;
    case SampleDistribution::Kind::Product:
      j["type"] = "product";
      j["bias"] = d.bias;
      break;
    case SampleDistribution::Kind::Explicit: {
      j["type"] = "explicit";
      j["n"] = d.n;
      json pts = json::array();
      for (const auto& [x, w] : d.support) pts.push_back({x, w});
      j["support"] = std::move(pts);
      break;
    }
  }
  return j.dump(2) + "\n";
}

SampleDistribution dist_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("dist parse: bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw std::runtime_error("dist parse: missing string field 'type'");
  const std::string type = j["type"];
  SampleDistribution d;
  if (type == "uniform") {
    if (!j.contains("n"))
      throw std::runtime_error("dist parse: uniform needs 'n'");
    d = SampleDistribution::uniform(j["n"].get<int>());
  } else if (type == "product") {
    if (!j.contains("bias") || !j["bias"].is_array())
      throw std::runtime_error("dist parse: product needs array 'bias'");
    d = SampleDistribution::product(j["bias"].get<std::vector<double>>());
  } else if (type == "explicit") {
    if (!j.contains("n") || !j.contains("support") || !j["support"].is_array())
      throw std::runtime_error("dist parse: explicit needs 'n' and 'support'");
    std::vector<std::pair<Assign, double>> pts;
    for (const auto& e : j["support"]) {
      if (!e.is_array() || e.size() != 2)
        throw std::runtime_error(
            "dist parse: support entries must be [point, weight]");
      pts.emplace_back(e[0].get<Assign>(), e[1].get<double>());
    }
    d = SampleDistribution::explicit_support(j["n"].get<int>(),
                                             std::move(pts));
  } else {
    throw std::runtime_error("dist parse: unknown type '" + type + "'");
  }
  d.validate();
  return d;
}

// ----------------------------------------------------------------- graph text

std::string graph_to_text(const MultiGraph& g) {
  std::ostringstream out;
  out << g.N << '\n';
  for (int u = 0; u < g.N; ++u)
    for (int v = u + 1; v < g.N; ++v)
      if (g.mult[u][v] > 0)
        out << (u + 1) << ' ' << (v + 1) << ' ' << g.mult[u][v] << '\n';
  for (int v = 0; v < g.N; ++v)
    if (g.loops[v] > 0) out << "loop " << (v + 1) << ' ' << g.loops[v] << '\n';
  return out.str();
}

MultiGraph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("graph parse: empty input");
  int N = 0;
  {
    std::istringstream hdr(line);
    std::string junk;
    if (!(hdr >> N) || (hdr >> junk))
      throw std::runtime_error("graph parse: header must be a single N");
  }
  if (N < 1) throw std::runtime_error("graph parse: N must be >= 1");
  MultiGraph g(N);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok == "loop") {
      int v = 0, c = 0;
      std::string junk;
      if (!(ls >> v >> c) || (ls >> junk))
        throw std::runtime_error("graph parse: loop line must be 'loop v c'");
      if (v < 1 || v > N)
        throw std::runtime_error("graph parse: loop vertex out of range");
      if (c < 1) throw std::runtime_error("graph parse: loop count must be >= 1");
      g.loops[v - 1] += c;
    } else {
      int u = 0, v = 0, m = 0;
      std::string junk;
      std::istringstream el(line);
      if (!(el >> u >> v >> m) || (el >> junk))
        throw std::runtime_error("graph parse: edge line must be 'u v m'");
      if (u < 1 || u > N || v < 1 || v > N)
        throw std::runtime_error("graph parse: vertex out of range");
      if (u == v)
        throw std::runtime_error("graph parse: self-edge; use a loop line");
      if (m < 1)
        throw std::runtime_error("graph parse: multiplicity must be >= 1");
      g.add_edge(u - 1, v - 1, m);
    }
  }
  g.validate();
  return g;
}

// ----------------------------------------------------------------- cover text

std::string cover_to_text(const Cover& c) {
  std::ostringstream out;
  for (const VSet& S : c.sets) {
    bool first = true;
    for (int v : S) {
      if (!first) out << ' ';
      out << (v + 1);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Cover cover_from_text(const std::string& text, int N) {
  Cover c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    VSet S;
    int v;
    while (ls >> v) {
      if (v < 1 || v > N)
        throw std::runtime_error("cover parse: vertex out of range: " +
                                 std::to_string(v));
      S.push_back(v - 1);
    }
    if (!ls.eof())
      throw std::runtime_error("cover parse: non-integer token");
    if (S.empty()) continue;
    std::sort(S.begin(), S.end());
    if (std::adjacent_find(S.begin(), S.end()) != S.end())
      throw std::runtime_error("cover parse: duplicate vertex in a set");
    c.sets.push_back(std::move(S));
  }
  if (c.sets.empty()) throw std::runtime_error("cover parse: no sets");
  return c;
}

// ---------------------------------------------------------------- config JSON

namespace {

std::string chain_name(WalkConfig::Chain c) {
  return c == WalkConfig::Chain::Nice ? "nice" : "uniform-lazy";
}

WalkConfig::Chain chain_of(const std::string& s) {
  if (s == "nice") return WalkConfig::Chain::Nice;
  if (s == "uniform-lazy") return WalkConfig::Chain::UniformLazy;
  throw std::runtime_error("config parse: unknown chain '" + s + "'");
}

template <class T>
void take(json& j, const char* key, T& into) {
  if (auto it = j.find(key); it != j.end()) {
    into = it->get<T>();
    j.erase(it);
  }
}

}  // namespace

std::string config_to_json(const LearnerConfig& cfg) {
  json j;
  j["prune_trials_per_term"] = cfg.prune_trials_per_term;
  j["expand_radius"] = cfg.expand_radius;
  j["far_term_threshold"] = cfg.far_term_threshold;
  j["far_point_threshold"] = cfg.far_point_threshold;
  j["W_drop_distance"] = cfg.W_drop_distance;
  j["far_drop_distance"] = cfg.far_drop_distance;
  j["covered_coord_cap"] = cfg.covered_coord_cap;
  j["popular_frac"] = cfg.popular_frac;
  j["super_popular_frac"] = cfg.super_popular_frac;
  j["superpop_required_frac"] = cfg.superpop_required_frac;
  j["noise_rate_scale"] = cfg.noise_rate_scale;
  j["noise_budget"] = cfg.noise_budget;
  j["noise_margin"] = cfg.noise_margin;
  j["noise_outer_budget"] = cfg.noise_outer_budget;
  j["S_bruteforce_gap"] = cfg.S_bruteforce_gap;
  j["outer_iterations"] = cfg.outer_iterations;
  j["gamma"] = cfg.gamma;
  j["delta"] = cfg.delta;
  j["C_cap"] = cfg.C_cap;
  j["expand_cap"] = cfg.expand_cap;
  j["small_k_cap"] = cfg.small_k_cap;
  j["large_k_margin"] = cfg.large_k_margin;
  j["walk"] = {{"outer_len", cfg.walk.outer_len},
               {"inner_len_max", cfg.walk.inner_len_max},
               {"samples_per_probe", cfg.walk.samples_per_probe},
               {"repeats", cfg.walk.repeats},
               {"seed", cfg.walk.seed},
               {"chain", chain_name(cfg.walk.chain)}};
  return j.dump(2) + "\n";
}

LearnerConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config parse: bad JSON: ") +
                             e.what());
  }
  if (!j.is_object())
    throw std::runtime_error("config parse: top level must be an object");

  LearnerConfig cfg;  // defaults, then overrides
  try {
    take(j, "prune_trials_per_term", cfg.prune_trials_per_term);
    take(j, "expand_radius", cfg.expand_radius);
    take(j, "far_term_threshold", cfg.far_term_threshold);
    take(j, "far_point_threshold", cfg.far_point_threshold);
    take(j, "W_drop_distance", cfg.W_drop_distance);
    take(j, "far_drop_distance", cfg.far_drop_distance);
    take(j, "covered_coord_cap", cfg.covered_coord_cap);
    take(j, "popular_frac", cfg.popular_frac);
    take(j, "super_popular_frac", cfg.super_popular_frac);
    take(j, "superpop_required_frac", cfg.superpop_required_frac);
    take(j, "noise_rate_scale", cfg.noise_rate_scale);
    take(j, "noise_budget", cfg.noise_budget);
    take(j, "noise_margin", cfg.noise_margin);
    take(j, "noise_outer_budget", cfg.noise_outer_budget);
    take(j, "S_bruteforce_gap", cfg.S_bruteforce_gap);
    take(j, "outer_iterations", cfg.outer_iterations);
    take(j, "gamma", cfg.gamma);
    take(j, "delta", cfg.delta);
    take(j, "C_cap", cfg.C_cap);
    take(j, "expand_cap", cfg.expand_cap);
    take(j, "small_k_cap", cfg.small_k_cap);
    take(j, "large_k_margin", cfg.large_k_margin);
    if (auto it = j.find("walk"); it != j.end()) {
      json w = *it;
      j.erase(it);
      if (!w.is_object())
        throw std::runtime_error("config parse: 'walk' must be an object");
      take(w, "outer_len", cfg.walk.outer_len);
      take(w, "inner_len_max", cfg.walk.inner_len_max);
      take(w, "samples_per_probe", cfg.walk.samples_per_probe);
      take(w, "repeats", cfg.walk.repeats);
      take(w, "seed", cfg.walk.seed);
      if (auto ct = w.find("chain"); ct != w.end()) {
        cfg.walk.chain = chain_of(ct->get<std::string>());
        w.erase(ct);
      }
      if (!w.empty())
        throw std::runtime_error("config parse: unknown walk key '" +
                                 w.begin().key() + "'");
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("config parse: bad value type: ") +
                             e.what());
  }
  if (!j.empty())
    throw std::runtime_error("config parse: unknown key '" + j.begin().key() +
                             "'");
  cfg.validate();
  return cfg;
}

}  // namespace mixwalk
