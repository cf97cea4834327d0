#pragma once
#include <string>

#include "mixwalk/dist.hpp"
#include "mixwalk/graph.hpp"
#include "mixwalk/learner.hpp"
#include "mixwalk/term.hpp"

namespace mixwalk {

// whole-file helpers; throw std::runtime_error with the path on failure
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// DNF text format: header line "n k s" (k = 0 when the terms do not share a
// common width), then one term per line as space-separated signed literals,
// +i for x_i and -i for !x_i, ascending variable index. Parsing rejects
// malformed headers, out-of-range or contradictory literals, a k that does
// not match the terms, and a term count differing from s.
std::string dnf_to_text(const Dnf& f);
Dnf dnf_from_text(const std::string& text);

// distribution JSON:
//   {"type":"uniform","n":N}
//   {"type":"product","bias":[b1,...,bn]}
//   {"type":"explicit","n":N,"support":[[point,weight],...]}
std::string dist_to_json(const SampleDistribution& d);
SampleDistribution dist_from_json(const std::string& text);

// graph text format: header "N"; then lines "u v m" for non-loop edge
// multiplicities (1-based, u != v) and lines "loop v c" for self-loop
// counts. Emission is canonical (u < v row-major, loops last); parsing
// accepts any order and accumulates repeated pairs.
std::string graph_to_text(const MultiGraph& g);
MultiGraph graph_from_text(const std::string& text);

// cover text format: one line per set, space-separated 1-based vertex ids.
// Parsing checks ids against N and rejects duplicates within a line; it does
// not check coverage of V (callers validate against their graph).
std::string cover_to_text(const Cover& c);
Cover cover_from_text(const std::string& text, int N);

// learner config JSON: every knob by name, with the walk block nested under
// "walk" (chain spelled "nice" | "uniform-lazy"). Loading starts from the
// defaults, applies the overrides present, rejects unknown keys, and runs
// LearnerConfig::validate().
std::string config_to_json(const LearnerConfig& cfg);
LearnerConfig config_from_json(const std::string& text);

}  // namespace mixwalk
