#pragma once
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixwalk/bits.hpp"

namespace mixwalk {

// Conjunction of literals, as two disjoint variable masks. Structural value
// semantics: equality, ordering and hashing all go through (pos, neg), which
// makes term lists deduplicate deterministically.
struct Term {
  std::uint64_t pos = 0;  // bit (i-1) set: literal x_i
  std::uint64_t neg = 0;  // bit (i-1) set: literal !x_i

  std::uint64_t vars() const { return pos | neg; }
  int width() const { return popcnt(pos | neg); }
  bool wellformed() const { return (pos & neg) == 0; }
  bool sat(Assign x) const { return (x & pos) == pos && (x & neg) == 0; }
  // number of literals of this term falsified by x
  int falsified(Assign x) const { return popcnt((pos & ~x) | (neg & x)); }

  bool operator==(const Term& o) const { return pos == o.pos && neg == o.neg; }
  bool operator<(const Term& o) const {
    return pos != o.pos ? pos < o.pos : neg < o.neg;
  }

  // signed-integer view: +i for x_i, -i for !x_i, ascending variable index
  std::vector<int> lits() const;
  static Term from_lits(const std::vector<int>& ls);
  std::string str() const;
};

struct Dnf {
  int n = 0;
  std::vector<Term> terms;

  bool eval(Assign x) const {
    for (const Term& t : terms)
      if (t.sat(x)) return true;
    return false;
  }
  int s() const { return int(terms.size()); }
  // common width if the formula is exact-k, else 0
  int exact_k() const {
    if (terms.empty()) return 0;
    int k = terms[0].width();
    for (const Term& t : terms)
      if (t.width() != k) return 0;
    return k;
  }
  void validate() const;
  std::string str() const;
};

// distance notions ----------------------------------------------------------

constexpr int kInfDist = std::numeric_limits<int>::max() / 2;

// min(|T1 \ T2|, |T2 \ T1|) as literal sets
inline int term_distance(const Term& a, const Term& b) {
  int ab = popcnt(a.pos & ~b.pos) + popcnt(a.neg & ~b.neg);
  int ba = popcnt(b.pos & ~a.pos) + popcnt(b.neg & ~a.neg);
  return ab < ba ? ab : ba;
}

// min over T in L of the number of literals of T falsified by x; this is the
// Hamming distance from x to the satisfying set of the disjunction of L
// (kInfDist when L is empty)
inline int sat_distance(Assign x, const std::vector<Term>& L) {
  int best = kInfDist;
  for (const Term& t : L) {
    int d = t.falsified(x);
    if (d < best) best = d;
  }
  return best;
}

// term fixing the coordinates of S to their values in y
inline Term induced_term(Assign y, std::uint64_t S) {
  return Term{y & S, ~y & S};
}

// keep only literals whose variable lies in S
inline Term restrict_term(const Term& t, std::uint64_t S) {
  return Term{t.pos & S, t.neg & S};
}

// the unique maximal term satisfied by every input point
Term largest_common_term(const std::vector<Assign>& points, int n);

}  // namespace mixwalk
