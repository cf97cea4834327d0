#include "mixwalk/term.hpp"

namespace mixwalk {

std::vector<int> Term::lits() const {
  std::vector<int> out;
  for (int i = 1; i <= kMaxVars; ++i) {
    if ((pos >> (i - 1)) & 1ull) out.push_back(i);
    if ((neg >> (i - 1)) & 1ull) out.push_back(-i);
  }
  return out;
}

Term Term::from_lits(const std::vector<int>& ls) {
  Term t;
  for (int l : ls) {
    if (l == 0 || l > kMaxVars || l < -kMaxVars)
      throw std::runtime_error("literal out of range: " + std::to_string(l));
    std::uint64_t bit = 1ull << (std::abs(l) - 1);
    if ((t.pos | t.neg) & bit)
      throw std::runtime_error("variable repeated in term: " +
                               std::to_string(std::abs(l)));
    (l > 0 ? t.pos : t.neg) |= bit;
  }
  return t;
}

std::string Term::str() const {
  std::string out;
  for (int l : lits()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out.empty() ? "<empty>" : out;
}

void Dnf::validate() const {
  if (n < 1 || n > kMaxVars)
    throw std::runtime_error("variable count out of range: " + std::to_string(n));
  for (const Term& t : terms) {
    if (!t.wellformed()) throw std::runtime_error("term has conflicting literals");
    if (t.vars() & ~nmask(n)) throw std::runtime_error("term variable exceeds n");
  }
}

std::string Dnf::str() const {
  std::string out = "n=" + std::to_string(n);
  for (const Term& t : terms) out += " | " + t.str();
  return out;
}

Term largest_common_term(const std::vector<Assign>& points, int n) {
  if (points.empty()) throw std::runtime_error("largest_common_term: no points");
  std::uint64_t all1 = nmask(n), all0 = nmask(n);
  for (Assign p : points) {
    all1 &= p;
    all0 &= ~p;
  }
  return Term{all1, all0 & nmask(n)};
}

}  // namespace mixwalk
