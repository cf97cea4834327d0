#pragma once
#include <atomic>
#include <cstdint>
#include <functional>

#include "mixwalk/term.hpp"

namespace mixwalk {

// Black-box membership access to a target predicate. The counter is the only
// mutable state in the library; it is atomic so concurrent walk workers can
// share one oracle and the aggregate stays exact.
class Oracle {
 public:
  Oracle(int n, std::function<bool(Assign)> fn) : n_(n), fn_(std::move(fn)) {}

  bool query(Assign x) {
    count_.fetch_add(1, std::memory_order_relaxed);
    return fn_(x);
  }
  int n() const { return n_; }
  std::uint64_t queries() const { return count_.load(std::memory_order_relaxed); }
  void reset_queries() { count_.store(0, std::memory_order_relaxed); }

 private:
  int n_;
  std::function<bool(Assign)> fn_;
  std::atomic<std::uint64_t> count_{0};
};

inline Oracle oracle_of(const Dnf& f) {
  return Oracle(f.n, [f](Assign x) { return f.eval(x); });
}

}  // namespace mixwalk
