#pragma once
#include <bit>
#include <cstdint>
#include <random>

namespace mixwalk {

// A point of {0,1}^n packed into a word: bit (i-1) holds x_i, 1-based as in
// the text formats. Everything downstream enforces n <= 64.
using Assign = std::uint64_t;
using Rng = std::mt19937_64;

constexpr int kMaxVars = 64;

inline Assign nmask(int n) { return n >= 64 ? ~0ull : ((1ull << n) - 1ull); }
inline int getbit(Assign x, int var) { return int((x >> (var - 1)) & 1ull); }
inline Assign flipbit(Assign x, int var) { return x ^ (1ull << (var - 1)); }
inline int popcnt(std::uint64_t m) { return std::popcount(m); }

// splitmix64 finalizer; used to derive statistically independent child seeds
// from (master seed, indices...) so nested loops stay order-independent.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
inline std::uint64_t derive_seed(std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0, std::uint64_t d = 0) {
  return mix64(mix64(mix64(mix64(a) ^ b) ^ c) ^ d);
}

inline Assign rand_point(int n, Rng& g) { return Assign(g()) & nmask(n); }

}  // namespace mixwalk
