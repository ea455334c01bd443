#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bellfun {

// Arity limits. Points (boolean vectors) go up to 32 components; truth tables
// are memory-bound well before that; sweeps over all 2^(2^n) functions are
// only feasible through n = 4 and are refused beyond it.
inline constexpr int max_vector_arity = 32;
inline constexpr int max_table_arity = 26;
inline constexpr int max_exhaustive_arity = 4;
// Autocorrelation accumulates sums bounded by 8^n, so it stays in int64 range
// only up to n = 20.
inline constexpr int max_autocorr_arity = 20;

inline int parity(std::uint64_t w) { return std::popcount(w) & 1; }

// Scalar product of two packed vectors: <x,u> = popcount(x & u) mod 2.
inline int dot(std::uint64_t x, std::uint64_t u) { return std::popcount(x & u) & 1; }

inline void check_arity(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw std::invalid_argument(std::string(what) + ": arity " + std::to_string(n) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace bellfun
