#pragma once

#include <cstdint>

#include "bellfun/bits.hpp"

namespace bellfun {

// A point of V_n = Z2^n. Components are numbered 1..n and x_1 is the most
// significant bit of the packed index, so the packed value IS the point's
// number b_n(x) = sum x_i * 2^(n-i). Lexicographic order on component tuples
// therefore coincides with numeric order on indices.
struct bool_vec {
  int n = 1;
  std::uint32_t bits = 0;

  friend bool operator==(const bool_vec&, const bool_vec&) = default;
};

inline bool_vec vector_of_index(int n, std::uint64_t index) {
  check_arity(n, 1, max_vector_arity, "vector_of_index");
  const std::uint64_t size = std::uint64_t{1} << n;
  if (index >= size)
    throw std::invalid_argument("vector_of_index: index out of range");
  return bool_vec{n, static_cast<std::uint32_t>(index)};
}

inline std::uint64_t index_of_vector(const bool_vec& v) {
  check_arity(v.n, 1, max_vector_arity, "index_of_vector");
  return v.bits;
}

// Component x_i, 1-based; lives at bit n-i of the packed index.
inline int component(const bool_vec& v, int i) {
  if (i < 1 || i > v.n) throw std::invalid_argument("component: index out of range");
  return static_cast<int>((v.bits >> (v.n - i)) & 1u);
}

inline int weight(const bool_vec& v) { return std::popcount(v.bits); }

inline bool_vec operator^(const bool_vec& a, const bool_vec& b) {
  if (a.n != b.n) throw std::invalid_argument("bool_vec xor: arity mismatch");
  return bool_vec{a.n, a.bits ^ b.bits};
}

}  // namespace bellfun
