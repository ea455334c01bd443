#include "bellfun/truth_table.hpp"

#include <algorithm>
#include <bit>

namespace bellfun {

namespace {

std::size_t word_count(int n) {
  return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
}

// Mask of the valid bits in the (single) word of a short table.
std::uint64_t tail_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << n)) - 1;
}

}  // namespace

truth_table::truth_table(int n) : n_(n) {
  check_arity(n, 1, max_table_arity, "truth_table");
  words_.assign(word_count(n), 0);
}

truth_table truth_table::from_index(int n, std::uint64_t bits) {
  check_arity(n, 1, 6, "truth_table::from_index");
  if (n < 6 && bits > tail_mask(n))
    throw std::invalid_argument("truth_table::from_index: index needs more than 2^n bits");
  truth_table t(n);
  t.words_[0] = bits;
  return t;
}

truth_table truth_table::from_bit_string(int n, const std::string& s) {
  check_arity(n, 1, max_table_arity, "truth_table::from_bit_string");
  truth_table t(n);
  if (s.size() > t.size())
    throw std::invalid_argument("truth_table::from_bit_string: string longer than 2^n");
  // Leftmost character is the value at the highest point index.
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[s.size() - 1 - k];
    if (c != '0' && c != '1')
      throw std::invalid_argument("truth_table::from_bit_string: invalid character");
    t.set_value(k, c == '1');
  }
  return t;
}

void truth_table::set_value(std::uint64_t x, bool v) {
  if (x >= size()) throw std::invalid_argument("truth_table::set_value: point out of range");
  const std::uint64_t mask = std::uint64_t{1} << (x & 63);
  if (v)
    words_[x >> 6] |= mask;
  else
    words_[x >> 6] &= ~mask;
}

std::uint64_t truth_table::index() const {
  if (n_ > 6) throw std::domain_error("truth_table::index: table wider than 64 bits");
  return words_[0];
}

std::string truth_table::to_bit_string() const {
  std::string s(size(), '0');
  for (std::uint64_t x = 0; x < size(); ++x)
    if (value(x)) s[size() - 1 - x] = '1';
  return s;
}

std::uint64_t truth_table::weight() const {
  std::uint64_t w = 0;
  for (std::uint64_t word : words_) w += std::popcount(word);
  return w;
}

truth_table truth_table::operator^(const truth_table& other) const {
  if (n_ != other.n_) throw std::invalid_argument("truth_table xor: arity mismatch");
  truth_table out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] ^ other.words_[i];
  return out;
}

truth_table truth_table::complement() const {
  truth_table out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.words_.back() &= tail_mask(n_);
  return out;
}

anf_form::anf_form(int n) : n_(n) {
  check_arity(n, 1, max_table_arity, "anf_form");
  words_.assign(word_count(n), 0);
}

void anf_form::set_coeff(std::uint64_t y, bool v) {
  if (y >= size()) throw std::invalid_argument("anf_form::set_coeff: index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (y & 63);
  if (v)
    words_[y >> 6] |= mask;
  else
    words_[y >> 6] &= ~mask;
}

std::uint64_t anf_form::index() const {
  if (n_ > 6) throw std::domain_error("anf_form::index: form wider than 64 bits");
  return words_[0];
}

std::vector<std::uint64_t> anf_form::monomials() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t y = 0; y < size(); ++y)
    if (coeff(y)) out.push_back(y);
  return out;
}

std::uint64_t distance(const truth_table& f, const truth_table& g) {
  return (f ^ g).weight();
}

namespace {

// In-place subset-XOR butterfly shared by both Moebius directions. Stage s
// folds value at each point with bit s clear into the partner with bit s set.
void mobius_butterfly(std::vector<std::uint64_t>& w, int n) {
  static constexpr std::uint64_t in_word_mask[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
  };
  for (int s = 0; s < n && s < 6; ++s)
    for (auto& word : w) word ^= (word & in_word_mask[s]) << (1 << s);
  for (int s = 6; s < n; ++s) {
    const std::size_t half = std::size_t{1} << (s - 6);
    for (std::size_t base = 0; base < w.size(); base += 2 * half)
      for (std::size_t i = 0; i < half; ++i) w[base + half + i] ^= w[base + i];
  }
}

}  // namespace

anf_form mobius(const truth_table& t) {
  anf_form a(t.arity());
  a.words_ = t.words();
  mobius_butterfly(a.words_, t.arity());
  return a;
}

truth_table mobius(const anf_form& a) {
  truth_table t(a.arity());
  t.words_ = a.words();
  mobius_butterfly(t.words_, a.arity());
  return t;
}

int degree(const truth_table& t) {
  const anf_form a = mobius(t);
  int deg = 0;
  for (std::uint64_t y = 0; y < a.size(); ++y)
    if (a.coeff(y)) deg = std::max(deg, std::popcount(y));
  return deg;
}

bool is_affine(const truth_table& t) { return degree(t) <= 1; }

truth_table symmetric_function(int n, int k) {
  check_arity(n, 1, max_table_arity, "symmetric_function");
  if (k < 0 || k > n) throw std::invalid_argument("symmetric_function: k outside [0, n]");
  truth_table t(n);
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    const std::uint64_t wt = static_cast<std::uint64_t>(std::popcount(x));
    t.set_value(x, (wt & static_cast<std::uint64_t>(k)) == static_cast<std::uint64_t>(k));
  }
  return t;
}

}  // namespace bellfun
