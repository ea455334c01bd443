#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bellfun/bits.hpp"

namespace bellfun {

class anf_form;

/*! Truth table of a boolean function f : V_n -> Z2, bit-packed 64 values per
 *  word. Bit x of the table (x = 0 .. 2^n-1) holds f at the point with packed
 *  index x, so the whole table read as a little-endian integer equals the
 *  function number B_n(f) = sum f(x) * 2^x; f(0) is the least significant bit.
 */
class truth_table {
 public:
  explicit truth_table(int n);

  //! Build from the function number B, which needs 2^n bits; n <= 6.
  static truth_table from_index(int n, std::uint64_t bits);
  //! Build from "101..." (2^n characters, leftmost = f at point 2^n - 1).
  static truth_table from_bit_string(int n, const std::string& s);

  int arity() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool value(std::uint64_t x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void set_value(std::uint64_t x, bool v);

  //! Function number; only defined for n <= 6 where it fits a 64-bit word.
  std::uint64_t index() const;
  std::string to_bit_string() const;

  std::uint64_t weight() const;
  bool is_balanced() const { return weight() == size() / 2; }

  truth_table operator^(const truth_table& other) const;
  truth_table complement() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const truth_table&, const truth_table&) = default;

 private:
  friend truth_table mobius(const anf_form&);
  int n_;
  std::vector<std::uint64_t> words_;
};

//! Algebraic normal form of a function of n variables: bit y holds the
//! coefficient g_f(y) of the monomial prod_{i : y_i = 1} x_i.
class anf_form {
 public:
  explicit anf_form(int n);

  int arity() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool coeff(std::uint64_t y) const {
    return (words_[y >> 6] >> (y & 63)) & 1u;
  }
  void set_coeff(std::uint64_t y, bool v);

  //! Packed coefficient vector read as an integer; n <= 6.
  std::uint64_t index() const;
  //! Indices y with g(y) = 1, ascending.
  std::vector<std::uint64_t> monomials() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const anf_form&, const anf_form&) = default;

 private:
  friend anf_form mobius(const truth_table&);
  friend truth_table mobius(const anf_form&);
  int n_;
  std::vector<std::uint64_t> words_;
};

//! Hamming distance d(f, g).
std::uint64_t distance(const truth_table& f, const truth_table& g);

//! Moebius transform g_f(y) = xor of f(x) over all x <= y componentwise.
//! Involutive: applying it to the ANF coefficients recovers the table.
anf_form mobius(const truth_table& t);
truth_table mobius(const anf_form& a);

//! Algebraic degree: largest weight of a monomial present in the ANF.
//! The zero function has degree 0 by convention.
int degree(const truth_table& t);

//! deg(f) <= 1, i.e. f is in A_n (there are 2^(n+1) of these).
bool is_affine(const truth_table& t);

//! Elementary symmetric function s_k of n variables: the XOR of all products
//! of k distinct variables. s_k(x) = C(wt(x), k) mod 2, which by Lucas is
//! 1 exactly when the binary digits of k are contained in those of wt(x).
truth_table symmetric_function(int n, int k);

}  // namespace bellfun
