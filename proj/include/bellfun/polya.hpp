#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bellfun/rational.hpp"

namespace bellfun {

//! Number-theoretic Moebius function mu(m), m >= 1.
int moebius_mu(long long m);

//! a(k) = (1/k) sum_{d | k} 2^d mu(k/d): cycle-count constants for the
//! one-variable factors of the Jevons cycle index. a(1) = 2, a(2) = 1.
big_int necklace_a(int k);

//! b(k) = (1/k) sum_{d | k, d not | k/2} 2^(d/2) mu(k/d), k even; every
//! contributing d is even. b(2) = b(4) = b(6) = 1.
big_int necklace_b(int k);

struct integer_partition {
  std::vector<int> parts;         // weakly decreasing
  std::vector<int> multiplicity;  // multiplicity[k-1] = c_k, length n
};

//! All partitions of n, largest first part first.
std::vector<integer_partition> partitions_of(int n);

// A monomial in variables x_1, x_2, ...: sorted (variable, power) pairs with
// positive powers. The empty monomial is the scalar 1.
using monomial = std::vector<std::pair<int, long long>>;

//! Polynomial with exact rational coefficients, e.g. a cycle index.
struct cycle_index_poly {
  std::map<monomial, rational> terms;

  void add(const monomial& m, const rational& c);
  cycle_index_poly& operator+=(const cycle_index_poly& other);
  cycle_index_poly scaled(const rational& c) const;

  friend bool operator==(const cycle_index_poly&, const cycle_index_poly&) = default;
};

cycle_index_poly unit_poly();  // the scalar 1

/*! Cross product x_p^a (x) x_q^b = x_lcm(p,q)^(a b gcd(p,q)), extended
 *  bilinearly; the scalar 1 (empty monomial) is absorbed multiplicatively.
 *  x_1^1 is the unit on single-variable monomials.
 */
cycle_index_poly cross_product(const cycle_index_poly& lhs, const cycle_index_poly& rhs);

//! count-fold repeated cross product; count = 0 gives the scalar 1.
cycle_index_poly cross_power(const cycle_index_poly& base, int count);

/*! Cycle index of the Jevons group (variable permutations plus argument
 *  complements) acting on V_n:
 *    Z = sum_c [prod_i c_i! (2i)^(c_i)]^-1 (x)_i factor_i^((x) c_i)
 *  over partitions sum k c_k = n, with
 *    factor_i = prod_{d|i} x_d^a(d) + prod_{d|2i, d not|i} x_d^b(d).
 *  n <= 8.
 */
cycle_index_poly cycle_index_jevons(int n);

//! Evaluate with the given per-variable values; throws when a variable of
//! the polynomial has no value.
rational substitute(const cycle_index_poly& p, const std::map<int, rational>& values);

/*! Number of function classes under the Jevons group combined with output
 *  complementation: (Z(2, 2, ...) + Z(0, 2, 0, 2, ...)) / 2. The two
 *  argument lists are the two-sided substitutions sum_{j|i} j c_j(h) for the
 *  identity and the swap of the output group C_2.
 */
big_int count_nbar(int n);

//! Canonical text: terms in the map's deterministic order, "1/48*x1^8"
//! syntax, "^1" omitted.
std::string to_string(const cycle_index_poly& p);

}  // namespace bellfun
