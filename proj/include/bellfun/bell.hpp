#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bellfun/spectral.hpp"
#include "bellfun/truth_table.hpp"

namespace bellfun {

// Correlations E(u) in [-1, 1], one per spectrum index. Classical (local
// realistic) models obey sum_u W_f(u) E(u) <= 2^n for every f.
struct correlation_vector {
  int n = 1;
  std::vector<double> values;
};

correlation_vector make_correlation_vector(int n, std::vector<double> values);

//! The spectrum of f read as the coefficient vector of its Bell inequality.
walsh_spectrum bell_coefficients(const truth_table& t);

//! Left-hand side sum_u W_f(u) E(u).
double bell_lhs(const truth_table& t, const correlation_vector& e);

//! Quantum value at given phases:
//!   |sum_x (-1)^f(x) prod_k (-i)^(x_k) t_(x_k)(phi_k)|
//! with t_0 = cos and t_1 = sin. Equals 1 identically for affine f.
double violation_objective(const truth_table& t, std::span<const double> phases);

struct violation_options {
  double tol = 1e-12;       // stop a start when a full sweep gains less than this
  int extra_starts = 32;    // pseudo-random restarts beyond the pi/4 start
  std::uint64_t seed = 0x9a3c6de1b2f05c47ull;  // fixed: results are reproducible
  int max_sweeps = 500;
};

struct violation_result {
  double value = 0;
  std::vector<double> phases;  // arg max, each reduced to [0, 2pi)
  int starts_used = 0;
};

/*! Maximal violation v_f, found by cyclic per-coordinate maximization: with
 *  all other phases fixed the sum is P cos(phi_k) + Q sin(phi_k) for complex
 *  P, Q, whose maximal modulus over the circle is the top eigenvalue of a
 *  2x2 Gram form and is attained at a closed-form angle. Deterministic
 *  multistart; n <= 8. Always in [1, 2^((n-1)/2)].
 */
violation_result max_violation(const truth_table& t, const violation_options& opts = {});

//! Upper bound 2^((n-1)/2) on v_f over all f of arity n.
double max_violation_bound(int n);

/*! Coefficients M(u) of the Mermin inequality. For odd n, M(u) = 0 on even
 *  weight and (-1)^((wt-1)/2) 2^((n+1)/2) on odd weight; for even n,
 *  M(u) = M(u') + M(u'-bar) or M(u') - M(u'-bar) as the last component of u
 *  is 0 or 1, where u' drops that component and bar is the componentwise
 *  complement.
 */
walsh_spectrum mermin_coefficients(int n);

//! A function attaining the Mermin bound: for odd n a mod-8 case formula on
//! top of s_2, for even n m(x) = m(x') xor (x_1 + ... + x_(n-1)) x_n.
truth_table mermin_function(int n);

//! Short description of the closed form used for mermin_function(n).
std::string mermin_closed_form_tag(int n);

//! f attains the maximal violation iff f = a xor s_2 with a affine.
bool is_mermin_class(const truth_table& t);

}  // namespace bellfun
