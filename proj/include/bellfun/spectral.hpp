#pragma once

#include <cstdint>
#include <vector>

#include "bellfun/rational.hpp"
#include "bellfun/truth_table.hpp"

namespace bellfun {

/*! Walsh-Hadamard spectrum W_f(u) = sum_x (-1)^(f(x) + <x,u>), indexed by the
 *  packed u. Every entry is even and the total squares sum to 2^(2n).
 */
struct walsh_spectrum {
  int n = 1;
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const walsh_spectrum&, const walsh_spectrum&) = default;
};

//! Autocorrelation Delta_{f,g}(u) = sum_x (-1)^(f(x) + g(x xor u)).
struct autocorr_spectrum {
  int n = 1;
  std::vector<std::int64_t> values;

  friend bool operator==(const autocorr_spectrum&, const autocorr_spectrum&) = default;
};

//! Reference transform: each W(u) evaluated independently from the defining
//! sum (blockwise over the packed table, O(4^n) bit work overall).
walsh_spectrum wht_naive(const truth_table& t);

//! In-place butterfly, n stages over a signed buffer seeded with (-1)^f(x);
//! stage k pairs indices j*2^k + i and j*2^k + 2^(k-1) + i.
walsh_spectrum wht_fast(const truth_table& t);

//! Inverse transform; throws std::domain_error when w is not the spectrum of
//! any boolean function.
truth_table wht_inverse(const walsh_spectrum& w);

//! True iff sum_u W(u)W(u xor v) = 2^(2n)[v = 0] for every v. Checked
//! directly in O(4^n) for n <= 8, via one inverse butterfly beyond that.
bool is_valid_spectrum(const walsh_spectrum& w);

//! N_f = 2^(n-1) - max_u |W_f(u)| / 2, the distance to the affine functions.
std::int64_t nonlinearity(const truth_table& t);

autocorr_spectrum autocorrelation(const truth_table& f, const truth_table& g);
autocorr_spectrum autocorrelation(const truth_table& f);

//! Number of nonzero spectrum entries, NW_f.
std::int64_t walsh_support_size(const walsh_spectrum& w);
//! Number of nonzero autocorrelation entries, NDelta_f (always >= 1).
std::int64_t autocorr_support_size(const autocorr_spectrum& d);

//! Uncertainty product U(f) = NW_f * NDelta_f / 2^n as an exact rational;
//! always >= 1.
rational uncertainty(const truth_table& t);

//! The 2^n x 2^n matrix with entries W_f(u xor v) / 2^n. Involutive, and
//! matrices of different functions multiply to the matrix of the XOR.
//! Test-scale facility, n <= 4.
std::vector<std::vector<rational>> walsh_matrix(const truth_table& t);

}  // namespace bellfun
