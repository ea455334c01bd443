#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bellfun {

// Exact arithmetic used wherever the contract forbids floating point:
// uncertainty products and cycle-index coefficients.
using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

//! "p/q" in lowest terms; the "/q" part is omitted when q = 1.
inline std::string to_string(const rational& r) { return r.str(); }

}  // namespace bellfun
