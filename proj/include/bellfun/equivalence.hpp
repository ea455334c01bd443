#pragma once

#include <cstdint>
#include <vector>

#include "bellfun/truth_table.hpp"

namespace bellfun {

// Permutation of positions 1..n, stored 0-based: images[i] = pi(i+1) - 1.
struct perm {
  std::vector<std::uint8_t> images;

  friend bool operator==(const perm&, const perm&) = default;
};

perm identity_perm(int n);
//! Function composition: (outer after inner)(i) = outer(inner(i)).
perm composed(const perm& outer, const perm& inner);
perm inverse(const perm& p);
//! All n! permutations in lexicographic image order.
std::vector<perm> all_perms(int n);

//! Action on packed vectors: component i of the result is component
//! pi^-1(i) of the input.
std::uint32_t permute_vector(const perm& p, std::uint32_t v, int n);

/*! Canonical element eps^d t_z p_pi s_y of the transformation group: acting on
 *  a function by (alpha f)(x) = f(pi x xor y) xor <x, z> xor d. Every group
 *  element has exactly one such tuple, so the group order is 2^(2n+1) n!.
 */
struct group_element {
  int n = 1;
  bool negate = false;   // eps exponent d
  std::uint32_t z = 0;   // linear-function factor t_z
  perm pi;               // variable permutation p_pi
  std::uint32_t y = 0;   // argument shift s_y

  friend bool operator==(const group_element&, const group_element&) = default;
};

group_element identity_element(int n);

//! Group product; apply(compose(g, h), t) = apply(g, apply(h, t)).
group_element compose(const group_element& g, const group_element& h);
group_element inverse(const group_element& g);

truth_table apply(const group_element& g, const truth_table& t);

std::uint64_t group_order(int n);

//! Every element once, in (negate, z, pi, y) nesting order; test-scale.
std::vector<group_element> all_group_elements(int n);

//! Sorted function numbers of the orbit of t; n <= 4.
std::vector<std::uint64_t> orbit_of(const truth_table& t);

struct orbit_partition {
  int n = 1;
  std::vector<std::int32_t> class_of;        // function number -> class id
  std::vector<std::uint64_t> representative; // class id -> least member
  std::vector<std::uint64_t> size;           // class id -> orbit size

  int classes() const { return static_cast<int>(representative.size()); }
};

//! Partition all 2^(2^n) functions into equivalence classes by ascending
//! scan; class ids follow representative order. n <= 4 (n = 5 would mean
//! 2^32 functions and is refused).
orbit_partition classify(int n);

//! The involution [f] -> [f xor s_2] on class ids. Maps the class of the
//! constants onto the Mermin class and back.
std::vector<int> class_involution(const orbit_partition& p);

}  // namespace bellfun
