#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "bellfun/equivalence.hpp"
#include "bellfun/spectral.hpp"
#include "test_util.hpp"

using namespace bellfun;

namespace {

group_element random_element(int n, testutil::rng& r) {
  const std::vector<perm> perms = all_perms(n);
  group_element g;
  g.n = n;
  g.negate = r.next() & 1;
  g.z = std::uint32_t(r.below(std::uint64_t{1} << n));
  g.pi = perms[r.below(perms.size())];
  g.y = std::uint32_t(r.below(std::uint64_t{1} << n));
  return g;
}

}  // namespace

TEST_CASE("permutation composition and inverse") {
  // pi maps 1 -> 2, 2 -> 3, 3 -> 1.
  const perm pi{{1, 2, 0}};
  const perm id = identity_perm(3);
  CHECK(composed(pi, inverse(pi)) == id);
  CHECK(composed(inverse(pi), pi) == id);
  CHECK(composed(pi, id) == pi);

  const perm rho{{0, 2, 1}};
  // (pi rho)(1) = pi(1) = 2, (pi rho)(2) = pi(3) = 1, (pi rho)(3) = pi(2) = 3.
  CHECK(composed(pi, rho) == perm{{1, 0, 2}});
  CHECK(all_perms(3).size() == 6);
  CHECK(all_perms(1) == std::vector<perm>{identity_perm(1)});
}

TEST_CASE("vector action moves component i to position pi(i)") {
  const perm pi{{1, 2, 0}};  // 1 -> 2, 2 -> 3, 3 -> 1
  // v = (1, 1, 0): component 1 lands at position 2, component 2 at 3,
  // component 3 at 1, giving (0, 1, 1).
  CHECK(permute_vector(pi, 0b110, 3) == 0b011);
  // The relation p_pi s_y = s_{pi^-1 y} p_pi needs pi^-1 y = (1, 0, 1).
  CHECK(permute_vector(inverse(pi), 0b110, 3) == 0b101);
  for (std::uint32_t v = 0; v < 8; ++v)
    CHECK(permute_vector(identity_perm(3), v, 3) == v);
}

TEST_CASE("group axioms on sampled triples") {
  testutil::rng r(41);
  for (int n : {1, 2, 3}) {
    const group_element e = identity_element(n);
    for (int rep = 0; rep < 12; ++rep) {
      const group_element a = random_element(n, r);
      const group_element b = random_element(n, r);
      const group_element c = random_element(n, r);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      CHECK(compose(a, e) == a);
      CHECK(compose(e, a) == a);
      CHECK(compose(a, inverse(a)) == e);
      CHECK(compose(inverse(a), a) == e);
    }
  }
}

TEST_CASE("composition matches sequential application") {
  testutil::rng r(42);
  for (int n : {2, 3}) {
    for (int rep = 0; rep < 10; ++rep) {
      const group_element g = random_element(n, r);
      const group_element h = random_element(n, r);
      const truth_table t = testutil::random_table(n, r);
      CHECK(apply(compose(g, h), t) == apply(g, apply(h, t)));
      CHECK(apply(inverse(g), apply(g, t)) == t);
      CHECK(apply(identity_element(n), t) == t);
    }
  }
}

TEST_CASE("defining relations of the factors") {
  // p_pi s_y = s_{pi^-1 y} p_pi and s_y t_z = eps^<y,z> t_z s_y, checked as
  // group elements over all of n = 2.
  for (const perm& pi : all_perms(2)) {
    for (std::uint32_t y = 0; y < 4; ++y) {
      group_element p_pi = identity_element(2);
      p_pi.pi = pi;
      group_element s_y = identity_element(2);
      s_y.y = y;
      group_element s_moved = identity_element(2);
      s_moved.y = permute_vector(inverse(pi), y, 2);
      CHECK(compose(p_pi, s_y) == compose(s_moved, p_pi));

      for (std::uint32_t z = 0; z < 4; ++z) {
        group_element t_z = identity_element(2);
        t_z.z = z;
        group_element expected = compose(t_z, s_y);
        expected.negate = expected.negate ^ (dot(y, z) != 0);
        CHECK(compose(s_y, t_z) == expected);
      }
    }
  }
}

TEST_CASE("spectrum transport under the factors") {
  testutil::rng r(43);
  for (std::uint64_t b = 0; b < 16; ++b) {
    const truth_table t = truth_table::from_index(2, b);
    const walsh_spectrum w = wht_fast(t);

    for (std::uint32_t z = 0; z < 4; ++z) {
      group_element g = identity_element(2);
      g.z = z;
      const walsh_spectrum wz = wht_fast(apply(g, t));
      for (std::uint32_t u = 0; u < 4; ++u) CHECK(wz.coeffs[u] == w.coeffs[u ^ z]);
    }
    for (std::uint32_t y = 0; y < 4; ++y) {
      group_element g = identity_element(2);
      g.y = y;
      const walsh_spectrum wy = wht_fast(apply(g, t));
      for (std::uint32_t u = 0; u < 4; ++u)
        CHECK(wy.coeffs[u] == (dot(y, u) ? -w.coeffs[u] : w.coeffs[u]));
    }
    for (const perm& pi : all_perms(2)) {
      group_element g = identity_element(2);
      g.pi = pi;
      const walsh_spectrum wp = wht_fast(apply(g, t));
      for (std::uint32_t u = 0; u < 4; ++u)
        CHECK(wp.coeffs[u] == w.coeffs[permute_vector(pi, u, 2)]);
    }
  }
}

TEST_CASE("the action is faithful and the enumeration complete") {
  CHECK(group_order(1) == 8);
  CHECK(group_order(2) == 64);
  CHECK(group_order(3) == 768);
  const std::vector<group_element> all2 = all_group_elements(2);
  CHECK(all2.size() == 64);

  // Distinct elements act distinctly: collect the full action table of each.
  std::map<std::vector<std::uint64_t>, int> actions;
  for (const group_element& g : all2) {
    std::vector<std::uint64_t> table;
    for (std::uint64_t b = 0; b < 16; ++b)
      table.push_back(apply(g, truth_table::from_index(2, b)).index());
    ++actions[table];
  }
  CHECK(actions.size() == 64);
  for (const auto& [table, count] : actions) CHECK(count == 1);

  group_element flip = identity_element(2);
  flip.negate = true;
  CHECK(apply(flip, truth_table(2)) == truth_table(2).complement());
}

TEST_CASE("orbit of the zero function is the affine set") {
  const std::vector<std::uint64_t> orbit = orbit_of(truth_table(3));
  CHECK(orbit.size() == 16);
  for (std::uint64_t b : orbit) CHECK(is_affine(truth_table::from_index(3, b)));
  CHECK(std::is_sorted(orbit.begin(), orbit.end()));
  CHECK(orbit.front() == 0);
  CHECK(orbit.back() == 255);  // constant 1
}

TEST_CASE("orbit sizes divide the group order") {
  testutil::rng r(44);
  for (int rep = 0; rep < 6; ++rep) {
    const truth_table t = testutil::random_table(3, r);
    const std::vector<std::uint64_t> orbit = orbit_of(t);
    CHECK(group_order(3) % orbit.size() == 0);
    CHECK(std::count(orbit.begin(), orbit.end(), t.index()) == 1);
  }
}

TEST_CASE("classification of two and three variables") {
  const orbit_partition p2 = classify(2);
  CHECK(p2.classes() == 2);
  CHECK(p2.representative == std::vector<std::uint64_t>{0, 1});
  CHECK(p2.size == std::vector<std::uint64_t>{8, 8});

  const orbit_partition p3 = classify(3);
  CHECK(p3.classes() == 5);
  CHECK(p3.representative == std::vector<std::uint64_t>{0, 1, 3, 6, 23});
  CHECK(p3.size == std::vector<std::uint64_t>{16, 128, 48, 48, 16});
  CHECK(std::accumulate(p3.size.begin(), p3.size.end(), std::uint64_t{0}) == 256);

  // s_2 sits in the last, maximally violating class.
  CHECK(p3.class_of[232] == 4);
  // Class labels match orbit membership.
  for (std::uint64_t b = 0; b < 256; ++b) {
    const int c = p3.class_of[b];
    CHECK(p3.class_of[p3.representative[c]] == c);
  }
  const std::vector<std::uint64_t> orbit = orbit_of(truth_table::from_index(3, 23));
  CHECK(orbit.size() == p3.size[4]);
  for (std::uint64_t b : orbit) CHECK(p3.class_of[b] == 4);
}

TEST_CASE("the xor-s2 involution swaps trivial and mermin classes") {
  for (int n : {2, 3}) {
    const orbit_partition p = classify(n);
    const std::vector<int> inv = class_involution(p);
    for (int c = 0; c < p.classes(); ++c) CHECK(inv[inv[c]] == c);
    // Class 0 holds the affine functions; its image is the mermin class.
    const std::uint64_t s2 = symmetric_function(n, 2).index();
    CHECK(inv[0] == p.class_of[s2]);
    CHECK(inv[p.class_of[s2]] == 0);
    CHECK(inv[0] != 0);
  }
}

TEST_CASE("five variables are refused") {
  CHECK_THROWS_AS(classify(5), std::invalid_argument);
  CHECK_THROWS_AS(orbit_of(truth_table(5)), std::invalid_argument);
}
