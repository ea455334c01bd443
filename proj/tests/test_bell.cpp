#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "bellfun/bell.hpp"
#include "bellfun/spectral.hpp"
#include "test_util.hpp"

using namespace bellfun;

TEST_CASE("CHSH: the AND inequality and its quantum violation") {
  const truth_table and2 = truth_table::from_index(2, 8);
  CHECK(bell_coefficients(and2).coeffs == std::vector<std::int64_t>{2, 2, 2, -2});

  // Deterministic correlations matching the coefficient signs give 8 > 2^n.
  const correlation_vector e = make_correlation_vector(2, {1, 1, 1, -1});
  CHECK(bell_lhs(and2, e) == doctest::Approx(8.0));
  CHECK(bell_lhs(and2, e) > 4.0);
}

TEST_CASE("correlation vectors are validated") {
  CHECK_THROWS_AS(make_correlation_vector(2, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_correlation_vector(2, {1, 1, 1, -1.001}), std::invalid_argument);
  const correlation_vector e = make_correlation_vector(1, {0.5, -0.5});
  CHECK_THROWS_AS(bell_lhs(truth_table(2), e), std::invalid_argument);
}

TEST_CASE("violation objective closed values") {
  const truth_table and2 = truth_table::from_index(2, 8);
  const double quarter = std::numbers::pi / 4.0;
  const std::array<double, 2> at{quarter, quarter};
  CHECK(violation_objective(and2, at) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // Affine functions give 1 at every phase point.
  testutil::rng r(31);
  for (std::uint64_t b : {0ull, 15ull, 0b0110ull, 0b1010ull, 0b1001ull}) {
    const truth_table t = truth_table::from_index(2, b);
    REQUIRE(is_affine(t));
    for (int rep = 0; rep < 8; ++rep) {
      const std::array<double, 2> phases{r.uniform() * 7, r.uniform() * 7};
      CHECK(violation_objective(t, phases) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(violation_objective(and2, std::array<double, 3>{0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("max violation of AND is sqrt 2") {
  const truth_table and2 = truth_table::from_index(2, 8);
  const violation_result res = max_violation(and2);
  CHECK(res.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  // The reported phases actually attain the reported value.
  CHECK(violation_objective(and2, res.phases) == doctest::Approx(res.value).epsilon(1e-9));
  CHECK(res.starts_used == 33);
  for (double phi : res.phases) {
    CHECK(phi >= 0.0);
    CHECK(phi < 2.0 * std::numbers::pi);
  }
}

TEST_CASE("affine functions never violate") {
  for (int n : {1, 2, 3, 4}) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
      for (int c = 0; c < 2; ++c) {
        truth_table t(n);
        for (std::uint64_t x = 0; x < t.size(); ++x) t.set_value(x, dot(x, a) ^ c);
        CHECK(max_violation(t).value == doctest::Approx(1.0).epsilon(1e-9));
      }
  }
}

TEST_CASE("violation respects the global bound and complement invariance") {
  for (std::uint64_t b = 0; b < 16; ++b) {
    const truth_table t = truth_table::from_index(2, b);
    const double v = max_violation(t).value;
    CHECK(v <= max_violation_bound(2) + 1e-9);
    CHECK(v >= 1.0 - 1e-9);
    // The complement flips the sign of every summand, so every ascent step
    // sees identical values.
    CHECK(max_violation(t.complement()).value == v);
  }
  testutil::rng r(32);
  for (int rep = 0; rep < 6; ++rep) {
    const truth_table t = testutil::random_table(4, r);
    CHECK(max_violation(t).value <= max_violation_bound(4) + 1e-9);
  }
  CHECK(max_violation_bound(1) == doctest::Approx(1.0));
  CHECK(max_violation_bound(3) == doctest::Approx(2.0));
  CHECK(max_violation_bound(4) == doctest::Approx(std::exp2(1.5)));
  CHECK_THROWS_AS(max_violation(truth_table(9)), std::invalid_argument);
}

TEST_CASE("mermin coefficients, closed form") {
  CHECK(mermin_coefficients(1).coeffs == std::vector<std::int64_t>{0, 2});
  CHECK(mermin_coefficients(2).coeffs == std::vector<std::int64_t>{2, -2, 2, 2});
  CHECK(mermin_coefficients(3).coeffs ==
        std::vector<std::int64_t>{0, 4, 4, 0, 4, 0, 0, -4});
  // Even fold of the n = 3 row, worked by hand.
  CHECK(mermin_coefficients(4).coeffs ==
        std::vector<std::int64_t>{-4, 4, 4, 4, 4, 4, 4, -4, 4, 4, 4, -4, 4, -4, -4, -4});
}

TEST_CASE("mermin coefficients are the spectrum of the mermin function") {
  for (int n = 1; n <= 8; ++n) {
    const walsh_spectrum m = mermin_coefficients(n);
    CHECK(is_valid_spectrum(m));
    CHECK(wht_fast(mermin_function(n)) == m);
  }
}

TEST_CASE("mermin functions by residue") {
  CHECK(mermin_function(3).index() == 232);  // s_2 itself
  CHECK(mermin_function(2).index() == 4);    // x_1 xor x_1 x_2
  CHECK(mermin_function(1).index() == 2);    // x_1
  for (int n = 1; n <= 8; ++n) {
    CHECK(is_mermin_class(mermin_function(n)));
    CHECK_FALSE(mermin_closed_form_tag(n).empty());
  }
  CHECK(mermin_closed_form_tag(3) == "odd n = 3 mod 8: s_2");
  CHECK(mermin_closed_form_tag(11) == mermin_closed_form_tag(3));
}

TEST_CASE("mermin functions have unit uncertainty") {
  for (int n = 2; n <= 10; ++n) {
    const truth_table m = mermin_function(n);
    CHECK(uncertainty(m) == rational(1));
    const std::int64_t nw = walsh_support_size(wht_fast(m));
    const std::int64_t nd = autocorr_support_size(autocorrelation(m));
    if (n % 2) {
      CHECK(nw == std::int64_t{1} << (n - 1));
      CHECK(nd == 2);
    } else {
      CHECK(nw == std::int64_t{1} << n);
      CHECK(nd == 1);
    }
  }
}

TEST_CASE("mermin functions attain the violation bound") {
  for (int n = 2; n <= 4; ++n) {
    const violation_result res = max_violation(mermin_function(n));
    CHECK(res.value == doctest::Approx(max_violation_bound(n)).epsilon(1e-6));
  }
}

TEST_CASE("the mermin class in three variables") {
  int count = 0;
  for (std::uint64_t b = 0; b < 256; ++b)
    count += is_mermin_class(truth_table::from_index(3, b));
  CHECK(count == 16);  // one affine coset
  CHECK(is_mermin_class(symmetric_function(4, 2)));
  // In two variables s_2 is the AND, so the AND is itself a maximal violator.
  CHECK(is_mermin_class(truth_table::from_index(2, 8)));
  CHECK_FALSE(is_mermin_class(truth_table::from_index(3, 0x80)));
  CHECK_FALSE(is_mermin_class(truth_table(3)));
}
