#include "bellfun/bell.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

namespace bellfun {

namespace {

constexpr int max_violation_arity = 8;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double two_pi() { return 2.0 * std::numbers::pi; }

double reduce_phase(double phi) {
  double r = std::fmod(phi, two_pi());
  if (r < 0) r += two_pi();
  return r;
}

// Factor contributed by coordinate k at bit value b: cos(phi) for b = 0,
// -i sin(phi) for b = 1 (the (-i)^(x_k) t_(x_k) term).
std::complex<double> coord_factor(double phi, int b) {
  return b ? std::complex<double>(0.0, -std::sin(phi)) : std::complex<double>(std::cos(phi), 0.0);
}

struct coordinate_fit {
  double value = 0;  // max over the free phase
  double angle = 0;  // attained there
};

// Maximum of |P cos(a) + Q sin(a)| over a: the squared modulus is a quadratic
// form on the unit circle with matrix [[|P|^2, c], [c, |Q|^2]],
// c = Re(conj(P) Q); its top eigenvalue sits at a closed-form angle.
coordinate_fit maximize_circle(std::complex<double> p, std::complex<double> q) {
  const double a = std::norm(p);
  const double b = std::norm(q);
  const double c = (std::conj(p) * q).real();
  const double half_diff = 0.5 * (a - b);
  const double radius = std::hypot(half_diff, c);
  coordinate_fit fit;
  fit.value = std::sqrt(std::max(0.0, 0.5 * (a + b) + radius));
  fit.angle = 0.5 * std::atan2(2.0 * c, a - b);
  return fit;
}

double ascend_from(const truth_table& t, std::vector<double>& phases,
                   const violation_options& opts) {
  const int n = t.arity();
  const std::uint64_t size = t.size();
  double value = violation_objective(t, phases);
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    const double before = value;
    for (int c = 0; c < n; ++c) {
      const int bit_pos = n - 1 - c;  // component c+1 of the packed point
      std::complex<double> p = 0, q_raw = 0;
      for (std::uint64_t x = 0; x < size; ++x) {
        std::complex<double> prod = t.value(x) ? -1.0 : 1.0;
        for (int k = 0; k < n; ++k) {
          if (k == c) continue;
          prod *= coord_factor(phases[k], (x >> (n - 1 - k)) & 1);
        }
        if ((x >> bit_pos) & 1)
          q_raw += prod;
        else
          p += prod;
      }
      // The free coordinate contributes cos(phi) on one half of the cube and
      // -i sin(phi) on the other.
      const coordinate_fit fit = maximize_circle(p, q_raw * std::complex<double>(0.0, -1.0));
      phases[c] = fit.angle;
      value = fit.value;
    }
    if (value - before < opts.tol) break;
  }
  return value;
}

}  // namespace

correlation_vector make_correlation_vector(int n, std::vector<double> values) {
  check_arity(n, 1, max_table_arity, "correlation_vector");
  if (values.size() != (std::size_t{1} << n))
    throw std::invalid_argument("correlation_vector: expected 2^n entries");
  for (double e : values)
    if (!(std::abs(e) <= 1.0 + 1e-12))
      throw std::invalid_argument("correlation_vector: entry outside [-1, 1]");
  return correlation_vector{n, std::move(values)};
}

walsh_spectrum bell_coefficients(const truth_table& t) { return wht_fast(t); }

double bell_lhs(const truth_table& t, const correlation_vector& e) {
  if (t.arity() != e.n) throw std::invalid_argument("bell_lhs: arity mismatch");
  const walsh_spectrum w = wht_fast(t);
  double acc = 0;
  for (std::size_t u = 0; u < w.coeffs.size(); ++u)
    acc += static_cast<double>(w.coeffs[u]) * e.values[u];
  return acc;
}

double violation_objective(const truth_table& t, std::span<const double> phases) {
  const int n = t.arity();
  if (phases.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("violation_objective: expected n phases");
  std::complex<double> sum = 0;
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    std::complex<double> prod = t.value(x) ? -1.0 : 1.0;
    for (int k = 0; k < n; ++k) prod *= coord_factor(phases[k], (x >> (n - 1 - k)) & 1);
    sum += prod;
  }
  return std::abs(sum);
}

violation_result max_violation(const truth_table& t, const violation_options& opts) {
  const int n = t.arity();
  check_arity(n, 1, max_violation_arity, "max_violation");
  violation_result best;
  std::uint64_t rng = opts.seed;  // same start schedule for every function
  for (int start = 0; start <= opts.extra_starts; ++start) {
    std::vector<double> phases(n);
    if (start == 0) {
      phases.assign(n, std::numbers::pi / 4.0);
    } else {
      for (int k = 0; k < n; ++k)
        phases[k] = two_pi() * (static_cast<double>(splitmix64(rng) >> 11) * 0x1.0p-53);
    }
    const double value = ascend_from(t, phases, opts);
    ++best.starts_used;
    if (value > best.value) {
      best.value = value;
      best.phases = phases;
    }
  }
  for (double& phi : best.phases) phi = reduce_phase(phi);
  return best;
}

double max_violation_bound(int n) {
  check_arity(n, 1, max_vector_arity, "max_violation_bound");
  return std::exp2(0.5 * (n - 1));
}

walsh_spectrum mermin_coefficients(int n) {
  check_arity(n, 1, max_table_arity, "mermin_coefficients");
  if (n % 2 == 1) {
    const std::int64_t magnitude = std::int64_t{1} << ((n + 1) / 2);
    walsh_spectrum m{n, std::vector<std::int64_t>(std::uint64_t{1} << n, 0)};
    for (std::uint64_t u = 0; u < m.coeffs.size(); ++u) {
      const int wt = std::popcount(u);
      if (wt & 1) m.coeffs[u] = ((wt >> 1) & 1) ? -magnitude : magnitude;
    }
    return m;
  }
  // Even n: fold the odd-arity coefficients; u' drops the last component
  // (the low bit of the packed index) and bar complements it.
  const walsh_spectrum prev = mermin_coefficients(n - 1);
  const std::uint64_t prev_mask = (std::uint64_t{1} << (n - 1)) - 1;
  walsh_spectrum m{n, std::vector<std::int64_t>(std::uint64_t{1} << n)};
  for (std::uint64_t u = 0; u < m.coeffs.size(); ++u) {
    const std::uint64_t up = u >> 1;
    const std::int64_t folded = prev.coeffs[prev_mask & ~up];
    m.coeffs[u] = (u & 1) ? prev.coeffs[up] - folded : prev.coeffs[up] + folded;
  }
  return m;
}

truth_table mermin_function(int n) {
  check_arity(n, 1, max_table_arity, "mermin_function");
  if (n % 2 == 1) {
    // s_2 of one variable is the empty XOR, i.e. the zero function.
    truth_table t = n >= 2 ? symmetric_function(n, 2) : truth_table(1);
    const int residue = n % 8;
    for (std::uint64_t x = 0; x < t.size(); ++x) {
      bool v = t.value(x);
      if (residue == 1 || residue == 5) v ^= std::popcount(x) & 1;  // xor of all variables
      if (residue == 5 || residue == 7) v ^= 1;
      t.set_value(x, v);
    }
    return t;
  }
  const truth_table prev = mermin_function(n - 1);
  truth_table t(n);
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    const std::uint64_t xp = x >> 1;
    bool v = prev.value(xp);
    if (x & 1) v ^= std::popcount(xp) & 1;
    t.set_value(x, v);
  }
  return t;
}

std::string mermin_closed_form_tag(int n) {
  if (n % 2 == 0) return "even: m(x') xor (x_1+...+x_{n-1}) x_n";
  switch (n % 8) {
    case 1: return "odd n = 1 mod 8: s_1 xor s_2";
    case 3: return "odd n = 3 mod 8: s_2";
    case 5: return "odd n = 5 mod 8: 1 xor s_1 xor s_2";
    default: return "odd n = 7 mod 8: 1 xor s_2";
  }
}

bool is_mermin_class(const truth_table& t) {
  const int n = t.arity();
  const truth_table s2 = n >= 2 ? symmetric_function(n, 2) : truth_table(1);
  return is_affine(t ^ s2);
}

}  // namespace bellfun
