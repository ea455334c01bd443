#include "bellfun/polya.hpp"

#include <numeric>
#include <stdexcept>

#include "bellfun/bits.hpp"

namespace bellfun {

int moebius_mu(long long m) {
  if (m < 1) throw std::invalid_argument("moebius_mu: argument must be positive");
  int sign = 1;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;  // square factor
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

big_int necklace_a(int k) {
  if (k < 1) throw std::invalid_argument("necklace_a: argument must be positive");
  big_int sum = 0;
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) sum += (big_int(1) << d) * moebius_mu(k / d);
  return sum / k;  // exact: the sum counts k copies of each necklace
}

big_int necklace_b(int k) {
  if (k < 2 || k % 2) throw std::invalid_argument("necklace_b: argument must be even");
  big_int sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d || (k / 2) % d == 0) continue;
    // d divides k but not k/2, hence d is even.
    sum += (big_int(1) << (d / 2)) * moebius_mu(k / d);
  }
  return sum / k;
}

std::vector<integer_partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: argument must be positive");
  std::vector<integer_partition> out;
  std::vector<int> parts;
  auto recurse = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      integer_partition p;
      p.parts = parts;
      p.multiplicity.assign(n, 0);
      for (int part : parts) ++p.multiplicity[part - 1];
      out.push_back(std::move(p));
      return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
      parts.push_back(next);
      self(self, remaining - next, next);
      parts.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

void cycle_index_poly::add(const monomial& m, const rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

cycle_index_poly& cycle_index_poly::operator+=(const cycle_index_poly& other) {
  for (const auto& [m, c] : other.terms) add(m, c);
  return *this;
}

cycle_index_poly cycle_index_poly::scaled(const rational& c) const {
  cycle_index_poly out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms) out.terms.emplace(m, coeff * c);
  return out;
}

cycle_index_poly unit_poly() {
  cycle_index_poly one;
  one.terms.emplace(monomial{}, rational(1));
  return one;
}

namespace {

monomial cross_monomials(const monomial& a, const monomial& b) {
  // The empty monomial is the scalar 1 and absorbs multiplicatively (this is
  // what makes a 0-fold cross power the identity of the fold).
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::map<int, long long> powers;
  for (const auto& [p, e1] : a)
    for (const auto& [q, e2] : b) {
      const long long g = std::gcd(static_cast<long long>(p), static_cast<long long>(q));
      const long long var = p / g * q;  // lcm
      powers[static_cast<int>(var)] += e1 * e2 * g;
    }
  monomial out(powers.begin(), powers.end());
  return out;
}

}  // namespace

cycle_index_poly cross_product(const cycle_index_poly& lhs, const cycle_index_poly& rhs) {
  cycle_index_poly out;
  for (const auto& [ma, ca] : lhs.terms)
    for (const auto& [mb, cb] : rhs.terms) out.add(cross_monomials(ma, mb), ca * cb);
  return out;
}

cycle_index_poly cross_power(const cycle_index_poly& base, int count) {
  if (count < 0) throw std::invalid_argument("cross_power: negative count");
  cycle_index_poly out = unit_poly();
  for (int i = 0; i < count; ++i) out = cross_product(out, base);
  return out;
}

cycle_index_poly cycle_index_jevons(int n) {
  check_arity(n, 1, 8, "cycle_index_jevons");
  cycle_index_poly total;
  for (const integer_partition& partition : partitions_of(n)) {
    rational coeff = 1;
    cycle_index_poly term = unit_poly();
    for (int i = 1; i <= n; ++i) {
      const int ci = partition.multiplicity[i - 1];
      if (ci == 0) continue;
      big_int denom = 1;
      for (int f = 2; f <= ci; ++f) denom *= f;  // c_i!
      for (int f = 0; f < ci; ++f) denom *= 2 * i;
      coeff /= rational(denom);
      cycle_index_poly factor;
      monomial plain, flipped;
      for (int d = 1; d <= i; ++d)
        if (i % d == 0) plain.emplace_back(d, necklace_a(d).convert_to<long long>());
      for (int d = 1; d <= 2 * i; ++d)
        if ((2 * i) % d == 0 && i % d != 0)
          flipped.emplace_back(d, necklace_b(d).convert_to<long long>());
      factor.add(plain, rational(1));
      factor.add(flipped, rational(1));
      term = cross_product(term, cross_power(factor, ci));
    }
    total += term.scaled(coeff);
  }
  return total;
}

namespace {

rational rational_pow(const rational& base, long long exp) {
  using boost::multiprecision::pow;
  const auto e = static_cast<unsigned>(exp);
  return rational(pow(numerator(base), e), pow(denominator(base), e));
}

}  // namespace

rational substitute(const cycle_index_poly& p, const std::map<int, rational>& values) {
  rational total = 0;
  for (const auto& [m, c] : p.terms) {
    rational prod = c;
    for (const auto& [var, power] : m) {
      const auto it = values.find(var);
      if (it == values.end())
        throw std::invalid_argument("substitute: no value for x" + std::to_string(var));
      prod *= rational_pow(it->second, power);
    }
    total += prod;
  }
  return total;
}

big_int count_nbar(int n) {
  const cycle_index_poly z = cycle_index_jevons(n);
  // A variable x_d gets sum_{j | d} j c_j(h) for each h in the output group
  // C_2: all 2s for the identity, 2 on even d and 0 on odd d for the swap.
  // Cross products can push d beyond 2n (x_6 (x) x_4 = x_12^...), so value
  // exactly the variables that occur.
  std::map<int, rational> plain, swapped;
  for (const auto& [m, c] : z.terms)
    for (const auto& [var, power] : m) {
      plain[var] = 2;
      swapped[var] = (var % 2 == 0) ? 2 : 0;
    }
  const rational total = (substitute(z, plain) + substitute(z, swapped)) / 2;
  if (denominator(total) != 1)
    throw std::logic_error("count_nbar: non-integral orbit count");
  return numerator(total);
}

std::string to_string(const cycle_index_poly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    for (const auto& [var, power] : m) {
      out += "*x" + std::to_string(var);
      if (power != 1) out += "^" + std::to_string(power);
    }
  }
  return out;
}

}  // namespace bellfun
