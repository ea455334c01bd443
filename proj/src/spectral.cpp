#include "bellfun/spectral.hpp"

#include <bit>
#include <cstdlib>

namespace bellfun {

namespace {

void check_spectrum_shape(const walsh_spectrum& w, const char* what) {
  check_arity(w.n, 1, max_table_arity, what);
  if (w.coeffs.size() != (std::size_t{1} << w.n))
    throw std::invalid_argument(std::string(what) + ": expected 2^n coefficients");
}

// The butterfly shared by the forward and inverse transforms (the transform
// matrix is 2^n times its own inverse).
void wht_butterfly(std::vector<std::int64_t>& a, int n) {
  for (int k = 1; k <= n; ++k) {
    const std::uint64_t pow1 = std::uint64_t{1} << (k - 1);
    const std::uint64_t pow2 = std::uint64_t{1} << (n - k);
    for (std::uint64_t j = 0; j < pow2; ++j) {
      const std::uint64_t t = j << k;
      for (std::uint64_t i = 0; i < pow1; ++i) {
        const std::int64_t x1 = a[t + i];
        const std::int64_t x2 = a[t + i + pow1];
        a[t + i] = x1 + x2;
        a[t + i + pow1] = x1 - x2;
      }
    }
  }
}

std::vector<std::int64_t> sign_buffer(const truth_table& t) {
  std::vector<std::int64_t> a(t.size());
  for (std::uint64_t x = 0; x < t.size(); ++x) a[x] = t.value(x) ? -1 : 1;
  return a;
}

}  // namespace

walsh_spectrum wht_naive(const truth_table& t) {
  const int n = t.arity();
  const std::uint64_t size = t.size();
  walsh_spectrum w{n, std::vector<std::int64_t>(size)};
  if (n <= 6) {
    for (std::uint64_t u = 0; u < size; ++u) {
      std::int64_t acc = 0;
      for (std::uint64_t x = 0; x < size; ++x)
        acc += ((t.value(x) ^ dot(x, u)) & 1) ? -1 : 1;
      w.coeffs[u] = acc;
    }
    return w;
  }
  // Same defining sum, taken 64 points at a time: W(u) = 2^n - 2 wt(f + l_u)
  // with l_u the linear function <.,u>. The low six bits of u fix a repeating
  // 64-bit pattern; the high bits contribute a per-block sign.
  static constexpr std::uint64_t basis[6] = {
      0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
      0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull,
  };
  std::uint64_t low_pattern[64];
  for (std::uint32_t lo = 0; lo < 64; ++lo) {
    std::uint64_t p = 0;
    for (int b = 0; b < 6; ++b)
      if ((lo >> b) & 1) p ^= basis[b];
    low_pattern[lo] = p;
  }
  const auto& words = t.words();
  for (std::uint64_t u = 0; u < size; ++u) {
    const std::uint64_t pat = low_pattern[u & 63];
    const std::uint64_t uh = u >> 6;
    std::int64_t wt = 0;
    for (std::uint64_t b = 0; b < words.size(); ++b) {
      const std::uint64_t block_sign = 0 - static_cast<std::uint64_t>(std::popcount(b & uh) & 1);
      wt += std::popcount(words[b] ^ pat ^ block_sign);
    }
    w.coeffs[u] = static_cast<std::int64_t>(size) - 2 * wt;
  }
  return w;
}

walsh_spectrum wht_fast(const truth_table& t) {
  walsh_spectrum w{t.arity(), sign_buffer(t)};
  wht_butterfly(w.coeffs, t.arity());
  return w;
}

truth_table wht_inverse(const walsh_spectrum& w) {
  check_spectrum_shape(w, "wht_inverse");
  std::vector<std::int64_t> a = w.coeffs;
  wht_butterfly(a, w.n);
  const std::int64_t scale = std::int64_t{1} << w.n;
  truth_table t(w.n);
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    if (a[x] == scale)
      t.set_value(x, false);
    else if (a[x] == -scale)
      t.set_value(x, true);
    else
      throw std::domain_error("wht_inverse: not the spectrum of a boolean function");
  }
  return t;
}

bool is_valid_spectrum(const walsh_spectrum& w) {
  check_spectrum_shape(w, "is_valid_spectrum");
  const std::uint64_t size = std::uint64_t{1} << w.n;
  if (w.n <= 8) {
    const std::int64_t target = std::int64_t{1} << (2 * w.n);
    for (std::uint64_t v = 0; v < size; ++v) {
      std::int64_t acc = 0;
      for (std::uint64_t u = 0; u < size; ++u) acc += w.coeffs[u] * w.coeffs[u ^ v];
      if (acc != (v == 0 ? target : 0)) return false;
    }
    return true;
  }
  std::vector<std::int64_t> a = w.coeffs;
  wht_butterfly(a, w.n);
  const std::int64_t scale = std::int64_t{1} << w.n;
  for (std::int64_t x : a)
    if (x != scale && x != -scale) return false;
  return true;
}

std::int64_t nonlinearity(const truth_table& t) {
  const walsh_spectrum w = wht_fast(t);
  std::int64_t max_abs = 0;
  for (std::int64_t c : w.coeffs) max_abs = std::max(max_abs, std::abs(c));
  return (std::int64_t{1} << (t.arity() - 1)) - max_abs / 2;
}

autocorr_spectrum autocorrelation(const truth_table& f, const truth_table& g) {
  if (f.arity() != g.arity())
    throw std::invalid_argument("autocorrelation: arity mismatch");
  check_arity(f.arity(), 1, max_autocorr_arity, "autocorrelation");
  // Delta_{f,g} = 2^-n WHT(W_f . W_g), exact in integers.
  const walsh_spectrum wf = wht_fast(f);
  const walsh_spectrum wg = wht_fast(g);
  std::vector<std::int64_t> prod(wf.coeffs.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = wf.coeffs[i] * wg.coeffs[i];
  wht_butterfly(prod, f.arity());
  const std::int64_t scale = std::int64_t{1} << f.arity();
  for (auto& v : prod) v /= scale;
  return autocorr_spectrum{f.arity(), std::move(prod)};
}

autocorr_spectrum autocorrelation(const truth_table& f) { return autocorrelation(f, f); }

std::int64_t walsh_support_size(const walsh_spectrum& w) {
  std::int64_t nz = 0;
  for (std::int64_t c : w.coeffs) nz += c != 0;
  return nz;
}

std::int64_t autocorr_support_size(const autocorr_spectrum& d) {
  std::int64_t nz = 0;
  for (std::int64_t v : d.values) nz += v != 0;
  return nz;
}

rational uncertainty(const truth_table& t) {
  const std::int64_t nw = walsh_support_size(wht_fast(t));
  const std::int64_t nd = autocorr_support_size(autocorrelation(t));
  return rational(big_int(nw) * nd, big_int(1) << t.arity());
}

std::vector<std::vector<rational>> walsh_matrix(const truth_table& t) {
  check_arity(t.arity(), 1, 4, "walsh_matrix");
  const walsh_spectrum w = wht_fast(t);
  const std::uint64_t size = t.size();
  const big_int scale = big_int(1) << t.arity();
  std::vector<std::vector<rational>> m(size, std::vector<rational>(size));
  for (std::uint64_t u = 0; u < size; ++u)
    for (std::uint64_t v = 0; v < size; ++v) m[u][v] = rational(w.coeffs[u ^ v], scale);
  return m;
}

}  // namespace bellfun
