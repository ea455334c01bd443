#include "bellfun/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace bellfun {

namespace {

void check_perm(const perm& p, int n, const char* what) {
  if (p.images.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument(std::string(what) + ": permutation size mismatch");
}

}  // namespace

perm identity_perm(int n) {
  check_arity(n, 1, max_vector_arity, "identity_perm");
  perm p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), std::uint8_t{0});
  return p;
}

perm composed(const perm& outer, const perm& inner) {
  if (outer.images.size() != inner.images.size())
    throw std::invalid_argument("composed: size mismatch");
  perm out;
  out.images.resize(inner.images.size());
  for (std::size_t i = 0; i < inner.images.size(); ++i)
    out.images[i] = outer.images[inner.images[i]];
  return out;
}

perm inverse(const perm& p) {
  perm out;
  out.images.resize(p.images.size());
  for (std::size_t i = 0; i < p.images.size(); ++i) out.images[p.images[i]] = static_cast<std::uint8_t>(i);
  return out;
}

std::vector<perm> all_perms(int n) {
  check_arity(n, 1, 8, "all_perms");
  std::vector<perm> out;
  perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

std::uint32_t permute_vector(const perm& p, std::uint32_t v, int n) {
  check_perm(p, n, "permute_vector");
  // Component c of the input lands at component pi(c); component i (1-based)
  // sits at bit n-i of the packed index.
  std::uint32_t out = 0;
  for (int c = 0; c < n; ++c) {
    const std::uint32_t bit = (v >> (n - 1 - c)) & 1u;
    out |= bit << (n - 1 - p.images[c]);
  }
  return out;
}

group_element identity_element(int n) {
  check_arity(n, 1, max_vector_arity, "identity_element");
  return group_element{n, false, 0, identity_perm(n), 0};
}

group_element compose(const group_element& g, const group_element& h) {
  if (g.n != h.n) throw std::invalid_argument("compose: arity mismatch");
  group_element out;
  out.n = g.n;
  // Moving h's factors left past g's picks up delta^<y_g, z_h>.
  out.negate = g.negate ^ h.negate ^ (dot(g.y, h.z) != 0);
  out.z = g.z ^ permute_vector(inverse(g.pi), h.z, g.n);
  out.pi = composed(h.pi, g.pi);
  out.y = permute_vector(h.pi, g.y, g.n) ^ h.y;
  return out;
}

group_element inverse(const group_element& g) {
  group_element out;
  out.n = g.n;
  const std::uint32_t pz = permute_vector(g.pi, g.z, g.n);
  out.negate = g.negate ^ (dot(g.y, pz) != 0);
  out.z = pz;
  out.pi = inverse(g.pi);
  out.y = permute_vector(out.pi, g.y, g.n);
  return out;
}

truth_table apply(const group_element& g, const truth_table& t) {
  if (g.n != t.arity()) throw std::invalid_argument("apply: arity mismatch");
  truth_table out(g.n);
  for (std::uint64_t x = 0; x < t.size(); ++x) {
    const std::uint32_t px = permute_vector(g.pi, static_cast<std::uint32_t>(x), g.n);
    bool v = t.value(px ^ g.y);
    v ^= dot(x, g.z) != 0;
    v ^= g.negate;
    out.set_value(x, v);
  }
  return out;
}

std::uint64_t group_order(int n) {
  check_arity(n, 1, max_vector_arity, "group_order");
  std::uint64_t order = std::uint64_t{1} << (2 * n + 1);
  for (int k = 2; k <= n; ++k) order *= k;
  return order;
}

std::vector<group_element> all_group_elements(int n) {
  check_arity(n, 1, 3, "all_group_elements");
  const std::uint32_t size = 1u << n;
  const std::vector<perm> perms = all_perms(n);
  std::vector<group_element> out;
  out.reserve(group_order(n));
  for (int negate = 0; negate < 2; ++negate)
    for (std::uint32_t z = 0; z < size; ++z)
      for (const perm& p : perms)
        for (std::uint32_t y = 0; y < size; ++y)
          out.push_back(group_element{n, negate != 0, z, p, y});
  return out;
}

namespace {

// Orbit machinery on packed function numbers, n <= 4 so a function number is
// at most 16 bits wide and the action reduces to table lookups.
struct action_tables {
  int n;
  std::uint32_t points;                          // 2^n
  std::vector<std::vector<std::uint32_t>> perm_point;  // per perm: x -> b(pi x)

  explicit action_tables(int n_) : n(n_), points(1u << n_) {
    for (const perm& p : all_perms(n)) {
      std::vector<std::uint32_t> tab(points);
      for (std::uint32_t x = 0; x < points; ++x) tab[x] = permute_vector(p, x, n);
      perm_point.push_back(std::move(tab));
    }
  }

  std::uint32_t apply_index(std::uint32_t fn, int negate, std::uint32_t z,
                            const std::vector<std::uint32_t>& ptab, std::uint32_t y) const {
    std::uint32_t out = 0;
    for (std::uint32_t x = 0; x < points; ++x) {
      std::uint32_t bit = (fn >> (ptab[x] ^ y)) & 1u;
      bit ^= static_cast<std::uint32_t>(dot(x, z)) ^ static_cast<std::uint32_t>(negate);
      out |= bit << x;
    }
    return out;
  }

  template <typename Visit>
  void expand(std::uint32_t seed, Visit&& visit) const {
    for (int negate = 0; negate < 2; ++negate)
      for (std::uint32_t z = 0; z < points; ++z)
        for (const auto& ptab : perm_point)
          for (std::uint32_t y = 0; y < points; ++y)
            visit(apply_index(seed, negate, z, ptab, y));
  }
};

}  // namespace

std::vector<std::uint64_t> orbit_of(const truth_table& t) {
  const int n = t.arity();
  check_arity(n, 1, max_exhaustive_arity, "orbit_of");
  const action_tables act(n);
  std::vector<bool> seen(std::uint64_t{1} << t.size(), false);
  act.expand(static_cast<std::uint32_t>(t.index()), [&](std::uint32_t img) { seen[img] = true; });
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < seen.size(); ++b)
    if (seen[b]) out.push_back(b);
  return out;
}

orbit_partition classify(int n) {
  check_arity(n, 1, max_exhaustive_arity, "classify");
  const action_tables act(n);
  const std::uint64_t functions = std::uint64_t{1} << (std::uint64_t{1} << n);
  orbit_partition part;
  part.n = n;
  part.class_of.assign(functions, -1);
  for (std::uint64_t b = 0; b < functions; ++b) {
    if (part.class_of[b] >= 0) continue;
    const auto id = static_cast<std::int32_t>(part.representative.size());
    std::uint64_t members = 0;
    act.expand(static_cast<std::uint32_t>(b), [&](std::uint32_t img) {
      if (part.class_of[img] < 0) {
        part.class_of[img] = id;
        ++members;
      }
    });
    part.representative.push_back(b);
    part.size.push_back(members);
  }
  return part;
}

std::vector<int> class_involution(const orbit_partition& p) {
  const truth_table s2 = p.n >= 2 ? symmetric_function(p.n, 2) : truth_table(1);
  const std::uint64_t s2_bits = s2.index();
  std::vector<int> out(p.representative.size());
  for (std::size_t c = 0; c < p.representative.size(); ++c)
    out[c] = p.class_of[p.representative[c] ^ s2_bits];
  return out;
}

}  // namespace bellfun
