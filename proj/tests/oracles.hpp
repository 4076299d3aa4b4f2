#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; values computed here are compared against (and
// frozen next to) the library results.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint64_t>;  // ascending coefficients

// Schoolbook product reduced by a monic modulus, all mod p.
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint64_t p) {
  const std::size_t n = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > n;) {
    const std::uint64_t c = prod[d];
    if (!c) continue;
    for (std::size_t k = 0; k <= n; ++k) prod[d - n + k] = (prod[d - n + k] + (p - c) * modulus[k]) % p;
  }
  prod.resize(n);
  return prod;
}

inline Poly digits(std::uint64_t code, std::uint64_t p, std::size_t n) {
  Poly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

// Smallest monic quadratic over GF(p) without a root, comparing c0 then c1.
inline Poly smallest_irreducible_quadratic(std::uint64_t p) {
  for (std::uint64_t c0 = 0; c0 < p; ++c0)
    for (std::uint64_t c1 = 0; c1 < p; ++c1) {
      bool root = false;
      for (std::uint64_t x = 0; x < p; ++x) root = root || (x * x + c1 * x + c0) % p == 0;
      if (!root) return {c0, c1, 1};
    }
  return {};
}

inline std::vector<std::uint64_t> factorize(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// 2x2 matrices over Z/p as (a, b, c, d), enumerated directly.
using IMat = std::array<std::uint64_t, 4>;

inline IMat imul(const IMat& x, const IMat& y, std::uint64_t p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p, (x[2] * y[0] + x[3] * y[2]) % p,
          (x[2] * y[1] + x[3] * y[3]) % p};
}

inline std::vector<IMat> prime_matrices(std::uint64_t p, bool special) {
  std::vector<IMat> out;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d) {
          const std::uint64_t det = (a * d + p * p - b * c) % p;
          if (special ? det == 1 : det != 0) out.push_back({a, b, c, d});
        }
  return out;
}

struct CentralizerData {
  std::size_t center = 0;
  std::map<std::size_t, std::size_t> w;         // |C(x)| -> element count
  std::map<std::size_t, std::size_t> distinct;  // |C(x)| -> distinct subgroup count
};

// Brute-force centralizer data from an arbitrary product on indices.
inline CentralizerData centralizers(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  CentralizerData out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> c;
    for (std::size_t y = 0; y < n; ++y)
      if (mul(x, y) == mul(y, x)) c.push_back(y);
    if (c.size() == n) {
      ++out.center;
      continue;
    }
    ++out.w[c.size()];
    if (seen.insert(c).second) ++out.distinct[c.size()];
  }
  return out;
}

inline CentralizerData matrix_centralizers(std::uint64_t p, bool special) {
  const auto mats = prime_matrices(p, special);
  std::map<IMat, std::size_t> index;
  for (std::size_t i = 0; i < mats.size(); ++i) index[mats[i]] = i;
  return centralizers(mats.size(), [&](std::size_t a, std::size_t b) { return index.at(imul(mats[a], mats[b], p)); });
}

// Maximum clique by plain recursive enumeration.
inline std::size_t max_clique(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    best = std::max(best, cur.size());
    for (std::size_t v = start; v < n; ++v) {
      bool ok = true;
      for (auto u : cur) ok = ok && adj[u][v];
      if (!ok) continue;
      cur.push_back(v);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(0);
  return best;
}

// Number of subgroups of a group of order n <= 16 given by its product:
// every subset containing the identity that is closed under the product.
inline std::size_t count_subgroups(std::size_t n, std::size_t identity,
                                   const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> identity & 1u)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      for (std::size_t b = 0; b < n && closed; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u)) closed = mask >> mul(a, b) & 1u;
    if (closed) ++count;
  }
  return count;
}

}  // namespace oracle
