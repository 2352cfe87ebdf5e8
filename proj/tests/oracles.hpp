#pragma once

// Brute-force reference computations on plain image vectors. Nothing here
// calls into the library's group algorithms, so results can be compared
// against it directly.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "pmod/permutation.hpp"

namespace oracle {

using Images = std::vector<std::uint32_t>;

inline Images images(const pmod::Permutation& p) { return p.images(); }

inline std::vector<Images> images(const std::vector<pmod::Permutation>& ps) {
  std::vector<Images> out;
  for (const auto& p : ps) out.push_back(p.images());
  return out;
}

/// x^(ab) = (x^a)^b.
inline Images mul(const Images& a, const Images& b) {
  Images r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

inline Images identity(std::size_t n) {
  Images r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

inline Images inverse(const Images& a) {
  Images r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<std::uint32_t>(x);
  return r;
}

/// All products of generators, by breadth-first closure.
inline std::set<Images> closure(std::size_t n, const std::vector<Images>& gens) {
  std::set<Images> seen{identity(n)};
  std::vector<Images> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Images h = mul(e, g);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::uint64_t mask_image(const Images& g, std::uint64_t mask) {
  std::uint64_t r = 0;
  for (std::size_t x = 0; x < g.size(); ++x)
    if ((mask >> x) & 1u) r |= std::uint64_t{1} << g[x];
  return r;
}

inline std::size_t stabilizer_order(const std::set<Images>& group, std::uint64_t mask) {
  std::size_t k = 0;
  for (const auto& g : group) k += mask_image(g, mask) == mask;
  return k;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Number of subsets with each stabilizer p-part, by testing every element
/// on every subset.
inline std::map<std::uint64_t, std::uint64_t> census(const std::set<Images>& group, std::size_t n, std::uint64_t p) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) ++hist[p_part(stabilizer_order(group, m), p)];
  return hist;
}

/// Orbits as sorted point lists, ordered by least element.
inline std::vector<std::vector<std::uint32_t>> orbits(std::size_t n, const std::vector<Images>& gens) {
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::uint32_t> orb{s};
    label[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : gens)
        if (label[g[orb[i]]] < 0) {
          label[g[orb[i]]] = static_cast<int>(out.size());
          orb.push_back(g[orb[i]]);
        }
    std::sort(orb.begin(), orb.end());
    out.push_back(orb);
  }
  return out;
}

inline std::uint64_t element_order(const Images& g) {
  Images x = g;
  std::uint64_t k = 1;
  while (x != identity(g.size())) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

/// Every set partition of {0..n-1} as a block label per point.
inline void set_partitions(std::size_t n, std::vector<std::vector<int>>& out, std::vector<int>& cur, int used) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= used; ++b) {
    cur.push_back(b);
    set_partitions(n, out, cur, std::max(used, b + 1));
    cur.pop_back();
  }
}

/// Nontrivial G-invariant partitions, each as sorted blocks.
inline std::vector<std::vector<std::vector<std::uint32_t>>> block_systems(std::size_t n,
                                                                          const std::vector<Images>& gens) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  set_partitions(n, parts, cur, 0);
  std::vector<std::vector<std::vector<std::uint32_t>>> out;
  for (const auto& labels : parts) {
    const int count = *std::max_element(labels.begin(), labels.end()) + 1;
    if (count == 1 || count == static_cast<int>(n)) continue;
    bool invariant = true;
    for (const auto& g : gens)
      for (std::size_t x = 0; x < n && invariant; ++x)
        for (std::size_t y = 0; y < n && invariant; ++y)
          if (labels[x] == labels[y] && labels[g[x]] != labels[g[y]]) invariant = false;
    if (!invariant) continue;
    std::vector<std::vector<std::uint32_t>> blocks(count);
    for (std::uint32_t x = 0; x < n; ++x) blocks[labels[x]].push_back(x);
    out.push_back(blocks);
  }
  return out;
}

}  // namespace oracle
