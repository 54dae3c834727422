#pragma once

// Independent reference computations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ordersum/group.hpp"

namespace oracle {

inline std::uint64_t euler_phi(std::uint64_t d)
{
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= d; ++k)
    count += std::gcd(k, d) == 1;
  return count;
}

// Sum of element orders of C_n: C_n has phi(d) elements of order d for each d | n.
inline std::uint64_t cyclic_psi(std::uint64_t n)
{
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0)
      total += d * euler_phi(d);
  }
  return total;
}

inline std::uint64_t cycle_lcm(std::vector<int> const &perm)
{
  std::vector<bool> seen(perm.size());
  std::uint64_t l = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len)
      l = std::lcm(l, len);
  }
  return l;
}

inline bool is_even(std::vector<int> const &perm)
{
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      inversions += perm[i] > perm[j];
  }
  return inversions % 2 == 0;
}

struct PermStats
{
  std::uint64_t count = 0;
  std::uint64_t psi = 0;
};

// Walks every permutation of degree n, optionally only the even ones.
inline PermStats symmetric_stats(int n, bool even_only)
{
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  PermStats s;
  do {
    if (even_only && !is_even(p))
      continue;
    ++s.count;
    s.psi += cycle_lcm(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

inline bool associative_cubic(ordersum::EnumeratedGroup const &g)
{
  auto n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto x = ordersum::Elem(a), y = ordersum::Elem(b), z = ordersum::Elem(c);
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          return false;
      }
  return true;
}

inline std::uint64_t order_by_powers(ordersum::EnumeratedGroup const &g, ordersum::Elem a)
{
  std::uint64_t k = 1;
  for (auto x = a; x != g.identity(); x = g.mul(x, a))
    ++k;
  return k;
}

inline std::uint64_t psi_by_powers(ordersum::EnumeratedGroup const &g)
{
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < g.order(); ++a)
    total += order_by_powers(g, ordersum::Elem(a));
  return total;
}

// Same group under a random relabeling sigma: table'[s(a)][s(b)] = s(table[a][b]).
inline ordersum::EnumeratedGroup relabel(ordersum::EnumeratedGroup const &g, std::uint64_t seed)
{
  auto n = g.order();
  std::vector<ordersum::Elem> sigma(n);
  std::iota(sigma.begin(), sigma.end(), ordersum::Elem(0));
  std::mt19937_64 rng(seed);
  std::shuffle(sigma.begin(), sigma.end(), rng);

  std::vector<ordersum::Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[sigma[a] * n + sigma[b]] = sigma[g.mul(ordersum::Elem(a), ordersum::Elem(b))];
  return ordersum::EnumeratedGroup::from_table(n, std::move(table));
}

} // namespace oracle
