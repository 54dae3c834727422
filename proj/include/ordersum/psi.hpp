#pragma once

#include <cstdint>
#include <string>

#include "ordersum/exact.hpp"
#include "ordersum/group.hpp"
#include "ordersum/number_theory.hpp"

namespace ordersum {

/// psi(C_{p^alpha}) = (p^{2 alpha + 1} + 1) / (p + 1). Throws NotPrime.
BigInt psi_cyclic_prime_power(std::uint64_t p, unsigned alpha);

/// psi(C_n) as the product of its prime-power parts.
BigInt psi_cyclic(std::uint64_t n);
BigInt psi_cyclic(Factorization const &f);

/// Sum of element orders.
BigInt psi_group(EnumeratedGroup const &g);
BigInt psi_subgroup(Subgroup const &h);

// The criterion threshold psi(A5) / psi(C60).
inline constexpr long kThresholdNum = 211;
inline constexpr long kThresholdDen = 1617;

enum class Comparison { Greater, Equal, Less };
enum class Conclusion { SolvableByCriterion, Inconclusive };

std::string to_string(Comparison c);
std::string to_string(Conclusion c);

struct CriterionVerdict
{
  std::uint64_t n = 1;
  BigInt psi_g;
  BigInt psi_cn;
  Comparison comparison = Comparison::Equal; // 1617 psi(G) against 211 psi(C_n)
  Conclusion conclusion = Conclusion::Inconclusive;

  // 1617 psi(G) / (211 psi(C_n)), reduced; exceeds 1 exactly when Greater.
  ExactRatio ratio() const;
};

CriterionVerdict criterion_verdict(EnumeratedGroup const &g);
CriterionVerdict criterion_verdict(std::uint64_t n, BigInt psi_g);

/// Product of q/(q+1) over the first r primes; 1 for r = 0.
ExactRatio coprime_density(unsigned r);

/// 2 for s = 1, otherwise coprime_density(s - 1) times the s-th prime.
ExactRatio shifted_density(unsigned s);

/// Strict upper bound (s/r) * prod (p+1)/p on the index of a cyclic subgroup
/// of any group G of order n with psi(G) > (r/s) psi(C_n).
ExactRatio cyclic_index_bound(Factorization const &n, BigInt const &r, BigInt const &s);

struct BoundReport
{
  bool holds = false;
  ExactRatio lhs;
  ExactRatio rhs;
};

/// psi(C_n) >= (5005/1152) n^2 / (p + 1) for p the largest prime of n.
/// Throws PreconditionError unless p >= 13.
BoundReport cyclic_psi_lower_bound_check(std::uint64_t n);

/// m^2 > (13/12) psi(C_m) for m >= 2 with every prime factor in {2, 3, 5}.
/// Throws PreconditionError otherwise.
BoundReport smooth_square_check(std::uint64_t m);

} // namespace ordersum
