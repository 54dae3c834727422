#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ordersum {

/// Largest argument factorize() accepts.
inline constexpr std::uint64_t kFactorizeLimit = 1'000'000'000'000ULL;

struct PrimePower
{
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(PrimePower const &) const = default;
};

struct Factorization
{
  std::uint64_t n = 1;
  std::vector<PrimePower> factors; // primes strictly increasing

  std::uint64_t largest_prime() const { return factors.empty() ? 1 : factors.back().prime; }
  bool divisible_by(std::uint64_t p) const;
  std::string to_string() const;
};

/// Complete factorization by trial division over primes up to 10^6.
/// Throws TooLarge above kFactorizeLimit and PreconditionError for n = 0.
Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// i-th prime, 1-based: nth_prime(1) = 2. Thread-safe.
std::uint64_t nth_prime(std::size_t i);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

} // namespace ordersum
