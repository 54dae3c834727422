#include "ordersum/number_theory.hpp"

#include <mutex>
#include <numeric>
#include <sstream>

#include "ordersum/error.hpp"

namespace ordersum {

namespace {

std::vector<std::uint64_t> sieve(std::uint64_t limit)
{
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i])
      continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i)
      composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> const &trial_primes()
{
  static std::vector<std::uint64_t> const primes = sieve(1'000'000);
  return primes;
}

class PrimeTable
{
public:
  std::uint64_t nth(std::size_t i)
  {
    std::lock_guard lock(mutex_);
    while (primes_.size() < i) {
      limit_ *= 2;
      primes_ = sieve(limit_);
    }
    return primes_[i - 1];
  }

private:
  std::mutex mutex_;
  std::uint64_t limit_ = 1024;
  std::vector<std::uint64_t> primes_ = sieve(1024);
};

} // namespace

bool Factorization::divisible_by(std::uint64_t p) const
{
  for (auto const &f : factors) {
    if (f.prime == p)
      return true;
  }
  return false;
}

std::string Factorization::to_string() const
{
  std::ostringstream ss;
  ss << "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i)
      ss << ",";
    ss << "(" << factors[i].prime << "," << factors[i].exponent << ")";
  }
  ss << "]";
  return ss.str();
}

Factorization factorize(std::uint64_t n)
{
  if (n == 0)
    throw PreconditionError("cannot factorize 0");
  if (n > kFactorizeLimit)
    throw TooLarge(std::to_string(n) + " exceeds the trial-division budget");

  Factorization result;
  result.n = n;

  std::uint64_t rest = n;
  for (std::uint64_t p : trial_primes()) {
    if (p * p > rest)
      break;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e)
      result.factors.push_back({p, e});
  }
  // rest has no prime factor <= sqrt(rest) or <= 10^6, and rest <= 10^12: prime.
  if (rest > 1)
    result.factors.push_back({rest, 1});

  return result;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  auto f = factorize(n);
  return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

std::uint64_t nth_prime(std::size_t i)
{
  static PrimeTable table;
  if (i == 0)
    throw PreconditionError("primes are indexed from 1");
  return table.nth(i);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
  return std::gcd(a, b);
}

} // namespace ordersum
