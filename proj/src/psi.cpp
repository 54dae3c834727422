#include "ordersum/psi.hpp"

#include <numeric>

#include "ordersum/error.hpp"

namespace ordersum {

namespace {

BigInt pow_u64(std::uint64_t base, unsigned long exp)
{
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exp);
  return result;
}

Comparison compare(BigInt const &lhs, BigInt const &rhs)
{
  int c = cmp(lhs, rhs);
  return c > 0 ? Comparison::Greater : c < 0 ? Comparison::Less : Comparison::Equal;
}

} // namespace

BigInt psi_cyclic_prime_power(std::uint64_t p, unsigned alpha)
{
  if (!is_prime(p))
    throw NotPrime(std::to_string(p) + " is not prime");

  BigInt numer = pow_u64(p, 2ul * alpha + 1) + 1;
  BigInt result = numer / BigInt(static_cast<unsigned long>(p + 1));
  return result;
}

BigInt psi_cyclic(Factorization const &f)
{
  BigInt result = 1;
  for (auto const &pp : f.factors)
    result *= psi_cyclic_prime_power(pp.prime, pp.exponent);
  return result;
}

BigInt psi_cyclic(std::uint64_t n)
{
  return psi_cyclic(factorize(n));
}

BigInt psi_group(EnumeratedGroup const &g)
{
  auto orders = g.element_orders();
  std::uint64_t sum = std::accumulate(orders.begin(), orders.end(), std::uint64_t(0));
  return BigInt(static_cast<unsigned long>(sum));
}

BigInt psi_subgroup(Subgroup const &h)
{
  std::uint64_t sum = 0;
  for (Elem m : h.members())
    sum += h.parent().order_of(m);
  return BigInt(static_cast<unsigned long>(sum));
}

std::string to_string(Comparison c)
{
  switch (c) {
  case Comparison::Greater: return "GREATER";
  case Comparison::Equal: return "EQUAL";
  case Comparison::Less: return "LESS";
  }
  return "?";
}

std::string to_string(Conclusion c)
{
  return c == Conclusion::SolvableByCriterion ? "SOLVABLE_BY_CRITERION" : "INCONCLUSIVE";
}

ExactRatio CriterionVerdict::ratio() const
{
  return ExactRatio(psi_g * kThresholdDen, psi_cn * kThresholdNum);
}

CriterionVerdict criterion_verdict(std::uint64_t n, BigInt psi_g)
{
  CriterionVerdict v;
  v.n = n;
  v.psi_g = std::move(psi_g);
  v.psi_cn = psi_cyclic(n);
  v.comparison = compare(v.psi_g * kThresholdDen, v.psi_cn * kThresholdNum);
  v.conclusion = v.comparison == Comparison::Greater ? Conclusion::SolvableByCriterion
                                                     : Conclusion::Inconclusive;
  return v;
}

CriterionVerdict criterion_verdict(EnumeratedGroup const &g)
{
  return criterion_verdict(g.order(), psi_group(g));
}

ExactRatio coprime_density(unsigned r)
{
  ExactRatio result(1);
  for (unsigned i = 1; i <= r; ++i) {
    auto q = static_cast<unsigned long>(nth_prime(i));
    result = result * ExactRatio(BigInt(q), BigInt(q + 1));
  }
  return result;
}

ExactRatio shifted_density(unsigned s)
{
  if (s == 0)
    throw PreconditionError("shifted_density needs s >= 1");
  if (s == 1)
    return ExactRatio(2);
  auto q = static_cast<unsigned long>(nth_prime(s));
  return coprime_density(s - 1) * ExactRatio(BigInt(q), BigInt(1));
}

ExactRatio cyclic_index_bound(Factorization const &n, BigInt const &r, BigInt const &s)
{
  if (r <= 0 || s <= 0)
    throw PreconditionError("cyclic_index_bound needs r, s >= 1");

  ExactRatio result(s, r);
  for (auto const &pp : n.factors) {
    auto p = static_cast<unsigned long>(pp.prime);
    result = result * ExactRatio(BigInt(p + 1), BigInt(p));
  }
  return result;
}

BoundReport cyclic_psi_lower_bound_check(std::uint64_t n)
{
  Factorization f = factorize(n);
  std::uint64_t p = f.largest_prime();
  if (p < 13)
    throw PreconditionError("largest prime factor of " + std::to_string(n) +
                            " is below 13");

  BigInt nn = BigInt(static_cast<unsigned long>(n));
  BoundReport report;
  report.lhs = ExactRatio(psi_cyclic(f), 1);
  report.rhs = ExactRatio(BigInt(5005) * nn * nn,
                          BigInt(1152) * BigInt(static_cast<unsigned long>(p + 1)));
  report.holds = report.lhs >= report.rhs;
  return report;
}

BoundReport smooth_square_check(std::uint64_t m)
{
  if (m < 2)
    throw PreconditionError("smooth_square_check needs m >= 2");
  Factorization f = factorize(m);
  if (f.largest_prime() > 5)
    throw PreconditionError(std::to_string(m) + " has a prime factor outside {2, 3, 5}");

  BigInt mm = BigInt(static_cast<unsigned long>(m));
  BoundReport report;
  report.lhs = ExactRatio(mm * mm, 1);
  report.rhs = ExactRatio(BigInt(13) * psi_cyclic(f), 12);
  report.holds = report.lhs > report.rhs;
  return report;
}

} // namespace ordersum
