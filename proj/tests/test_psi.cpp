#include <doctest.h>

#include "oracles.hpp"
#include "ordersum/error.hpp"
#include "ordersum/corpus.hpp"
#include "ordersum/psi.hpp"

using namespace ordersum;

namespace {

EnumeratedGroup spec(char const *text) { return build_group(parse_spec(text)); }

} // namespace

TEST_CASE("prime power formula")
{
  CHECK(psi_cyclic_prime_power(2, 0) == 1);
  CHECK(psi_cyclic_prime_power(2, 2) == 11);
  CHECK(psi_cyclic_prime_power(3, 1) == 7);
  CHECK(psi_cyclic_prime_power(5, 1) == 21);
  CHECK(psi_cyclic_prime_power(7, 1) == 43);
  CHECK_THROWS_AS(psi_cyclic_prime_power(6, 1), NotPrime);

  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::uint64_t q = 1;
    for (unsigned a = 0; a <= 4; ++a, q *= p)
      CHECK(psi_cyclic_prime_power(p, a) == oracle::cyclic_psi(q));
  }
}

TEST_CASE("cyclic psi")
{
  CHECK(psi_cyclic(1) == 1);
  CHECK(psi_cyclic(60) == 1617);
  CHECK(psi_cyclic(120) == 6321);
  CHECK(psi_cyclic(420) == 69531);
  for (std::uint64_t n = 1; n <= 300; ++n)
    CHECK(psi_cyclic(n) == oracle::cyclic_psi(n));

  // multiplicative on coprime arguments
  for (std::uint64_t a = 1; a <= 40; ++a)
    for (std::uint64_t b = 1; b <= 40; ++b)
      if (std::gcd(a, b) == 1)
        CHECK(psi_cyclic(a * b) == psi_cyclic(a) * psi_cyclic(b));
}

TEST_CASE("golden group values")
{
  CHECK(psi_group(spec("a 5")) == 211);
  CHECK(psi_group(spec("sl2 5")) == 663);
  CHECK(psi_group(spec("s 5")) == 471);
  CHECK(psi_group(spec("prod(c 2, a 5)")) == 603);
  CHECK(psi_group(spec("psl2 7")) == 715);
  CHECK(psi_group(spec("gl2 4")) == 1237);
  CHECK(psi_group(spec("ab 2 2")) == 7);
  CHECK(psi_group(spec("s 4")) == 67);
}

TEST_CASE("symmetric and alternating groups against a permutation walk")
{
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto sym = oracle::symmetric_stats(n, false);
    auto alt = oracle::symmetric_stats(n, true);
    auto s = spec(("s " + std::to_string(n)).c_str());
    auto a = spec(("a " + std::to_string(n)).c_str());
    CHECK(s.order() == sym.count);
    CHECK(a.order() == alt.count);
    CHECK(psi_group(s) == sym.psi);
    CHECK(psi_group(a) == alt.psi);
  }
}

TEST_CASE("psi of subgroups")
{
  auto s4 = spec("s 4");
  CHECK(psi_subgroup(whole_group(s4)) == 67);
  CHECK(psi_subgroup(trivial_subgroup(s4)) == 1);
  CHECK(psi_subgroup(commutator_subgroup(whole_group(s4))) == psi_group(spec("a 4")));
}

TEST_CASE("criterion verdicts")
{
  auto a5 = criterion_verdict(spec("a 5"));
  CHECK(a5.comparison == Comparison::Equal);
  CHECK(a5.conclusion == Conclusion::Inconclusive);
  CHECK(a5.ratio() == ExactRatio(1));

  auto c60 = criterion_verdict(spec("c 60"));
  CHECK(c60.comparison == Comparison::Greater);
  CHECK(c60.conclusion == Conclusion::SolvableByCriterion);

  auto s5 = criterion_verdict(spec("s 5"));
  CHECK(s5.comparison == Comparison::Less);
  CHECK(s5.psi_g * kThresholdDen == 761607);
  CHECK(s5.psi_cn * kThresholdNum == 1333731);
  CHECK(s5.ratio() == ExactRatio(BigInt(761607), BigInt(1333731)));

  CHECK(criterion_verdict(spec("sl2 5")).comparison == Comparison::Less);
  CHECK(to_string(Comparison::Greater) == "GREATER");
  CHECK(to_string(Conclusion::SolvableByCriterion) == "SOLVABLE_BY_CRITERION");
}

TEST_CASE("verdicts are invariant under relabeling")
{
  for (auto s : {"a 5", "s 4", "dic 3", "mc 7 3 2", "c 12"}) {
    CAPTURE(s);
    auto g = spec(s);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto h = oracle::relabel(g, seed);
      CHECK(psi_group(h) == psi_group(g));
      CHECK(psi_group(h) == oracle::psi_by_powers(h));
      auto vg = criterion_verdict(g);
      auto vh = criterion_verdict(h);
      CHECK(vg.comparison == vh.comparison);
      CHECK(vg.ratio() == vh.ratio());
      CHECK(derived_series(h).orders() == derived_series(g).orders());
    }
  }
}

TEST_CASE("density constants")
{
  CHECK(coprime_density(0) == ExactRatio(1));
  CHECK(coprime_density(1) == ExactRatio(BigInt(2), BigInt(3)));
  CHECK(coprime_density(3) == ExactRatio(BigInt(5), BigInt(12)));

  CHECK(shifted_density(1) == ExactRatio(2));
  CHECK(shifted_density(2) == ExactRatio(2));
  CHECK(shifted_density(6) == ExactRatio(BigInt(5005), BigInt(1152)));
  CHECK_THROWS_AS(shifted_density(0), PreconditionError);
}

TEST_CASE("cyclic index bound")
{
  auto b60 = cyclic_index_bound(factorize(60), 211, 1617);
  CHECK(b60 == ExactRatio(BigInt(19404), BigInt(1055)));
  CHECK(b60 < ExactRatio(19));

  auto b42 = cyclic_index_bound(factorize(42), 211, 1617);
  CHECK(b42 == ExactRatio(BigInt(1617 * 16), BigInt(211 * 7)));
  CHECK(b42 < ExactRatio(18));

  CHECK(cyclic_index_bound(factorize(1), 1, 1) == ExactRatio(1));
  CHECK_THROWS_AS(cyclic_index_bound(factorize(6), 0, 1), PreconditionError);
}

TEST_CASE("lower bound for cyclic psi")
{
  auto r13 = cyclic_psi_lower_bound_check(13);
  CHECK(r13.holds);
  CHECK(r13.lhs == ExactRatio(157));
  CHECK(r13.rhs == ExactRatio(BigInt(845845), BigInt(16128)));

  CHECK(cyclic_psi_lower_bound_check(26).holds);
  CHECK_THROWS_AS(cyclic_psi_lower_bound_check(12), PreconditionError);
}

TEST_CASE("smooth square check")
{
  auto r2 = smooth_square_check(2);
  CHECK(r2.holds);
  CHECK(r2.lhs == ExactRatio(4));
  CHECK(r2.rhs == ExactRatio(BigInt(13), BigInt(4)));
  CHECK(smooth_square_check(30).holds);
  CHECK_THROWS_AS(smooth_square_check(1), PreconditionError);
  CHECK_THROWS_AS(smooth_square_check(14), PreconditionError);
}
