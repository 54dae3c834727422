#include <doctest.h>

#include "ordersum/error.hpp"
#include "ordersum/verifier.hpp"

using namespace ordersum;

namespace {

EnumeratedGroup spec(char const *text) { return build_group(parse_spec(text)); }

std::vector<CorpusEntry> entries(std::vector<char const *> specs)
{
  std::vector<CorpusEntry> out;
  for (auto s : specs)
    out.push_back(make_entry(parse_spec(s)));
  return out;
}

} // namespace

TEST_CASE("solvability criterion per group")
{
  auto a5 = check_solvability_criterion(spec("a 5"), "a 5");
  CHECK(a5.violations.empty());
  CHECK(a5.observations.size() == 1);

  auto c60 = check_solvability_criterion(spec("c 60"), "c 60");
  CHECK(c60.violations.empty());
  CHECK(c60.observations.empty());

  CHECK(check_solvability_criterion(spec("s 5"), "s 5").observations.empty());
}

TEST_CASE("normal cyclic sylow examples")
{
  auto c6 = check_normal_cyclic_sylow(spec("c 6"), "c 6");
  CHECK(c6.cases == 2);
  CHECK(c6.violations.empty());

  // S3: the Sylow 3-subgroup is normal, cyclic and not central, so strict
  auto s3 = check_normal_cyclic_sylow(spec("s 3"), "s 3");
  CHECK(s3.cases == 1);
  CHECK(s3.violations.empty());

  CHECK(check_normal_cyclic_sylow(spec("d 5"), "d 5").cases == 1);
  CHECK(check_normal_cyclic_sylow(spec("a 5"), "a 5").cases == 0);
}

TEST_CASE("per-group lemma checks on small groups")
{
  for (auto s : {"a 4", "s 4", "a 5", "sl2 5", "dic 3", "mc 7 3 2", "c 12", "gl2 3"}) {
    CAPTURE(s);
    auto g = spec(s);
    CHECK(check_psi_bounds(g, s).violations.empty());
    CHECK(check_quotient_bound(g, s).violations.empty());
    CHECK(check_cyclic_core_index(g, s).violations.empty());
    CHECK(check_small_cyclic_index(g, s).violations.empty());
    CHECK(check_sylow_counts(g, s).violations.empty());
    CHECK(check_cyclic_index_witness(g, s).violations.empty());
  }
}

TEST_CASE("small cyclic index disjunction")
{
  // C12: every element gives case (i)
  auto c12 = check_small_cyclic_index(spec("c 12"), "c 12");
  CHECK(c12.cases > 0);
  CHECK(c12.violations.empty());

  // A4: elements of order 3 have index 4 = p + 1 with p = 3
  auto a4 = check_small_cyclic_index(spec("a 4"), "a 4");
  CHECK(a4.cases == 8);
  CHECK(a4.violations.empty());
}

TEST_CASE("swept normal subgroups")
{
  auto s4 = spec("s 4");
  auto sweep = swept_normal_subgroups(s4);
  std::vector<std::size_t> sizes;
  for (auto const &h : sweep)
    sizes.push_back(h.size());
  CHECK(sizes == std::vector<std::size_t>{1, 4, 12, 24});

  auto a5 = swept_normal_subgroups(spec("a 5"));
  CHECK(a5.size() == 2);
}

TEST_CASE("corpus-level reports")
{
  auto corpus = entries({"c 1", "c 6", "s 3", "a 4", "a 5", "s 5", "sl2 5", "psl2 7"});
  RunOptions opts{2};

  auto main = verify_solvability_criterion(corpus, opts);
  CHECK(main.pass());
  CHECK(main.population == corpus.size());
  CHECK(main.observations.size() == 1);
  CHECK(main.observations[0].subject == "a 5");

  auto small = verify_quotient_bound(corpus, opts, 24);
  CHECK(small.population == 4);
  CHECK(small.pass());

  CHECK(verify_sylow_counts(corpus, opts).pass());
  CHECK(verify_psi_bounds(corpus, opts).pass());
  CHECK(verify_cyclic_index_witness(corpus, opts).pass());
  CHECK(verify_normal_cyclic_sylow(corpus, opts).pass());
  CHECK(verify_cyclic_core_index(corpus, opts).pass());
  CHECK(verify_small_cyclic_index(corpus, opts).pass());
}

TEST_CASE("reports do not depend on the worker count")
{
  auto corpus = builtin_corpus(48);
  auto one = to_json(verify_quotient_bound(corpus, RunOptions{1}), false);
  auto four = to_json(verify_quotient_bound(corpus, RunOptions{4}), false);
  CHECK(one == four);
  CHECK(one.dump() == four.dump());
}

TEST_CASE("report serialization")
{
  CheckReport r;
  r.name = "demo";
  r.population = 3;
  r.cases = 4;
  r.violations.push_back({"x", {{"k", 1}}});
  r.elapsed_ms = 1.5;
  auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto const &[k, v] : j.items())
    keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"name", "population", "cases", "pass", "violations",
                                         "observations", "skipped", "parameters", "elapsed_ms"});
  CHECK(j["pass"] == false);
  CHECK(j["violations"][0]["subject"] == "x");
  CHECK_FALSE(to_json(r, false).contains("elapsed_ms"));

  auto back = ReportJson::parse(j.dump());
  CHECK(back == j);
}

TEST_CASE("number-theoretic sweeps")
{
  auto pp = verify_prime_power_supermult(13, 6);
  CHECK(pp.pass());
  CHECK(pp.population == 6);
  CHECK(pp.cases == 216);

  auto sq = verify_smooth_square(100);
  CHECK(sq.pass());
  CHECK(sq.cases == 33);

  auto lb = verify_cyclic_psi_lower_bound(200, 1000000, 7);
  CHECK(lb.pass());
  CHECK(lb.cases == 200);
  auto lb2 = verify_cyclic_psi_lower_bound(200, 1000000, 7);
  CHECK(to_json(lb, false) == to_json(lb2, false));
}

TEST_CASE("direct product suite")
{
  auto sample = entries({"c 2", "c 3", "s 3", "c 4"});
  auto r = verify_direct_product(sample, 24);
  CHECK(r.pass());
  CHECK(r.cases == 9);

  auto capped = verify_direct_product(sample, 100, RunOptions{1, 20});
  CHECK(capped.pass());
  CHECK(capped.skipped.size() == 2);

  CHECK(direct_product_sample().size() == 25);
}

TEST_CASE("equality family")
{
  std::uint64_t ms[] = {1, 7};
  auto r = verify_equality_family(ms);
  CHECK(r.pass());
  CHECK(r.cases == 2);
  CHECK(r.observations[1].details["lhs"] == "14671041");
  CHECK(r.observations[1].details["path"] == "enumerated");

  auto formula = verify_equality_family(ms, 100);
  CHECK(formula.pass());
  CHECK(formula.observations[1].details["path"] == "formula");

  std::uint64_t bad[] = {7, 6};
  CHECK_THROWS_AS(verify_equality_family(bad), GcdError);
}
