#include "ordersum/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

#include "ordersum/number_theory.hpp"
#include "ordersum/parallel.hpp"
#include "ordersum/psi.hpp"

namespace ordersum {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string dec(BigInt const &v) { return v.get_str(10); }

std::string dec(ExactRatio const &v) { return v.to_string(); }

void sort_findings(std::vector<Finding> &findings)
{
  std::stable_sort(findings.begin(), findings.end(),
                   [](Finding const &a, Finding const &b) { return a.subject < b.subject; });
}

void finish(CheckReport &report)
{
  sort_findings(report.violations);
  sort_findings(report.observations);
  sort_findings(report.skipped);
}

template<typename Fn>
CheckReport run_per_group(std::string name, std::span<const CorpusEntry> corpus,
                          std::size_t max_order, RunOptions const &opts, Fn check)
{
  auto start = Clock::now();

  std::vector<CorpusEntry const *> scope;
  for (auto const &e : corpus) {
    if (max_order == 0 || e.order <= max_order)
      scope.push_back(&e);
  }

  std::vector<GroupFindings> results(scope.size());
  parallel_for(scope.size(), opts.workers, [&](std::size_t i) {
    results[i] = check(*scope[i]->group, scope[i]->key);
  });

  CheckReport report;
  report.name = std::move(name);
  report.population = scope.size();
  for (auto &r : results) {
    report.cases += r.cases;
    std::move(r.violations.begin(), r.violations.end(), std::back_inserter(report.violations));
    std::move(r.observations.begin(), r.observations.end(),
              std::back_inserter(report.observations));
  }
  report.parameters["max_order"] = max_order;
  finish(report);
  report.elapsed_ms = ms_since(start);
  return report;
}

ReportJson findings_json(std::vector<Finding> const &findings)
{
  ReportJson out = ReportJson::array();
  for (auto const &f : findings)
    out.push_back(ReportJson{{"subject", f.subject}, {"details", f.details}});
  return out;
}

bool is_prime_power(std::uint32_t v, std::uint64_t p)
{
  while (v % p == 0)
    v /= static_cast<std::uint32_t>(p);
  return v == 1;
}

bool contained_in(Subgroup const &a, Subgroup const &b)
{
  return std::all_of(a.members().begin(), a.members().end(),
                     [&](Elem x) { return b.contains(x); });
}

} // namespace

ReportJson to_json(CheckReport const &report, bool timing)
{
  ReportJson out;
  out["name"] = report.name;
  out["population"] = report.population;
  out["cases"] = report.cases;
  out["pass"] = report.pass();
  out["violations"] = findings_json(report.violations);
  out["observations"] = findings_json(report.observations);
  out["skipped"] = findings_json(report.skipped);
  out["parameters"] = report.parameters;
  if (timing)
    out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

GroupFindings check_solvability_criterion(EnumeratedGroup const &g, std::string const &subject)
{
  GroupFindings out;
  out.cases = 1;

  CriterionVerdict v = criterion_verdict(g);
  DerivedSeries ds = derived_series(g);

  auto details = [&] {
    return ReportJson{{"order", g.order()},
                      {"psi", dec(v.psi_g)},
                      {"psi_cyclic", dec(v.psi_cn)},
                      {"comparison", to_string(v.comparison)},
                      {"solvable", ds.solvable},
                      {"derived_orders", ds.orders()}};
  };

  if (v.comparison == Comparison::Greater && !ds.solvable)
    out.violations.push_back({subject, details()});
  else if (v.comparison == Comparison::Equal && !ds.solvable)
    out.observations.push_back({subject, details()});

  return out;
}

GroupFindings check_cyclic_index_witness(EnumeratedGroup const &g, std::string const &subject)
{
  GroupFindings out;
  CriterionVerdict v = criterion_verdict(g);
  if (v.comparison != Comparison::Greater)
    return out;

  out.cases = 1;
  MaxOrderElement best = max_order_element(g);
  ExactRatio bound = cyclic_index_bound(factorize(g.order()), kThresholdNum, kThresholdDen);
  ExactRatio index(static_cast<long>(best.cyclic_index));

  if (!(index < bound)) {
    out.violations.push_back({subject,
                              {{"order", g.order()},
                               {"max_element_order", best.order},
                               {"cyclic_index", best.cyclic_index},
                               {"bound", dec(bound)}}});
  }
  return out;
}

GroupFindings check_psi_bounds(EnumeratedGroup const &g, std::string const &subject)
{
  GroupFindings out;
  out.cases = 1;

  BigInt psi = psi_group(g);
  BigInt psi_c = psi_cyclic(g.order());
  BigInt floor = BigInt(static_cast<unsigned long>(2 * g.order() - 1));
  auto orders = g.element_orders();
  bool exponent_two = std::all_of(orders.begin(), orders.end(), [](auto o) { return o <= 2; });
  bool cyclic = is_cyclic(g);

  std::vector<std::string> failed;
  if (psi % 2 == 0)
    failed.push_back("parity");
  if (psi > psi_c)
    failed.push_back("cyclic upper bound");
  if ((psi == psi_c) != cyclic)
    failed.push_back("equality iff cyclic");
  if (psi < floor)
    failed.push_back("lower bound 2n-1");
  if ((psi == floor) != exponent_two)
    failed.push_back("lower equality iff exponent <= 2");

  if (!failed.empty()) {
    out.violations.push_back({subject,
                              {{"order", g.order()},
                               {"psi", dec(psi)},
                               {"psi_cyclic", dec(psi_c)},
                               {"failed", failed}}});
  }
  return out;
}

std::vector<Subgroup> swept_normal_subgroups(EnumeratedGroup const &g)
{
  std::vector<Subgroup> found;
  std::set<std::vector<Elem>> seen;

  auto add = [&](Subgroup h) {
    std::vector<Elem> key(h.members().begin(), h.members().end());
    if (seen.insert(std::move(key)).second)
      found.push_back(std::move(h));
  };

  // The normal closure of x is generated by the conjugacy class of x.
  for (auto const &cls : conjugacy_classes(g))
    add(generated_subgroup(g, cls));
  add(center(g));
  add(commutator_subgroup(whole_group(g)));

  std::sort(found.begin(), found.end(), [](Subgroup const &a, Subgroup const &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
  return found;
}

GroupFindings check_quotient_bound(EnumeratedGroup const &g, std::string const &subject)
{
  GroupFindings out;
  BigInt psi = psi_group(g);

  for (Subgroup const &h : swept_normal_subgroups(g)) {
    ++out.cases;
    BigInt psi_q = psi_group(quotient(g, h));
    BigInt size = BigInt(static_cast<unsigned long>(h.size()));
    BigInt bound = psi_q * size * size;
    if (psi > bound) {
      out.violations.push_back({subject,
                                {{"normal_order", h.size()},
                                 {"psi", dec(psi)},
                                 {"psi_quotient", dec(psi_q)},
                                 {"bound", dec(bound)}}});
    }
  }
  return out;
}

GroupFindings check_normal_cyclic_sylow(EnumeratedGroup const &g, std::string const &subject)
{
  GroupFindings out;
  if (g.order() == 1)
    return out;

  BigInt psi = psi_group(g);
  Subgroup z = center(g);

  for (auto const &pp : factorize(g.order()).factors) {
    SylowData s = sylow_count(g, pp.prime);
    if (s.count != 1 || !is_cyclic(s.subgroup))
      continue;

    ++out.cases;
    BigInt psi_p = psi_subgroup(s.subgroup);
    BigInt psi_q = psi_group(quotient(g, s.subgroup));
    BigInt bound = psi_p * psi_q;
    bool central = contained_in(s.subgroup, z);
    bool equal = psi == bound;

    if (psi > bound || equal != central) {
      out.violations.push_back({subject,
                                {{"prime", pp.prime},
                                 {"psi", dec(psi)},
                                 {"psi_sylow", dec(psi_p)},
                                 {"psi_quotient", dec(psi_q)},
                                 {"central", central}}});
    }
  }
  return out;
}

GroupFindings check_cyclic_core_index(EnumeratedGroup const &g, std::string const &subject)
{
  GroupFindings out;
  std::set<std::vector<Elem>> seen;

  for (std::size_t x = 0; x < g.order(); ++x) {
    if (g.order_of(Elem(x)) == g.order())
      continue;
    Elem seed[] = {static_cast<Elem>(x)};
    Subgroup a = generated_subgroup(g, seed);
    if (!seen.insert(std::vector<Elem>(a.members().begin(), a.members().end())).second)
      continue;

    ++out.cases;
    Subgroup k = subgroup_core(g, a);
    std::size_t a_over_k = a.size() / k.size();
    if (!(a_over_k < a.index())) {
      out.violations.push_back({subject,
                                {{"generator", g.label(Elem(x))},
                                 {"cyclic_order", a.size()},
                                 {"core_order", k.size()},
                                 {"index", a.index()}}});
    }
  }
  return out;
}

GroupFindings check_small_cyclic_index(EnumeratedGroup const &g, std::string const &subject)
{
  GroupFindings out;
  if (g.order() == 1)
    return out;

  std::uint64_t p = factorize(g.order()).largest_prime();
  SylowData s = sylow_count(g, p);
  bool normal_cyclic_sylow = s.count == 1 && is_cyclic(s.subgroup);
  bool solvable = derived_series(g).solvable;

  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t index = g.order() / g.order_of(Elem(x));
    if (index >= 2 * p)
      continue;

    ++out.cases;
    bool small = index == 1 || index == p || (p + 1) % index == 0;
    if (!normal_cyclic_sylow && !(solvable && small)) {
      out.violations.push_back({subject,
                                {{"element", g.label(Elem(x))},
                                 {"index", index},
                                 {"largest_prime", p},
                                 {"normal_cyclic_sylow", normal_cyclic_sylow},
                                 {"solvable", solvable}}});
    }
  }
  return out;
}

GroupFindings check_sylow_counts(EnumeratedGroup const &g, std::string const &subject)
{
  GroupFindings out;
  if (g.order() == 1)
    return out;

  for (auto const &pp : factorize(g.order()).factors) {
    std::uint64_t p = pp.prime;
    SylowData s = sylow_count(g, p);
    std::uint64_t np = s.count;
    ++out.cases;

    std::vector<std::string> failed;
    if ((p == 3 && np == 22) || (p == 5 && np == 21) || (p >= 7 && np == 1 + 3 * p))
      failed.push_back("forbidden count");
    if (np % p != 1)
      failed.push_back("count not 1 mod p");
    if ((g.order() / s.subgroup.size()) % np != 0)
      failed.push_back("count does not divide index");
    if (!is_prime_power(static_cast<std::uint32_t>(s.subgroup.size()), p) ||
        g.order() / s.subgroup.size() % p == 0)
      failed.push_back("not a Sylow subgroup");

    if (!failed.empty()) {
      out.violations.push_back(
        {subject, {{"prime", p}, {"count", np}, {"sylow_order", s.subgroup.size()}, {"failed", failed}}});
    }
  }
  return out;
}

CheckReport verify_solvability_criterion(std::span<const CorpusEntry> corpus,
                                         RunOptions const &opts)
{
  return run_per_group("solvability_criterion", corpus, 0, opts, check_solvability_criterion);
}

CheckReport verify_cyclic_index_witness(std::span<const CorpusEntry> corpus,
                                        RunOptions const &opts)
{
  return run_per_group("cyclic_index_witness", corpus, 0, opts, check_cyclic_index_witness);
}

CheckReport verify_psi_bounds(std::span<const CorpusEntry> corpus, RunOptions const &opts,
                              std::size_t max_order)
{
  return run_per_group("psi_bounds", corpus, max_order, opts, check_psi_bounds);
}

CheckReport verify_quotient_bound(std::span<const CorpusEntry> corpus, RunOptions const &opts,
                                  std::size_t max_order)
{
  return run_per_group("quotient_bound", corpus, max_order, opts, check_quotient_bound);
}

CheckReport verify_normal_cyclic_sylow(std::span<const CorpusEntry> corpus,
                                       RunOptions const &opts, std::size_t max_order)
{
  return run_per_group("normal_cyclic_sylow", corpus, max_order, opts, check_normal_cyclic_sylow);
}

CheckReport verify_cyclic_core_index(std::span<const CorpusEntry> corpus, RunOptions const &opts,
                                     std::size_t max_order)
{
  return run_per_group("cyclic_core_index", corpus, max_order, opts, check_cyclic_core_index);
}

CheckReport verify_small_cyclic_index(std::span<const CorpusEntry> corpus,
                                      RunOptions const &opts, std::size_t max_order)
{
  return run_per_group("small_cyclic_index", corpus, max_order, opts, check_small_cyclic_index);
}

CheckReport verify_sylow_counts(std::span<const CorpusEntry> corpus, RunOptions const &opts,
                                std::size_t max_order)
{
  return run_per_group("sylow_counts", corpus, max_order, opts, check_sylow_counts);
}

CheckReport verify_direct_product(std::span<const CorpusEntry> sample, std::size_t max_product,
                                  RunOptions const &opts)
{
  auto start = Clock::now();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i; j < sample.size(); ++j) {
      if (sample[i].order * sample[j].order <= max_product)
        pairs.emplace_back(i, j);
    }
  }

  struct PairResult
  {
    std::optional<Finding> violation;
    std::optional<Finding> skipped;
  };
  std::vector<PairResult> results(pairs.size());

  parallel_for(pairs.size(), opts.workers, [&](std::size_t t) {
    auto const &g = sample[pairs[t].first];
    auto const &h = sample[pairs[t].second];
    std::string subject = g.key + " x " + h.key;

    BigInt psi_prod;
    try {
      psi_prod = psi_group(direct_product(*g.group, *h.group, opts.cap));
    } catch (CapExceeded const &e) {
      results[t].skipped = Finding{subject, {{"reason", e.what()}}};
      return;
    }

    BigInt bound = psi_group(*g.group) * psi_group(*h.group);
    bool coprime = std::gcd(g.order, h.order) == 1;
    if (psi_prod > bound || (psi_prod == bound) != coprime) {
      results[t].violation = Finding{subject,
                                     {{"psi_product", dec(psi_prod)},
                                      {"psi_times_psi", dec(bound)},
                                      {"coprime", coprime}}};
    }
  });

  CheckReport report;
  report.name = "direct_product";
  report.population = sample.size();
  report.cases = pairs.size();
  for (auto &r : results) {
    if (r.violation)
      report.violations.push_back(std::move(*r.violation));
    if (r.skipped)
      report.skipped.push_back(std::move(*r.skipped));
  }
  report.parameters["max_product"] = max_product;
  finish(report);
  report.elapsed_ms = ms_since(start);
  return report;
}

CheckReport verify_prime_power_supermult(std::uint64_t p_max, unsigned a_max)
{
  auto start = Clock::now();
  CheckReport report;
  report.name = "prime_power_supermultiplicative";

  for (std::uint64_t p = 2; p <= p_max; ++p) {
    if (!is_prime(p))
      continue;
    ++report.population;
    for (unsigned a = 1; a <= a_max; ++a) {
      for (unsigned b = 1; b <= a_max; ++b) {
        ++report.cases;
        BigInt lhs = psi_cyclic_prime_power(p, a + b);
        BigInt rhs = psi_cyclic_prime_power(p, a) * psi_cyclic_prime_power(p, b);
        if (!(lhs > rhs)) {
          report.violations.push_back({"p=" + std::to_string(p),
                                       {{"a", a}, {"b", b}, {"lhs", dec(lhs)}, {"rhs", dec(rhs)}}});
        }
      }
    }
  }

  report.parameters["p_max"] = p_max;
  report.parameters["a_max"] = a_max;
  finish(report);
  report.elapsed_ms = ms_since(start);
  return report;
}

CheckReport verify_smooth_square(std::uint64_t m_max)
{
  auto start = Clock::now();
  CheckReport report;
  report.name = "smooth_square";

  for (std::uint64_t m = 2; m <= m_max; ++m) {
    std::uint64_t rest = m;
    for (std::uint64_t p : {2, 3, 5}) {
      while (rest % p == 0)
        rest /= p;
    }
    if (rest != 1)
      continue;

    ++report.population;
    ++report.cases;
    BoundReport r = smooth_square_check(m);
    if (!r.holds) {
      report.violations.push_back(
        {"m=" + std::to_string(m), {{"lhs", dec(r.lhs)}, {"rhs", dec(r.rhs)}}});
    }
  }

  report.parameters["m_max"] = m_max;
  finish(report);
  report.elapsed_ms = ms_since(start);
  return report;
}

CheckReport verify_cyclic_psi_lower_bound(std::size_t samples, std::uint64_t n_max,
                                          std::uint64_t seed)
{
  auto start = Clock::now();
  CheckReport report;
  report.name = "cyclic_psi_lower_bound";

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, n_max);
  std::size_t draws = 0;

  while (report.cases < samples) {
    std::uint64_t n = dist(rng);
    ++draws;
    if (factorize(n).largest_prime() < 13)
      continue;

    ++report.cases;
    BoundReport r = cyclic_psi_lower_bound_check(n);
    if (!r.holds) {
      report.violations.push_back(
        {"n=" + std::to_string(n), {{"lhs", dec(r.lhs)}, {"rhs", dec(r.rhs)}}});
    }
  }

  report.population = report.cases;
  report.parameters["samples"] = samples;
  report.parameters["n_max"] = n_max;
  report.parameters["seed"] = seed;
  report.parameters["draws"] = draws;
  finish(report);
  report.elapsed_ms = ms_since(start);
  return report;
}

CheckReport verify_equality_family(std::span<const std::uint64_t> ms, std::size_t enumerate_limit,
                                   RunOptions const &opts)
{
  for (auto m : ms) {
    if (m == 0 || std::gcd<std::uint64_t>(30, m) != 1)
      throw GcdError("equality family needs gcd(30, m) = 1, got m = " + std::to_string(m));
  }

  auto start = Clock::now();
  CheckReport report;
  report.name = "equality_family";
  report.population = ms.size();

  GroupSpec alt5 = GroupSpec::make(SpecKind::Alt, {5});
  EnumeratedGroup a5 = build_group(alt5, opts.cap);
  BigInt psi_a5 = psi_group(a5);
  std::size_t limit = std::min({enumerate_limit, opts.cap, kMaxTableOrder});

  for (auto m : ms) {
    ++report.cases;
    std::uint64_t n = 60 * m;
    BigInt psi;
    std::string path;
    if (n <= limit) {
      EnumeratedGroup cm = build_group(GroupSpec::make(SpecKind::Cyclic, {m}), opts.cap);
      psi = psi_group(direct_product(a5, cm, opts.cap));
      path = "enumerated";
    } else {
      psi = psi_a5 * psi_cyclic(m);
      path = "formula";
    }

    BigInt lhs = psi * kThresholdDen;
    BigInt rhs = psi_cyclic(n) * kThresholdNum;
    Finding f{GroupSpec::product(alt5, GroupSpec::make(SpecKind::Cyclic, {m})).canonical(),
              {{"m", m},
               {"path", path},
               {"psi", dec(psi)},
               {"lhs", dec(lhs)},
               {"rhs", dec(rhs)}}};
    if (lhs != rhs)
      report.violations.push_back(std::move(f));
    else
      report.observations.push_back(std::move(f));
  }

  report.parameters["m_list"] = std::vector<std::uint64_t>(ms.begin(), ms.end());
  report.parameters["enumerate_limit"] = limit;
  finish(report);
  report.elapsed_ms = ms_since(start);
  return report;
}

std::vector<GroupSpec> direct_product_sample()
{
  static char const *const specs[] = {
    "c 1",   "c 2",   "c 3",   "c 4",   "c 5",   "c 7",      "c 8",       "c 9",   "c 11",
    "c 13",  "ab 2 2", "ab 3 3", "d 3",  "d 4",   "d 5",      "d 7",       "dic 2", "dic 3",
    "a 4",   "s 4",   "sl2 3", "a 5",   "s 5",   "mc 7 3 2", "mc 13 3 3",
  };

  std::vector<GroupSpec> out;
  for (auto const *s : specs)
    out.push_back(parse_spec(s));
  return out;
}

} // namespace ordersum
