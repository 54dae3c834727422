#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordersum/corpus.hpp"
#include "ordersum/group.hpp"

namespace ordersum {

using ReportJson = nlohmann::ordered_json;

struct Finding
{
  std::string subject;
  ReportJson details;
};

/*
 * Outcome of one falsifiable check over a population.
 *
 * Violations make the check fail. Observations are noteworthy cases that are
 * consistent with the checked statement (for example groups attaining the
 * criterion threshold exactly); skipped lists inputs that could not be
 * evaluated, such as products above the table cap.
 */
struct CheckReport
{
  std::string name;
  std::size_t population = 0;
  std::size_t cases = 0;
  std::vector<Finding> violations;
  std::vector<Finding> observations;
  std::vector<Finding> skipped;
  ReportJson parameters = ReportJson::object();
  double elapsed_ms = 0;

  bool pass() const { return violations.empty(); }
};

/// Stable field order: name, population, cases, pass, violations,
/// observations, skipped, parameters, elapsed_ms (omitted when !timing).
ReportJson to_json(CheckReport const &report, bool timing = true);

/// Seed used by the standard run of verify_cyclic_psi_lower_bound.
inline constexpr std::uint64_t kLowerBoundSeed = 20240607;

struct RunOptions
{
  unsigned workers = 1;
  std::size_t cap = kDefaultCap;
};

// Per-group results; "cases" counts the individual instances examined.
struct GroupFindings
{
  std::size_t cases = 0;
  std::vector<Finding> violations;
  std::vector<Finding> observations;
};

GroupFindings check_solvability_criterion(EnumeratedGroup const &g, std::string const &subject);
GroupFindings check_cyclic_index_witness(EnumeratedGroup const &g, std::string const &subject);
GroupFindings check_psi_bounds(EnumeratedGroup const &g, std::string const &subject);
GroupFindings check_quotient_bound(EnumeratedGroup const &g, std::string const &subject);
GroupFindings check_normal_cyclic_sylow(EnumeratedGroup const &g, std::string const &subject);
GroupFindings check_cyclic_core_index(EnumeratedGroup const &g, std::string const &subject);
GroupFindings check_small_cyclic_index(EnumeratedGroup const &g, std::string const &subject);
GroupFindings check_sylow_counts(EnumeratedGroup const &g, std::string const &subject);

/// Normal subgroups reached by normal closures of single elements, plus the
/// center and the derived subgroup; distinct, ordered by (size, members).
std::vector<Subgroup> swept_normal_subgroups(EnumeratedGroup const &g);

// Corpus-level checks. Entries with order above max_order are left out of the
// population; 0 means no limit.

/// Violation iff the criterion holds strictly and the group is not solvable.
CheckReport verify_solvability_criterion(std::span<const CorpusEntry> corpus,
                                         RunOptions const &opts = {});

/// Groups passing the criterion must contain a cyclic subgroup of index
/// strictly below cyclic_index_bound(n, 211, 1617).
CheckReport verify_cyclic_index_witness(std::span<const CorpusEntry> corpus,
                                        RunOptions const &opts = {});

/// psi odd, 2n - 1 <= psi(G) <= psi(C_n), with the equality characterizations.
CheckReport verify_psi_bounds(std::span<const CorpusEntry> corpus, RunOptions const &opts = {},
                              std::size_t max_order = 0);

/// psi(G x H) <= psi(G) psi(H), with equality iff gcd(|G|, |H|) = 1, over all
/// unordered pairs (including squares) whose product order is <= max_product.
CheckReport verify_direct_product(std::span<const CorpusEntry> sample, std::size_t max_product,
                                  RunOptions const &opts = {});

/// psi(G) <= psi(G/H) |H|^2 over swept_normal_subgroups.
CheckReport verify_quotient_bound(std::span<const CorpusEntry> corpus, RunOptions const &opts = {},
                                  std::size_t max_order = 0);

/// For a normal cyclic Sylow P: psi(G) <= psi(P) psi(G/P), equality iff P central.
CheckReport verify_normal_cyclic_sylow(std::span<const CorpusEntry> corpus,
                                       RunOptions const &opts = {}, std::size_t max_order = 0);

/// Every cyclic proper subgroup A with K = core(A) has [A : K] < [G : A].
CheckReport verify_cyclic_core_index(std::span<const CorpusEntry> corpus,
                                     RunOptions const &opts = {}, std::size_t max_order = 0);

/// If [G : <x>] < 2p for p the largest prime of |G|, then G has a normal cyclic
/// Sylow p-subgroup, or G is solvable and the index is 1, p, or divides p + 1. Maximality
/// of <x> is not checked.
CheckReport verify_small_cyclic_index(std::span<const CorpusEntry> corpus,
                                      RunOptions const &opts = {}, std::size_t max_order = 0);

/// No corpus member has n_3 = 22, n_5 = 21, or n_p = 1 + 3p for p >= 7; also
/// n_p = 1 mod p and n_p dividing the p'-part.
CheckReport verify_sylow_counts(std::span<const CorpusEntry> corpus, RunOptions const &opts = {},
                                std::size_t max_order = 0);

/// psi(C_{p^(a+b)}) > psi(C_{p^a}) psi(C_{p^b}) for primes p <= p_max, 1 <= a, b <= a_max.
CheckReport verify_prime_power_supermult(std::uint64_t p_max, unsigned a_max);

/// smooth_square_check for every m in [2, m_max] with prime factors in {2, 3, 5}.
CheckReport verify_smooth_square(std::uint64_t m_max);

/// cyclic_psi_lower_bound_check on `samples` pseudo-random n <= n_max whose
/// largest prime factor is >= 13, drawn from a fixed-seed generator.
CheckReport verify_cyclic_psi_lower_bound(std::size_t samples, std::uint64_t n_max,
                                          std::uint64_t seed);

/// 1617 psi(A5 x C_m) = 211 psi(C_{60m}) for each m. The product is enumerated
/// while 60m <= enumerate_limit (and the cap); above it psi(A5) psi(C_m) is used.
/// Throws GcdError if some m shares a factor with 30.
CheckReport verify_equality_family(std::span<const std::uint64_t> ms,
                                   std::size_t enumerate_limit = 4620,
                                   RunOptions const &opts = {});

/// The fixed 25-group sample used for direct-product checks.
std::vector<GroupSpec> direct_product_sample();

} // namespace ordersum
