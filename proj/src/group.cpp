#include "ordersum/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ordersum {

namespace {

std::string triple_text(std::size_t a, std::size_t b, std::size_t c)
{
  std::ostringstream ss;
  ss << "(" << a << ", " << b << ", " << c << ")";
  return ss.str();
}

void check_latin_square(std::size_t n, std::vector<Elem> const &table)
{
  std::vector<std::size_t> seen(n, std::size_t(-1));

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t v = table[a * n + b];
      if (v >= n)
        throw ValidationError("table entry out of range at row " + std::to_string(a));
      if (seen[v] == a)
        throw ValidationError("row " + std::to_string(a) + " is not a permutation");
      seen[v] = a;
    }
  }

  std::fill(seen.begin(), seen.end(), std::size_t(-1));
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t v = table[a * n + b];
      if (seen[v] == b)
        throw ValidationError("column " + std::to_string(b) + " is not a permutation");
      seen[v] = b;
    }
  }
}

Elem find_identity(std::size_t n, std::vector<Elem> const &table)
{
  // Columns are permutations, so exactly one row maps 0 to 0.
  std::size_t e = n;
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a * n] == 0) {
      e = a;
      break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (table[e * n + i] != i || table[i * n + e] != i)
      throw ValidationError("table has no two-sided identity");
  }

  return static_cast<Elem>(e);
}

std::vector<Elem> find_inverses(std::size_t n, std::vector<Elem> const &table, Elem e)
{
  std::vector<Elem> inverse(n);

  for (std::size_t a = 0; a < n; ++a) {
    auto row = table.begin() + static_cast<std::ptrdiff_t>(a * n);
    auto it = std::find(row, row + static_cast<std::ptrdiff_t>(n), e);
    auto b = static_cast<std::size_t>(it - row);
    if (table[b * n + a] != e)
      throw ValidationError("element " + std::to_string(a) + " has no two-sided inverse");
    inverse[a] = static_cast<Elem>(b);
  }

  return inverse;
}

// Light's associativity test: the set of a with (xa)y = x(ay) for all x, y is
// closed under multiplication, so testing a generating set decides
// associativity for the whole table.
void check_light(std::size_t n, std::vector<Elem> const &table, Elem g)
{
  Elem const *grow = table.data() + std::size_t(g) * n;

  for (std::size_t x = 0; x < n; ++x) {
    Elem const *xrow = table.data() + x * n;
    Elem const *lhs = table.data() + std::size_t(xrow[g]) * n;

    for (std::size_t y = 0; y < n; ++y) {
      if (lhs[y] != xrow[grow[y]])
        throw NonAssociative("associativity fails for " + triple_text(x, g, y));
    }
  }
}

std::vector<Elem> generate_and_check(std::size_t n, std::vector<Elem> const &table, Elem e)
{
  std::vector<Elem> gens;
  std::vector<std::uint8_t> mask(n, 0);
  std::vector<Elem> reached{e};
  mask[e] = 1;

  for (std::size_t candidate = 0; candidate < n; ++candidate) {
    if (mask[candidate])
      continue;

    auto g = static_cast<Elem>(candidate);
    check_light(n, table, g);
    gens.push_back(g);

    // Right-multiplication closure: old elements times the new generator,
    // new elements times every generator.
    std::size_t old_size = reached.size();
    for (std::size_t k = 0; k < reached.size(); ++k) {
      Elem x = reached[k];
      auto extend = [&](Elem s) {
        Elem y = table[std::size_t(x) * n + s];
        if (!mask[y]) {
          mask[y] = 1;
          reached.push_back(y);
        }
      };
      if (k < old_size) {
        extend(g);
      } else {
        for (Elem s : gens)
          extend(s);
      }
    }
  }

  return gens;
}

} // namespace

void EnumeratedGroup::check_cap(std::size_t order, std::size_t cap)
{
  std::size_t limit = std::min(cap, kMaxTableOrder);
  if (order > limit)
    throw CapExceeded(order, limit);
}

EnumeratedGroup EnumeratedGroup::from_table(std::size_t order, std::vector<Elem> table,
                                            std::vector<std::string> labels,
                                            std::string name, std::size_t cap)
{
  if (order == 0)
    throw ValidationError("group order must be positive");
  check_cap(order, cap);
  if (table.size() != order * order)
    throw ValidationError("table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(order * order));
  if (!labels.empty() && labels.size() != order)
    throw ValidationError("label count does not match order");

  check_latin_square(order, table);

  EnumeratedGroup g;
  g.order_ = order;
  g.identity_ = find_identity(order, table);
  g.inverse_ = find_inverses(order, table, g.identity_);
  g.generators_ = generate_and_check(order, table, g.identity_);
  g.table_ = std::move(table);
  g.name_ = std::move(name);

  if (labels.empty()) {
    labels.reserve(order);
    for (std::size_t i = 0; i < order; ++i)
      labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);

  g.orders_.resize(order);
  for (std::size_t i = 0; i < order; ++i)
    g.orders_[i] = element_order(g, i);

  return g;
}

Subgroup::Subgroup(EnumeratedGroup const *parent, std::vector<Elem> members)
  : parent_(parent), members_(std::move(members)), mask_(parent->order(), 0)
{
  for (Elem m : members_)
    mask_[m] = 1;
}

Subgroup Subgroup::from_sorted_unchecked(EnumeratedGroup const &parent,
                                         std::vector<Elem> members)
{
  return Subgroup(&parent, std::move(members));
}

Subgroup Subgroup::from_members(EnumeratedGroup const &parent, std::vector<Elem> members)
{
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  for (Elem m : members) {
    if (m >= parent.order())
      throw IndexOutOfRange("subgroup member " + std::to_string(m) + " out of range");
  }

  Subgroup h(&parent, std::move(members));
  if (!h.contains(parent.identity()))
    throw ValidationError("subgroup does not contain the identity");
  for (Elem a : h.members()) {
    if (!h.contains(parent.inv(a)))
      throw ValidationError("subgroup not closed under inverses");
    for (Elem b : h.members()) {
      if (!h.contains(parent.mul(a, b)))
        throw ValidationError("subgroup not closed under multiplication");
    }
  }

  return h;
}

std::uint32_t element_order(EnumeratedGroup const &g, std::size_t index)
{
  if (index >= g.order())
    throw IndexOutOfRange("element " + std::to_string(index) + " out of range");

  auto a = static_cast<Elem>(index);
  auto row = g.row(a);
  std::uint32_t t = 1;
  for (Elem x = a; x != g.identity(); x = row[x])
    ++t;
  return t;
}

EnumeratedGroup direct_product(EnumeratedGroup const &g, EnumeratedGroup const &h,
                               std::size_t cap)
{
  std::size_t m = h.order();
  std::size_t n = g.order() * m;
  EnumeratedGroup::check_cap(n, cap);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < m; ++j)
      labels.push_back("(" + g.label(Elem(i)) + "," + h.label(Elem(j)) + ")");
  }

  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto grow = g.row(Elem(a / m));
    auto hrow = h.row(Elem(a % m));
    Elem *out = table.data() + a * n;
    for (std::size_t b1 = 0; b1 < g.order(); ++b1) {
      std::size_t base = std::size_t(grow[b1]) * m;
      for (std::size_t b2 = 0; b2 < m; ++b2)
        *out++ = static_cast<Elem>(base + hrow[b2]);
    }
  }

  std::string name;
  if (!g.name().empty() && !h.name().empty())
    name = g.name() + " x " + h.name();

  return EnumeratedGroup::from_table(n, std::move(table), std::move(labels),
                                     std::move(name), cap);
}

std::vector<Elem> coset_assignment(EnumeratedGroup const &g, Subgroup const &n)
{
  constexpr std::size_t unassigned = std::size_t(-1);
  std::vector<std::size_t> coset(g.order(), unassigned);
  std::vector<Elem> result(g.order());

  // The identity coset comes first so the quotient identity is element 0.
  std::size_t next = 0;
  auto assign = [&](Elem rep) {
    for (Elem x : n.members()) {
      Elem y = g.mul(rep, x);
      coset[y] = next;
      result[y] = static_cast<Elem>(next);
    }
    ++next;
  };

  assign(g.identity());
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (coset[a] == unassigned)
      assign(static_cast<Elem>(a));
  }

  return result;
}

EnumeratedGroup quotient(EnumeratedGroup const &g, Subgroup const &n)
{
  if (&n.parent() != &g)
    throw ValidationError("subgroup belongs to a different group");
  if (!is_normal(g, n))
    throw NotNormal("subgroup is not normal");

  std::vector<Elem> coset = coset_assignment(g, n);
  std::size_t q = g.order() / n.size();

  std::vector<Elem> reps(q, 0);
  std::vector<bool> have(q, false);
  for (std::size_t a = 0; a < g.order(); ++a) {
    Elem c = coset[a];
    if (!have[c]) {
      have[c] = true;
      reps[c] = static_cast<Elem>(a);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(q);
  for (Elem r : reps)
    labels.push_back("[" + g.label(r) + "]");

  std::vector<Elem> table(q * q);
  for (std::size_t c1 = 0; c1 < q; ++c1) {
    for (std::size_t c2 = 0; c2 < q; ++c2)
      table[c1 * q + c2] = coset[g.mul(reps[c1], reps[c2])];
  }

  if (g.order() <= 512) {
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < g.order(); ++b) {
        if (coset[g.mul(Elem(a), Elem(b))] != table[coset[a] * q + coset[b]])
          throw NotNormal("canonical projection is not a homomorphism");
      }
    }
  }

  std::string name;
  if (!g.name().empty())
    name = g.name() + " / N";

  return EnumeratedGroup::from_table(q, std::move(table), std::move(labels),
                                     std::move(name), kMaxTableOrder);
}

Subgroup whole_group(EnumeratedGroup const &g)
{
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem(0));
  return Subgroup::from_sorted_unchecked(g, std::move(all));
}

Subgroup trivial_subgroup(EnumeratedGroup const &g)
{
  return Subgroup::from_sorted_unchecked(g, {g.identity()});
}

Subgroup generated_subgroup(EnumeratedGroup const &g, std::span<const Elem> seed)
{
  std::vector<Elem> gens;
  for (Elem s : seed) {
    if (s >= g.order())
      throw IndexOutOfRange("seed element " + std::to_string(s) + " out of range");
    if (s != g.identity())
      gens.push_back(s);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<std::uint8_t> mask(g.order(), 0);
  std::vector<Elem> members{g.identity()};
  mask[g.identity()] = 1;

  for (std::size_t k = 0; k < members.size(); ++k) {
    auto row = g.row(members[k]);
    for (Elem s : gens) {
      Elem y = row[s];
      if (!mask[y]) {
        mask[y] = 1;
        members.push_back(y);
      }
    }
  }

  std::sort(members.begin(), members.end());
  return Subgroup::from_sorted_unchecked(g, std::move(members));
}

Subgroup normal_closure(EnumeratedGroup const &g, std::span<const Elem> seed)
{
  std::vector<std::uint8_t> mask(g.order(), 0);
  std::vector<Elem> conjugates;

  for (Elem s : seed) {
    if (s >= g.order())
      throw IndexOutOfRange("seed element " + std::to_string(s) + " out of range");
    for (std::size_t a = 0; a < g.order(); ++a) {
      Elem c = g.mul(g.mul(Elem(a), s), g.inv(Elem(a)));
      if (!mask[c]) {
        mask[c] = 1;
        conjugates.push_back(c);
      }
    }
  }

  return generated_subgroup(g, conjugates);
}

Subgroup commutator_subgroup(Subgroup const &h)
{
  EnumeratedGroup const &g = h.parent();
  std::vector<std::uint8_t> mask(g.order(), 0);
  std::vector<Elem> commutators;

  for (Elem a : h.members()) {
    Elem ainv = g.inv(a);
    for (Elem b : h.members()) {
      Elem c = g.mul(g.mul(ainv, g.inv(b)), g.mul(a, b));
      if (!mask[c]) {
        mask[c] = 1;
        commutators.push_back(c);
      }
    }
  }

  return generated_subgroup(g, commutators);
}

std::vector<std::size_t> DerivedSeries::orders() const
{
  std::vector<std::size_t> result;
  for (auto const &term : series)
    result.push_back(term.size());
  return result;
}

DerivedSeries derived_series(EnumeratedGroup const &g)
{
  DerivedSeries result;
  result.series.push_back(whole_group(g));

  while (!result.series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(result.series.back());
    if (next.size() == result.series.back().size())
      break;
    result.series.push_back(std::move(next));
  }

  result.solvable = result.series.back().is_trivial();
  return result;
}

Subgroup center(EnumeratedGroup const &g)
{
  std::vector<Elem> members;
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](Elem s) { return g.mul(Elem(z), s) == g.mul(s, Elem(z)); });
    if (central)
      members.push_back(static_cast<Elem>(z));
  }
  return Subgroup::from_sorted_unchecked(g, std::move(members));
}

Subgroup normalizer(EnumeratedGroup const &g, Subgroup const &h)
{
  std::vector<Elem> members;
  for (std::size_t a = 0; a < g.order(); ++a) {
    auto x = static_cast<Elem>(a);
    Elem xinv = g.inv(x);
    bool normalizes = std::all_of(h.members().begin(), h.members().end(),
                                  [&](Elem m) { return h.contains(g.mul(g.mul(x, m), xinv)); });
    if (normalizes)
      members.push_back(x);
  }
  return Subgroup::from_sorted_unchecked(g, std::move(members));
}

Subgroup subgroup_core(EnumeratedGroup const &g, Subgroup const &a)
{
  std::vector<Elem> members;
  for (Elem m : a.members()) {
    bool everywhere = true;
    for (std::size_t x = 0; x < g.order() && everywhere; ++x) {
      auto y = static_cast<Elem>(x);
      everywhere = a.contains(g.mul(g.mul(g.inv(y), m), y));
    }
    if (everywhere)
      members.push_back(m);
  }
  return Subgroup::from_sorted_unchecked(g, std::move(members));
}

bool is_normal(EnumeratedGroup const &g, Subgroup const &h)
{
  for (Elem s : g.generators()) {
    Elem sinv = g.inv(s);
    for (Elem m : h.members()) {
      if (!h.contains(g.mul(g.mul(s, m), sinv)))
        return false;
    }
  }
  return true;
}

bool is_abelian(EnumeratedGroup const &g)
{
  auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i]))
        return false;
    }
  }
  return true;
}

bool is_cyclic(EnumeratedGroup const &g)
{
  auto orders = g.element_orders();
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

bool is_cyclic(Subgroup const &h)
{
  return std::any_of(h.members().begin(), h.members().end(),
                     [&](Elem m) { return h.parent().order_of(m) == h.size(); });
}

SylowData sylow_count(EnumeratedGroup const &g, std::uint64_t p)
{
  if (p < 2)
    throw NotPrime(std::to_string(p) + " is not prime");
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0)
      throw NotPrime(std::to_string(p) + " is not prime");
  }
  if (g.order() % p != 0)
    throw PrimeDoesNotDivide(std::to_string(p) + " does not divide " +
                             std::to_string(g.order()));

  std::size_t p_part = 1;
  for (std::size_t rest = g.order(); rest % p == 0; rest /= p)
    p_part *= p;

  auto is_p_power = [p](std::uint32_t v) {
    while (v % p == 0)
      v /= static_cast<std::uint32_t>(p);
    return v == 1;
  };

  std::vector<Elem> chosen;
  Subgroup sylow = trivial_subgroup(g);
  Subgroup norm = whole_group(g);

  while (sylow.size() < p_part) {
    // N(P)/P has order divisible by p, so some p-element of N(P) lies outside P.
    auto it = std::find_if(norm.members().begin(), norm.members().end(), [&](Elem x) {
      return !sylow.contains(x) && is_p_power(g.order_of(x));
    });
    if (it == norm.members().end())
      throw Error("no p-element found outside the current p-subgroup");

    chosen.push_back(*it);
    sylow = generated_subgroup(g, chosen);
    norm = normalizer(g, sylow);
  }

  std::size_t count = g.order() / norm.size();
  return {std::move(sylow), count};
}

MaxOrderElement max_order_element(EnumeratedGroup const &g)
{
  auto orders = g.element_orders();
  auto it = std::max_element(orders.begin(), orders.end());
  auto index = static_cast<Elem>(it - orders.begin());
  return {index, *it, g.order() / *it};
}

std::vector<std::vector<Elem>> conjugacy_classes(EnumeratedGroup const &g)
{
  std::vector<std::uint8_t> done(g.order(), 0);
  std::vector<std::vector<Elem>> classes;

  for (std::size_t a = 0; a < g.order(); ++a) {
    if (done[a])
      continue;

    std::vector<Elem> cls;
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto y = static_cast<Elem>(x);
      Elem c = g.mul(g.mul(y, Elem(a)), g.inv(y));
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }

  return classes;
}

} // namespace ordersum
