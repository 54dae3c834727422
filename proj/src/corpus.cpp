#include "ordersum/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "ordersum/carriers.hpp"
#include "ordersum/closure.hpp"
#include "ordersum/error.hpp"
#include "ordersum/number_theory.hpp"
#include "ordersum/parallel.hpp"

namespace ordersum {

namespace {

std::string power_label(char const *sym, std::uint64_t e)
{
  if (e == 0)
    return "";
  if (e == 1)
    return sym;
  return std::string(sym) + "^" + std::to_string(e);
}

std::string word_label(std::uint64_t i, std::uint64_t j, char const *a, char const *b)
{
  std::string s = power_label(a, i);
  std::string t = power_label(b, j);
  if (s.empty() && t.empty())
    return "1";
  if (s.empty())
    return t;
  if (t.empty())
    return s;
  return s + " " + t;
}

EnumeratedGroup build_abelian(std::vector<std::uint64_t> const &ds, std::string name,
                              std::size_t cap)
{
  std::uint64_t n = 1;
  for (auto d : ds)
    n *= d;

  // Mixed radix, first factor most significant.
  std::vector<std::uint64_t> stride(ds.size(), 1);
  for (std::size_t t = ds.size(); t-- > 1;)
    stride[t - 1] = stride[t] * ds[t];

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    if (ds.size() == 1) {
      labels.push_back(word_label(x, 0, "a", "b"));
      continue;
    }
    std::string s = "(";
    for (std::size_t t = 0; t < ds.size(); ++t)
      s += (t ? "," : "") + std::to_string(x / stride[t] % ds[t]);
    labels.push_back(s + ")");
  }

  auto rule = [&](std::size_t a, std::size_t b) {
    std::uint64_t out = 0;
    for (std::size_t t = 0; t < ds.size(); ++t) {
      std::uint64_t u = a / stride[t] % ds[t];
      std::uint64_t v = b / stride[t] % ds[t];
      out += (u + v) % ds[t] * stride[t];
    }
    return out;
  };

  if (ds.size() == 1) {
    std::uint64_t m = ds[0];
    return EnumeratedGroup::from_rule(n, [m](std::size_t a, std::size_t b) { return (a + b) % m; },
                                      std::move(labels), std::move(name), cap);
  }
  return EnumeratedGroup::from_rule(n, rule, std::move(labels), std::move(name), cap);
}

// Elements a^i b^j (index i + m j) with b a b^-1 = a^r and b^k = 1.
EnumeratedGroup build_semidirect(std::uint64_t m, std::uint64_t k, std::uint64_t r,
                                 char const *asym, char const *bsym, std::string name,
                                 std::size_t cap)
{
  std::uint64_t n = m * k;
  EnumeratedGroup::check_cap(n, cap);

  std::vector<std::uint64_t> rpow(k, 1 % m);
  for (std::uint64_t j = 1; j < k; ++j)
    rpow[j] = rpow[j - 1] * (r % m) % m;

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint64_t x = 0; x < n; ++x)
    labels.push_back(word_label(x % m, x / m, asym, bsym));

  // a^i b^j a^u b^v = a^(i + r^j u) b^(j + v)
  auto rule = [&](std::size_t x, std::size_t y) {
    std::uint64_t i = x % m, j = x / m, u = y % m, v = y / m;
    return (i + rpow[j] * u) % m + m * ((j + v) % k);
  };
  return EnumeratedGroup::from_rule(n, rule, std::move(labels), std::move(name), cap);
}

// Elements a^i b^j (index i + 2n j, j in {0,1}) with a^(2n) = 1, b^2 = a^n,
// b a b^-1 = a^-1.
EnumeratedGroup build_dicyclic(std::uint64_t n, std::string name, std::size_t cap)
{
  std::uint64_t m = 2 * n;
  EnumeratedGroup::check_cap(2 * m, cap);

  std::vector<std::string> labels;
  for (std::uint64_t x = 0; x < 2 * m; ++x)
    labels.push_back(word_label(x % m, x / m, "a", "b"));

  auto rule = [&](std::size_t x, std::size_t y) {
    std::uint64_t i = x % m, j = x / m, u = y % m, v = y / m;
    std::uint64_t e = j ? (i + m - u) % m : (i + u) % m;
    if (j + v == 2)
      return (e + n) % m;
    return e + m * (j + v);
  };
  return EnumeratedGroup::from_rule(2 * m, rule, std::move(labels), std::move(name), cap);
}

EnumeratedGroup build_permutation_group(std::vector<Permutation> gens, std::string name,
                                        std::size_t cap)
{
  return close_generators<Permutation>(
    gens, std::multiplies<>{}, [](Permutation const &p) { return p.cycle_notation(); }, cap,
    std::move(name));
}

EnumeratedGroup build_sym(std::uint64_t n, std::string name, std::size_t cap)
{
  auto d = static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  if (d <= 1) {
    gens.emplace_back(1);
  } else {
    std::vector<std::uint32_t> cycle(d);
    for (std::size_t i = 0; i < d; ++i)
      cycle[i] = static_cast<std::uint32_t>((i + 1) % d);
    gens.emplace_back(std::move(cycle));
    gens.push_back(Permutation::from_cycles(d, "(0 1)"));
  }
  return build_permutation_group(std::move(gens), std::move(name), cap);
}

EnumeratedGroup build_alt(std::uint64_t n, std::string name, std::size_t cap)
{
  auto d = static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  if (d <= 2) {
    gens.emplace_back(std::max<std::size_t>(d, 1));
  } else {
    // The 3-cycles (0 1 i) generate A_n.
    for (std::size_t i = 2; i < d; ++i)
      gens.push_back(Permutation::from_cycles(d, "(0 1 " + std::to_string(i) + ")"));
  }
  return build_permutation_group(std::move(gens), std::move(name), cap);
}

// All of GL(2,q), or SL(2,q) when special, with the identity first.
EnumeratedGroup build_linear(std::uint64_t q, bool special, std::string name, std::size_t cap)
{
  FiniteField field = FiniteField::make(q);
  auto qq = static_cast<unsigned>(q);

  std::vector<Matrix2> elements{Matrix2::identity(field)};
  for (unsigned a = 0; a < qq; ++a) {
    for (unsigned b = 0; b < qq; ++b) {
      for (unsigned c = 0; c < qq; ++c) {
        for (unsigned d = 0; d < qq; ++d) {
          unsigned det = field.sub(field.mul(a, d), field.mul(b, c));
          if (det == 0 || (special && det != 1))
            continue;
          if (a == 1 && b == 0 && c == 0 && d == 1)
            continue;
          elements.emplace_back(field, std::array{a, b, c, d});
        }
      }
    }
  }

  std::size_t n = elements.size();
  EnumeratedGroup::check_cap(n, cap);

  std::vector<Elem> index(std::size_t(qq) * qq * qq * qq, 0);
  for (std::size_t i = 0; i < n; ++i)
    index[elements[i].code()] = static_cast<Elem>(i);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (auto const &m : elements)
    labels.push_back(m.to_string());

  return EnumeratedGroup::from_rule(
    n, [&](std::size_t x, std::size_t y) { return index[(elements[x] * elements[y]).code()]; },
    std::move(labels), std::move(name), cap);
}

EnumeratedGroup build_unchecked(GroupSpec const &spec, std::size_t cap)
{
  auto const &p = spec.params;
  std::string name = spec.canonical();

  switch (spec.kind) {
  case SpecKind::Cyclic:
    return build_abelian({p[0]}, std::move(name), cap);
  case SpecKind::Abelian:
    return build_abelian(p, std::move(name), cap);
  case SpecKind::Dihedral:
    return build_semidirect(p[0], 2, p[0] - 1, "r", "s", std::move(name), cap);
  case SpecKind::Dicyclic:
    return build_dicyclic(p[0], std::move(name), cap);
  case SpecKind::Sym:
    return build_sym(p[0], std::move(name), cap);
  case SpecKind::Alt:
    return build_alt(p[0], std::move(name), cap);
  case SpecKind::GL2:
    return build_linear(p[0], false, std::move(name), cap);
  case SpecKind::SL2:
    return build_linear(p[0], true, std::move(name), cap);
  case SpecKind::PSL2: {
    EnumeratedGroup sl = build_linear(p[0], true, {}, kMaxTableOrder);
    EnumeratedGroup::check_cap(sl.order() / center(sl).size(), cap);
    return quotient(sl, center(sl)).with_name(std::move(name));
  }
  case SpecKind::Metacyclic:
    return build_semidirect(p[0], p[1], p[2], "a", "b", std::move(name), cap);
  case SpecKind::Product: {
    EnumeratedGroup a = build_group(spec.factors[0], cap);
    EnumeratedGroup b = build_group(spec.factors[1], cap);
    return direct_product(a, b, cap).with_name(std::move(name));
  }
  }
  throw Error("unhandled spec kind");
}

void partitions(unsigned e, unsigned max_part, std::vector<unsigned> &current,
                std::vector<std::vector<unsigned>> &out)
{
  if (e == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(e, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(e - part, part, current, out);
    current.pop_back();
  }
}

} // namespace

EnumeratedGroup build_group(GroupSpec const &spec, std::size_t cap)
{
  validate_spec(spec);

  std::uint64_t predicted = predicted_order(spec);
  std::size_t limit = std::min(cap, kMaxTableOrder);
  if (predicted > limit)
    throw CapExceeded(static_cast<std::size_t>(std::min<std::uint64_t>(predicted, SIZE_MAX)),
                      limit);

  EnumeratedGroup g = build_unchecked(spec, cap);
  if (g.order() != predicted)
    throw ValidationError(spec.canonical() + " built with order " + std::to_string(g.order()) +
                          ", predicted " + std::to_string(predicted));
  return g;
}

CorpusEntry make_entry(GroupSpec const &spec, std::size_t cap)
{
  CorpusEntry e;
  e.spec = spec;
  e.key = spec.canonical();
  e.group = std::make_shared<const EnumeratedGroup>(build_group(spec, cap));
  e.order = e.group->order();
  e.source = Source::Builtin;
  return e;
}

std::vector<std::vector<std::uint64_t>> noncyclic_abelian_types(std::uint64_t n)
{
  Factorization f = factorize(n);

  // One partition per prime, combined into invariant factors.
  std::vector<std::vector<std::vector<unsigned>>> per_prime;
  for (auto const &pp : f.factors) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> current;
    partitions(pp.exponent, pp.exponent, current, parts);
    per_prime.push_back(std::move(parts));
  }

  std::vector<std::vector<std::uint64_t>> result;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  for (;;) {
    std::size_t width = 0;
    for (std::size_t i = 0; i < per_prime.size(); ++i)
      width = std::max(width, per_prime[i][choice[i]].size());

    if (width >= 2) {
      // Largest parts multiply into the largest invariant factor.
      std::vector<std::uint64_t> factors(width, 1);
      for (std::size_t i = 0; i < per_prime.size(); ++i) {
        auto const &parts = per_prime[i][choice[i]];
        for (std::size_t t = 0; t < parts.size(); ++t) {
          for (unsigned e = 0; e < parts[t]; ++e)
            factors[width - 1 - t] *= f.factors[i].prime;
        }
      }
      result.push_back(std::move(factors));
    }

    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == per_prime[i].size())
      choice[i++] = 0;
    if (i == choice.size())
      break;
  }

  std::sort(result.begin(), result.end());
  return result;
}

std::vector<GroupSpec> builtin_corpus_specs(std::size_t max_order)
{
  using K = SpecKind;
  std::vector<GroupSpec> specs;
  std::uint64_t top = max_order;

  for (std::uint64_t n = 1; n <= top; ++n)
    specs.push_back(GroupSpec::make(K::Cyclic, {n}));

  for (std::uint64_t n = 2; n <= top; ++n) {
    for (auto &type : noncyclic_abelian_types(n))
      specs.push_back(GroupSpec::make(K::Abelian, std::move(type)));
  }

  for (std::uint64_t n = 3; 2 * n <= top; ++n)
    specs.push_back(GroupSpec::make(K::Dihedral, {n}));
  for (std::uint64_t n = 2; 4 * n <= top; ++n)
    specs.push_back(GroupSpec::make(K::Dicyclic, {n}));

  for (std::uint64_t d = 2; d <= 6; ++d) {
    auto s = GroupSpec::make(K::Sym, {d});
    if (predicted_order(s) <= top)
      specs.push_back(std::move(s));
  }
  for (std::uint64_t d = 3; d <= 6; ++d) {
    auto a = GroupSpec::make(K::Alt, {d});
    if (predicted_order(a) <= top)
      specs.push_back(std::move(a));
  }

  for (std::uint64_t m = 2; 2 * m <= top; ++m) {
    for (std::uint64_t k = 2; m * k <= top; ++k) {
      for (std::uint64_t r = 1; r < m; ++r) {
        if (std::gcd(r, m) != 1)
          continue;
        std::uint64_t x = 1;
        for (std::uint64_t t = 0; t < k; ++t)
          x = x * r % m;
        if (x == 1)
          specs.push_back(GroupSpec::make(K::Metacyclic, {m, k, r}));
      }
    }
  }

  for (std::uint64_t q = 2; q <= 49; ++q) {
    if (!FiniteField::supported(q))
      continue;
    for (K kind : {K::GL2, K::SL2, K::PSL2}) {
      auto s = GroupSpec::make(kind, {q});
      if (predicted_order(s) <= top)
        specs.push_back(std::move(s));
    }
  }

  auto alt5 = GroupSpec::make(K::Alt, {5});
  for (std::uint64_t m = 1; 60 * m <= top; ++m) {
    if (std::gcd<std::uint64_t>(30, m) == 1)
      specs.push_back(GroupSpec::product(alt5, GroupSpec::make(K::Cyclic, {m})));
  }
  if (120 <= top)
    specs.push_back(GroupSpec::product(GroupSpec::make(K::Cyclic, {2}), alt5));

  std::vector<std::pair<std::pair<std::uint64_t, std::string>, GroupSpec>> keyed;
  keyed.reserve(specs.size());
  for (auto &s : specs)
    keyed.push_back({{predicted_order(s), s.canonical()}, std::move(s)});
  std::sort(keyed.begin(), keyed.end(),
            [](auto const &x, auto const &y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](auto const &x, auto const &y) { return x.first == y.first; }),
              keyed.end());

  std::vector<GroupSpec> result;
  result.reserve(keyed.size());
  for (auto &k : keyed)
    result.push_back(std::move(k.second));
  return result;
}

std::vector<CorpusEntry> builtin_corpus(std::size_t max_order, unsigned workers,
                                        std::size_t cap)
{
  if (max_order > std::min(cap, kMaxTableOrder))
    throw CapExceeded(max_order, std::min(cap, kMaxTableOrder));

  std::vector<GroupSpec> specs = builtin_corpus_specs(max_order);
  std::vector<CorpusEntry> entries(specs.size());
  parallel_for(specs.size(), workers,
               [&](std::size_t i) { entries[i] = make_entry(specs[i], cap); });
  return entries;
}

void sort_corpus(std::vector<CorpusEntry> &entries)
{
  std::stable_sort(entries.begin(), entries.end(), [](auto const &a, auto const &b) {
    return std::tie(a.order, a.key) < std::tie(b.order, b.key);
  });
}

} // namespace ordersum
