#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ordersum/error.hpp"

namespace ordersum {

/// Index of an element inside an EnumeratedGroup.
using Elem = std::uint16_t;

/// Hard ceiling implied by 16-bit element indices.
inline constexpr std::size_t kMaxTableOrder = 65535;

/// Default table cap (~800 MB of multiplication table at the ceiling).
inline constexpr std::size_t kDefaultCap = 20000;

/*
 * A finite group in canonical table form.
 *
 * The multiplication table is stored row-major: mul(a, b) = table[a * n + b].
 * Construction always validates the table (Latin square, two-sided identity,
 * two-sided inverses, associativity) so every instance is a group. Instances
 * are immutable and may be shared freely between threads.
 */
class EnumeratedGroup
{
public:
  static EnumeratedGroup from_table(std::size_t order, std::vector<Elem> table,
                                    std::vector<std::string> labels = {},
                                    std::string name = {},
                                    std::size_t cap = kDefaultCap);

  // Fills the table from rule(a, b) before validating it.
  template<typename Rule>
  static EnumeratedGroup from_rule(std::size_t order, Rule rule,
                                   std::vector<std::string> labels = {},
                                   std::string name = {},
                                   std::size_t cap = kDefaultCap)
  {
    check_cap(order, cap);

    std::vector<Elem> table(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b)
        table[a * order + b] = static_cast<Elem>(rule(a, b));
    }

    return from_table(order, std::move(table), std::move(labels),
                      std::move(name), cap);
  }

  std::size_t order() const { return order_; }
  Elem identity() const { return identity_; }

  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }

  std::span<const Elem> row(Elem a) const
  { return {table_.data() + std::size_t(a) * order_, order_}; }

  // Orders of all elements, computed once at construction by successive powers.
  std::uint32_t order_of(Elem a) const { return orders_[a]; }
  std::span<const std::uint32_t> element_orders() const { return orders_; }

  // A generating set picked greedily in index order during validation.
  std::span<const Elem> generators() const { return generators_; }

  const std::string &label(Elem a) const { return labels_[a]; }
  const std::string &name() const { return name_; }

  std::span<const Elem> table() const { return table_; }

  EnumeratedGroup with_name(std::string name) &&
  {
    name_ = std::move(name);
    return std::move(*this);
  }

  static void check_cap(std::size_t order, std::size_t cap);

private:
  EnumeratedGroup() = default;

  std::size_t order_ = 0;
  Elem identity_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
  std::string name_;
};

/*
 * A subgroup of an EnumeratedGroup given by its strictly sorted member list.
 *
 * Holds a non-owning pointer to the parent group, which must outlive it.
 */
class Subgroup
{
public:
  // Checks identity membership and closure; throws ValidationError otherwise.
  static Subgroup from_members(EnumeratedGroup const &parent,
                               std::vector<Elem> members);

  EnumeratedGroup const &parent() const { return *parent_; }
  std::span<const Elem> members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(Elem a) const { return mask_[a] != 0; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }
  std::size_t index() const { return parent_->order() / members_.size(); }

  bool operator==(Subgroup const &other) const
  { return parent_ == other.parent_ && members_ == other.members_; }

  // Trusted constructor for results of kernel operations.
  static Subgroup from_sorted_unchecked(EnumeratedGroup const &parent,
                                        std::vector<Elem> members);

private:
  Subgroup(EnumeratedGroup const *parent, std::vector<Elem> members);

  EnumeratedGroup const *parent_;
  std::vector<Elem> members_;
  std::vector<std::uint8_t> mask_;
};

/// Smallest t >= 1 with a^t = identity, by successive multiplication.
std::uint32_t element_order(EnumeratedGroup const &g, std::size_t index);

EnumeratedGroup direct_product(EnumeratedGroup const &g, EnumeratedGroup const &h,
                               std::size_t cap = kDefaultCap);

/// Coset table G/N. Throws NotNormal unless N is normal in G.
EnumeratedGroup quotient(EnumeratedGroup const &g, Subgroup const &n);

/// Element indices of G/N in the order quotient() assigns them.
std::vector<Elem> coset_assignment(EnumeratedGroup const &g, Subgroup const &n);

Subgroup whole_group(EnumeratedGroup const &g);
Subgroup trivial_subgroup(EnumeratedGroup const &g);

Subgroup generated_subgroup(EnumeratedGroup const &g, std::span<const Elem> seed);
Subgroup normal_closure(EnumeratedGroup const &g, std::span<const Elem> seed);

/// Subgroup of h.parent() generated by all commutators of members of h.
Subgroup commutator_subgroup(Subgroup const &h);

struct DerivedSeries
{
  std::vector<Subgroup> series;
  bool solvable = false;

  std::vector<std::size_t> orders() const;
};

DerivedSeries derived_series(EnumeratedGroup const &g);

Subgroup center(EnumeratedGroup const &g);
Subgroup normalizer(EnumeratedGroup const &g, Subgroup const &h);
Subgroup subgroup_core(EnumeratedGroup const &g, Subgroup const &a);

bool is_normal(EnumeratedGroup const &g, Subgroup const &h);
bool is_abelian(EnumeratedGroup const &g);
bool is_cyclic(EnumeratedGroup const &g);
bool is_cyclic(Subgroup const &h);

struct SylowData
{
  Subgroup subgroup;
  std::size_t count;
};

SylowData sylow_count(EnumeratedGroup const &g, std::uint64_t p);

struct MaxOrderElement
{
  Elem index;
  std::uint32_t order;
  std::size_t cyclic_index;
};

MaxOrderElement max_order_element(EnumeratedGroup const &g);

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<Elem>> conjugacy_classes(EnumeratedGroup const &g);

} // namespace ordersum
