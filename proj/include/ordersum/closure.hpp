#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordersum/group.hpp"

namespace ordersum {

/*
 * Closes a nonempty generator list under compose and returns the generated
 * group in table form, with element 0 the identity.
 *
 * Elements are discovered breadth-first by right multiplication with the
 * generators; each discovered element remembers its parent and the generator
 * that produced it, so the table is filled from right-multiplication
 * permutations without re-composing carrier elements.
 *
 * Throws CapExceeded once more than cap elements are discovered, and
 * NonAssociative / ValidationError if the resulting table is not a group.
 */
template<typename T, typename Compose, typename Label,
         typename Hash = std::hash<T>, typename Eq = std::equal_to<T>>
EnumeratedGroup close_generators(std::span<const T> gens, Compose compose, Label label,
                                 std::size_t cap = kDefaultCap, std::string name = {},
                                 Eq eq = Eq{})
{
  if (gens.empty())
    throw ValidationError("close_generators needs at least one generator");

  std::size_t limit = std::min(cap, kMaxTableOrder);

  // The identity is the power of gens[0] just before it returns to gens[0].
  T const &g0 = gens.front();
  T identity = g0;
  for (std::size_t steps = 0;; ++steps) {
    T next = compose(identity, g0);
    if (eq(next, g0))
      break;
    if (steps > limit)
      throw CapExceeded(limit + 1, limit);
    identity = std::move(next);
  }

  std::vector<T> elements{identity};
  std::unordered_map<T, Elem, Hash, Eq> index(16, Hash{}, eq);
  index.emplace(identity, Elem(0));

  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<std::vector<Elem>> right(gens.size());

  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      T y = compose(elements[k], gens[s]);
      auto it = index.find(y);
      Elem idx;
      if (it == index.end()) {
        if (elements.size() >= limit)
          throw CapExceeded(limit + 1, limit);
        idx = static_cast<Elem>(elements.size());
        index.emplace(y, idx);
        elements.push_back(std::move(y));
        parent.push_back(static_cast<Elem>(k));
        via.push_back(s);
      } else {
        idx = it->second;
      }
      right[s].push_back(idx);
    }
  }

  std::size_t n = elements.size();
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem *row = table.data() + i * n;
    row[0] = static_cast<Elem>(i);
    // Discovery order guarantees parent[j] < j.
    for (std::size_t j = 1; j < n; ++j)
      row[j] = right[via[j]][row[parent[j]]];
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (auto const &e : elements)
    labels.push_back(label(e));

  return EnumeratedGroup::from_table(n, std::move(table), std::move(labels),
                                     std::move(name), limit);
}

} // namespace ordersum
