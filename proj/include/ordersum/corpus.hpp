#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordersum/group.hpp"

namespace ordersum {

enum class SpecKind
{
  Cyclic,     // c n
  Abelian,    // ab d1 d2 ...
  Dihedral,   // d n, order 2n
  Dicyclic,   // dic n, order 4n
  Sym,        // s n
  Alt,        // a n
  GL2,        // gl2 q
  SL2,        // sl2 q
  PSL2,       // psl2 q
  Metacyclic, // mc m k r, C_m semidirect C_k with b a b^-1 = a^r
  Product     // prod(x, y)
};

/// Abstract description of a group; printed canonically by canonical().
struct GroupSpec
{
  SpecKind kind = SpecKind::Cyclic;
  std::vector<std::uint64_t> params;
  std::vector<GroupSpec> factors;

  static GroupSpec make(SpecKind kind, std::vector<std::uint64_t> params);
  static GroupSpec product(GroupSpec a, GroupSpec b);

  std::string canonical() const;
  bool operator==(GroupSpec const &) const = default;
};

/*
 * Grammar (keywords case-insensitive, parameters decimal):
 *
 *   spec := "c" n | "ab" d+ | "d" n | "dic" n | "s" n | "a" n
 *         | "gl2" q | "sl2" q | "psl2" q | "mc" m k r
 *         | "prod" "(" spec "," spec ")"
 *
 * Throws ParseError (with position), ArityError, or ParamError.
 */
GroupSpec parse_spec(std::string_view text);

/// Throws ParamError if parameters are out of range.
void validate_spec(GroupSpec const &spec);

/// Order predicted from the parameters; saturates at UINT64_MAX.
std::uint64_t predicted_order(GroupSpec const &spec);

/// Builds the table form. Throws CapExceeded if the predicted order is above cap.
EnumeratedGroup build_group(GroupSpec const &spec, std::size_t cap = kDefaultCap);

enum class Source { Builtin, File };

struct CorpusEntry
{
  std::optional<GroupSpec> spec; // absent for file entries
  std::string key;               // canonical spec, or "file:<name>"
  std::shared_ptr<const EnumeratedGroup> group;
  std::size_t order = 0;
  Source source = Source::Builtin;
};

CorpusEntry make_entry(GroupSpec const &spec, std::size_t cap = kDefaultCap);

/// Deterministic spec list ordered by (order, canonical string), no duplicates.
std::vector<GroupSpec> builtin_corpus_specs(std::size_t max_order);

std::vector<CorpusEntry> builtin_corpus(std::size_t max_order, unsigned workers = 1,
                                        std::size_t cap = kDefaultCap);

/// Abelian invariant-factor lists (d1 | d2 | ... | dk, k >= 2) of order n.
std::vector<std::vector<std::uint64_t>> noncyclic_abelian_types(std::uint64_t n);

// Group files: JSON, see README. Throws FormatError, ValidationError, CapExceeded.
std::vector<CorpusEntry> load_group_file(std::filesystem::path const &path,
                                         std::size_t cap = kDefaultCap);
std::vector<CorpusEntry> load_group_text(std::string_view text,
                                         std::size_t cap = kDefaultCap);

/// Orders entries by (order, key).
void sort_corpus(std::vector<CorpusEntry> &entries);

} // namespace ordersum
