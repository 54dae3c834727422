#include "ordersum/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ordersum/carriers.hpp"
#include "ordersum/closure.hpp"
#include "ordersum/error.hpp"

namespace ordersum {

namespace {

using nlohmann::json;

json const &field(json const &record, char const *key, std::string const &where)
{
  auto it = record.find(key);
  if (it == record.end())
    throw FormatError(where + ": missing field '" + key + "'");
  return *it;
}

std::uint64_t positive(json const &v, char const *key, std::string const &where)
{
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw FormatError(where + ": '" + key + "' must be a positive integer");
  return v.get<std::uint64_t>();
}

Permutation parse_generator(json const &g, std::size_t degree, std::string const &where)
{
  if (g.is_string())
    return Permutation::from_cycles(degree, g.get<std::string>());

  if (!g.is_array())
    throw FormatError(where + ": generator must be an image array or cycle string");

  std::vector<std::uint32_t> images;
  for (auto const &x : g) {
    if (!x.is_number_unsigned())
      throw FormatError(where + ": images must be non-negative integers");
    images.push_back(x.get<std::uint32_t>());
  }
  if (images.size() != degree)
    throw ValidationError(where + ": generator has " + std::to_string(images.size()) +
                          " images, degree is " + std::to_string(degree));
  return Permutation(std::move(images));
}

EnumeratedGroup load_perm_record(json const &record, std::string name, std::string const &where,
                                 std::size_t cap)
{
  auto degree = positive(field(record, "degree", where), "degree", where);
  auto const &gens = field(record, "generators", where);
  if (!gens.is_array())
    throw FormatError(where + ": 'generators' must be an array");

  std::vector<Permutation> perms;
  for (auto const &g : gens)
    perms.push_back(parse_generator(g, degree, where));
  if (perms.empty())
    perms.emplace_back(degree);

  return close_generators<Permutation>(
    perms, std::multiplies<>{}, [](Permutation const &p) { return p.cycle_notation(); }, cap,
    std::move(name));
}

EnumeratedGroup load_table_record(json const &record, std::string name, std::string const &where,
                                  std::size_t cap)
{
  auto order = positive(field(record, "order", where), "order", where);
  EnumeratedGroup::check_cap(order, cap);

  auto const &rows = field(record, "table", where);
  if (!rows.is_array() || rows.size() != order)
    throw FormatError(where + ": 'table' must have " + std::to_string(order) + " rows");

  std::vector<Elem> table;
  table.reserve(order * order);
  for (auto const &row : rows) {
    if (!row.is_array() || row.size() != order)
      throw FormatError(where + ": every table row needs " + std::to_string(order) + " entries");
    for (auto const &x : row) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= order)
        throw ValidationError(where + ": table entry out of range");
      table.push_back(static_cast<Elem>(x.get<std::uint64_t>()));
    }
  }

  std::vector<std::string> labels;
  if (auto it = record.find("labels"); it != record.end()) {
    if (!it->is_array() || it->size() != order)
      throw FormatError(where + ": 'labels' must list one string per element");
    for (auto const &l : *it)
      labels.push_back(l.get<std::string>());
  }

  return EnumeratedGroup::from_table(order, std::move(table), std::move(labels),
                                     std::move(name), cap);
}

} // namespace

std::vector<CorpusEntry> load_group_text(std::string_view text, std::size_t cap)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const &e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }

  json const *records = &doc;
  if (doc.is_object())
    records = &field(doc, "groups", "document");
  if (!records->is_array())
    throw FormatError("document must be an array of group records or {\"groups\": [...]}");

  std::vector<CorpusEntry> entries;
  std::size_t index = 0;
  for (auto const &record : *records) {
    std::string where = "record " + std::to_string(index);
    if (!record.is_object())
      throw FormatError(where + ": not an object");

    std::string name = where;
    if (auto it = record.find("name"); it != record.end()) {
      if (!it->is_string())
        throw FormatError(where + ": 'name' must be a string");
      name = it->get<std::string>();
    }

    auto const &kind = field(record, "kind", where);
    if (!kind.is_string())
      throw FormatError(where + ": 'kind' must be a string");

    EnumeratedGroup g = [&] {
      try {
        if (kind == "perm")
          return load_perm_record(record, name, where, cap);
        if (kind == "table")
          return load_table_record(record, name, where, cap);
      } catch (json::exception const &e) {
        throw FormatError(where + ": " + e.what());
      }
      throw FormatError(where + ": unknown kind '" + kind.get<std::string>() + "'");
    }();

    CorpusEntry e;
    e.key = "file:" + name;
    e.order = g.order();
    e.group = std::make_shared<const EnumeratedGroup>(std::move(g));
    e.source = Source::File;
    entries.push_back(std::move(e));
    ++index;
  }

  return entries;
}

std::vector<CorpusEntry> load_group_file(std::filesystem::path const &path, std::size_t cap)
{
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_group_text(ss.str(), cap);
}

} // namespace ordersum
