#include <doctest.h>

#include <algorithm>
#include <set>

#include "ordersum/error.hpp"
#include "ordersum/corpus.hpp"
#include "ordersum/psi.hpp"

using namespace ordersum;

TEST_CASE("spec parsing")
{
  auto c60 = parse_spec("C 60");
  CHECK(c60.kind == SpecKind::Cyclic);
  CHECK(c60.params == std::vector<std::uint64_t>{60});
  CHECK(c60.canonical() == "c 60");

  auto prod = parse_spec("prod(A 5, C 7)");
  CHECK(prod.kind == SpecKind::Product);
  CHECK(prod.factors.size() == 2);
  CHECK(prod.factors[0] == GroupSpec::make(SpecKind::Alt, {5}));
  CHECK(prod.factors[1] == GroupSpec::make(SpecKind::Cyclic, {7}));
  CHECK(prod.canonical() == "prod(a 5, c 7)");

  auto mc = parse_spec("mc 7 3 2");
  CHECK(mc.kind == SpecKind::Metacyclic);
  CHECK(predicted_order(mc) == 21);

  CHECK(parse_spec("  GL2   4 ").canonical() == "gl2 4");
  CHECK(parse_spec("prod(prod(c 2, c 3), Dic 2)").canonical() == "prod(prod(c 2, c 3), dic 2)");
  CHECK(parse_spec("ab 2 2 3").canonical() == "ab 2 2 3");
}

TEST_CASE("spec parse errors")
{
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("q 5"), ParseError);
  CHECK_THROWS_AS(parse_spec("c"), ArityError);
  CHECK_THROWS_AS(parse_spec("c 5 6"), ArityError);
  CHECK_THROWS_AS(parse_spec("mc 7 3"), ArityError);
  CHECK_THROWS_AS(parse_spec("prod(c 2)"), ArityError);
  CHECK_THROWS_AS(parse_spec("prod(c 2, c 3, c 5)"), ArityError);
  CHECK_THROWS_AS(parse_spec("prod(c 2, c 3"), ParseError);
  CHECK_THROWS_AS(parse_spec("c 5 )"), ParseError);
  CHECK_THROWS_AS(parse_spec("c 0"), ParamError);
  CHECK_THROWS_AS(parse_spec("gl2 6"), ParamError);
  CHECK_THROWS_AS(parse_spec("mc 7 3 3"), ParamError);
  CHECK_THROWS_AS(parse_spec("mc 8 2 2"), ParamError);

  try {
    parse_spec("c 5 x");
    FAIL("expected a parse error");
  } catch (ParseError const &e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("built orders match predictions")
{
  struct Case
  {
    char const *spec;
    std::size_t order;
  };
  for (auto [text, order] : std::vector<Case>{{"c 1", 1},
                                              {"ab 2 3 4", 24},
                                              {"d 5", 10},
                                              {"dic 3", 12},
                                              {"s 5", 120},
                                              {"a 6", 360},
                                              {"gl2 3", 48},
                                              {"gl2 4", 180},
                                              {"sl2 7", 336},
                                              {"psl2 7", 168},
                                              {"psl2 4", 60},
                                              {"psl2 9", 360},
                                              {"mc 13 3 3", 39},
                                              {"prod(s 3, c 4)", 24}}) {
    CAPTURE(text);
    auto spec = parse_spec(text);
    CHECK(predicted_order(spec) == order);
    CHECK(build_group(spec).order() == order);
  }
  CHECK_THROWS_AS(build_group(parse_spec("s 9")), CapExceeded);
  CHECK_THROWS_AS(build_group(parse_spec("c 600"), 500), CapExceeded);
}

TEST_CASE("structure of named families")
{
  CHECK_FALSE(is_abelian(build_group(parse_spec("mc 7 3 2"))));
  CHECK(is_abelian(build_group(parse_spec("mc 7 3 1"))));
  // Q8 has a single involution
  auto q8 = build_group(parse_spec("dic 2"));
  CHECK(std::count(q8.element_orders().begin(), q8.element_orders().end(), 2u) == 1);
  auto d4 = build_group(parse_spec("d 4"));
  CHECK(std::count(d4.element_orders().begin(), d4.element_orders().end(), 2u) == 5);
  CHECK(is_cyclic(build_group(parse_spec("ab 2 3"))));
  CHECK_FALSE(is_cyclic(build_group(parse_spec("ab 2 2"))));
}

TEST_CASE("abelian types")
{
  CHECK(noncyclic_abelian_types(1).empty());
  CHECK(noncyclic_abelian_types(7).empty());
  CHECK(noncyclic_abelian_types(4).size() == 1);
  CHECK(noncyclic_abelian_types(8).size() == 2);
  // 72 = 2^3 3^2: 3 * 2 partitions, minus the cyclic one
  CHECK(noncyclic_abelian_types(72).size() == 5);
}

TEST_CASE("builtin corpus")
{
  auto one = builtin_corpus(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].key == "c 1");

  auto c60 = builtin_corpus(60);
  auto has = [](auto const &corpus, std::string const &key) {
    return std::any_of(corpus.begin(), corpus.end(), [&](auto const &e) { return e.key == key; });
  };
  CHECK(has(c60, "a 5"));
  CHECK(has(c60, "dic 2"));

  auto specs = builtin_corpus_specs(420);
  std::set<std::string> keys;
  for (auto const &s : specs)
    keys.insert(s.canonical());
  CHECK(keys.size() == specs.size());
  CHECK(keys.count("prod(a 5, c 7)") == 1);
  CHECK(keys.count("psl2 7") == 1);
  CHECK(keys.count("gl2 4") == 1);
  CHECK(keys.count("prod(c 2, a 5)") == 1);

  for (std::size_t i = 1; i < specs.size(); ++i) {
    auto a = std::make_pair(predicted_order(specs[i - 1]), specs[i - 1].canonical());
    auto b = std::make_pair(predicted_order(specs[i]), specs[i].canonical());
    CHECK(a < b);
  }

  auto c = builtin_corpus(120, 2);
  for (auto const &e : c) {
    CHECK(e.group->order() == e.order);
    CHECK(e.order <= 120);
    CHECK(e.source == Source::Builtin);
    REQUIRE(e.spec);
    CHECK(e.spec->canonical() == e.key);
  }
}

TEST_CASE("group file: permutation records")
{
  auto entries = load_group_text(R"json({"groups": [
    {"name": "a5", "kind": "perm", "degree": 5, "generators": ["(0 1 2 3 4)", [1, 2, 0, 3, 4]]},
    {"name": "v4", "kind": "perm", "degree": 4, "generators": ["(0 1)(2 3)", "(0 2)(1 3)"]}
  ]})json");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].key == "file:a5");
  CHECK(entries[0].order == 60);
  CHECK(psi_group(*entries[0].group) == 211);
  CHECK(entries[1].order == 4);
  CHECK(entries[1].source == Source::File);
  CHECK_FALSE(entries[1].spec);
}

TEST_CASE("group file: table records")
{
  auto entries = load_group_text(R"json([
    {"name": "c3", "kind": "table", "order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]],
     "labels": ["e", "x", "x^2"]}
  ])json");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].group->label(1) == "x");
  CHECK(psi_group(*entries[0].group) == 7);
}

TEST_CASE("group file errors")
{
  CHECK_THROWS_AS(load_group_text("{"), FormatError);
  CHECK_THROWS_AS(load_group_text(R"json({"nogroups": []})json"), FormatError);
  CHECK_THROWS_AS(load_group_text(R"json([{"kind": "blob"}])json"), FormatError);
  CHECK_THROWS_AS(load_group_text(R"json([{"kind": "perm", "degree": 3}])json"), FormatError);
  CHECK_THROWS_AS(load_group_text(R"json([{"kind": "perm", "degree": 3, "generators": [[0, 0, 1]]}])json"),
                  ValidationError);
  CHECK_THROWS_AS(load_group_text(R"json([{"kind": "perm", "degree": 3, "generators": [[0, 1]]}])json"),
                  ValidationError);
  CHECK_THROWS_AS(
    load_group_text(R"json([{"kind": "table", "order": 2, "table": [[0, 1], [1, 1]]}])json"),
    ValidationError);
  CHECK_THROWS_AS(load_group_text(R"json([{"kind": "table", "order": 2, "table": [[0, 1]]}])json"),
                  FormatError);
  CHECK_THROWS_AS(load_group_text(R"json([{"kind": "perm", "degree": 9,
                                        "generators": ["(0 1 2 3 4 5 6 7 8)", "(0 1)"]}])json",
                                  1000),
                  CapExceeded);
  CHECK_THROWS_AS(load_group_file("/nonexistent/groups.json"), FormatError);
}
