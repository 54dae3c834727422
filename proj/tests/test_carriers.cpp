#include <doctest.h>

#include "ordersum/error.hpp"
#include "ordersum/carriers.hpp"

using namespace ordersum;

TEST_CASE("cycle notation parsing")
{
  auto p = Permutation::from_cycles(5, "(0 1 2)(3 4)");
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p.cycle_notation() == "(0 1 2)(3 4)");

  CHECK(Permutation::from_cycles(4, "(0,1)(2,3)") == Permutation::from_cycles(4, "(0 1)(2 3)"));
  CHECK(Permutation::from_cycles(3, "()").is_identity());
  CHECK(Permutation::from_cycles(3, "").is_identity());
  CHECK(Permutation(3).cycle_notation() == "()");

  CHECK_THROWS_AS(Permutation::from_cycles(5, "(0 1"), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles(5, "0 1)"), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles(5, "(0 x)"), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 5)"), ValidationError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1 0)"), ValidationError);
}

TEST_CASE("permutation algebra")
{
  auto a = Permutation::from_cycles(3, "(0 1)");
  auto b = Permutation::from_cycles(3, "(1 2)");
  // left to right: apply a, then b
  auto ab = a * b;
  CHECK(ab[0] == 2);
  CHECK((a * a).is_identity());
  CHECK((ab * ab.inverse()).is_identity());
  CHECK(ab.even());
  CHECK_FALSE(a.even());

  CHECK_THROWS_AS(Permutation(std::vector<std::uint32_t>{0, 0, 1}), ValidationError);
}

TEST_CASE("finite fields satisfy the axioms")
{
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u, 11u, 25u, 49u}) {
    CAPTURE(q);
    REQUIRE(FiniteField::supported(q));
    FiniteField f = FiniteField::make(q);
    CHECK(f.size() == q);
    for (unsigned a = 1; a < q; ++a)
      CHECK(f.mul(a, f.inv(a)) == 1);
    for (unsigned a = 0; a < q; ++a)
      CHECK(f.add(a, f.neg(a)) == 0);
  }
  CHECK(FiniteField::make(4).characteristic() == 2);
  CHECK(FiniteField::make(9).degree() == 2);
  CHECK_FALSE(FiniteField::supported(6));
  CHECK_FALSE(FiniteField::supported(27));
  CHECK_THROWS_AS(FiniteField::make(6), ParamError);
  CHECK_THROWS_AS(FiniteField::make(5).inv(0), ValidationError);
  CHECK(FiniteField::make(5).from_int(-1) == 4);
}

TEST_CASE("2x2 matrices")
{
  FiniteField f = FiniteField::make(5);
  Matrix2 u(f, {1, 1, 0, 1});
  Matrix2 w(f, {0, 4, 1, 0});
  CHECK(u.determinant() == 1);
  CHECK(w.determinant() == 1);
  CHECK((w * w * w * w) == Matrix2::identity(f));
  CHECK((u * u).entries() == std::array<unsigned, 4>{1, 2, 0, 1});
  CHECK(u.to_string() == "[[1,1],[0,1]]");
  CHECK_THROWS_AS(Matrix2(f, {1, 2, 2, 4}), ValidationError);
  CHECK_THROWS_AS(Matrix2(f, {1, 0, 0, 9}), ValidationError);
}
