#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordersum {

/*
 * Permutation of {0, ..., degree-1}.
 *
 * Products compose left to right: (p * q)[x] = q[p[x]].
 */
class Permutation
{
public:
  explicit Permutation(std::size_t degree = 1);

  // Throws ValidationError unless images is a bijection of {0..d-1}.
  explicit Permutation(std::vector<std::uint32_t> images);

  // Parses disjoint or overlapping cycles such as "(0 1 2)(3 4)"; "()" is
  // the identity. Cycles are applied left to right.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const { return images_; }

  Permutation operator*(Permutation const &rhs) const;
  Permutation inverse() const;
  bool operator==(Permutation const &rhs) const = default;

  bool is_identity() const;
  bool even() const;

  std::string cycle_notation() const;

private:
  std::vector<std::uint32_t> images_;
};

/// GF(q) for q prime or the square of a prime, q <= 49, with explicit tables.
class FiniteField
{
public:
  static bool supported(std::uint64_t q);

  // Throws ParamError for unsupported q.
  static FiniteField make(std::uint64_t q);

  unsigned size() const { return size_; }
  unsigned characteristic() const { return characteristic_; }
  unsigned degree() const { return degree_; }

  static constexpr unsigned zero() { return 0; }
  static constexpr unsigned one() { return 1; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * size_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * size_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned inv(unsigned a) const;

  // Integer coefficients reduced into the prime subfield.
  unsigned from_int(long long v) const;

  bool operator==(FiniteField const &rhs) const { return size_ == rhs.size_; }

private:
  FiniteField() = default;
  void validate() const;

  unsigned size_ = 0;
  unsigned characteristic_ = 0;
  unsigned degree_ = 0;
  std::vector<unsigned> add_;
  std::vector<unsigned> mul_;
  std::vector<unsigned> neg_;
  std::vector<unsigned> inv_;
};

/// Invertible 2x2 matrix [[a, b], [c, d]] over a FiniteField, which must outlive it.
class Matrix2
{
public:
  // Throws ValidationError if the determinant vanishes.
  Matrix2(FiniteField const &field, std::array<unsigned, 4> entries);

  static Matrix2 identity(FiniteField const &field);

  FiniteField const &field() const { return *field_; }
  std::array<unsigned, 4> const &entries() const { return entries_; }
  unsigned determinant() const;

  // Base-q packing of the entries, in [0, q^4).
  std::size_t code() const;

  Matrix2 operator*(Matrix2 const &rhs) const;
  bool operator==(Matrix2 const &rhs) const { return entries_ == rhs.entries_; }

  std::string to_string() const;

private:
  Matrix2(FiniteField const *field, std::array<unsigned, 4> entries)
    : field_(field), entries_(entries)
  {}

  FiniteField const *field_;
  std::array<unsigned, 4> entries_;
};

} // namespace ordersum

template<>
struct std::hash<ordersum::Permutation>
{
  std::size_t operator()(ordersum::Permutation const &perm) const noexcept;
};

template<>
struct std::hash<ordersum::Matrix2>
{
  std::size_t operator()(ordersum::Matrix2 const &m) const noexcept { return m.code(); }
};
