#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace ordersum {

using BigInt = mpz_class;

/// Exact rational in lowest terms with a positive denominator.
class ExactRatio
{
public:
  ExactRatio() = default;
  ExactRatio(long v) : value_(v) {}
  ExactRatio(BigInt num, BigInt den);
  explicit ExactRatio(mpq_class value);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  mpq_class const &value() const { return value_; }

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  // Approximate decimal; display only.
  double approx() const { return value_.get_d(); }

  friend ExactRatio operator+(ExactRatio const &a, ExactRatio const &b)
  { return ExactRatio(mpq_class(a.value_ + b.value_)); }
  friend ExactRatio operator-(ExactRatio const &a, ExactRatio const &b)
  { return ExactRatio(mpq_class(a.value_ - b.value_)); }
  friend ExactRatio operator*(ExactRatio const &a, ExactRatio const &b)
  { return ExactRatio(mpq_class(a.value_ * b.value_)); }
  friend ExactRatio operator/(ExactRatio const &a, ExactRatio const &b);

  friend bool operator==(ExactRatio const &a, ExactRatio const &b)
  { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(ExactRatio const &a, ExactRatio const &b)
  { return cmp(a.value_, b.value_) <=> 0; }

private:
  mpq_class value_{0};
};

inline std::string to_decimal(BigInt const &v) { return v.get_str(10); }

} // namespace ordersum
