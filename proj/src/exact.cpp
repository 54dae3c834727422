#include "ordersum/exact.hpp"

#include "ordersum/error.hpp"

namespace ordersum {

ExactRatio::ExactRatio(BigInt num, BigInt den)
{
  if (den == 0)
    throw PreconditionError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRatio::ExactRatio(mpq_class value)
  : value_(std::move(value))
{
  value_.canonicalize();
}

std::string ExactRatio::to_string() const
{
  if (value_.get_den() == 1)
    return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

ExactRatio operator/(ExactRatio const &a, ExactRatio const &b)
{
  if (b.value_ == 0)
    throw PreconditionError("division by zero");
  return ExactRatio(mpq_class(a.value_ / b.value_));
}

} // namespace ordersum
