#include "ordersum/carriers.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ordersum/error.hpp"

namespace ordersum {

Permutation::Permutation(std::size_t degree)
  : images_(degree)
{
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images)
  : images_(std::move(images))
{
  if (images_.empty())
    throw ValidationError("permutation degree must be positive");

  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x])
      throw ValidationError("images do not form a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text)
{
  Permutation result(degree);
  std::size_t pos = 0;

  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError(pos, "expected '('");
    ++pos;

    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(pos, "expected a point or ')'");

      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v >= degree)
          throw ValidationError("cycle point exceeds degree " + std::to_string(degree));
        ++pos;
      }
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw ValidationError("point repeated inside a cycle");
      cycle.push_back(static_cast<std::uint32_t>(v));
    }

    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    result = result * c;

    skip_space();
  }

  return result;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  Permutation result(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    result.images_[x] = rhs.images_[images_[x]];
  return result;
}

Permutation Permutation::inverse() const
{
  Permutation result(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    result.images_[images_[x]] = static_cast<std::uint32_t>(x);
  return result;
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < degree(); ++x) {
    if (images_[x] != x)
      return false;
  }
  return true;
}

bool Permutation::even() const
{
  std::vector<bool> seen(degree(), false);
  std::size_t transpositions = 0;
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x])
      continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string Permutation::cycle_notation() const
{
  std::ostringstream ss;
  std::vector<bool> seen(degree(), false);

  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    ss << '(' << x;
    seen[x] = true;
    for (std::size_t y = images_[x]; y != x; y = images_[y]) {
      ss << ' ' << y;
      seen[y] = true;
    }
    ss << ')';
  }

  std::string s = ss.str();
  return s.empty() ? "()" : s;
}

namespace {

bool is_small_prime(std::uint64_t p)
{
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0)
      return false;
  }
  return true;
}

} // namespace

bool FiniteField::supported(std::uint64_t q)
{
  if (q > 49)
    return false;
  if (is_small_prime(q))
    return true;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (p * p == q && is_small_prime(p))
      return true;
  }
  return false;
}

FiniteField FiniteField::make(std::uint64_t q)
{
  if (!supported(q))
    throw ParamError("unsupported field size " + std::to_string(q) +
                     " (need a prime or prime square <= 49)");

  FiniteField f;
  f.size_ = static_cast<unsigned>(q);
  f.degree_ = is_small_prime(q) ? 1 : 2;
  f.characteristic_ = f.degree_ == 1 ? f.size_ : 2;
  while (f.degree_ == 2 && f.characteristic_ * f.characteristic_ != q)
    ++f.characteristic_;

  unsigned p = f.characteristic_;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);

  if (f.degree_ == 1) {
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        f.add_[a * q + b] = (a + b) % p;
        f.mul_[a * q + b] = (a * b) % p;
      }
    }
  } else {
    // GF(p)[t] / (t^2 + c1 t + c0) with the first irreducible (c0, c1).
    auto irreducible = [p](unsigned c0, unsigned c1) {
      for (unsigned t = 0; t < p; ++t) {
        if ((t * t + c1 * t + c0) % p == 0)
          return false;
      }
      return true;
    };
    unsigned c0 = 1, c1 = 0;
    while (!irreducible(c0, c1)) {
      if (++c1 == p) {
        c1 = 0;
        ++c0;
      }
    }

    for (unsigned x = 0; x < q; ++x) {
      unsigned a = x % p, b = x / p;
      for (unsigned y = 0; y < q; ++y) {
        unsigned c = y % p, d = y / p;
        f.add_[x * q + y] = (a + c) % p + p * ((b + d) % p);
        unsigned bd = (b * d) % p;
        unsigned lo = (a * c + p * p - (bd * c0) % p) % p;
        unsigned hi = (a * d + b * c + p * p - (bd * c1) % p) % p;
        f.mul_[x * q + y] = lo + p * hi;
      }
    }
  }

  f.neg_.resize(q);
  f.inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (f.add(a, b) == zero())
        f.neg_[a] = b;
      if (f.mul(a, b) == one())
        f.inv_[a] = b;
    }
  }

  f.validate();
  return f;
}

void FiniteField::validate() const
{
  unsigned q = size_;
  auto fail = [](char const *what) { throw ValidationError(std::string("field axiom fails: ") + what); };

  for (unsigned a = 0; a < q; ++a) {
    if (add(a, zero()) != a || mul(a, one()) != a)
      fail("identity");
    if (add(a, neg(a)) != zero())
      fail("additive inverse");
    if (a != zero() && mul(a, inv_[a]) != one())
      fail("multiplicative inverse");
    for (unsigned b = 0; b < q; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
        fail("commutativity");
      for (unsigned c = 0; c < q; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)))
          fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          fail("distributivity");
      }
    }
  }
}

unsigned FiniteField::inv(unsigned a) const
{
  if (a == zero())
    throw ValidationError("zero has no multiplicative inverse");
  return inv_[a];
}

unsigned FiniteField::from_int(long long v) const
{
  long long p = characteristic_;
  return static_cast<unsigned>(((v % p) + p) % p);
}

Matrix2::Matrix2(FiniteField const &field, std::array<unsigned, 4> entries)
  : field_(&field), entries_(entries)
{
  for (unsigned e : entries_) {
    if (e >= field.size())
      throw ValidationError("matrix entry outside the field");
  }
  if (determinant() == FiniteField::zero())
    throw ValidationError("matrix is singular");
}

Matrix2 Matrix2::identity(FiniteField const &field)
{
  return Matrix2(&field, {1, 0, 0, 1});
}

unsigned Matrix2::determinant() const
{
  auto const &f = *field_;
  auto [a, b, c, d] = entries_;
  return f.sub(f.mul(a, d), f.mul(b, c));
}

std::size_t Matrix2::code() const
{
  std::size_t q = field_->size();
  return ((std::size_t(entries_[0]) * q + entries_[1]) * q + entries_[2]) * q + entries_[3];
}

Matrix2 Matrix2::operator*(Matrix2 const &rhs) const
{
  auto const &f = *field_;
  auto [a, b, c, d] = entries_;
  auto [e, g, h, k] = rhs.entries_;
  return Matrix2(field_, {f.add(f.mul(a, e), f.mul(b, h)), f.add(f.mul(a, g), f.mul(b, k)),
                          f.add(f.mul(c, e), f.mul(d, h)), f.add(f.mul(c, g), f.mul(d, k))});
}

std::string Matrix2::to_string() const
{
  std::ostringstream ss;
  ss << "[[" << entries_[0] << "," << entries_[1] << "],[" << entries_[2] << ","
     << entries_[3] << "]]";
  return ss.str();
}

} // namespace ordersum

std::size_t std::hash<ordersum::Permutation>::operator()(
  ordersum::Permutation const &perm) const noexcept
{
  std::size_t seed = perm.degree();
  for (auto x : perm.images())
    seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}
