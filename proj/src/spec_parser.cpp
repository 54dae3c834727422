#include "ordersum/corpus.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "ordersum/carriers.hpp"
#include "ordersum/error.hpp"

namespace ordersum {

namespace {

struct KeywordInfo
{
  char const *word;
  SpecKind kind;
  std::size_t min_arity;
  std::size_t max_arity;
};

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

constexpr KeywordInfo kKeywords[] = {
  {"c", SpecKind::Cyclic, 1, 1},       {"ab", SpecKind::Abelian, 1, kUnbounded},
  {"d", SpecKind::Dihedral, 1, 1},     {"dic", SpecKind::Dicyclic, 1, 1},
  {"s", SpecKind::Sym, 1, 1},          {"a", SpecKind::Alt, 1, 1},
  {"gl2", SpecKind::GL2, 1, 1},        {"sl2", SpecKind::SL2, 1, 1},
  {"psl2", SpecKind::PSL2, 1, 1},      {"mc", SpecKind::Metacyclic, 3, 3},
  {"prod", SpecKind::Product, 0, 0},
};

KeywordInfo const &info(SpecKind kind)
{
  for (auto const &k : kKeywords) {
    if (k.kind == kind)
      return k;
  }
  throw Error("unknown spec kind");
}

class Parser
{
public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse_all()
  {
    GroupSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError(pos_, "unexpected trailing input");
    return spec;
  }

private:
  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c)
  {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c)
  {
    if (!peek(c))
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  GroupSpec parse_spec()
  {
    skip_space();
    std::size_t start = pos_;
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_++]))));
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) &&
           (word == "gl" || word == "sl" || word == "psl"))
      word.push_back(text_[pos_++]);

    if (word.empty())
      throw ParseError(start, "expected a group keyword");

    KeywordInfo const *kw = nullptr;
    for (auto const &k : kKeywords) {
      if (word == k.word)
        kw = &k;
    }
    if (!kw)
      throw ParseError(start, "unknown keyword '" + word + "'");

    if (kw->kind == SpecKind::Product) {
      expect('(');
      std::vector<GroupSpec> factors{parse_spec()};
      while (peek(',')) {
        ++pos_;
        factors.push_back(parse_spec());
      }
      expect(')');
      if (factors.size() != 2)
        throw ArityError("prod takes exactly 2 factors, got " + std::to_string(factors.size()));
      return GroupSpec::product(std::move(factors[0]), std::move(factors[1]));
    }

    std::vector<std::uint64_t> params;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        break;
      std::size_t at = pos_;
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
          throw ParseError(at, "parameter too large");
        v = v * 10 + digit;
        ++pos_;
      }
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
        throw ParseError(pos_, "expected whitespace after parameter");
      params.push_back(v);
    }

    if (params.size() < kw->min_arity || params.size() > kw->max_arity)
      throw ArityError("'" + word + "' got " + std::to_string(params.size()) + " parameters");

    GroupSpec spec = GroupSpec::make(kw->kind, std::move(params));
    validate_spec(spec);
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b)
{
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > top / a)
    return top;
  return a * b;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
  unsigned __int128 result = 1 % mod, b = base % mod;
  while (exp) {
    if (exp & 1)
      result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

} // namespace

GroupSpec GroupSpec::make(SpecKind kind, std::vector<std::uint64_t> params)
{
  GroupSpec s;
  s.kind = kind;
  s.params = std::move(params);
  return s;
}

GroupSpec GroupSpec::product(GroupSpec a, GroupSpec b)
{
  GroupSpec s;
  s.kind = SpecKind::Product;
  s.factors.push_back(std::move(a));
  s.factors.push_back(std::move(b));
  return s;
}

std::string GroupSpec::canonical() const
{
  if (kind == SpecKind::Product)
    return "prod(" + factors.at(0).canonical() + ", " + factors.at(1).canonical() + ")";

  std::string out = info(kind).word;
  for (auto p : params)
    out += " " + std::to_string(p);
  return out;
}

GroupSpec parse_spec(std::string_view text)
{
  return Parser(text).parse_all();
}

void validate_spec(GroupSpec const &spec)
{
  auto const &kw = info(spec.kind);
  if (spec.kind == SpecKind::Product) {
    if (spec.factors.size() != 2 || !spec.params.empty())
      throw ArityError("prod takes exactly 2 factors");
    validate_spec(spec.factors[0]);
    validate_spec(spec.factors[1]);
    return;
  }

  if (spec.params.size() < kw.min_arity || spec.params.size() > kw.max_arity ||
      !spec.factors.empty())
    throw ArityError(std::string("'") + kw.word + "' has wrong arity");

  auto const &p = spec.params;
  switch (spec.kind) {
  case SpecKind::GL2:
  case SpecKind::SL2:
  case SpecKind::PSL2:
    if (!FiniteField::supported(p[0]))
      throw ParamError("field size " + std::to_string(p[0]) + " unsupported");
    break;
  case SpecKind::Metacyclic: {
    auto [m, k, r] = std::tuple{p[0], p[1], p[2]};
    if (m == 0 || k == 0)
      throw ParamError("mc needs m, k >= 1");
    if (std::gcd(r, m) != 1)
      throw ParamError("mc needs gcd(r, m) = 1");
    if (pow_mod(r, k, m) != 1 % m)
      throw ParamError("mc needs r^k = 1 mod m");
    break;
  }
  default:
    for (auto v : p) {
      if (v == 0)
        throw ParamError(std::string("'") + kw.word + "' parameters must be positive");
    }
  }
}

std::uint64_t predicted_order(GroupSpec const &spec)
{
  auto const &p = spec.params;
  switch (spec.kind) {
  case SpecKind::Cyclic:
    return p[0];
  case SpecKind::Abelian: {
    std::uint64_t n = 1;
    for (auto d : p)
      n = mul_sat(n, d);
    return n;
  }
  case SpecKind::Dihedral:
    return mul_sat(2, p[0]);
  case SpecKind::Dicyclic:
    return mul_sat(4, p[0]);
  case SpecKind::Sym:
  case SpecKind::Alt: {
    std::uint64_t n = 1;
    for (std::uint64_t i = 2; i <= p[0]; ++i)
      n = mul_sat(n, i);
    if (spec.kind == SpecKind::Alt && p[0] >= 2 && n != std::numeric_limits<std::uint64_t>::max())
      n /= 2;
    return n;
  }
  case SpecKind::GL2: {
    std::uint64_t q = p[0];
    return mul_sat(q * q - 1, q * q - q);
  }
  case SpecKind::SL2: {
    std::uint64_t q = p[0];
    return mul_sat(q, q * q - 1);
  }
  case SpecKind::PSL2: {
    std::uint64_t q = p[0];
    return mul_sat(q, q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
  }
  case SpecKind::Metacyclic:
    return mul_sat(p[0], p[1]);
  case SpecKind::Product:
    return mul_sat(predicted_order(spec.factors[0]), predicted_order(spec.factors[1]));
  }
  return 0;
}

} // namespace ordersum
