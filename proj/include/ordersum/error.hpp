#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordersum {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// group-kernel
class CapExceeded : public Error
{
public:
  CapExceeded(std::size_t requested, std::size_t cap)
    : Error("group order " + std::to_string(requested) +
            " exceeds table cap " + std::to_string(cap)),
      requested_(requested), cap_(cap)
  {}

  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

private:
  std::size_t requested_;
  std::size_t cap_;
};

class NonAssociative : public Error { public: using Error::Error; };
class ValidationError : public Error { public: using Error::Error; };
class NotNormal : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };
class PrimeDoesNotDivide : public Error { public: using Error::Error; };

// psi-engine
class TooLarge : public Error { public: using Error::Error; };
class NotPrime : public Error { public: using Error::Error; };
class PreconditionError : public Error { public: using Error::Error; };

// corpus
class ParseError : public Error
{
public:
  ParseError(std::size_t position, const std::string &what)
    : Error("parse error at " + std::to_string(position) + ": " + what),
      position_(position)
  {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class ArityError : public Error { public: using Error::Error; };
class ParamError : public Error { public: using Error::Error; };
class FormatError : public Error { public: using Error::Error; };

// verifier
class GcdError : public Error { public: using Error::Error; };

} // namespace ordersum
