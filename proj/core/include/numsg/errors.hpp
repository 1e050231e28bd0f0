#pragma once

#include <stdexcept>
#include <string>

namespace numsg {

// Base of every exception thrown by the library. The CLI maps these to exit
// code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The element list handed to a constructor is not additively closed below
// the conductor: a + b is missing.
class ClosureViolation : public Error {
 public:
  ClosureViolation(int a, int b);
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }

 private:
  int a_;
  int b_;
};

class MissingZero : public Error {
 public:
  MissingZero();
};

// Generators with gcd != 1 span a monoid with infinite complement.
class NotCofinite : public Error {
 public:
  explicit NotCofinite(int gcd);
  int gcd() const noexcept { return gcd_; }

 private:
  int gcd_;
};

// An operation was applied outside the set of semigroups it is defined on
// (transform domains, tree parameter ranges, sub-Frobenius of an ordinary
// semigroup, ...). what() names the reason.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotSpecialGap : public Error {
 public:
  explicit NotSpecialGap(int h);
};

class NotMinimalGenerator : public Error {
 public:
  explicit NotMinimalGenerator(int x);
};

class LimitExceeded : public Error {
 public:
  LimitExceeded(std::string const& what, std::size_t reached);
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

// Broken internal invariant. Never expected in a correct build.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Malformed user input (CLI flags, list syntax).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace numsg
