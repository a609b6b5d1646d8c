#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zhou {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The modulus has a prime factor outside {2, 3, 5}, or is below 2.
class UnsupportedModulus : public Error {
 public:
  UnsupportedModulus(std::uint64_t modulus, std::uint64_t offending)
      : Error(describe(modulus, offending)), modulus_(modulus), offending_(offending) {}

  std::uint64_t modulus() const noexcept { return modulus_; }
  /// Smallest prime factor outside {2,3,5} that was found, or the leftover
  /// cofactor if trial division gave up. Zero when the modulus is below 2.
  std::uint64_t offending_factor() const noexcept { return offending_; }

 private:
  static std::string describe(std::uint64_t modulus, std::uint64_t offending) {
    if (modulus < 2) return "unsupported modulus " + std::to_string(modulus) + ": must be at least 2";
    return "unsupported modulus " + std::to_string(modulus) + ": prime factor " + std::to_string(offending) +
           " is not one of 2, 3, 5";
  }

  std::uint64_t modulus_;
  std::uint64_t offending_;
};

class ComponentMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroPoly : public Error {
 public:
  using Error::Error;
};

class NotApproxIdempotent : public Error {
 public:
  using Error::Error;
};

class NotApproxTripotent : public Error {
 public:
  using Error::Error;
};

/// Raised by the tripotent Newton step if 3T^2 - I is singular mod p.
/// Unreachable when the input really is tripotent mod an odd prime.
class JacobianNotUnit : public Error {
 public:
  using Error::Error;
};

class NotUpperTriangular : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix / JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zhou
