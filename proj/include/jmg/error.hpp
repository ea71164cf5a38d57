#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jmg {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `position` is a byte offset when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands whose shapes, vertex sets or Hilbert space dimensions disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the operation's domain (eta ∉ [0,1], n_x < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical precondition failed (non-Hermitian input, negative eigenvalue).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The joint-measurability problem exceeds the configured variable budget.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace jmg
