#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noether {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (cycle notation, polynomial text, group specs, scripts).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments does not hold (degree mismatch, index out of range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A size guard was hit: enumeration cap, expansion degree cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// |G| is zero in the coefficient field, so averaging over G is undefined.
class ModularObstruction : public Error {
 public:
  using Error::Error;
};

/// The group does not act transitively on its points.
class NotTransitive : public Error {
 public:
  using Error::Error;
};

/// Substitution produced a denominator that is identically zero.
class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

/// A claimed invariant is moved by some group element.
class NotInvariant : public Error {
 public:
  NotInvariant(const std::string& what, std::size_t generator_index, std::string group_element)
      : Error(what), generator_index_(generator_index), group_element_(std::move(group_element)) {}

  std::size_t generator_index() const { return generator_index_; }
  const std::string& group_element() const { return group_element_; }

 private:
  std::size_t generator_index_;
  std::string group_element_;
};

}  // namespace noether
