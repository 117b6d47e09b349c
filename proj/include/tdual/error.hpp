#pragma once

#include <stdexcept>
#include <string>

namespace tdual {

// Base class for every failure reported by the library. Domain errors map to
// CLI exit status 1; UsageError maps to 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class InvarianceError : public Error {
 public:
  InvarianceError(const std::string& what, std::size_t generator)
      : Error(what), generator_(generator) {}
  std::size_t generator() const { return generator_; }

 private:
  std::size_t generator_;
};

class RootDatumError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdual
