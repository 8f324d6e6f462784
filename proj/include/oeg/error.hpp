#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input data (bad JSON, loops, 2-cycles, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A precondition of an operation does not hold for otherwise valid data.
class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotFiniteType : public Error {
 public:
  explicit NotFiniteType(std::size_t cap)
      : Error("exchange graph exceeds node cap " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class SignCoherenceViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedQuiver : public Error {
 public:
  using Error::Error;
};

class NotALattice : public Error {
 public:
  NotALattice(const std::string& what, int x, int y) : Error(what), x_(x), y_(y) {}
  int x() const { return x_; }
  int y() const { return y_; }

 private:
  int x_, y_;
};

class NotACongruence : public Error {
 public:
  using Error::Error;
};

class SingleStepViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace oeg
