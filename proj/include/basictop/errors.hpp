#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace basictop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The order on an algebra's elements fails to be a lattice; carries the
// offending pair.
class NotALattice : public Error {
 public:
  NotALattice(std::string first, std::string second, const std::string& why)
      : Error("not a lattice: " + why + " (" + first + ", " + second + ")"),
        first_(std::move(first)),
        second_(std::move(second)) {}
  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

// Residuation c <= (a -> b) iff c /\ a <= b fails for the witness triple.
class NotHeyting : public Error {
 public:
  NotHeyting(std::string a, std::string b, std::string c)
      : Error("not a Heyting algebra: residuation fails for a=" + a + ", b=" + b + ", c=" + c),
        a_(std::move(a)),
        b_(std::move(b)),
        c_(std::move(c)) {}
  const std::string& a() const noexcept { return a_; }
  const std::string& b() const noexcept { return b_; }
  const std::string& c() const noexcept { return c_; }

 private:
  std::string a_, b_, c_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t required, std::size_t cap)
      : Error(what + " needs " + std::to_string(required) + " but the cap is " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}
  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

// Objects from different carriers or algebras were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// A saturation/reduction certificate could not be established.
class CertificateFailure : public Error {
 public:
  using Error::Error;
};

class UnknownEntry : public Error {
 public:
  using Error::Error;
};

// A saturation/reduction pair failed to be compatible.
class NotCompatible : public Error {
 public:
  NotCompatible(const std::string& what, std::string degree, std::vector<std::string> witness)
      : Error(what), degree_(std::move(degree)), witness_(std::move(witness)) {}
  const std::string& degree() const noexcept { return degree_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string degree_;
  std::vector<std::string> witness_;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class UnknownCommand : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string object, const std::string& what)
      : Error(object.empty() ? what : object + ": " + what), object_(std::move(object)) {}
  const std::string& object() const noexcept { return object_; }

 private:
  std::string object_;
};

}  // namespace basictop
