#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace smod {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// A denominator vanished at the substitution point: the point lies in the
// exceptional locus of the object being specialized.
class BadSubstitution : public Error {
 public:
  explicit BadSubstitution(std::string denominator)
      : Error("bad substitution: denominator " + denominator + " vanishes"),
        denominator_(std::move(denominator)) {}
  BadSubstitution(std::string denominator, const std::string& where)
      : Error("bad substitution at " + where + ": denominator " + denominator + " vanishes"),
        denominator_(std::move(denominator)) {}
  const std::string& denominator() const { return denominator_; }

 private:
  std::string denominator_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(std::string symbol)
      : Error("unknown symbol '" + symbol + "'"), symbol_(std::move(symbol)) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
};

class OrderMismatch : public Error {
 public:
  explicit OrderMismatch(const std::string& what) : Error("order mismatch: " + what) {}
};

class ImproperIdeal : public Error {
 public:
  ImproperIdeal() : Error("height is undefined for the zero and unit ideals") {}
};

class NotAHomomorphism : public Error {
 public:
  explicit NotAHomomorphism(std::size_t column)
      : Error("matrix does not induce a homomorphism (relation column " +
              std::to_string(column) + " leaves the target relations)") {}
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch() : Error("submodules live in different ambient modules") {}
};

class NotAComplex : public Error {
 public:
  explicit NotAComplex(std::size_t index)
      : Error("composite of maps " + std::to_string(index) + " and " +
              std::to_string(index + 1) + " is nonzero"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("resolution did not terminate within " + std::to_string(cap) + " steps") {}
};

class ZeroModule : public Error {
 public:
  ZeroModule() : Error("operation undefined on the zero module") {}
};

// Structural check failed after substitution at a point the certificate
// accepted. Never silently repaired.
class CompatibilityLost : public Error {
 public:
  CompatibilityLost() : Error("map compatibility lost after substitution") {}
};

class ExhaustedSampling : public Error {
 public:
  ExhaustedSampling() : Error("no certified-good point found in 1000 draws") {}
};

class InputError : public Error {
 public:
  InputError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace smod
