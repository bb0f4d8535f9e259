#pragma once

// Exact scalars: rationals, polynomials in the parameters u, and the
// rational function field Q(u) in which parametric coefficients live.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smod {

using Rational = mpq_class;

std::string to_string(const Rational& q);
// Accepts "n" or "n/d" with an optional sign.
Rational parse_rational(std::string_view text);

// Exponent vector over u1..um with trailing zeros trimmed, so that vector
// comparison coincides with lex order and the constant monomial is empty.
using ParamExps = std::vector<std::uint16_t>;

// Default parameter names u1, u2, ... used when a ring is not at hand.
std::vector<std::string> default_param_names(std::size_t m);

// Polynomial in Q[u1..um]. Terms are keyed by trimmed exponent vectors,
// which makes the parameter count implicit.
class ParamPoly {
 public:
  using TermMap = std::map<ParamExps, Rational>;

  ParamPoly() = default;
  ParamPoly(long c);  // NOLINT(google-explicit-constructor)
  ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static ParamPoly variable(std::size_t index);
  static ParamPoly monomial(ParamExps exps, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Requires is_constant().
  Rational constant_value() const;

  const TermMap& terms() const { return terms_; }
  // Lex-leading term; requires !is_zero().
  const ParamExps& leading_exps() const { return terms_.rbegin()->first; }
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }

  unsigned degree_in(std::size_t var) const;
  // Number of parameter slots referenced (one past the highest used index).
  std::size_t width() const;

  Rational eval(std::span<const Rational> alpha) const;
  ParamPoly monic() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const ParamPoly& a, const ParamPoly& b) { return a.terms_ < b.terms_; }

  ParamPoly scaled(const Rational& c) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

 private:
  void add_term(const ParamExps& e, const Rational& c);
  TermMap terms_;
};

// Exact multivariate division; nullopt when b does not divide a.
std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b);

// Monic gcd (positive, unit lex-leading coefficient). gcd(0, 0) = 0.
ParamPoly param_gcd(const ParamPoly& a, const ParamPoly& b);

// Element of Q(u): num/den with gcd(num, den) = 1 and den monic under lex.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(ParamPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  // Throws DivisionByZero when den is zero.
  RatFun(ParamPoly num, ParamPoly den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::size_t width() const;

  // Throws BadSubstitution when the denominator vanishes at alpha.
  Rational eval(std::span<const Rational> alpha) const;
  Rational eval(std::span<const Rational> alpha, const std::vector<std::string>& names) const;

  RatFun inverse() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "p" when the denominator is one, "(p)/(q)" otherwise.
  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

 private:
  void normalize();
  ParamPoly num_;
  ParamPoly den_;
};

// A point alpha in Q^m.
struct SubstPoint {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  std::span<const Rational> span() const { return values; }
  std::vector<std::string> to_strings() const;
  // Comma separated rational literals, e.g. "2,-1/3".
  static SubstPoint parse(std::string_view text);
  friend bool operator==(const SubstPoint&, const SubstPoint&) = default;
};

Rational ratfun_eval(const RatFun& a, const SubstPoint& alpha);

}  // namespace smod
