#pragma once

// Sparse multivariate polynomials in x1..xn over Q (Rational) or Q(u)
// (RatFun). Both instantiations share every algorithm downstream.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smod/scalars.hpp"

namespace smod {

inline constexpr std::size_t kMaxVars = 10;

enum class TermOrder { grevlex, lex, block };
enum class CoeffMode { rational, ratfun };

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Descriptor of k(u)[x] or k[x]: names, term order, coefficient mode.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr make(std::vector<std::string> params, std::vector<std::string> vars,
                      TermOrder order = TermOrder::grevlex, std::size_t elim_count = 0,
                      CoeffMode mode = CoeffMode::rational, std::string name = "R");

  const std::string& name() const { return name_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t nparams() const { return params_.size(); }
  TermOrder order() const { return order_; }
  std::size_t elim_count() const { return elim_count_; }
  CoeffMode mode() const { return mode_; }

  // Negative, zero or positive as a is below, equal to or above b.
  int compare(const Monomial& a, const Monomial& b) const;

  // The ring k[x] receiving substitutions u -> alpha. Identity for rational rings.
  RingPtr specialized() const;
  // Same names and mode, different order.
  RingPtr with_order(TermOrder order, std::size_t elim_count = 0) const;
  // Prepends one variable and switches to a block order eliminating it.
  RingPtr with_leading_var(const std::string& var) const;

  // Structural equality (names, order, mode).
  bool same_as(const Ring& other) const;
  std::string describe() const;

 private:
  Ring() = default;
  std::string name_;
  std::vector<std::string> params_;
  std::vector<std::string> vars_;
  TermOrder order_ = TermOrder::grevlex;
  std::size_t elim_count_ = 0;
  CoeffMode mode_ = CoeffMode::rational;
  RingPtr specialized_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b);

int monomial_cmp(TermOrder order, std::size_t elim_count, const Monomial& a, const Monomial& b);

template <class K>
struct Term {
  Monomial m;
  K c;
};

template <class K>
class Poly {
 public:
  using Coeff = K;

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const K& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Monomial& m, const K& c);
  // Terms in any order; like terms are combined and zeros dropped.
  static Poly from_terms(RingPtr ring, std::vector<Term<K>> terms);
  // Terms already strictly descending with nonzero coefficients.
  static Poly from_sorted(RingPtr ring, std::vector<Term<K>> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Constant in x (possibly zero).
  bool is_constant() const;
  // x-free and nonzero: a unit of the ring.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].m.is_one(); }
  const Term<K>& leading() const { return terms_.front(); }
  unsigned total_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { return a.mul(b); }
  Poly mul(const Poly& o) const;
  Poly scaled(const K& c) const;
  Poly mul_term(const Monomial& m, const K& c) const;
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_.size() == b.terms_.size() && a.equal_terms(b);
  }

  // Same polynomial in another ring with identical variables (reorders terms).
  Poly in_ring(RingPtr ring) const;

  std::string to_string() const;

 private:
  bool equal_terms(const Poly& o) const;
  RingPtr ring_;
  std::vector<Term<K>> terms_;
};

// Exact division f / g; nullopt if g does not divide f.
template <class K>
std::optional<Poly<K>> divide_exact(const Poly<K>& f, const Poly<K>& g);

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      divisors must be x-free
//   factor := atom ['^' int]
//   atom   := int | name | '(' expr ')'
// Parameter names are accepted only in ratfun mode.
template <class K>
Poly<K> parse_poly(std::string_view text, const RingPtr& ring);

RatFun parse_ratfun(std::string_view text, const std::vector<std::string>& param_names);

// Coefficient printing shared by polynomials and matrices.
std::string coeff_to_string(const Rational& c, const Ring& ring);
std::string coeff_to_string(const RatFun& c, const Ring& ring);

extern template class Poly<Rational>;
extern template class Poly<RatFun>;

}  // namespace smod
