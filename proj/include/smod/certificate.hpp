#pragma once

#include <set>
#include <string>
#include <vector>

#include "smod/scalars.hpp"

namespace smod {

// Product of nonzero polynomials g(u) whose joint non-vanishing at alpha
// guarantees a parametric computation specializes correctly. Factors are
// stored monic and deduplicated; constants are dropped.
class Certificate {
 public:
  void add(const ParamPoly& factor);
  void merge(const Certificate& other);

  bool is_good(const SubstPoint& alpha) const;
  // The first factor that vanishes at alpha, if any.
  const ParamPoly* vanishing_factor(const SubstPoint& alpha) const;

  const std::set<ParamPoly>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool contains(const ParamPoly& p) const { return factors_.count(p.monic()) != 0; }

  std::vector<std::string> to_strings(const std::vector<std::string>& names) const;

 private:
  std::set<ParamPoly> factors_;
};

bool cert_is_good(const Certificate& c, const SubstPoint& alpha);

// Hooks used by the algebra kernels. Over Q they do nothing.
inline void note_denominator(const Rational&, Certificate*) {}
inline void note_inverse(const Rational&, Certificate*) {}
void note_denominator(const RatFun& c, Certificate* cert);
// c is about to be inverted: its numerator must stay nonzero.
void note_inverse(const RatFun& c, Certificate* cert);

}  // namespace smod
