#include "smod/certificate.hpp"

namespace smod {

void Certificate::add(const ParamPoly& factor) {
  if (factor.is_constant()) return;
  factors_.insert(factor.monic());
}

void Certificate::merge(const Certificate& other) {
  factors_.insert(other.factors_.begin(), other.factors_.end());
}

const ParamPoly* Certificate::vanishing_factor(const SubstPoint& alpha) const {
  for (const auto& f : factors_) {
    if (f.eval(alpha.span()) == 0) return &f;
  }
  return nullptr;
}

bool Certificate::is_good(const SubstPoint& alpha) const { return vanishing_factor(alpha) == nullptr; }

std::vector<std::string> Certificate::to_strings(const std::vector<std::string>& names) const {
  std::vector<std::string> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.to_string(names));
  return out;
}

bool cert_is_good(const Certificate& c, const SubstPoint& alpha) { return c.is_good(alpha); }

void note_denominator(const RatFun& c, Certificate* cert) {
  if (cert != nullptr && !c.den().is_constant()) cert->add(c.den());
}

void note_inverse(const RatFun& c, Certificate* cert) {
  if (cert == nullptr) return;
  if (!c.num().is_constant()) cert->add(c.num());
  if (!c.den().is_constant()) cert->add(c.den());
}

}  // namespace smod
