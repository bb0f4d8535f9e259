#pragma once

// Uniform predicates over the two coefficient fields.

#include "smod/scalars.hpp"

namespace smod {

inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const RatFun& c) { return c.is_zero(); }
inline bool coeff_is_one(const Rational& c) { return c == 1; }
inline bool coeff_is_one(const RatFun& c) { return c.is_one(); }

}  // namespace smod
