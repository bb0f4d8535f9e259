#pragma once

// The substitution u -> alpha on scalars, polynomials, matrices, modules,
// maps, ideals and complexes. Every substitution re-checks the structure it
// promises to preserve instead of trusting the certificate.

#include <cstdint>
#include <vector>

#include "smod/resolve.hpp"

namespace smod {

// Uniform integer coordinates in [-bound, bound] until cert is good at the
// draw. Deterministic in (seed, stream). Throws ExhaustedSampling after 1000
// draws.
SubstPoint sample_alpha(std::uint64_t seed, const Certificate& cert, int bound, std::size_t m,
                        std::uint64_t stream = 0);

// Registers every coefficient denominator without substituting.
void note_denominators(const Poly<RatFun>& f, Certificate* cert);
void note_denominators(const Matrix<RatFun>& a, Certificate* cert);
void note_denominators(const std::vector<Poly<RatFun>>& fs, Certificate* cert);

// Registers every coefficient denominator in cert, then evaluates.
Poly<Rational> subst(const Poly<RatFun>& f, const SubstPoint& alpha, Certificate* cert = nullptr);
VecPoly<Rational> subst(const VecPoly<RatFun>& v, const SubstPoint& alpha,
                        Certificate* cert = nullptr);
Matrix<Rational> subst(const Matrix<RatFun>& a, const SubstPoint& alpha,
                       Certificate* cert = nullptr);
std::vector<Poly<Rational>> subst(const std::vector<Poly<RatFun>>& fs, const SubstPoint& alpha,
                                  Certificate* cert = nullptr);

FPModule<Rational> specialize_module(const FPModule<RatFun>& l, const SubstPoint& alpha,
                                     Certificate* cert = nullptr);
Submodule<Rational> specialize_submodule(const Submodule<RatFun>& s, const SubstPoint& alpha,
                                         Certificate* cert = nullptr);

// Throws CompatibilityLost when v0_a * P_a != Q_a * v1_a.
ModuleMap<Rational> specialize_map(const ModuleMap<RatFun>& v, const SubstPoint& alpha,
                                   Certificate* cert = nullptr);

// Reduced GB over Q of the substituted generators. The parametric GB run is
// recorded into cert.
ReducedGB<Rational> specialize_ideal(const std::vector<Poly<RatFun>>& gens,
                                     const SubstPoint& alpha, Certificate* cert = nullptr);

// Substitutes the elements of an already computed basis and recomputes the
// reduced basis over Q.
ReducedGB<Rational> specialize_gb(const ReducedGB<RatFun>& gb, const SubstPoint& alpha,
                                  Certificate* cert = nullptr);

// Throws NotAComplex when a substituted composite is nonzero.
FreeComplex<Rational> specialize_complex(const FreeComplex<RatFun>& c, const SubstPoint& alpha,
                                         Certificate* cert = nullptr);

}  // namespace smod
