#include "smod/specialize.hpp"

#include <random>

#include "smod/errors.hpp"

namespace smod {

SubstPoint sample_alpha(std::uint64_t seed, const Certificate& cert, int bound, std::size_t m,
                        std::uint64_t stream) {
  if (bound < 1) throw Error("sampling bound must be at least 1");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  // Portable draw: the distribution objects of the standard library are not.
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  for (int draw = 0; draw < 1000; ++draw) {
    SubstPoint a;
    for (std::size_t k = 0; k < m; ++k) {
      a.values.emplace_back(static_cast<long>(rng() % span) - bound);
    }
    if (cert.is_good(a)) return a;
  }
  throw ExhaustedSampling();
}

void note_denominators(const Poly<RatFun>& f, Certificate* cert) {
  for (const auto& t : f.terms()) note_denominator(t.c, cert);
}

void note_denominators(const Matrix<RatFun>& a, Certificate* cert) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) note_denominators(a.at(i, j), cert);
  }
}

void note_denominators(const std::vector<Poly<RatFun>>& fs, Certificate* cert) {
  for (const auto& f : fs) note_denominators(f, cert);
}

Poly<Rational> subst(const Poly<RatFun>& f, const SubstPoint& alpha, Certificate* cert) {
  RingPtr target = f.ring()->specialized();
  std::vector<Term<Rational>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    note_denominator(t.c, cert);
    terms.push_back({t.m, t.c.eval(alpha.span(), f.ring()->params())});
  }
  return Poly<Rational>::from_terms(target, std::move(terms));
}

VecPoly<Rational> subst(const VecPoly<RatFun>& v, const SubstPoint& alpha, Certificate* cert) {
  VecPoly<Rational> out;
  out.ring = v.ring ? v.ring->specialized() : nullptr;
  for (const auto& e : v.entries) out.entries.push_back(subst(e, alpha, cert));
  return out;
}

Matrix<Rational> subst(const Matrix<RatFun>& a, const SubstPoint& alpha, Certificate* cert) {
  Matrix<Rational> out(a.ring()->specialized(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      try {
        out.at(i, j) = subst(a.at(i, j), alpha, cert);
      } catch (const BadSubstitution& e) {
        throw BadSubstitution(e.denominator(),
                              "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  return out;
}

std::vector<Poly<Rational>> subst(const std::vector<Poly<RatFun>>& fs, const SubstPoint& alpha,
                                  Certificate* cert) {
  std::vector<Poly<Rational>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(subst(f, alpha, cert));
  return out;
}

FPModule<Rational> specialize_module(const FPModule<RatFun>& l, const SubstPoint& alpha,
                                     Certificate* cert) {
  return FPModule<Rational>::present(subst(l.pres, alpha, cert));
}

Submodule<Rational> specialize_submodule(const Submodule<RatFun>& s, const SubstPoint& alpha,
                                         Certificate* cert) {
  return Submodule<Rational>{specialize_module(s.ambient, alpha, cert), subst(s.gens, alpha, cert)};
}

ModuleMap<Rational> specialize_map(const ModuleMap<RatFun>& v, const SubstPoint& alpha,
                                   Certificate* cert) {
  ModuleMap<Rational> out{specialize_module(v.source, alpha, cert),
                          specialize_module(v.target, alpha, cert), subst(v.v0, alpha, cert),
                          subst(v.v1, alpha, cert)};
  if (!out.compatible()) throw CompatibilityLost();
  return out;
}

ReducedGB<Rational> specialize_ideal(const std::vector<Poly<RatFun>>& gens,
                                     const SubstPoint& alpha, Certificate* cert) {
  if (!gens.empty()) ideal_gb<RatFun>(gens.front().ring(), gens, cert);
  RingPtr target = gens.empty() ? nullptr : gens.front().ring()->specialized();
  return ideal_gb<Rational>(target, subst(gens, alpha, cert));
}

ReducedGB<Rational> specialize_gb(const ReducedGB<RatFun>& gb, const SubstPoint& alpha,
                                  Certificate* cert) {
  RingPtr target = gb.ring()->specialized();
  if (gb.rank() == 1) return ideal_gb<Rational>(target, subst(gb.polys(), alpha, cert));
  std::vector<VecPoly<Rational>> gens;
  for (const auto& v : gb.generators()) gens.push_back(subst(v, alpha, cert));
  return buchberger<Rational>(target, gb.rank(), gens);
}

FreeComplex<Rational> specialize_complex(const FreeComplex<RatFun>& c, const SubstPoint& alpha,
                                         Certificate* cert) {
  FreeComplex<Rational> out;
  out.ring = c.ring->specialized();
  out.ranks = c.ranks;
  for (const auto& m : c.maps) out.maps.push_back(subst(m, alpha, cert));
  require_complex(out);
  return out;
}

}  // namespace smod
