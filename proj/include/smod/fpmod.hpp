#pragma once

// Finitely presented modules coker(F1 -> F0), maps between them and the
// submodule calculus. Relations are the columns of the presentation.

#include <string>
#include <vector>

#include "smod/groebner.hpp"

namespace smod {

template <class K>
struct FPModule {
  RingPtr ring;
  std::size_t gens = 0;
  Matrix<K> pres;  // gens x relations

  static FPModule present(Matrix<K> a);
  static FPModule free(RingPtr ring, std::size_t rank);
};

// v0 maps generators, v1 maps relations: v0 * source.pres = target.pres * v1.
template <class K>
struct ModuleMap {
  FPModule<K> source;
  FPModule<K> target;
  Matrix<K> v0;
  Matrix<K> v1;

  bool compatible() const;
};

// Generators are the columns of gens, in F0 coordinates of the ambient module.
template <class K>
struct Submodule {
  FPModule<K> ambient;
  Matrix<K> gens;
};

template <class K>
bool is_zero(const FPModule<K>& l, Certificate* cert = nullptr);

template <class K>
FPModule<K> direct_sum(const FPModule<K>& l, const FPModule<K>& m);

// Throws NotAHomomorphism when v0 does not carry relations to relations.
template <class K>
ModuleMap<K> lift_map(const Matrix<K>& v0, const FPModule<K>& l, const FPModule<K>& m,
                      Certificate* cert = nullptr);

// z after v.
template <class K>
ModuleMap<K> compose(const ModuleMap<K>& z, const ModuleMap<K>& v);

template <class K>
Submodule<K> kernel(const ModuleMap<K>& v, Certificate* cert = nullptr);
template <class K>
Submodule<K> image(const ModuleMap<K>& v);
template <class K>
FPModule<K> cokernel(const ModuleMap<K>& v);

template <class K>
Submodule<K> sub_sum(const Submodule<K>& m, const Submodule<K>& n);
template <class K>
Submodule<K> sub_intersect(const Submodule<K>& m, const Submodule<K>& n, Certificate* cert = nullptr);
// L/M.
template <class K>
FPModule<K> quotient_module(const Submodule<K>& m);

// The submodule as a module in its own right.
template <class K>
FPModule<K> submodule_presentation(const Submodule<K>& m, Certificate* cert = nullptr);

// (gens + span(b, rel)) / span(b, rel) for column matrices in a common F0.
template <class K>
FPModule<K> subquotient(const Matrix<K>& gens, const Matrix<K>& b, const Matrix<K>& rel,
                        Certificate* cert = nullptr);

// Same submodule of the ambient module (exact, via Groebner bases).
template <class K>
bool sub_equal(const Submodule<K>& m, const Submodule<K>& n, Certificate* cert = nullptr);

template <class K>
ReducedGB<K> annihilator(const FPModule<K>& l, Certificate* cert = nullptr);

template <class K>
ReducedGB<K> fitting_ideal(const FPModule<K>& l, std::size_t j, Certificate* cert = nullptr);

// 0_L : I, as a submodule of L.
template <class K>
Submodule<K> colon_module(const FPModule<K>& l, const std::vector<Poly<K>>& ideal,
                          Certificate* cert = nullptr);
// I L.
template <class K>
Submodule<K> product_submodule(const FPModule<K>& l, const std::vector<Poly<K>>& ideal);

// An isomorphic module with unit relations eliminated and zero or repeated
// relations dropped.
template <class K>
FPModule<K> simplify(const FPModule<K>& l, Certificate* cert = nullptr);

template <class K>
struct Fingerprint {
  // Fitt_0, Fitt_1, ... up to and including the first unit ideal.
  std::vector<ReducedGB<K>> fitting;
  ReducedGB<K> ann;
  int dim = -1;
  bool zero = false;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.zero == b.zero && a.dim == b.dim && a.ann == b.ann && a.fitting == b.fitting;
  }
  std::string to_string() const;
};

template <class K>
Fingerprint<K> fingerprint(const FPModule<K>& l, Certificate* cert = nullptr);

std::string describe_difference(const Fingerprint<Rational>& a, const Fingerprint<Rational>& b);

}  // namespace smod
