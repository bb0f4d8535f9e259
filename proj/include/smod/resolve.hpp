#pragma once

// Free complexes, determinantal ideals, the Buchsbaum-Eisenbud exactness
// test, free resolutions and homology of complexes of presented modules.

#include <limits>
#include <string>
#include <vector>

#include "smod/fpmod.hpp"

namespace smod {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

// maps[i-1] is phi_i : F_i -> F_{i-1}, a ranks[i-1] x ranks[i] matrix.
template <class K>
struct FreeComplex {
  RingPtr ring;
  std::vector<std::size_t> ranks;
  std::vector<Matrix<K>> maps;

  std::size_t length() const { return maps.size(); }
  // Shapes chain correctly; throws Error otherwise.
  void check_shapes() const;
};

// Throws NotAComplex(i) when phi_i * phi_{i+1} is not zero.
template <class K>
void require_complex(const FreeComplex<K>& c);

struct ExactnessRow {
  std::size_t index = 0;
  std::size_t rank_f = 0;
  std::size_t rank_phi = 0;
  std::size_t rank_next = 0;
  int depth = 0;  // kInfinity for the unit ideal
  bool passed_rank = false;
  bool passed_depth = false;
};

struct ExactnessReport {
  std::vector<ExactnessRow> rows;
  bool overall = true;
  std::string to_string() const;
};

template <class K>
ReducedGB<K> determinantal_ideal(const Matrix<K>& a, std::size_t t, Certificate* cert = nullptr);

template <class K>
ExactnessReport be_exactness(const FreeComplex<K>& c, Certificate* cert = nullptr);

// phi_1 = L.pres, phi_{i+1} = syzygies(phi_i) until a kernel vanishes.
// Throws CapExceeded when more than cap maps would be needed.
template <class K>
FreeComplex<K> free_resolution(const FPModule<K>& l, std::size_t cap, Certificate* cert = nullptr);

// The first `length` maps of the resolution above (fewer if it ends sooner).
template <class K>
FreeComplex<K> partial_resolution(const FPModule<K>& l, std::size_t length,
                                  Certificate* cert = nullptr);

// maps[i-1] : objects[i] -> objects[i-1].
template <class K>
struct ModuleComplex {
  std::vector<FPModule<K>> objects;
  std::vector<ModuleMap<K>> maps;
};

template <class K>
ModuleComplex<K> as_module_complex(const FreeComplex<K>& c);

// H_i for i = 0 .. objects.size()-1. Throws NotAComplex when a composite is
// nonzero on the presented modules.
template <class K>
std::vector<FPModule<K>> complex_homology(const ModuleComplex<K>& c, Certificate* cert = nullptr);

// ker(d_out) / im(d_in) at one spot: d_out leaves the module, d_in enters it.
// Either map may be absent (treated as zero).
template <class K>
FPModule<K> homology_at(const FPModule<K>& spot, const Matrix<K>* d_out_v0,
                        const FPModule<K>* d_out_target, const Matrix<K>* d_in_v0,
                        Certificate* cert = nullptr);

}  // namespace smod
