#pragma once

// Tor, Ext, grade, projective dimension and perfection.

#include <vector>

#include "smod/resolve.hpp"

namespace smod {

// L (x) M presented by [P_L (x) I | I (x) P_M].
template <class K>
FPModule<K> tensor_product(const FPModule<K>& l, const FPModule<K>& m);

// H_i(F (x) M) for a free resolution F of L.
template <class K>
FPModule<K> tor(const FPModule<K>& l, const FPModule<K>& m, std::size_t i,
                Certificate* cert = nullptr);

// H^i(Hom(F, M)) for a free resolution F of L.
template <class K>
FPModule<K> ext(const FPModule<K>& l, const FPModule<K>& m, std::size_t i,
                Certificate* cert = nullptr);

// Least i <= n with Ext^i(R/I, L) != 0, or kInfinity.
template <class K>
int grade_on(const std::vector<Poly<K>>& ideal, const FPModule<K>& l, Certificate* cert = nullptr);

// Grade of Ann L on R. Throws ZeroModule.
template <class K>
int grade_module(const FPModule<K>& l, Certificate* cert = nullptr);

// Largest i <= n with Ext^i(L, R) != 0. Throws ZeroModule.
template <class K>
int proj_dim(const FPModule<K>& l, Certificate* cert = nullptr);

template <class K>
bool is_perfect(const FPModule<K>& l, Certificate* cert = nullptr);

}  // namespace smod
