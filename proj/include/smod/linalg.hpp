#pragma once

// Fraction-free elimination over polynomial rings and minor enumeration.

#include <vector>

#include "smod/certificate.hpp"
#include "smod/matrix.hpp"

namespace smod {

// Bareiss determinant of a square matrix.
template <class K>
Poly<K> determinant(const Matrix<K>& a);

// Largest t with a nonzero t x t minor. The pivots (each a minor up to sign)
// are registered in cert; the last one is the witness minor.
template <class K>
std::size_t rank_matrix(const Matrix<K>& a, Certificate* cert = nullptr);

// All nonzero t x t minors in (row subset, column subset) lexicographic order.
// The parallel version distributes subsets over OpenMP threads and returns
// exactly what minors_serial returns.
template <class K>
std::vector<Poly<K>> minors(const Matrix<K>& a, std::size_t t);
template <class K>
std::vector<Poly<K>> minors_serial(const Matrix<K>& a, std::size_t t);

// k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace smod
