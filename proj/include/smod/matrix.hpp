#pragma once

#include <span>
#include <string>
#include <vector>

#include "smod/polyring.hpp"

namespace smod {

// Element of a free module R^s.
template <class K>
struct VecPoly {
  RingPtr ring;
  std::vector<Poly<K>> entries;

  VecPoly() = default;
  VecPoly(RingPtr r, std::size_t s) : ring(r), entries(s, Poly<K>(r)) {}
  VecPoly(RingPtr r, std::vector<Poly<K>> e) : ring(std::move(r)), entries(std::move(e)) {}

  std::size_t size() const { return entries.size(); }
  bool is_zero() const;
  static VecPoly unit(RingPtr r, std::size_t s, std::size_t i);
  friend bool operator==(const VecPoly& a, const VecPoly& b) { return a.entries == b.entries; }
};

// Dense matrix over a polynomial ring; column j is the image of the j-th
// basis vector of the source.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static Matrix identity(RingPtr ring, std::size_t n);
  static Matrix from_columns(RingPtr ring, std::size_t rows, std::span<const VecPoly<K>> cols);
  static Matrix from_rows(RingPtr ring, std::vector<std::vector<Poly<K>>> rows, std::size_t cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly<K>& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly<K>& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  VecPoly<K> column(std::size_t j) const;
  std::vector<VecPoly<K>> columns() const;
  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Poly<K>& f) const;
  // [this | o]
  Matrix hconcat(const Matrix& o) const;
  // [this ; o]
  Matrix vconcat(const Matrix& o) const;
  Matrix block_diag(const Matrix& o) const;
  Matrix kronecker(const Matrix& o) const;
  Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix top_rows(std::size_t k) const;
  // Drops zero and repeated columns.
  Matrix compact_columns() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  // One row per line, entries separated by ", ".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly<K>> entries_;
};

extern template struct VecPoly<Rational>;
extern template struct VecPoly<RatFun>;
extern template class Matrix<Rational>;
extern template class Matrix<RatFun>;

}  // namespace smod
