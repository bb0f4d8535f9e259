#include "smod/matrix.hpp"

#include <algorithm>

#include "smod/errors.hpp"

namespace smod {

template <class K>
bool VecPoly<K>::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Poly<K>& p) { return p.is_zero(); });
}

template <class K>
VecPoly<K> VecPoly<K>::unit(RingPtr r, std::size_t s, std::size_t i) {
  VecPoly v(r, s);
  v.entries[i] = Poly<K>::constant(r, K(1));
  return v;
}

template <class K>
Matrix<K>::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly<K>(ring_)) {}

template <class K>
Matrix<K> Matrix<K>::identity(RingPtr ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly<K>::constant(ring, K(1));
  return m;
}

template <class K>
Matrix<K> Matrix<K>::from_columns(RingPtr ring, std::size_t rows,
                                  std::span<const VecPoly<K>> cols) {
  Matrix m(ring, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j].entries[i];
  }
  return m;
}

template <class K>
Matrix<K> Matrix<K>::from_rows(RingPtr ring, std::vector<std::vector<Poly<K>>> rows,
                               std::size_t cols) {
  Matrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

template <class K>
VecPoly<K> Matrix<K>::column(std::size_t j) const {
  VecPoly<K> v(ring_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.entries[i] = at(i, j);
  return v;
}

template <class K>
std::vector<VecPoly<K>> Matrix<K>::columns() const {
  std::vector<VecPoly<K>> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

template <class K>
bool Matrix<K>::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly<K>& p) { return p.is_zero(); });
}

template <class K>
Matrix<K> Matrix<K>::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

template <class K>
Matrix<K> Matrix<K>::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Matrix r(ring_ ? ring_ : o.ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly<K>& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Poly<K>& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

template <class K>
Matrix<K> Matrix<K>::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

template <class K>
Matrix<K> Matrix<K>::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

template <class K>
Matrix<K> Matrix<K>::scaled(const Poly<K>& f) const {
  Matrix r = *this;
  for (auto& e : r.entries_) e = e * f;
  return r;
}

template <class K>
Matrix<K> Matrix<K>::hconcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw Error("hconcat row mismatch");
  Matrix r(ring_ ? ring_ : o.ring_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

template <class K>
Matrix<K> Matrix<K>::vconcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw Error("vconcat column mismatch");
  Matrix r(ring_ ? ring_ : o.ring_, rows_ + o.rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i) r.at(rows_ + i, j) = o.at(i, j);
  }
  return r;
}

template <class K>
Matrix<K> Matrix<K>::block_diag(const Matrix& o) const {
  Matrix r(ring_ ? ring_ : o.ring_, rows_ + o.rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  }
  for (std::size_t i = 0; i < o.rows_; ++i) {
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
  }
  return r;
}

template <class K>
Matrix<K> Matrix<K>::kronecker(const Matrix& o) const {
  Matrix r(ring_ ? ring_ : o.ring_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Poly<K>& a = at(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k) {
        for (std::size_t l = 0; l < o.cols_; ++l) {
          const Poly<K>& b = o.at(k, l);
          if (!b.is_zero()) r.at(i * o.rows_ + k, j * o.cols_ + l) = a * b;
        }
      }
    }
  }
  return r;
}

template <class K>
Matrix<K> Matrix<K>::submatrix(std::span<const std::size_t> rows,
                               std::span<const std::size_t> cols) const {
  Matrix r(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(rows[i], cols[j]);
  }
  return r;
}

template <class K>
Matrix<K> Matrix<K>::select_columns(std::span<const std::size_t> cols) const {
  Matrix r(ring_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(i, cols[j]);
  }
  return r;
}

template <class K>
Matrix<K> Matrix<K>::top_rows(std::size_t k) const {
  Matrix r(ring_, k, cols_);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  }
  return r;
}

template <class K>
Matrix<K> Matrix<K>::compact_columns() const {
  std::vector<VecPoly<K>> keep;
  for (std::size_t j = 0; j < cols_; ++j) {
    VecPoly<K> c = column(j);
    if (c.is_zero()) continue;
    if (std::find(keep.begin(), keep.end(), c) != keep.end()) continue;
    keep.push_back(std::move(c));
  }
  return from_columns(ring_, rows_, keep);
}

template <class K>
std::string Matrix<K>::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

template struct VecPoly<Rational>;
template struct VecPoly<RatFun>;
template class Matrix<Rational>;
template class Matrix<RatFun>;

}  // namespace smod
