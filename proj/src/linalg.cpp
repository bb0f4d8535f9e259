#include "smod/linalg.hpp"

#include <utility>

#include "smod/errors.hpp"

namespace smod {

namespace {

template <class K>
using Grid = std::vector<std::vector<Poly<K>>>;

template <class K>
Grid<K> to_grid(const Matrix<K>& a) {
  Grid<K> g(a.rows(), std::vector<Poly<K>>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) g[i][j] = a.at(i, j);
  }
  return g;
}

template <class K>
bool cheaper(const Poly<K>& a, const Poly<K>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.total_degree() < b.total_degree();
}

// One Bareiss step on rows/cols > k: m[i][j] = (p*m[i][j] - m[i][k]*m[k][j]) / prev.
template <class K>
void bareiss_step(Grid<K>& m, std::size_t k, const Poly<K>& prev) {
  const Poly<K>& p = m[k][k];
  for (std::size_t i = k + 1; i < m.size(); ++i) {
    for (std::size_t j = k + 1; j < m[i].size(); ++j) {
      Poly<K> num = p * m[i][j] - m[i][k] * m[k][j];
      if (prev.is_unit() && prev.leading().c == K(1)) {
        m[i][j] = std::move(num);
      } else {
        auto q = divide_exact(num, prev);
        if (!q) throw Error("internal: inexact Bareiss division");
        m[i][j] = *std::move(q);
      }
    }
    m[i][k] = Poly<K>(p.ring());
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

template <class K>
Poly<K> determinant(const Matrix<K>& a) {
  if (a.rows() != a.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  const RingPtr& ring = a.ring();
  if (n == 0) return Poly<K>::constant(ring, K(1));
  Grid<K> m = to_grid(a);
  bool negate = false;
  Poly<K> prev = Poly<K>::constant(ring, K(1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!m[i][k].is_zero() && (p == n || cheaper(m[i][k], m[p][k]))) p = i;
    }
    if (p == n) return Poly<K>(ring);
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    bareiss_step(m, k, prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

template <class K>
std::size_t rank_matrix(const Matrix<K>& a, Certificate* cert) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (const auto& t : a.at(i, j).terms()) note_denominator(t.c, cert);
    }
  }
  Grid<K> m = to_grid(a);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Poly<K> prev = Poly<K>::constant(a.ring(), K(1));
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    std::size_t pi = rows;
    std::size_t pj = cols;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (m[i][j].is_zero()) continue;
        if (pi == rows || cheaper(m[i][j], m[pi][pj])) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    std::swap(m[pi], m[k]);
    if (pj != k) {
      for (auto& row : m) std::swap(row[pj], row[k]);
    }
    note_inverse(m[k][k].leading().c, cert);
    bareiss_step(m, k, prev);
    prev = m[k][k];
  }
  return k;
}

template <class K>
std::vector<Poly<K>> minors_serial(const Matrix<K>& a, std::size_t t) {
  std::vector<Poly<K>> out;
  if (t == 0) return {Poly<K>::constant(a.ring(), K(1))};
  auto rs = subsets(a.rows(), t);
  auto cs = subsets(a.cols(), t);
  for (const auto& r : rs) {
    for (const auto& c : cs) {
      Poly<K> d = determinant(a.submatrix(r, c));
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

template <class K>
std::vector<Poly<K>> minors(const Matrix<K>& a, std::size_t t) {
  if (t == 0) return {Poly<K>::constant(a.ring(), K(1))};
  auto rs = subsets(a.rows(), t);
  auto cs = subsets(a.cols(), t);
  const long total = static_cast<long>(rs.size() * cs.size());
  std::vector<Poly<K>> all(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic) if (total > 8)
  for (long idx = 0; idx < total; ++idx) {
    const auto u = static_cast<std::size_t>(idx);
    all[u] = determinant(a.submatrix(rs[u / cs.size()], cs[u % cs.size()]));
  }
  std::vector<Poly<K>> out;
  for (auto& d : all) {
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return out;
}

#define SMOD_INSTANTIATE(K)                                                     \
  template Poly<K> determinant(const Matrix<K>&);                               \
  template std::size_t rank_matrix(const Matrix<K>&, Certificate*);             \
  template std::vector<Poly<K>> minors(const Matrix<K>&, std::size_t);          \
  template std::vector<Poly<K>> minors_serial(const Matrix<K>&, std::size_t);

SMOD_INSTANTIATE(Rational)
SMOD_INSTANTIATE(RatFun)

#undef SMOD_INSTANTIATE

}  // namespace smod
