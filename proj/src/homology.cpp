#include "smod/homology.hpp"

#include "smod/errors.hpp"

namespace smod {

namespace {

template <class K>
FPModule<K> power(const FPModule<K>& m, std::size_t r) {
  Matrix<K> id = Matrix<K>::identity(m.ring, r);
  return FPModule<K>::present(id.kronecker(m.pres));
}

template <class K>
Matrix<K> map_or_zero(const FreeComplex<K>& f, std::size_t i) {
  // phi_i, or the zero map out of a vanishing F_i.
  if (i >= 1 && i <= f.length()) return f.maps[i - 1];
  const std::size_t rows = i >= 1 && i - 1 < f.ranks.size() ? f.ranks[i - 1] : 0;
  return Matrix<K>(f.ring, rows, 0);
}

template <class K>
std::size_t rank_at(const FreeComplex<K>& f, std::size_t i) {
  return i < f.ranks.size() ? f.ranks[i] : 0;
}

}  // namespace

template <class K>
FPModule<K> tensor_product(const FPModule<K>& l, const FPModule<K>& m) {
  require_same_ring(l.ring, m.ring);
  Matrix<K> a = l.pres.kronecker(Matrix<K>::identity(l.ring, m.gens));
  Matrix<K> b = Matrix<K>::identity(l.ring, l.gens).kronecker(m.pres);
  return FPModule<K>::present(a.hconcat(b));
}

template <class K>
FPModule<K> tor(const FPModule<K>& l, const FPModule<K>& m, std::size_t i, Certificate* cert) {
  require_same_ring(l.ring, m.ring);
  FreeComplex<K> f = partial_resolution(l, i + 1, cert);
  const std::size_t ri = rank_at(f, i);
  FPModule<K> spot = power(m, ri);
  const Matrix<K> idg = Matrix<K>::identity(m.ring, m.gens);
  std::optional<Matrix<K>> out;
  std::optional<FPModule<K>> out_target;
  if (i >= 1) {
    out = map_or_zero(f, i).kronecker(idg);
    out_target = power(m, rank_at(f, i - 1));
  }
  Matrix<K> in = map_or_zero(f, i + 1);
  if (in.rows() != ri) in = Matrix<K>(m.ring, ri, 0);
  Matrix<K> in_v0 = in.kronecker(idg);
  return homology_at(spot, out ? &*out : nullptr, out_target ? &*out_target : nullptr, &in_v0, cert);
}

template <class K>
FPModule<K> ext(const FPModule<K>& l, const FPModule<K>& m, std::size_t i, Certificate* cert) {
  require_same_ring(l.ring, m.ring);
  FreeComplex<K> f = partial_resolution(l, i + 1, cert);
  const std::size_t ri = rank_at(f, i);
  FPModule<K> spot = power(m, ri);
  const Matrix<K> idg = Matrix<K>::identity(m.ring, m.gens);
  // delta^i = phi_{i+1}^T : Hom(F_i, M) -> Hom(F_{i+1}, M).
  Matrix<K> next = map_or_zero(f, i + 1);
  if (next.rows() != ri) next = Matrix<K>(m.ring, ri, 0);
  Matrix<K> out_v0 = next.transpose().kronecker(idg);
  FPModule<K> out_target = power(m, next.cols());
  std::optional<Matrix<K>> in_v0;
  if (i >= 1) in_v0 = map_or_zero(f, i).transpose().kronecker(idg);
  return homology_at(spot, &out_v0, &out_target, in_v0 ? &*in_v0 : nullptr, cert);
}

template <class K>
int grade_on(const std::vector<Poly<K>>& ideal, const FPModule<K>& l, Certificate* cert) {
  Matrix<K> row(l.ring, 1, 0);
  for (const auto& f : ideal) {
    Matrix<K> e(l.ring, 1, 1);
    e.at(0, 0) = f;
    row = row.hconcat(e);
  }
  FPModule<K> quot = FPModule<K>::present(row);
  const std::size_t n = l.ring->nvars();
  for (std::size_t i = 0; i <= n; ++i) {
    if (!is_zero(simplify(ext(quot, l, i, cert), cert), cert)) return static_cast<int>(i);
  }
  return kInfinity;
}

template <class K>
int grade_module(const FPModule<K>& l, Certificate* cert) {
  if (is_zero(l, cert)) throw ZeroModule();
  return grade_on(annihilator(l, cert).polys(), FPModule<K>::free(l.ring, 1), cert);
}

template <class K>
int proj_dim(const FPModule<K>& l, Certificate* cert) {
  if (is_zero(l, cert)) throw ZeroModule();
  const FPModule<K> r = FPModule<K>::free(l.ring, 1);
  const std::size_t n = l.ring->nvars();
  for (std::size_t i = n + 1; i-- > 0;) {
    if (!is_zero(simplify(ext(l, r, i, cert), cert), cert)) return static_cast<int>(i);
  }
  return 0;
}

template <class K>
bool is_perfect(const FPModule<K>& l, Certificate* cert) {
  return grade_module(l, cert) == proj_dim(l, cert);
}

#define SMOD_INSTANTIATE(K)                                                                     \
  template FPModule<K> tensor_product(const FPModule<K>&, const FPModule<K>&);                  \
  template FPModule<K> tor(const FPModule<K>&, const FPModule<K>&, std::size_t, Certificate*);  \
  template FPModule<K> ext(const FPModule<K>&, const FPModule<K>&, std::size_t, Certificate*);  \
  template int grade_on(const std::vector<Poly<K>>&, const FPModule<K>&, Certificate*);         \
  template int grade_module(const FPModule<K>&, Certificate*);                                  \
  template int proj_dim(const FPModule<K>&, Certificate*);                                      \
  template bool is_perfect(const FPModule<K>&, Certificate*);

SMOD_INSTANTIATE(Rational)
SMOD_INSTANTIATE(RatFun)

#undef SMOD_INSTANTIATE

}  // namespace smod
