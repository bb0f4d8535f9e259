#include "smod/fpmod.hpp"

#include <numeric>

#include "smod/coeff.hpp"
#include "smod/errors.hpp"
#include "smod/linalg.hpp"

namespace smod {

namespace {

template <class K>
void require_ambient(const Submodule<K>& m, const Submodule<K>& n) {
  if (m.ambient.gens != n.ambient.gens || !(m.ambient.pres == n.ambient.pres)) {
    throw AmbientMismatch();
  }
}

template <class K>
ReducedGB<K> unit_ideal(const RingPtr& ring) {
  std::vector<Poly<K>> one{Poly<K>::constant(ring, K(1))};
  return ideal_gb<K>(ring, one);
}

template <class K>
void note_matrix(const Matrix<K>& a, Certificate* cert) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (const auto& t : a.at(i, j).terms()) note_denominator(t.c, cert);
    }
  }
}

}  // namespace

template <class K>
FPModule<K> FPModule<K>::present(Matrix<K> a) {
  FPModule m;
  m.ring = a.ring();
  m.gens = a.rows();
  m.pres = std::move(a);
  return m;
}

template <class K>
FPModule<K> FPModule<K>::free(RingPtr ring, std::size_t rank) {
  return present(Matrix<K>(std::move(ring), rank, 0));
}

template <class K>
bool ModuleMap<K>::compatible() const {
  return v0 * source.pres == target.pres * v1;
}

template <class K>
bool is_zero(const FPModule<K>& l, Certificate* cert) {
  if (l.gens == 0) return true;
  if (l.pres.cols() == 0) return false;
  ReducedGB<K> gb = column_gb(l.pres, cert);
  for (std::size_t j = 0; j < l.gens; ++j) {
    if (!normal_form(VecPoly<K>::unit(l.ring, l.gens, j), gb, cert).is_zero()) return false;
  }
  return true;
}

template <class K>
FPModule<K> direct_sum(const FPModule<K>& l, const FPModule<K>& m) {
  require_same_ring(l.ring, m.ring);
  return FPModule<K>::present(l.pres.block_diag(m.pres));
}

template <class K>
ModuleMap<K> lift_map(const Matrix<K>& v0, const FPModule<K>& l, const FPModule<K>& m,
                      Certificate* cert) {
  if (v0.rows() != m.gens || v0.cols() != l.gens) throw Error("map matrix has the wrong shape");
  std::size_t failed = 0;
  auto v1 = lift(m.pres, v0 * l.pres, cert, &failed);
  if (!v1) throw NotAHomomorphism(failed);
  return ModuleMap<K>{l, m, v0, *std::move(v1)};
}

template <class K>
ModuleMap<K> compose(const ModuleMap<K>& z, const ModuleMap<K>& v) {
  if (v.target.gens != z.source.gens) throw Error("maps are not composable");
  return ModuleMap<K>{v.source, z.target, z.v0 * v.v0, z.v1 * v.v1};
}

template <class K>
Submodule<K> kernel(const ModuleMap<K>& v, Certificate* cert) {
  Matrix<K> syz = syzygies(v.v0.hconcat(v.target.pres), cert);
  return Submodule<K>{v.source, syz.top_rows(v.source.gens).compact_columns()};
}

template <class K>
Submodule<K> image(const ModuleMap<K>& v) {
  return Submodule<K>{v.target, v.v0};
}

template <class K>
FPModule<K> cokernel(const ModuleMap<K>& v) {
  return FPModule<K>::present(v.v0.hconcat(v.target.pres));
}

template <class K>
Submodule<K> sub_sum(const Submodule<K>& m, const Submodule<K>& n) {
  require_ambient(m, n);
  return Submodule<K>{m.ambient, m.gens.hconcat(n.gens)};
}

template <class K>
FPModule<K> quotient_module(const Submodule<K>& m) {
  return FPModule<K>::present(m.ambient.pres.hconcat(m.gens));
}

template <class K>
Submodule<K> sub_intersect(const Submodule<K>& m, const Submodule<K>& n, Certificate* cert) {
  require_ambient(m, n);
  // 0 -> M cap N -> L -> L/M + L/N
  const FPModule<K>& l = m.ambient;
  FPModule<K> target = direct_sum(quotient_module(m), quotient_module(n));
  Matrix<K> id = Matrix<K>::identity(l.ring, l.gens);
  Matrix<K> syz = syzygies(id.vconcat(id).hconcat(target.pres), cert);
  return Submodule<K>{l, syz.top_rows(l.gens).compact_columns()};
}

template <class K>
FPModule<K> subquotient(const Matrix<K>& gens, const Matrix<K>& b, const Matrix<K>& rel,
                        Certificate* cert) {
  const std::size_t k = gens.cols();
  if (k == 0) return FPModule<K>::free(gens.ring(), 0);
  Matrix<K> syz = syzygies(gens.hconcat(b).hconcat(rel), cert);
  return FPModule<K>::present(syz.top_rows(k).compact_columns());
}

template <class K>
FPModule<K> submodule_presentation(const Submodule<K>& m, Certificate* cert) {
  return subquotient(m.gens, Matrix<K>(m.ambient.ring, m.ambient.gens, 0), m.ambient.pres, cert);
}

template <class K>
bool sub_equal(const Submodule<K>& m, const Submodule<K>& n, Certificate* cert) {
  require_ambient(m, n);
  const Matrix<K>& rel = m.ambient.pres;
  return column_gb(m.gens.hconcat(rel), cert) == column_gb(n.gens.hconcat(rel), cert);
}

template <class K>
ReducedGB<K> annihilator(const FPModule<K>& l, Certificate* cert) {
  if (l.gens == 0) return unit_ideal<K>(l.ring);
  // Ann L is the intersection over j of (relations : e_j).
  std::optional<std::vector<Poly<K>>> acc;
  for (std::size_t j = 0; j < l.gens; ++j) {
    Matrix<K> ej = Matrix<K>::from_columns(l.ring, l.gens,
                                           std::vector{VecPoly<K>::unit(l.ring, l.gens, j)});
    Matrix<K> syz = syzygies(ej.hconcat(l.pres), cert);
    std::vector<Poly<K>> colon;
    for (std::size_t c = 0; c < syz.cols(); ++c) {
      if (!syz.at(0, c).is_zero()) colon.push_back(syz.at(0, c));
    }
    if (!acc) {
      acc = ideal_gb<K>(l.ring, colon, cert).polys();
    } else {
      acc = intersect_ideals<K>(l.ring, *acc, colon, cert).polys();
    }
    if (acc->empty()) break;
  }
  return ideal_gb<K>(l.ring, *acc, cert);
}

template <class K>
ReducedGB<K> fitting_ideal(const FPModule<K>& l, std::size_t j, Certificate* cert) {
  if (l.gens <= j) return unit_ideal<K>(l.ring);
  const std::size_t t = l.gens - j;
  if (t > l.pres.cols()) return ideal_gb<K>(l.ring, std::vector<Poly<K>>{}, cert);
  return ideal_gb<K>(l.ring, minors(l.pres, t), cert);
}

template <class K>
Submodule<K> colon_module(const FPModule<K>& l, const std::vector<Poly<K>>& ideal,
                          Certificate* cert) {
  std::vector<Poly<K>> fs;
  for (const auto& f : ideal) {
    if (!f.is_zero()) fs.push_back(f);
  }
  if (fs.empty()) return Submodule<K>{l, Matrix<K>::identity(l.ring, l.gens)};
  // Kernel of L -> L^s, e -> (f_1 e, ..., f_s e).
  Matrix<K> v0(l.ring, 0, l.gens);
  Matrix<K> rel(l.ring, 0, 0);
  const Matrix<K> id = Matrix<K>::identity(l.ring, l.gens);
  for (const auto& f : fs) {
    v0 = v0.vconcat(id.scaled(f));
    rel = rel.block_diag(l.pres);
  }
  Matrix<K> syz = syzygies(v0.hconcat(rel), cert);
  return Submodule<K>{l, syz.top_rows(l.gens).compact_columns()};
}

template <class K>
Submodule<K> product_submodule(const FPModule<K>& l, const std::vector<Poly<K>>& ideal) {
  std::vector<VecPoly<K>> cols;
  for (const auto& f : ideal) {
    for (std::size_t j = 0; j < l.gens; ++j) {
      VecPoly<K> v(l.ring, l.gens);
      v.entries[j] = f;
      cols.push_back(std::move(v));
    }
  }
  return Submodule<K>{l, Matrix<K>::from_columns(l.ring, l.gens, cols).compact_columns()};
}

template <class K>
FPModule<K> simplify(const FPModule<K>& l, Certificate* cert) {
  note_matrix(l.pres, cert);
  Matrix<K> a = l.pres.compact_columns();
  while (true) {
    std::size_t pi = a.rows();
    std::size_t pj = a.cols();
    for (std::size_t j = 0; j < a.cols() && pi == a.rows(); ++j) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.at(i, j).is_unit()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == a.rows()) break;
    const K c = a.at(pi, pj).leading().c;
    note_inverse(c, cert);
    const K inv = K(1) / c;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (k == pj || a.at(pi, k).is_zero()) continue;
      const Poly<K> factor = a.at(pi, k).scaled(inv);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!a.at(i, pj).is_zero()) a.at(i, k) -= factor * a.at(i, pj);
      }
    }
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != pi) rows.push_back(i);
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j != pj) cols.push_back(j);
    }
    a = a.submatrix(rows, cols).compact_columns();
    note_matrix(a, cert);
  }
  return FPModule<K>::present(std::move(a));
}

template <class K>
std::string Fingerprint<K>::to_string() const {
  std::string out = "zero: " + std::string(zero ? "true" : "false") + "\n";
  out += "dim: " + std::to_string(dim) + "\n";
  out += "ann:\n" + ann.to_string();
  for (std::size_t j = 0; j < fitting.size(); ++j) {
    out += "fitt " + std::to_string(j) + ":\n" + fitting[j].to_string();
  }
  return out;
}

template <class K>
Fingerprint<K> fingerprint(const FPModule<K>& l, Certificate* cert) {
  FPModule<K> s = simplify(l, cert);
  Fingerprint<K> fp;
  for (std::size_t j = 0;; ++j) {
    fp.fitting.push_back(fitting_ideal(s, j, cert));
    if (fp.fitting.back().is_unit()) break;
  }
  fp.ann = annihilator(s, cert);
  fp.dim = dim_ideal(fp.ann);
  fp.zero = s.gens == 0;
  return fp;
}

std::string describe_difference(const Fingerprint<Rational>& a, const Fingerprint<Rational>& b) {
  if (a.zero != b.zero) return std::string("zero flag ") + (a.zero ? "1" : "0") + " vs " + (b.zero ? "1" : "0");
  if (a.dim != b.dim) return "dim " + std::to_string(a.dim) + " vs " + std::to_string(b.dim);
  if (!(a.ann == b.ann)) return "annihilator differs";
  if (a.fitting.size() != b.fitting.size()) return "number of proper Fitting ideals differs";
  for (std::size_t j = 0; j < a.fitting.size(); ++j) {
    if (!(a.fitting[j] == b.fitting[j])) return "Fitting ideal " + std::to_string(j) + " differs";
  }
  return "equal";
}

#define SMOD_INSTANTIATE(K)                                                                      \
  template struct FPModule<K>;                                                                   \
  template struct ModuleMap<K>;                                                                  \
  template bool is_zero(const FPModule<K>&, Certificate*);                                       \
  template FPModule<K> direct_sum(const FPModule<K>&, const FPModule<K>&);                       \
  template ModuleMap<K> lift_map(const Matrix<K>&, const FPModule<K>&, const FPModule<K>&,       \
                                 Certificate*);                                                  \
  template ModuleMap<K> compose(const ModuleMap<K>&, const ModuleMap<K>&);                       \
  template Submodule<K> kernel(const ModuleMap<K>&, Certificate*);                               \
  template Submodule<K> image(const ModuleMap<K>&);                                              \
  template FPModule<K> cokernel(const ModuleMap<K>&);                                            \
  template Submodule<K> sub_sum(const Submodule<K>&, const Submodule<K>&);                       \
  template Submodule<K> sub_intersect(const Submodule<K>&, const Submodule<K>&, Certificate*);   \
  template FPModule<K> quotient_module(const Submodule<K>&);                                     \
  template FPModule<K> submodule_presentation(const Submodule<K>&, Certificate*);                \
  template FPModule<K> subquotient(const Matrix<K>&, const Matrix<K>&, const Matrix<K>&,         \
                                   Certificate*);                                                \
  template bool sub_equal(const Submodule<K>&, const Submodule<K>&, Certificate*);               \
  template ReducedGB<K> annihilator(const FPModule<K>&, Certificate*);                           \
  template ReducedGB<K> fitting_ideal(const FPModule<K>&, std::size_t, Certificate*);            \
  template Submodule<K> colon_module(const FPModule<K>&, const std::vector<Poly<K>>&,            \
                                     Certificate*);                                              \
  template Submodule<K> product_submodule(const FPModule<K>&, const std::vector<Poly<K>>&);      \
  template FPModule<K> simplify(const FPModule<K>&, Certificate*);                               \
  template struct Fingerprint<K>;                                                                \
  template Fingerprint<K> fingerprint(const FPModule<K>&, Certificate*);

SMOD_INSTANTIATE(Rational)
SMOD_INSTANTIATE(RatFun)

#undef SMOD_INSTANTIATE

}  // namespace smod
