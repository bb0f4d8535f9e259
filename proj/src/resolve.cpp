#include "smod/resolve.hpp"

#include "smod/errors.hpp"
#include "smod/linalg.hpp"

namespace smod {

template <class K>
void FreeComplex<K>::check_shapes() const {
  if (ranks.size() != maps.size() + 1) throw Error("complex needs one more rank than maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].rows() != ranks[i] || maps[i].cols() != ranks[i + 1]) {
      throw Error("map " + std::to_string(i + 1) + " has the wrong shape");
    }
  }
}

template <class K>
void require_complex(const FreeComplex<K>& c) {
  c.check_shapes();
  for (std::size_t i = 0; i + 1 < c.maps.size(); ++i) {
    if (!(c.maps[i] * c.maps[i + 1]).is_zero()) throw NotAComplex(i + 1);
  }
}

std::string ExactnessReport::to_string() const {
  std::string out;
  auto depth_text = [](int d) { return d == kInfinity ? std::string("inf") : std::to_string(d); };
  for (const auto& r : rows) {
    out += "i=" + std::to_string(r.index) + " rank F=" + std::to_string(r.rank_f) +
           " rank phi=" + std::to_string(r.rank_phi) + " rank next=" + std::to_string(r.rank_next) +
           " depth=" + depth_text(r.depth) + " rank " + (r.passed_rank ? "ok" : "FAIL") +
           " depth " + (r.passed_depth ? "ok" : "FAIL") + "\n";
  }
  out += std::string("exact: ") + (overall ? "yes" : "no") + "\n";
  return out;
}

template <class K>
ReducedGB<K> determinantal_ideal(const Matrix<K>& a, std::size_t t, Certificate* cert) {
  return ideal_gb<K>(a.ring(), minors(a, t), cert);
}

template <class K>
ExactnessReport be_exactness(const FreeComplex<K>& c, Certificate* cert) {
  require_complex(c);
  ExactnessReport rep;
  const std::size_t len = c.length();
  std::vector<std::size_t> ranks(len + 2, 0);
  for (std::size_t i = 1; i <= len; ++i) ranks[i] = rank_matrix(c.maps[i - 1], cert);
  for (std::size_t i = 1; i <= len; ++i) {
    ExactnessRow row;
    row.index = i;
    row.rank_f = c.ranks[i];
    row.rank_phi = ranks[i];
    row.rank_next = ranks[i + 1];
    row.passed_rank = row.rank_f == row.rank_phi + row.rank_next;
    ReducedGB<K> ideal = determinantal_ideal(c.maps[i - 1], ranks[i], cert);
    row.depth = ideal.is_unit() ? kInfinity : height_ideal(ideal);
    row.passed_depth = row.depth >= static_cast<int>(i);
    rep.overall = rep.overall && row.passed_rank && row.passed_depth;
    rep.rows.push_back(row);
  }
  return rep;
}

template <class K>
FreeComplex<K> partial_resolution(const FPModule<K>& l, std::size_t length, Certificate* cert) {
  FreeComplex<K> c;
  c.ring = l.ring;
  c.ranks.push_back(l.gens);
  Matrix<K> phi = l.pres;
  while (c.maps.size() < length && phi.cols() > 0) {
    c.maps.push_back(phi);
    c.ranks.push_back(phi.cols());
    phi = syzygies(phi, cert);
  }
  return c;
}

template <class K>
FreeComplex<K> free_resolution(const FPModule<K>& l, std::size_t cap, Certificate* cert) {
  FreeComplex<K> c = partial_resolution(l, cap, cert);
  if (c.length() == cap && cap > 0 && syzygies(c.maps.back(), cert).cols() > 0) {
    throw CapExceeded(cap);
  }
  return c;
}

template <class K>
ModuleComplex<K> as_module_complex(const FreeComplex<K>& c) {
  c.check_shapes();
  ModuleComplex<K> m;
  for (std::size_t r : c.ranks) m.objects.push_back(FPModule<K>::free(c.ring, r));
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    m.maps.push_back(ModuleMap<K>{m.objects[i + 1], m.objects[i], c.maps[i],
                                  Matrix<K>(c.ring, 0, 0)});
  }
  return m;
}

template <class K>
FPModule<K> homology_at(const FPModule<K>& spot, const Matrix<K>* d_out_v0,
                        const FPModule<K>* d_out_target, const Matrix<K>* d_in_v0,
                        Certificate* cert) {
  const RingPtr& ring = spot.ring;
  Matrix<K> cycles = Matrix<K>::identity(ring, spot.gens);
  if (d_out_v0 != nullptr && !d_out_v0->is_zero()) {
    ModuleMap<K> d{spot, *d_out_target, *d_out_v0, Matrix<K>(ring, 0, 0)};
    cycles = kernel(d, cert).gens;
  }
  Matrix<K> bounds = d_in_v0 != nullptr ? *d_in_v0 : Matrix<K>(ring, spot.gens, 0);
  return subquotient(cycles, bounds, spot.pres, cert);
}

template <class K>
std::vector<FPModule<K>> complex_homology(const ModuleComplex<K>& c, Certificate* cert) {
  const std::size_t n = c.objects.size();
  if (c.maps.size() + 1 != n) throw Error("module complex needs one more object than maps");
  for (std::size_t i = 0; i + 1 < c.maps.size(); ++i) {
    const ModuleMap<K>& out = c.maps[i];
    const ModuleMap<K>& in = c.maps[i + 1];
    Matrix<K> comp = out.v0 * in.v0;
    if (comp.is_zero()) continue;
    if (!lift(out.target.pres, comp, cert).has_value()) throw NotAComplex(i + 1);
  }
  std::vector<FPModule<K>> h;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix<K>* out_v0 = i > 0 ? &c.maps[i - 1].v0 : nullptr;
    const FPModule<K>* out_t = i > 0 ? &c.objects[i - 1] : nullptr;
    const Matrix<K>* in_v0 = i < c.maps.size() ? &c.maps[i].v0 : nullptr;
    h.push_back(homology_at(c.objects[i], out_v0, out_t, in_v0, cert));
  }
  return h;
}

#define SMOD_INSTANTIATE(K)                                                                       \
  template struct FreeComplex<K>;                                                                 \
  template void require_complex(const FreeComplex<K>&);                                           \
  template ReducedGB<K> determinantal_ideal(const Matrix<K>&, std::size_t, Certificate*);         \
  template ExactnessReport be_exactness(const FreeComplex<K>&, Certificate*);                     \
  template FreeComplex<K> free_resolution(const FPModule<K>&, std::size_t, Certificate*);         \
  template FreeComplex<K> partial_resolution(const FPModule<K>&, std::size_t, Certificate*);      \
  template ModuleComplex<K> as_module_complex(const FreeComplex<K>&);                             \
  template FPModule<K> homology_at(const FPModule<K>&, const Matrix<K>*, const FPModule<K>*,      \
                                   const Matrix<K>*, Certificate*);                               \
  template std::vector<FPModule<K>> complex_homology(const ModuleComplex<K>&, Certificate*);

SMOD_INSTANTIATE(Rational)
SMOD_INSTANTIATE(RatFun)

#undef SMOD_INSTANTIATE

}  // namespace smod
