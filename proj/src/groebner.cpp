#include "smod/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "smod/coeff.hpp"
#include "smod/errors.hpp"

namespace smod {

namespace {

template <class K>
class Engine {
 public:
  Engine(const Ring& ring, ModuleOrder order, bool ideal_case, Certificate* cert)
      : ring_(ring), order_(order), ideal_case_(ideal_case), cert_(cert) {}

  int cmp(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const {
    const bool ae = ac < order_.elim_components;
    const bool be = bc < order_.elim_components;
    if (ae != be) return ae ? 1 : -1;
    if (order_.rule == PositionRule::term_over_position) {
      int c = ring_.compare(am, bm);
      if (c != 0) return c;
      return ac == bc ? 0 : (ac < bc ? 1 : -1);
    }
    if (ac != bc) return ac < bc ? 1 : -1;
    return ring_.compare(am, bm);
  }
  int cmp(const MTerm<K>& a, const MTerm<K>& b) const { return cmp(a.m, a.comp, b.m, b.comp); }

  MPoly<K> from_vec(const VecPoly<K>& v) const {
    MPoly<K> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (const auto& t : v.entries[i].terms()) {
        out.push_back({t.m, static_cast<std::uint32_t>(i), t.c});
      }
    }
    std::sort(out.begin(), out.end(), [&](const MTerm<K>& a, const MTerm<K>& b) { return cmp(a, b) > 0; });
    return out;
  }

  // p[from+1..] - c*m*g[1..]; the heads p[from] and c*m*g[0] cancel.
  MPoly<K> sub_tail(const MPoly<K>& p, std::size_t from, const K& c, const Monomial& m,
                    const MPoly<K>& g) const {
    MPoly<K> out;
    out.reserve(p.size() - from + g.size());
    std::size_t i = from + 1;
    std::size_t j = 1;
    while (i < p.size() && j < g.size()) {
      const Monomial gm = g[j].m * m;
      int s = cmp(p[i].m, p[i].comp, gm, g[j].comp);
      if (s > 0) {
        out.push_back(p[i++]);
      } else if (s < 0) {
        out.push_back({gm, g[j].comp, -(c * g[j].c)});
        ++j;
      } else {
        K v = p[i].c - c * g[j].c;
        if (!coeff_is_zero(v)) out.push_back({gm, g[j].comp, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < p.size(); ++i) out.push_back(p[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].m * m, g[j].comp, -(c * g[j].c)});
    return out;
  }

  const MPoly<K>* find_reducer(const MTerm<K>& t, const std::vector<const MPoly<K>*>& basis) const {
    for (const MPoly<K>* g : basis) {
      const MTerm<K>& h = g->front();
      if (h.comp == t.comp && h.m.divides(t.m)) return g;
    }
    return nullptr;
  }

  // Full reduction against monic basis elements.
  MPoly<K> reduce(MPoly<K> p, const std::vector<const MPoly<K>*>& basis) const {
    MPoly<K> result;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const MPoly<K>* g = find_reducer(p[pos], basis);
      if (g == nullptr) {
        result.push_back(std::move(p[pos]));
        ++pos;
        continue;
      }
      const K c = p[pos].c;
      note_denominator(c, cert_);
      const Monomial m = p[pos].m / g->front().m;
      p = sub_tail(p, pos, c, m, *g);
      pos = 0;
    }
    return result;
  }

  void make_monic(MPoly<K>& p) const {
    if (p.empty()) return;
    for (const auto& t : p) note_denominator(t.c, cert_);
    if (coeff_is_one(p.front().c)) return;
    note_inverse(p.front().c, cert_);
    const K inv = K(1) / p.front().c;
    for (auto& t : p) t.c *= inv;
    for (const auto& t : p) note_denominator(t.c, cert_);
  }

  MPoly<K> spoly(const MPoly<K>& f, const MPoly<K>& g) const {
    const Monomial l = lcm(f.front().m, g.front().m);
    const Monomial mf = l / f.front().m;
    MPoly<K> p = f;
    for (auto& t : p) t.m = t.m * mf;
    return sub_tail(p, 0, K(1), l / g.front().m, g);
  }

  std::vector<MPoly<K>> run(std::vector<MPoly<K>> input) {
    for (auto& f : input) {
      std::vector<const MPoly<K>*> basis = active_basis();
      MPoly<K> h = reduce(std::move(f), basis);
      if (h.empty()) continue;
      make_monic(h);
      update(std::move(h));
    }
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
        int c = cmp(it->lcm, it->comp, best->lcm, best->comp);
        if (c < 0 || (c == 0 && std::pair(it->j, it->i) < std::pair(best->j, best->i))) best = it;
      }
      Pair pr = *best;
      pairs_.erase(best);
      MPoly<K> s = spoly(polys_[pr.i], polys_[pr.j]);
      MPoly<K> h = reduce(std::move(s), active_basis());
      if (h.empty()) continue;
      make_monic(h);
      update(std::move(h));
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint32_t comp;
  };

  std::vector<const MPoly<K>*> active_basis() const {
    std::vector<const MPoly<K>*> out;
    out.reserve(active_.size());
    for (std::size_t k : active_) out.push_back(&polys_[k]);
    return out;
  }

  bool disjoint(std::size_t a, std::size_t b) const {
    return ideal_case_ && polys_[a].front().m.coprime(polys_[b].front().m);
  }

  Monomial pair_lcm(std::size_t a, std::size_t b) const {
    return lcm(polys_[a].front().m, polys_[b].front().m);
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(MPoly<K> h_poly) {
    polys_.push_back(std::move(h_poly));
    const std::size_t h = polys_.size() - 1;
    const std::uint32_t hc = polys_[h].front().comp;
    const Monomial& hm = polys_[h].front().m;

    std::vector<std::size_t> c_set;
    for (std::size_t g : active_) {
      if (polys_[g].front().comp == hc) c_set.push_back(g);
    }
    std::vector<std::size_t> d_set;
    for (std::size_t idx = 0; idx < c_set.size(); ++idx) {
      const std::size_t g1 = c_set[idx];
      const Monomial l1 = pair_lcm(h, g1);
      bool keep = disjoint(h, g1);
      if (!keep) {
        keep = true;
        for (std::size_t k = idx + 1; k < c_set.size() && keep; ++k) {
          if (pair_lcm(h, c_set[k]).divides(l1)) keep = false;
        }
        for (std::size_t g2 : d_set) {
          if (!keep) break;
          if (pair_lcm(h, g2).divides(l1)) keep = false;
        }
      }
      if (keep) d_set.push_back(g1);
    }

    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      if (p.comp != hc || !hm.divides(p.lcm) || pair_lcm(p.i, h) == p.lcm ||
          pair_lcm(h, p.j) == p.lcm) {
        next.push_back(p);
      }
    }
    for (std::size_t g : d_set) {
      if (!disjoint(h, g)) next.push_back({g, h, pair_lcm(g, h), hc});
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> still;
    for (std::size_t g : active_) {
      const MTerm<K>& lt = polys_[g].front();
      if (!(lt.comp == hc && hm.divides(lt.m))) still.push_back(g);
    }
    still.push_back(h);
    active_ = std::move(still);
  }

  std::vector<MPoly<K>> finish() {
    std::vector<const MPoly<K>*> basis = active_basis();
    std::vector<MPoly<K>> out;
    out.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const MPoly<K>*> others;
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (l != k) others.push_back(basis[l]);
      }
      MPoly<K> tail(basis[k]->begin() + 1, basis[k]->end());
      MPoly<K> red = reduce(std::move(tail), others);
      MPoly<K> full;
      full.reserve(red.size() + 1);
      full.push_back(basis[k]->front());
      for (auto& t : red) full.push_back(std::move(t));
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [&](const MPoly<K>& a, const MPoly<K>& b) {
      return cmp(a.front(), b.front()) > 0;
    });
    return out;
  }

  const Ring& ring_;
  ModuleOrder order_;
  bool ideal_case_;
  Certificate* cert_;
  std::vector<MPoly<K>> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

template <class K>
std::vector<VecPoly<K>> to_vectors(const RingPtr& ring, std::size_t rank,
                                   const std::vector<MPoly<K>>& elems) {
  std::vector<VecPoly<K>> out;
  out.reserve(elems.size());
  for (const auto& e : elems) {
    std::vector<std::vector<Term<K>>> parts(rank);
    for (const auto& t : e) parts[t.comp].push_back({t.m, t.c});
    VecPoly<K> v(ring, rank);
    for (std::size_t i = 0; i < rank; ++i) {
      v.entries[i] = Poly<K>::from_sorted(ring, std::move(parts[i]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

template <class K>
bool ReducedGB<K>::is_unit() const {
  return rank_ == 1 && elems_.size() == 1 && elems_[0].size() == 1 && elems_[0][0].m.is_one();
}

template <class K>
std::vector<VecPoly<K>> ReducedGB<K>::generators() const {
  return to_vectors(ring_, rank_, elems_);
}

template <class K>
std::vector<Poly<K>> ReducedGB<K>::polys() const {
  if (rank_ != 1) throw Error("polys() requires a rank-one basis");
  std::vector<Poly<K>> out;
  for (auto& v : generators()) out.push_back(std::move(v.entries[0]));
  return out;
}

template <class K>
Matrix<K> ReducedGB<K>::matrix() const {
  auto gens = generators();
  return Matrix<K>::from_columns(ring_, rank_, gens);
}

template <class K>
bool ReducedGB<K>::equals(const ReducedGB& o) const {
  if (rank_ != o.rank_ || elems_.size() != o.elems_.size()) return false;
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    const auto& a = elems_[k];
    const auto& b = o.elems_[k];
    if (a.size() != b.size()) return false;
    for (std::size_t l = 0; l < a.size(); ++l) {
      if (!(a[l].m == b[l].m) || a[l].comp != b[l].comp || !(a[l].c == b[l].c)) return false;
    }
  }
  return true;
}

template <class K>
std::string ReducedGB<K>::to_string() const {
  std::string out;
  for (const auto& v : generators()) {
    if (rank_ == 1) {
      out += v.entries[0].to_string();
    } else {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v.entries[i].to_string();
      out += "]";
    }
    out += '\n';
  }
  return out;
}

template <class K>
ReducedGB<K> buchberger(const RingPtr& ring, std::size_t rank, std::span<const VecPoly<K>> gens,
                        ModuleOrder order, Certificate* cert) {
  Engine<K> engine(*ring, order, rank == 1, cert);
  std::vector<MPoly<K>> input;
  for (const auto& g : gens) {
    if (g.size() != rank) throw Error("generator rank mismatch");
    if (g.ring) require_same_ring(g.ring, ring);
    MPoly<K> p = engine.from_vec(g);
    for (const auto& t : p) note_denominator(t.c, cert);
    if (!p.empty()) input.push_back(std::move(p));
  }
  // Smaller leading terms first keeps the reduction chains short.
  std::stable_sort(input.begin(), input.end(), [&](const MPoly<K>& a, const MPoly<K>& b) {
    return engine.cmp(a.front(), b.front()) < 0;
  });
  return ReducedGB<K>(ring, rank, order, engine.run(std::move(input)));
}

template <class K>
ReducedGB<K> ideal_gb(const RingPtr& ring, std::span<const Poly<K>> gens, Certificate* cert) {
  std::vector<VecPoly<K>> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) vs.emplace_back(ring, std::vector<Poly<K>>{g});
  return buchberger<K>(ring, 1, vs, ModuleOrder{}, cert);
}

template <class K>
ReducedGB<K> column_gb(const Matrix<K>& cols, Certificate* cert) {
  auto vs = cols.columns();
  return buchberger<K>(cols.ring(), cols.rows(), vs, ModuleOrder{}, cert);
}

template <class K>
VecPoly<K> normal_form(const VecPoly<K>& v, const ReducedGB<K>& gb, Certificate* cert) {
  if (v.size() != gb.rank()) throw Error("normal form rank mismatch");
  Engine<K> engine(*gb.ring(), gb.order(), gb.rank() == 1, cert);
  std::vector<const MPoly<K>*> basis;
  for (const auto& e : gb.elements()) basis.push_back(&e);
  MPoly<K> r = engine.reduce(engine.from_vec(v), basis);
  return to_vectors(gb.ring(), gb.rank(), std::vector<MPoly<K>>{std::move(r)}).front();
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const ReducedGB<K>& gb, Certificate* cert) {
  VecPoly<K> v(gb.ring(), std::vector<Poly<K>>{f});
  return normal_form(v, gb, cert).entries[0];
}

namespace {

// GB of the vectors (col_j(a), e_j) in R^(rows+cols), eliminating the first
// `rows` components.
template <class K>
ReducedGB<K> augmented_gb(const Matrix<K>& a, Certificate* cert) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  std::vector<VecPoly<K>> gens;
  gens.reserve(c);
  for (std::size_t j = 0; j < c; ++j) {
    VecPoly<K> v(a.ring(), r + c);
    for (std::size_t i = 0; i < r; ++i) v.entries[i] = a.at(i, j);
    v.entries[r + j] = Poly<K>::constant(a.ring(), K(1));
    gens.push_back(std::move(v));
  }
  ModuleOrder ord{PositionRule::term_over_position, r};
  return buchberger<K>(a.ring(), r + c, gens, ord, cert);
}

}  // namespace

template <class K>
Matrix<K> syzygies(const Matrix<K>& a, Certificate* cert) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  if (c == 0) return Matrix<K>(a.ring(), 0, 0);
  if (r == 0 || a.is_zero()) return Matrix<K>::identity(a.ring(), c);
  ReducedGB<K> gb = augmented_gb(a, cert);
  std::vector<VecPoly<K>> kernel;
  for (const auto& v : gb.generators()) {
    bool top_zero = true;
    for (std::size_t i = 0; i < r && top_zero; ++i) top_zero = v.entries[i].is_zero();
    if (!top_zero) continue;
    VecPoly<K> s(a.ring(), c);
    for (std::size_t j = 0; j < c; ++j) s.entries[j] = v.entries[r + j];
    kernel.push_back(std::move(s));
  }
  return minimize_columns(Matrix<K>::from_columns(a.ring(), c, kernel), cert);
}

template <class K>
std::optional<Matrix<K>> lift(const Matrix<K>& gens, const Matrix<K>& targets, Certificate* cert,
                              std::size_t* failed) {
  if (gens.rows() != targets.rows()) throw Error("lift row mismatch");
  const std::size_t r = gens.rows();
  const std::size_t k = gens.cols();
  const RingPtr& ring = gens.ring() ? gens.ring() : targets.ring();
  Matrix<K> q(ring, k, targets.cols());
  if (k == 0) {
    for (std::size_t j = 0; j < targets.cols(); ++j) {
      if (!targets.column(j).is_zero()) {
        if (failed) *failed = j;
        return std::nullopt;
      }
    }
    return q;
  }
  ReducedGB<K> gb = augmented_gb(gens, cert);
  for (std::size_t j = 0; j < targets.cols(); ++j) {
    VecPoly<K> v(ring, r + k);
    for (std::size_t i = 0; i < r; ++i) v.entries[i] = targets.at(i, j);
    VecPoly<K> nf = normal_form(v, gb, cert);
    for (std::size_t i = 0; i < r; ++i) {
      if (!nf.entries[i].is_zero()) {
        if (failed) *failed = j;
        return std::nullopt;
      }
    }
    for (std::size_t l = 0; l < k; ++l) q.at(l, j) = -nf.entries[r + l];
  }
  return q;
}

template <class K>
Matrix<K> minimize_columns(const Matrix<K>& cols, Certificate* cert) {
  Matrix<K> m = cols.compact_columns();
  std::vector<std::size_t> keep(m.cols());
  std::iota(keep.begin(), keep.end(), 0);
  for (std::size_t idx = keep.size(); idx-- > 0;) {
    if (keep.size() <= 1) break;
    std::vector<std::size_t> others;
    for (std::size_t k : keep) {
      if (k != keep[idx]) others.push_back(k);
    }
    ReducedGB<K> gb = column_gb(m.select_columns(others), cert);
    if (normal_form(m.column(keep[idx]), gb, cert).is_zero()) keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return m.select_columns(keep);
}

template <class K>
ReducedGB<K> elim_ideal(const ReducedGB<K>& gb, std::size_t drop_count) {
  if (drop_count == 0) return gb;
  const Ring& ring = *gb.ring();
  const bool ok = ring.order() == TermOrder::lex ||
                  (ring.order() == TermOrder::block && ring.elim_count() == drop_count);
  if (!ok) throw OrderMismatch("ring order does not eliminate the first " + std::to_string(drop_count) + " variables");
  if (gb.rank() != 1) throw Error("elimination requires an ideal");
  std::vector<MPoly<K>> keep;
  for (const auto& e : gb.elements()) {
    const Monomial& lt = e.front().m;
    bool free = true;
    for (std::size_t i = 0; i < drop_count && free; ++i) free = lt.e[i] == 0;
    if (free) keep.push_back(e);
  }
  return ReducedGB<K>(gb.ring(), 1, gb.order(), std::move(keep));
}

template <class K>
Poly<K> shift_variables(const Poly<K>& f, const RingPtr& target, int shift) {
  std::vector<Term<K>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.m.e[i] == 0) continue;
      const long to = static_cast<long>(i) + shift;
      if (to < 0 || to >= static_cast<long>(kMaxVars)) throw Error("variable shift out of range");
      m.e[static_cast<std::size_t>(to)] = t.m.e[i];
    }
    terms.push_back({m, t.c});
  }
  return Poly<K>::from_terms(target, std::move(terms));
}

namespace {

std::string fresh_name(const Ring& ring) {
  std::string name = "_t";
  auto used = [&](const std::string& n) {
    return std::find(ring.vars().begin(), ring.vars().end(), n) != ring.vars().end() ||
           std::find(ring.params().begin(), ring.params().end(), n) != ring.params().end();
  };
  while (used(name)) name += "_";
  return name;
}

template <class K>
std::vector<Poly<K>> nonzero(std::span<const Poly<K>> v) {
  std::vector<Poly<K>> out;
  for (const auto& p : v) {
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

}  // namespace

template <class K>
ReducedGB<K> intersect_ideals(const RingPtr& ring, std::span<const Poly<K>> i,
                              std::span<const Poly<K>> j, Certificate* cert) {
  auto a = nonzero(i);
  auto b = nonzero(j);
  if (a.empty() || b.empty()) return ReducedGB<K>(ring, 1, ModuleOrder{}, {});
  if (ring->nvars() + 1 > kMaxVars) throw Error("too many variables for elimination");
  RingPtr ext = ring->with_leading_var(fresh_name(*ring));
  const Poly<K> t = Poly<K>::variable(ext, 0);
  const Poly<K> one_minus_t = Poly<K>::constant(ext, K(1)) - t;
  std::vector<Poly<K>> gens;
  for (const auto& f : a) gens.push_back(t * shift_variables(f, ext, 1));
  for (const auto& g : b) gens.push_back(one_minus_t * shift_variables(g, ext, 1));
  ReducedGB<K> gb = elim_ideal(ideal_gb<K>(ext, gens, cert), 1);
  std::vector<Poly<K>> back;
  for (const auto& p : gb.polys()) back.push_back(shift_variables(p, ring, -1));
  return ideal_gb<K>(ring, back, cert);
}

template <class K>
ReducedGB<K> ideal_quotient(const RingPtr& ring, std::span<const Poly<K>> i, const Poly<K>& f,
                            Certificate* cert) {
  if (f.is_zero()) return ideal_gb<K>(ring, std::vector<Poly<K>>{Poly<K>::constant(ring, K(1))});
  std::vector<Poly<K>> fs{f};
  ReducedGB<K> cap = intersect_ideals<K>(ring, i, fs, cert);
  note_inverse(f.leading().c, cert);
  std::vector<Poly<K>> gens;
  for (const auto& g : cap.polys()) {
    auto q = divide_exact(g, f);
    if (!q) throw Error("internal: intersection with (f) not divisible by f");
    gens.push_back(*std::move(q));
  }
  return ideal_gb<K>(ring, gens, cert);
}

template <class K>
ReducedGB<K> ideal_ops(IdealOp op, const RingPtr& ring, std::span<const Poly<K>> i,
                       std::span<const Poly<K>> j, Certificate* cert) {
  switch (op) {
    case IdealOp::sum: {
      std::vector<Poly<K>> all(i.begin(), i.end());
      all.insert(all.end(), j.begin(), j.end());
      return ideal_gb<K>(ring, all, cert);
    }
    case IdealOp::product: {
      std::vector<Poly<K>> all;
      for (const auto& f : i) {
        for (const auto& g : j) all.push_back(f * g);
      }
      return ideal_gb<K>(ring, all, cert);
    }
    case IdealOp::intersect:
      return intersect_ideals<K>(ring, i, j, cert);
    case IdealOp::quotient: {
      std::optional<ReducedGB<K>> acc;
      for (const auto& g : j) {
        if (g.is_zero()) continue;
        ReducedGB<K> q = ideal_quotient<K>(ring, i, g, cert);
        if (!acc) {
          acc = std::move(q);
        } else {
          auto a = acc->polys();
          auto b = q.polys();
          acc = intersect_ideals<K>(ring, a, b, cert);
        }
      }
      if (!acc) return ideal_gb<K>(ring, std::vector<Poly<K>>{Poly<K>::constant(ring, K(1))});
      return *std::move(acc);
    }
  }
  throw Error("unknown ideal operation");
}

template <class K>
int dim_ideal(const ReducedGB<K>& gb) {
  if (gb.rank() != 1) throw Error("dimension requires an ideal");
  const std::size_t n = gb.ring()->nvars();
  std::vector<unsigned> supports;
  for (const auto& e : gb.elements()) {
    unsigned s = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (e.front().m.e[v] != 0) s |= 1u << v;
    }
    supports.push_back(s);
  }
  int best = -1;
  for (unsigned set = 0; set < (1u << n); ++set) {
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](unsigned s) { return (s & ~set) == 0; });
    if (independent) best = std::max(best, std::popcount(set));
  }
  return best;
}

template <class K>
int height_ideal(const ReducedGB<K>& gb) {
  if (gb.is_zero() || gb.is_unit()) throw ImproperIdeal();
  return static_cast<int>(gb.ring()->nvars()) - dim_ideal(gb);
}

#define SMOD_INSTANTIATE(K)                                                                      \
  template class ReducedGB<K>;                                                                   \
  template ReducedGB<K> buchberger(const RingPtr&, std::size_t, std::span<const VecPoly<K>>,     \
                                   ModuleOrder, Certificate*);                                   \
  template ReducedGB<K> ideal_gb(const RingPtr&, std::span<const Poly<K>>, Certificate*);       \
  template ReducedGB<K> column_gb(const Matrix<K>&, Certificate*);                               \
  template VecPoly<K> normal_form(const VecPoly<K>&, const ReducedGB<K>&, Certificate*);         \
  template Poly<K> normal_form(const Poly<K>&, const ReducedGB<K>&, Certificate*);               \
  template Matrix<K> syzygies(const Matrix<K>&, Certificate*);                                   \
  template std::optional<Matrix<K>> lift(const Matrix<K>&, const Matrix<K>&, Certificate*,       \
                                         std::size_t*);                                          \
  template Matrix<K> minimize_columns(const Matrix<K>&, Certificate*);                           \
  template ReducedGB<K> elim_ideal(const ReducedGB<K>&, std::size_t);                            \
  template ReducedGB<K> ideal_ops(IdealOp, const RingPtr&, std::span<const Poly<K>>,             \
                                  std::span<const Poly<K>>, Certificate*);                       \
  template ReducedGB<K> intersect_ideals(const RingPtr&, std::span<const Poly<K>>,               \
                                         std::span<const Poly<K>>, Certificate*);                \
  template ReducedGB<K> ideal_quotient(const RingPtr&, std::span<const Poly<K>>, const Poly<K>&, \
                                       Certificate*);                                            \
  template int dim_ideal(const ReducedGB<K>&);                                                   \
  template int height_ideal(const ReducedGB<K>&);                                                \
  template Poly<K> shift_variables(const Poly<K>&, const RingPtr&, int);

SMOD_INSTANTIATE(Rational)
SMOD_INSTANTIATE(RatFun)

#undef SMOD_INSTANTIATE

}  // namespace smod
