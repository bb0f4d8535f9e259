#pragma once

// Buchberger's algorithm for submodules of free modules R^s (ideals are the
// case s = 1), normal forms, syzygies, lifting, elimination and the ideal
// operations built on them.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smod/certificate.hpp"
#include "smod/matrix.hpp"

namespace smod {

enum class PositionRule { term_over_position, position_over_term };

// Order on terms m*e_i of R^s. Components below elim_components dominate
// every other component (used for syzygies and lifting); within each block
// terms compare by the rule. Lower component indices rank higher.
struct ModuleOrder {
  PositionRule rule = PositionRule::term_over_position;
  std::size_t elim_components = 0;
  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;
};

template <class K>
struct MTerm {
  Monomial m;
  std::uint32_t comp = 0;
  K c;
};

// Module element as a list of terms, strictly descending in the module order
// it was built for.
template <class K>
using MPoly = std::vector<MTerm<K>>;

// The reduced Groebner basis of a submodule: monic, interreduced, sorted by
// descending leading term. Equal submodules give identical bases.
template <class K>
class ReducedGB {
 public:
  ReducedGB() = default;
  ReducedGB(RingPtr ring, std::size_t rank, ModuleOrder order, std::vector<MPoly<K>> elems)
      : ring_(std::move(ring)), rank_(rank), order_(order), elems_(std::move(elems)) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<MPoly<K>>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool is_zero() const { return elems_.empty(); }
  // Ideal case: the basis is {1}.
  bool is_unit() const;

  std::vector<VecPoly<K>> generators() const;
  // Rank-one bases only.
  std::vector<Poly<K>> polys() const;
  // Generators as the columns of a rank x size matrix.
  Matrix<K> matrix() const;

  friend bool operator==(const ReducedGB& a, const ReducedGB& b) { return a.equals(b); }

  // One generator per line in the polynomial grammar; vectors as "[f, g]".
  std::string to_string() const;

 private:
  bool equals(const ReducedGB& o) const;
  RingPtr ring_;
  std::size_t rank_ = 1;
  ModuleOrder order_;
  std::vector<MPoly<K>> elems_;
};

template <class K>
ReducedGB<K> buchberger(const RingPtr& ring, std::size_t rank, std::span<const VecPoly<K>> gens,
                        ModuleOrder order = {}, Certificate* cert = nullptr);

template <class K>
ReducedGB<K> ideal_gb(const RingPtr& ring, std::span<const Poly<K>> gens,
                      Certificate* cert = nullptr);

// GB of the submodule of R^rows spanned by the columns.
template <class K>
ReducedGB<K> column_gb(const Matrix<K>& cols, Certificate* cert = nullptr);

template <class K>
VecPoly<K> normal_form(const VecPoly<K>& v, const ReducedGB<K>& gb, Certificate* cert = nullptr);

template <class K>
Poly<K> normal_form(const Poly<K>& f, const ReducedGB<K>& gb, Certificate* cert = nullptr);

// Generators of ker(A : R^cols -> R^rows) as columns, redundant ones removed.
template <class K>
Matrix<K> syzygies(const Matrix<K>& a, Certificate* cert = nullptr);

// Q with gens * Q = targets, or nullopt with *failed set to the first column
// of targets outside the span of gens.
template <class K>
std::optional<Matrix<K>> lift(const Matrix<K>& gens, const Matrix<K>& targets,
                              Certificate* cert = nullptr, std::size_t* failed = nullptr);

// Drops columns lying in the span of the remaining ones.
template <class K>
Matrix<K> minimize_columns(const Matrix<K>& cols, Certificate* cert = nullptr);

// Elements of an elimination basis free of the first drop_count variables.
// Throws OrderMismatch unless the ring order eliminates those variables.
template <class K>
ReducedGB<K> elim_ideal(const ReducedGB<K>& gb, std::size_t drop_count);

enum class IdealOp { intersect, quotient, sum, product };

template <class K>
ReducedGB<K> ideal_ops(IdealOp op, const RingPtr& ring, std::span<const Poly<K>> i,
                       std::span<const Poly<K>> j, Certificate* cert = nullptr);

template <class K>
ReducedGB<K> intersect_ideals(const RingPtr& ring, std::span<const Poly<K>> i,
                              std::span<const Poly<K>> j, Certificate* cert = nullptr);

// (I : f) computed as (I cap (f)) / f.
template <class K>
ReducedGB<K> ideal_quotient(const RingPtr& ring, std::span<const Poly<K>> i, const Poly<K>& f,
                            Certificate* cert = nullptr);

// Krull dimension of R/I from maximal independent sets of the leading
// monomials; -1 for the unit ideal.
template <class K>
int dim_ideal(const ReducedGB<K>& gb);

// n - dim(R/I); throws ImproperIdeal for (0) and (1).
template <class K>
int height_ideal(const ReducedGB<K>& gb);

// Moves a polynomial between rings whose variable lists differ by a prefix
// of `shift` extra leading variables (shift may be negative).
template <class K>
Poly<K> shift_variables(const Poly<K>& f, const RingPtr& target, int shift);

extern template class ReducedGB<Rational>;
extern template class ReducedGB<RatFun>;

}  // namespace smod
