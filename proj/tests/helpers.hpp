#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "smod/fpmod.hpp"

namespace smod::testing {

inline RingPtr qring(std::vector<std::string> vars) { return Ring::make({}, std::move(vars)); }

inline RingPtr uring(std::vector<std::string> params, std::vector<std::string> vars) {
  return Ring::make(std::move(params), std::move(vars), TermOrder::grevlex, 0, CoeffMode::ratfun);
}

template <class K = Rational>
Matrix<K> mat(const RingPtr& r, std::initializer_list<std::initializer_list<const char*>> rows,
              std::size_t cols = 0) {
  std::vector<std::vector<Poly<K>>> out;
  for (const auto& row : rows) {
    std::vector<Poly<K>> line;
    for (const char* t : row) line.push_back(parse_poly<K>(t, r));
    cols = line.size();
    out.push_back(std::move(line));
  }
  return Matrix<K>::from_rows(r, std::move(out), cols);
}

template <class K = Rational>
std::vector<Poly<K>> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Poly<K>> out;
  for (const char* t : texts) out.push_back(parse_poly<K>(t, r));
  return out;
}

template <class K = Rational>
ReducedGB<K> igb(const RingPtr& r, std::initializer_list<const char*> texts) {
  return ideal_gb<K>(r, polys<K>(r, texts));
}

template <class K = Rational>
FPModule<K> cyclic(const RingPtr& r, std::initializer_list<const char*> texts) {
  Matrix<K> row(r, 1, 0);
  for (const char* t : texts) row = row.hconcat(mat<K>(r, {{t}}));
  return FPModule<K>::present(row);
}

}  // namespace smod::testing
