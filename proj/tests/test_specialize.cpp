#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "smod/errors.hpp"
#include "smod/linalg.hpp"
#include "smod/specialize.hpp"

using namespace smod;
using namespace smod::testing;

namespace {

const RingPtr U = uring({"u1", "u2"}, {"x1", "x2"});
const RingPtr Q = U->specialized();
const RingPtr U1 = uring({"u1"}, {"x1", "x2"});
const RingPtr Q1 = U1->specialized();

SubstPoint at(const char* s) { return SubstPoint::parse(s); }

ParamPoly u(std::size_t i) { return ParamPoly::variable(i); }

Matrix<RatFun> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  static const char* pool[] = {"0", "x1", "u1*x2", "x1 - u1", "(1/(u1+2))*x2^2", "u1*x1*x2 + 1",
                               "x2", "u1^2", "x1^2 - u1*x2"};
  std::uniform_int_distribution<int> pick(0, 8);
  Matrix<RatFun> a(U1, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) a.at(i, j) = parse_poly<RatFun>(pool[pick(rng)], U1);
  }
  return a;
}

}  // namespace

TEST(Sample, Examples) {
  Certificate c;
  c.add(u(0));
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto a = sample_alpha(s, c, 5, 1);
    ASSERT_NE(a.values[0], 0);
    ASSERT_LE(abs(a.values[0]), 5);
  }
  EXPECT_EQ(sample_alpha(3, Certificate{}, 5, 2), sample_alpha(3, Certificate{}, 5, 2));
  Certificate sq;
  sq.add(u(0) * u(0) + ParamPoly(1));
  EXPECT_NO_THROW(sample_alpha(1, sq, 1, 1));
  Certificate all;
  all.add(u(0));
  all.add(u(0) - ParamPoly(1));
  all.add(u(0) + ParamPoly(1));
  EXPECT_THROW(sample_alpha(1, all, 1, 1), ExhaustedSampling);
}

TEST(Sample, StreamsDiffer) {
  std::set<std::string> seen;
  for (std::uint64_t t = 0; t < 20; ++t) seen.insert(to_string(sample_alpha(7, Certificate{}, 7, 1, t).values[0]));
  EXPECT_GT(seen.size(), 5u);
}

TEST(SubstScalar, Examples) {
  Certificate c;
  EXPECT_EQ(subst(parse_poly<RatFun>("(1/u1)*x1", U), at("2,0"), &c), parse_poly<Rational>("1/2*x1", Q));
  EXPECT_TRUE(c.contains(u(0)));
  EXPECT_EQ(subst(parse_poly<RatFun>("u1*x1 + u2", U), at("1,-1")), parse_poly<Rational>("x1 - 1", Q));
  EXPECT_THROW(subst(parse_poly<RatFun>("(1/(u1-1))*x1", U), at("1,0")), BadSubstitution);
}

TEST(SubstMatrix, Examples) {
  EXPECT_EQ(subst(Matrix<RatFun>::identity(U1, 2), at("5")), Matrix<Rational>::identity(Q1, 2));
  auto a = mat<RatFun>(U1, {{"u1*x1", "1/u1"}});
  EXPECT_EQ(subst(a, at("3")), mat(Q1, {{"3*x1", "1/3"}}));
  auto bad = mat<RatFun>(U1, {{"x1", "1/u1"}});
  try {
    subst(bad, at("0"));
    FAIL();
  } catch (const BadSubstitution& e) {
    EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos);
  }
}

TEST(SubstMatrix, HomomorphismLaws) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    auto a = random_matrix(rng, 2, 3);
    auto b = random_matrix(rng, 3, 2);
    auto c = random_matrix(rng, 2, 3);
    auto d = random_matrix(rng, 2, 2);
    auto alpha = sample_alpha(static_cast<std::uint64_t>(t), [] {
      Certificate k;
      k.add(ParamPoly::variable(0) + ParamPoly(2));
      return k;
    }(), 7, 1);
    ASSERT_EQ(subst(a * b, alpha), subst(a, alpha) * subst(b, alpha));
    ASSERT_EQ(subst(a + c, alpha), subst(a, alpha) + subst(c, alpha));
    ASSERT_EQ(subst(a.block_diag(b), alpha), subst(a, alpha).block_diag(subst(b, alpha)));
    ASSERT_EQ(subst(a.kronecker(d), alpha), subst(a, alpha).kronecker(subst(d, alpha)));
  }
}

TEST(RankPreservation, CertifiedAlphaKeepsRank) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t) {
    auto a = random_matrix(rng, 3, 3);
    Certificate c;
    const std::size_t r = rank_matrix(a, &c);
    for (std::uint64_t s = 0; s < 5; ++s) {
      auto alpha = sample_alpha(s, c, 7, 1);
      ASSERT_EQ(rank_matrix(subst(a, alpha)), r);
      ASSERT_EQ(specialize_gb(determinantal_ideal(a, r, &c), alpha),
                determinantal_ideal(subst(a, alpha), r));
    }
  }
}

TEST(SpecializeModule, Examples) {
  auto f = FPModule<RatFun>::free(U1, 2);
  auto fa = specialize_module(f, at("4"));
  EXPECT_EQ(fa.gens, 2u);
  EXPECT_EQ(fa.pres.cols(), 0u);
  auto l = cyclic<RatFun>(U1, {"u1*x1 - 1"});
  EXPECT_EQ(specialize_module(l, at("2")).pres, mat(Q1, {{"2*x1 - 1"}}));
  auto m = cyclic<RatFun>(U1, {"x2 - u1"});
  auto lhs = specialize_module(direct_sum(l, m), at("3"));
  auto rhs = direct_sum(specialize_module(l, at("3")), specialize_module(m, at("3")));
  EXPECT_EQ(fingerprint(lhs), fingerprint(rhs));
}

TEST(SpecializeModule, PresentationIndependence) {
  // R/(x1 - u1) three ways: minimal, with a redundant relation, with a
  // superfluous generator e1 = x2*e2.
  const std::vector<FPModule<RatFun>> pres = {
      cyclic<RatFun>(U1, {"x1 - u1"}),
      cyclic<RatFun>(U1, {"x1 - u1", "u1*x2*(x1 - u1)"}),
      FPModule<RatFun>::present(mat<RatFun>(U1, {{"1", "0"}, {"-x2", "x1 - u1"}})),
  };
  Certificate cert;
  for (const auto& p : pres) {
    note_denominators(p.pres, &cert);
    fingerprint(p, &cert);
  }
  for (std::uint64_t t = 0; t < 20; ++t) {
    const SubstPoint a = sample_alpha(5, cert, 7, 1, t);
    const auto base = fingerprint(specialize_module(pres[0], a));
    for (const auto& p : pres) EXPECT_EQ(fingerprint(specialize_module(p, a)), base);
  }
}

TEST(SpecializeMap, Examples) {
  auto l = cyclic<RatFun>(U1, {"x1 - u1"});
  auto id = lift_map(Matrix<RatFun>::identity(U1, 1), l, l);
  auto ida = specialize_map(id, at("2"));
  EXPECT_EQ(ida.v0, Matrix<Rational>::identity(Q1, 1));
  auto m = cyclic<RatFun>(U1, {"x2"});
  auto mul = lift_map(mat<RatFun>(U1, {{"u1*x1"}}), m, m);
  EXPECT_EQ(specialize_map(mul, at("2")).v0, mat(Q1, {{"2*x1"}}));
  // Functoriality: (z v)_a = z_a v_a.
  auto z = lift_map(mat<RatFun>(U1, {{"x1 + u1"}}), m, m);
  auto alpha = at("-3");
  EXPECT_EQ(specialize_map(compose(z, mul), alpha).v0, specialize_map(z, alpha).v0 * specialize_map(mul, alpha).v0);
}

TEST(SpecializeMap, CompatibilityRechecked) {
  auto src = cyclic<RatFun>(U1, {"x1"});
  auto tgt = cyclic<RatFun>(U1, {"u1*x1"});
  ModuleMap<RatFun> v{src, tgt, mat<RatFun>(U1, {{"u1"}}), mat<RatFun>(U1, {{"1"}})};
  ASSERT_TRUE(v.compatible());
  EXPECT_NO_THROW(specialize_map(v, at("0")));
  // A square that never commuted is reported, not repaired.
  ModuleMap<RatFun> broken{src, tgt, mat<RatFun>(U1, {{"1"}}), mat<RatFun>(U1, {{"1"}})};
  EXPECT_THROW(specialize_map(broken, at("2")), CompatibilityLost);
  ModuleMap<RatFun> pole{src, tgt, mat<RatFun>(U1, {{"1"}}), mat<RatFun>(U1, {{"1/u1"}})};
  ASSERT_TRUE(pole.compatible());
  EXPECT_THROW(specialize_map(pole, at("0")), BadSubstitution);
}

TEST(SpecializeIdeal, Examples) {
  auto U1x = uring({"u1"}, {"x1"});
  auto Q1x = U1x->specialized();
  EXPECT_EQ(specialize_ideal(polys<RatFun>(U1x, {"x1 - u1"}), at("3")), igb(Q1x, {"x1 - 3"}));

  Certificate c;
  auto g = specialize_ideal(polys<RatFun>(U1x, {"u1*x1 - 1"}), at("0"), &c);
  EXPECT_TRUE(g.is_unit());
  EXPECT_TRUE(c.contains(u(0)));
  EXPECT_FALSE(c.is_good(at("0")));
  auto param = ideal_gb<RatFun>(U1x, polys<RatFun>(U1x, {"u1*x1 - 1"}));
  EXPECT_EQ(dim_ideal(param), 0);
  EXPECT_EQ(dim_ideal(g), -1);

  auto q = specialize_ideal(polys<RatFun>(U1x, {"x1^2 + 1"}), at("5"));
  EXPECT_EQ(q, igb(Q1x, {"x1^2 + 1"}));
  EXPECT_EQ(q.size(), 1u);
}

TEST(SpecializeComplex, Examples) {
  FreeComplex<RatFun> k{U, {1, 2, 1}, {mat<RatFun>(U, {{"x1 - u1", "x2 - u2"}}), mat<RatFun>(U, {{"x2 - u2"}, {"u1 - x1"}})}};
  Certificate c;
  ASSERT_TRUE(be_exactness(k, &c).overall);
  auto ka = specialize_complex(k, at("1,1"), &c);
  EXPECT_EQ(ka.maps[0], mat(Q, {{"x1 - 1", "x2 - 1"}}));
  EXPECT_TRUE(be_exactness(ka).overall);

  FreeComplex<RatFun> u_free{U, {1, 2, 1}, {mat<RatFun>(U, {{"x1", "x2"}}), mat<RatFun>(U, {{"x2"}, {"-x1"}})}};
  EXPECT_EQ(specialize_complex(u_free, at("4,4")).maps[1], mat(Q, {{"x2"}, {"-x1"}}));

  FreeComplex<RatFun> mul{U1, {1, 1}, {mat<RatFun>(U1, {{"u1*x1"}})}};
  Certificate cm;
  ASSERT_TRUE(be_exactness(mul, &cm).overall);
  EXPECT_TRUE(cm.contains(u(0)));
  for (std::uint64_t seed = 0; seed < 20; ++seed) ASSERT_NE(sample_alpha(seed, cm, 1, 1).values[0], 0);
  auto forced = specialize_complex(mul, at("0"));
  auto rep = be_exactness(forced);
  EXPECT_FALSE(rep.overall);
  EXPECT_EQ(rep.rows[0].rank_phi, 0u);
}

TEST(SpecializeComplex, NotAComplex) {
  FreeComplex<RatFun> ok{U1, {1, 1, 1}, {mat<RatFun>(U1, {{"x1"}}), mat<RatFun>(U1, {{"0"}})}};
  EXPECT_NO_THROW(specialize_complex(ok, at("1")));
  FreeComplex<RatFun> bad{U1, {1, 1, 1}, {mat<RatFun>(U1, {{"x1"}}), mat<RatFun>(U1, {{"u1"}})}};
  EXPECT_THROW(specialize_complex(bad, at("1")), NotAComplex);
}
