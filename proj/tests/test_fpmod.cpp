#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "smod/errors.hpp"
#include "smod/fpmod.hpp"
#include "smod/linalg.hpp"

using namespace smod;
using namespace smod::testing;

namespace {

const RingPtr R = qring({"x1", "x2"});

using M = FPModule<Rational>;

}  // namespace

TEST(Present, Shapes) {
  EXPECT_EQ(M::present(Matrix<Rational>(R, 2, 0)).gens, 2u);
  EXPECT_EQ(M::present(mat(R, {{"x1"}})).pres.cols(), 1u);
}

TEST(IsZero, Examples) {
  EXPECT_TRUE(is_zero(cyclic(R, {"1"})));
  EXPECT_FALSE(is_zero(cyclic(R, {"x1"})));
  EXPECT_TRUE(is_zero(M::present(mat(R, {{"1", "x1"}, {"0", "1"}}))));
  EXPECT_FALSE(is_zero(M::free(R, 1)));
}

TEST(DirectSum, Examples) {
  auto s = direct_sum(cyclic(R, {"x1"}), cyclic(R, {"x2"}));
  EXPECT_EQ(s.pres, mat(R, {{"x1", "0"}, {"0", "x2"}}));
  auto z = direct_sum(cyclic(R, {"x1"}), M::free(R, 0));
  EXPECT_EQ(z.pres, mat(R, {{"x1"}}));
  auto f = direct_sum(M::free(R, 1), cyclic(R, {"x1"}));
  EXPECT_EQ(f.pres, mat(R, {{"0"}, {"x1"}}));
}

TEST(LiftMap, Examples) {
  auto l = cyclic(R, {"x1"});
  auto id = lift_map(mat(R, {{"1"}}), l, l);
  EXPECT_EQ(id.v1, mat(R, {{"1"}}));
  auto m = cyclic(R, {"x2"});
  auto mul = lift_map(mat(R, {{"x1"}}), m, m);
  EXPECT_EQ(mul.v1, mat(R, {{"x1"}}));
  EXPECT_TRUE(mul.compatible());
  EXPECT_THROW(lift_map(mat(R, {{"1"}}), l, m), NotAHomomorphism);
}

TEST(KernelImageCokernel, MultiplicationMap) {
  auto l = cyclic(R, {"x1*x2"});
  auto v = lift_map(mat(R, {{"x1"}}), l, l);
  auto k = kernel(v);
  Submodule<Rational> expected{l, mat(R, {{"x2"}})};
  EXPECT_TRUE(sub_equal(k, expected));
  // Quotient oracle: (x1*x2) : (x1) = (x2).
  auto q = ideal_quotient<Rational>(R, polys(R, {"x1*x2"}), parse_poly<Rational>("x1", R));
  EXPECT_EQ(q, igb(R, {"x2"}));
}

TEST(KernelImageCokernel, IdentityAndZero) {
  auto l = cyclic(R, {"x1"});
  auto id = lift_map(mat(R, {{"1"}}), l, l);
  EXPECT_TRUE(is_zero(submodule_presentation(kernel(id))));
  EXPECT_TRUE(is_zero(cokernel(id)));
  auto m = cyclic(R, {"x2"});
  auto zero = lift_map(mat(R, {{"0"}}), l, m);
  EXPECT_TRUE(is_zero(submodule_presentation(image(zero))));
  EXPECT_EQ(fingerprint(cokernel(zero)), fingerprint(m));
}

TEST(SubOps, Examples) {
  auto f2 = M::free(R, 2);
  Submodule<Rational> a{f2, mat(R, {{"1"}, {"0"}})};
  Submodule<Rational> b{f2, mat(R, {{"0"}, {"1"}})};
  EXPECT_TRUE(sub_equal(sub_sum(a, b), Submodule<Rational>{f2, Matrix<Rational>::identity(R, 2)}));

  auto f1 = M::free(R, 1);
  Submodule<Rational> x1{f1, mat(R, {{"x1"}})};
  Submodule<Rational> x2{f1, mat(R, {{"x2"}})};
  auto cap = sub_intersect(x1, x2);
  EXPECT_TRUE(sub_equal(cap, Submodule<Rational>{f1, mat(R, {{"x1*x2"}})}));
  // Cross-check with the ideal route.
  auto icap = intersect_ideals<Rational>(R, polys(R, {"x1"}), polys(R, {"x2"}));
  EXPECT_EQ(column_gb(cap.gens), icap);

  auto l = cyclic(R, {"x1"});
  Submodule<Rational> zero{l, Matrix<Rational>(R, 1, 0)};
  EXPECT_EQ(fingerprint(quotient_module(zero)), fingerprint(l));
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(annihilator(cyclic(R, {"x1"})), igb(R, {"x1"}));
  auto l = M::present(mat(R, {{"x1", "0"}, {"0", "x2"}}));
  EXPECT_EQ(annihilator(l), intersect_ideals<Rational>(R, polys(R, {"x1"}), polys(R, {"x2"})));
  EXPECT_EQ(annihilator(l), igb(R, {"x1*x2"}));
  EXPECT_TRUE(annihilator(M::free(R, 1)).is_zero());
  EXPECT_TRUE(annihilator(M::free(R, 0)).is_unit());
}

TEST(Fitting, Examples) {
  auto c = cyclic(R, {"x1"});
  EXPECT_EQ(fitting_ideal(c, 0), igb(R, {"x1"}));
  EXPECT_TRUE(fitting_ideal(c, 1).is_unit());
  EXPECT_EQ(fitting_ideal(M::present(mat(R, {{"x1", "0"}, {"0", "x2"}})), 0), igb(R, {"x1*x2"}));
  auto f = M::free(R, 2);
  EXPECT_TRUE(fitting_ideal(f, 0).is_zero());
  EXPECT_TRUE(fitting_ideal(f, 2).is_unit());
}

TEST(ColonProduct, Examples) {
  auto l = cyclic(R, {"x1*x2"});
  auto colon = colon_module(l, polys(R, {"x1"}));
  EXPECT_TRUE(sub_equal(colon, Submodule<Rational>{l, mat(R, {{"x2"}})}));

  auto r1 = M::free(R, 1);
  EXPECT_TRUE(column_gb(colon_module(r1, polys(R, {"x1"})).gens).is_zero());
  EXPECT_TRUE(sub_equal(product_submodule(r1, polys(R, {"x1"})), Submodule<Rational>{r1, mat(R, {{"x1"}})}));

  auto unit = polys(R, {"1"});
  EXPECT_TRUE(is_zero(submodule_presentation(colon_module(l, unit))));
  EXPECT_TRUE(sub_equal(product_submodule(l, unit), Submodule<Rational>{l, Matrix<Rational>::identity(R, 1)}));
}

TEST(FingerprintTest, Examples) {
  EXPECT_EQ(fingerprint(cyclic(R, {"x1"})), fingerprint(M::present(mat(R, {{"x1"}}))));
  EXPECT_FALSE(fingerprint(cyclic(R, {"x1"})) == fingerprint(cyclic(R, {"x2"})));
  // coker[[x1, x1*x2],[0,0]]: second relation is x2 times the first.
  auto a = M::present(mat(R, {{"x1", "x2*x1"}, {"0", "0"}}));
  auto b = direct_sum(cyclic(R, {"x1"}), M::free(R, 1));
  EXPECT_EQ(fingerprint(a), fingerprint(b));
  // Change-of-basis oracle: an explicit isomorphism a -> b.
  auto iso = lift_map(Matrix<Rational>::identity(R, 2), a, b);
  EXPECT_TRUE(is_zero(submodule_presentation(kernel(iso))));
  EXPECT_TRUE(is_zero(cokernel(iso)));
}

TEST(FingerprintTest, PresentationIndependence) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> c(-2, 2);
  auto base = M::present(mat(R, {{"x1", "x2^2", "0"}, {"x2", "0", "x1 - 1"}}));
  auto ref = fingerprint(base);
  for (int t = 0; t < 10; ++t) {
    // Unimodular row operation and a column operation.
    Matrix<Rational> row_op = Matrix<Rational>::identity(R, 2);
    row_op.at(0, 1) = parse_poly<Rational>("x1", R).scaled(Rational(c(rng))) + Poly<Rational>::constant(R, Rational(c(rng)));
    Matrix<Rational> col_op = Matrix<Rational>::identity(R, 3);
    col_op.at(1, 2) = parse_poly<Rational>("x2", R).scaled(Rational(c(rng)));
    col_op.at(0, 1) = Poly<Rational>::constant(R, Rational(c(rng)));
    auto other = M::present(row_op * base.pres * col_op);
    ASSERT_EQ(fingerprint(other), ref) << t;
    // Adding a redundant relation keeps the module.
    auto extra = M::present(other.pres.hconcat(other.pres.select_columns(std::vector<std::size_t>{0}).scaled(parse_poly<Rational>("x2+3", R))));
    ASSERT_EQ(fingerprint(extra), ref);
  }
}

TEST(Exactness, ImageIsKernelOfProjection) {
  auto l = M::present(mat(R, {{"x1", "0"}, {"x2", "x1*x2"}}));
  auto m = M::present(mat(R, {{"x1*x2"}}));
  auto v = lift_map(mat(R, {{"x2", "x1"}}), l, m);
  auto c = cokernel(v);
  auto proj = lift_map(Matrix<Rational>::identity(R, 1), m, c);
  EXPECT_TRUE(sub_equal(image(v), kernel(proj)));
}

TEST(Simplify, PrunesUnits) {
  auto l = M::present(mat(R, {{"1", "x1"}, {"x2", "x2^2"}}));
  auto s = simplify(l);
  EXPECT_EQ(s.gens, 1u);
  EXPECT_EQ(fingerprint(s), fingerprint(l));
}

TEST(AnnRadical, AnnInsideRadicalOfFitt0) {
  auto l = M::present(mat(R, {{"x1^2", "x2"}, {"0", "x1"}}));
  auto ann = annihilator(l);
  auto fitt = fitting_ideal(l, 0);
  // Ann^gens lies in Fitt_0.
  for (const auto& a : ann.polys()) {
    EXPECT_TRUE(normal_form(a * a, fitt).is_zero());
  }
  // Fitt_0 lies in Ann.
  for (const auto& f : fitt.polys()) EXPECT_TRUE(normal_form(f, ann).is_zero());
}

TEST(Minors, ParallelMatchesSerial) {
  auto a = mat(R, {{"x1", "x2", "1", "x1*x2"}, {"x2^2", "0", "x1 - 1", "3"}, {"1", "x1", "x2", "0"}});
  for (std::size_t t = 1; t <= 3; ++t) EXPECT_EQ(minors(a, t), minors_serial(a, t));
}
