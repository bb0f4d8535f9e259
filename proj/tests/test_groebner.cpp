#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "smod/errors.hpp"
#include "smod/groebner.hpp"

using namespace smod;

namespace {

using P = Poly<Rational>;

RingPtr ring(std::vector<std::string> vars, TermOrder o = TermOrder::grevlex, std::size_t elim = 0) {
  return Ring::make({}, std::move(vars), o, elim);
}

std::vector<P> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<P> out;
  for (const char* t : texts) out.push_back(parse_poly<Rational>(t, r));
  return out;
}

ReducedGB<Rational> gb(const RingPtr& r, std::initializer_list<const char*> texts) {
  return ideal_gb<Rational>(r, polys(r, texts));
}

std::vector<std::string> lines(const ReducedGB<Rational>& g) {
  std::vector<std::string> out;
  for (const auto& p : g.polys()) out.push_back(p.to_string());
  return out;
}

// Plain multivariate division with no shortcuts, used as an oracle.
P naive_remainder(P f, const std::vector<P>& divisors) {
  const RingPtr& R = f.ring();
  P rem(R);
  while (!f.is_zero()) {
    const auto lt = f.leading();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !g.leading().m.divides(lt.m)) continue;
      f -= g.mul_term(lt.m / g.leading().m, lt.c / g.leading().c);
      divided = true;
      break;
    }
    if (!divided) {
      rem += P::monomial(R, lt.m, lt.c);
      f -= P::monomial(R, lt.m, lt.c);
    }
  }
  return rem;
}

// Buchberger's criterion checked by brute force over all S-pairs.
bool is_groebner_oracle(const std::vector<P>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Monomial l = lcm(g[i].leading().m, g[j].leading().m);
      P s = g[i].mul_term(l / g[i].leading().m, 1 / g[i].leading().c) -
            g[j].mul_term(l / g[j].leading().m, 1 / g[j].leading().c);
      if (!naive_remainder(s, g).is_zero()) return false;
    }
  }
  return true;
}

int brute_dim(const ReducedGB<Rational>& g) {
  const std::size_t n = g.ring()->nvars();
  if (g.is_unit()) return -1;
  int best = 0;
  for (unsigned s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (const auto& p : g.polys()) {
      bool inside = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (p.leading().m.e[v] > 0 && !(s >> v & 1u)) inside = false;
      }
      if (inside) ok = false;
    }
    int c = 0;
    for (std::size_t v = 0; v < n; ++v) c += static_cast<int>(s >> v & 1u);
    if (ok) best = std::max(best, c);
  }
  return best;
}

}  // namespace

TEST(Buchberger, LexExample) {
  auto R = ring({"x1", "x2"}, TermOrder::lex);
  auto g = gb(R, {"x1^2-1", "x1-x2"});
  EXPECT_EQ(lines(g), (std::vector<std::string>{"x1 - x2", "x2^2 - 1"}));
  EXPECT_TRUE(is_groebner_oracle(g.polys()));
}

TEST(Buchberger, DuplicateGenerator) {
  auto R = ring({"x1", "x2"});
  EXPECT_EQ(lines(gb(R, {"x1", "x1"})), std::vector<std::string>{"x1"});
}

TEST(Buchberger, ModuleExample) {
  auto R = ring({"x1", "x2"});
  std::vector<VecPoly<Rational>> gens;
  for (auto [a, b] : {std::pair{"x1", "0"}, {"0", "x2"}, {"x2", "x1"}}) {
    gens.emplace_back(R, polys(R, {a, b}));
  }
  auto g = buchberger<Rational>(R, 2, gens);
  // Generators reduce to zero and every basis element lies in their span.
  for (const auto& v : gens) EXPECT_TRUE(normal_form(v, g).is_zero());
  Matrix<Rational> span = Matrix<Rational>::from_columns(R, 2, gens);
  EXPECT_TRUE(lift(span, g.matrix()).has_value());
  // Degree 2 closure: x1*(x2,x1) - x2*(x1,0) = (0, x1^2) must be in the module.
  VecPoly<Rational> w(R, polys(R, {"0", "x1^2"}));
  EXPECT_TRUE(normal_form(w, g).is_zero());
  VecPoly<Rational> out(R, polys(R, {"0", "x1"}));
  EXPECT_FALSE(normal_form(out, g).is_zero());
  EXPECT_GE(g.size(), 3u);
}

TEST(NormalForm, Examples) {
  auto R = ring({"x1", "x2"}, TermOrder::lex);
  auto g = gb(R, {"x1-x2", "x2^2-1"});
  EXPECT_EQ(normal_form(parse_poly<Rational>("x1^2", R), g).to_string(), "1");
  EXPECT_TRUE(normal_form(parse_poly<Rational>("x2^2-1", R), g).is_zero());
  auto h = gb(R, {"x1*x2", "x2^3"});
  EXPECT_EQ(normal_form(P::constant(R, 1), h).to_string(), "1");
}

TEST(Syzygies, Koszul) {
  auto R = ring({"x1", "x2"});
  auto A = Matrix<Rational>::from_rows(R, {polys(R, {"x1", "x2"})}, 2);
  auto S = syzygies(A);
  ASSERT_EQ(S.cols(), 1u);
  EXPECT_TRUE((A * S).is_zero());
  auto expected = Matrix<Rational>::from_rows(R, {polys(R, {"x2"}), polys(R, {"-x1"})}, 1);
  EXPECT_EQ(column_gb(S), column_gb(expected));
}

TEST(Syzygies, IdentityAndRepeated) {
  auto R = ring({"x1", "x2"});
  EXPECT_EQ(syzygies(Matrix<Rational>::identity(R, 2)).cols(), 0u);
  auto A = Matrix<Rational>::from_rows(R, {polys(R, {"x1", "x1"})}, 2);
  auto S = syzygies(A);
  ASSERT_EQ(S.cols(), 1u);
  auto expected = Matrix<Rational>::from_rows(R, {polys(R, {"1"}), polys(R, {"-1"})}, 1);
  EXPECT_EQ(column_gb(S), column_gb(expected));
}

TEST(Syzygies, SoundOnRandomMatrices) {
  auto R = ring({"x1", "x2"});
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(-2, 2), e(0, 2);
  for (int t = 0; t < 20; ++t) {
    Matrix<Rational> A(R, 2, 3);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        std::vector<Term<Rational>> ts;
        for (int k = 0; k < 2; ++k) {
          Monomial m;
          m.e[0] = static_cast<std::uint16_t>(e(rng));
          m.e[1] = static_cast<std::uint16_t>(e(rng));
          ts.push_back({m, Rational(c(rng))});
        }
        A.at(i, j) = P::from_terms(R, ts);
      }
    }
    auto S = syzygies(A);
    ASSERT_TRUE((A * S).is_zero());
  }
}

TEST(Elimination, TTrick) {
  auto R = ring({"t", "x1", "x2"}, TermOrder::block, 1);
  auto e = elim_ideal(gb(R, {"t*x1", "(1-t)*x2"}), 1);
  EXPECT_EQ(lines(e), std::vector<std::string>{"x1*x2"});
  auto f = elim_ideal(gb(R, {"x1-t", "x2-t"}), 1);
  EXPECT_EQ(lines(f), std::vector<std::string>{"x1 - x2"});
  auto g = gb(R, {"x1"});
  EXPECT_EQ(elim_ideal(g, 0), g);
}

TEST(Elimination, OrderMismatch) {
  auto R = ring({"t", "x1"});
  EXPECT_THROW(elim_ideal(gb(R, {"t*x1"}), 1), OrderMismatch);
}

TEST(IdealOps, Examples) {
  auto R = ring({"x1", "x2"});
  auto x1 = polys(R, {"x1"});
  auto x2 = polys(R, {"x2"});
  auto cap = ideal_ops<Rational>(IdealOp::intersect, R, x1, x2);
  EXPECT_EQ(lines(cap), std::vector<std::string>{"x1*x2"});
  // Membership double-check: x1*x2 lies in both ideals.
  EXPECT_TRUE(normal_form(cap.polys()[0], gb(R, {"x1"})).is_zero());
  EXPECT_TRUE(normal_form(cap.polys()[0], gb(R, {"x2"})).is_zero());
  auto q = ideal_ops<Rational>(IdealOp::quotient, R, polys(R, {"x1*x2"}), x2);
  EXPECT_EQ(lines(q), std::vector<std::string>{"x1"});
  auto s = ideal_ops<Rational>(IdealOp::sum, R, x1, x2);
  EXPECT_EQ(s, gb(R, {"x1", "x2"}));
  auto p = ideal_ops<Rational>(IdealOp::product, R, polys(R, {"x1", "x2"}), x2);
  EXPECT_EQ(p, gb(R, {"x1*x2", "x2^2"}));
  auto unit = ideal_ops<Rational>(IdealOp::quotient, R, x1, x1);
  EXPECT_TRUE(unit.is_unit());
}

TEST(IdealOps, IntersectionAgainstProductForCoprime) {
  auto R = ring({"x1", "x2", "x3"});
  auto a = polys(R, {"x1^2", "x2"});
  auto b = polys(R, {"x3 - 1"});
  auto cap = intersect_ideals<Rational>(R, a, b);
  auto prod = ideal_ops<Rational>(IdealOp::product, R, a, b);
  EXPECT_EQ(cap, prod);
}

TEST(Dimension, Examples) {
  auto R = ring({"x1", "x2"});
  EXPECT_EQ(dim_ideal(gb(R, {"x1*x2"})), 1);
  EXPECT_EQ(dim_ideal(gb(R, {"1"})), -1);
  EXPECT_EQ(dim_ideal(ideal_gb<Rational>(R, std::vector<P>{})), 2);
  EXPECT_EQ(height_ideal(gb(R, {"x1", "x2"})), 2);
  EXPECT_EQ(height_ideal(gb(R, {"x1*x2"})), 1);
  EXPECT_EQ(height_ideal(gb(ring({"x1", "x2", "x3"}), {"x1"})), 1);
  EXPECT_THROW(height_ideal(gb(R, {"1"})), ImproperIdeal);
  EXPECT_THROW(height_ideal(ideal_gb<Rational>(R, std::vector<P>{})), ImproperIdeal);
}

TEST(Dimension, AgreesWithBruteForceOracle) {
  auto R = ring({"x1", "x2", "x3"});
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(0, 2), c(-2, 2), n(1, 3);
  for (int t = 0; t < 60; ++t) {
    std::vector<P> gens;
    int k = n(rng);
    for (int g = 0; g < k; ++g) {
      std::vector<Term<Rational>> ts;
      for (int s = 0; s < 2; ++s) {
        Monomial m;
        for (std::size_t v = 0; v < 3; ++v) m.e[v] = static_cast<std::uint16_t>(e(rng));
        ts.push_back({m, Rational(c(rng))});
      }
      gens.push_back(P::from_terms(R, ts));
    }
    auto g = ideal_gb<Rational>(R, gens);
    ASSERT_EQ(dim_ideal(g), brute_dim(g));
    ASSERT_TRUE(is_groebner_oracle(g.polys()));
    if (!g.is_zero() && !g.is_unit()) ASSERT_EQ(height_ideal(g) + dim_ideal(g), 3);
  }
}

TEST(Canonicality, ShuffledRegenerations) {
  auto R = ring({"x1", "x2", "x3"});
  auto base = polys(R, {"x1^2 - x2*x3", "x1*x2 - x3 + 1", "x2^2 - x1"});
  auto ref = ideal_gb<Rational>(R, base);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int t = 0; t < 100; ++t) {
    // Same ideal: shuffle, add random combinations, rescale.
    std::vector<P> gens = base;
    for (int k = 0; k < 2; ++k) {
      P comb(R);
      for (const auto& g : base) comb += g.scaled(Rational(c(rng))) * parse_poly<Rational>("x1 + 2", R);
      gens.push_back(comb);
    }
    for (auto& g : gens) {
      int s = c(rng);
      g = g.scaled(Rational(s == 0 ? 5 : s));
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    ASSERT_EQ(ideal_gb<Rational>(R, gens), ref) << t;
  }
}

TEST(Parametric, RecordsLeadingCoefficient) {
  auto R = Ring::make({"u1"}, {"x1"}, TermOrder::grevlex, 0, CoeffMode::ratfun);
  std::vector<Poly<RatFun>> gens{parse_poly<RatFun>("u1*x1 - 1", R)};
  Certificate cert;
  auto g = ideal_gb<RatFun>(R, gens, &cert);
  EXPECT_EQ(g.polys()[0].to_string(), "x1 - (1)/(u1)");
  EXPECT_TRUE(cert.contains(ParamPoly::variable(0)));
}

TEST(Lift, Membership) {
  auto R = ring({"x1", "x2"});
  auto gens = Matrix<Rational>::from_rows(R, {polys(R, {"x1", "x2"})}, 2);
  auto target = Matrix<Rational>::from_rows(R, {polys(R, {"x1^2 + x2^3", "1"})}, 2);
  std::size_t failed = 99;
  EXPECT_FALSE(lift(gens, target, nullptr, &failed).has_value());
  EXPECT_EQ(failed, 1u);
  auto ok = Matrix<Rational>::from_rows(R, {polys(R, {"x1^2 + x2^3"})}, 1);
  auto q = lift(gens, ok);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(gens * *q, ok);
}
