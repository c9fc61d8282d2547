#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;

namespace {

const LieAlgebra& alg(const std::string& name) { return catalog_algebra(name); }

Tensor2 random_tensor(const Space& left, const Space& right, Rng& rng) {
  return Tensor2(left, right, rng.matrix(left.dim(), right.dim()));
}

Tensor3 simple3(const Space& s, std::size_t a, std::size_t b, std::size_t c, const Scalar& v) {
  Tensor3 t(s);
  t(a, b, c) = v;
  return t;
}

}  // namespace

TEST(Twist, Examples) {
  const Space s = alg("aff1").space();
  EXPECT_EQ(twist(Tensor2::simple(s, 0, 1)), Tensor2::simple(s, 1, 0));
  const Tensor2 sym = Tensor2::simple(s, 0, 1) + Tensor2::simple(s, 1, 0);
  EXPECT_EQ(twist(sym), sym);
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const Tensor2 r = random_tensor(s, s, rng);
    EXPECT_EQ(twist(twist(r)), r);
  }
  EXPECT_THROW(twist(Tensor2(s, alg("sl2").space(), Matrix(2, 3))), DimensionError);
}

TEST(PmParts, Examples) {
  const Space s = alg("aff1").space();
  const Tensor2 w = Tensor2::wedge(s, 0, 1);
  EXPECT_EQ(pm_parts(w).plus, Tensor2::zero(s));
  EXPECT_EQ(pm_parts(w).minus, w);
  const PmParts p = pm_parts(Tensor2::simple(s, 0, 1));
  EXPECT_EQ(p.plus, Scalar(1, 2) * (Tensor2::simple(s, 0, 1) + Tensor2::simple(s, 1, 0)));
  EXPECT_EQ(p.minus, Scalar(1, 2) * w);
  Rng rng(22);
  for (int t = 0; t < 50; ++t) {
    const Tensor2 r = random_tensor(s, s, rng);
    const PmParts q = pm_parts(r);
    EXPECT_EQ(q.plus + q.minus, r);
    EXPECT_TRUE(is_symmetric(q.plus));
    EXPECT_TRUE(is_skew(q.minus));
  }
}

TEST(Hat, Examples) {
  const Space s = alg("aff1").space();
  EXPECT_TRUE(hat(Tensor2::zero(s)).matrix().is_zero());
  const LinearMap h = hat(Tensor2::simple(s, 0, 1));
  EXPECT_EQ(h.source(), s.dual());
  EXPECT_EQ(h.target(), s);
  EXPECT_EQ(h(unit_vector(2, 0)), unit_vector(2, 1));
  EXPECT_TRUE(is_zero(h(unit_vector(2, 1))));
}

TEST(Check, Examples) {
  const Space v = Space::primal("V", 2);
  EXPECT_EQ(check(LinearMap::zero(v, v)), Tensor2::zero(v.dual(), v));
  const Tensor2 id = check(LinearMap::identity(v));
  EXPECT_EQ(id.left(), v.dual());
  EXPECT_EQ(id.coeffs(), Matrix::identity(2));
}

TEST(Duality, RandomIdentities) {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const LieAlgebra& g = witness::random_algebra(rng);
    const auto V = witness::random_module(g, rng).rep;
    const Tensor2 r = random_tensor(V.space, g.space(), rng);
    EXPECT_EQ(check(hat(r)), r);
    const LinearMap a(V.space, g.space(), rng.matrix(g.dim(), V.dim()));
    EXPECT_EQ(hat(check(a)), a);
    const Tensor2 sq = random_tensor(g.space(), g.space(), rng);
    EXPECT_EQ(hat(twist(sq)), dual_map(hat(sq)));
    EXPECT_EQ(dual_map(dual_map(hat(sq))), hat(sq));
    EXPECT_EQ(check(tilde_map(a)), tilde_tensor(check(a)));
    // linearity of hat
    const Scalar c = rng.small_rational();
    EXPECT_EQ(hat(c * r + r).matrix(), (c + 1) * hat(r).matrix());
  }
}

TEST(MapPmParts, Compatibility) {
  Rng rng(24);
  const Space s = alg("sl2").space();
  for (int t = 0; t < 50; ++t) {
    const Tensor2 r = random_tensor(s, s, rng);
    const MapPmParts m = map_pm_parts(hat(r));
    EXPECT_EQ(m.plus, hat(pm_parts(r).plus));
    EXPECT_EQ(m.minus, hat(pm_parts(r).minus));
    EXPECT_EQ(m.plus + m.minus, hat(r));
  }
  const Matrix sym{{1, 2, 0}, {2, 3, 1}, {0, 1, 5}};
  const MapPmParts q = map_pm_parts(LinearMap(s.dual(), s, sym));
  EXPECT_EQ(q.plus.matrix(), sym);
  EXPECT_TRUE(q.minus.matrix().is_zero());
  EXPECT_THROW(map_pm_parts(LinearMap(s, s, sym)), DimensionError);
}

TEST(Tilde, TensorEmbedding) {
  const Space v = Space::primal("V", 2), w = Space::primal("W", 3);
  EXPECT_TRUE(tilde_tensor(Tensor2::zero(v, w)).coeffs().is_zero());
  Matrix m(2, 3);
  m(0, 0) = 1;
  const Tensor2 t = tilde_tensor(Tensor2(v, w, m));
  EXPECT_EQ(t.coeffs().rows(), 5U);
  EXPECT_EQ(t.coeffs()(0, 2), Scalar(1));
  EXPECT_EQ(detail::nonzeros(t.coeffs()).size(), 1U);
  Rng rng(25);
  for (int k = 0; k < 30; ++k) {
    const Tensor2 a = random_tensor(v, w, rng), b = random_tensor(v, w, rng);
    EXPECT_EQ(a == b, tilde_tensor(a) == tilde_tensor(b));
  }
}

TEST(Tilde, MapBlocksAndSymmetricPart) {
  const Space v = Space::primal("V", 2), w = Space::primal("W", 3);
  EXPECT_TRUE(tilde_map(LinearMap::zero(v, w)).matrix().is_zero());
  Rng rng(26);
  const LieAlgebra& g = alg("sl2");
  for (int k = 0; k < 30; ++k) {
    const auto V = witness::random_module(g, rng).rep;
    const LinearMap beta(V.space, g.space(), rng.matrix(3, V.dim()));
    const LinearMap bt = tilde_map(beta);
    const LinearMap plus = map_pm_parts(bt).plus;
    const std::size_t m = V.dim();
    for (std::size_t i = 0; i < m; ++i) {
      // V-part: (v, 0) -> (0, beta v / 2)
      const Vector out = plus(unit_vector(m + 3, i));
      for (std::size_t j = 0; j < m; ++j) EXPECT_TRUE(is_zero(out[j]));
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(out[m + j], beta.matrix()(j, i) / 2);
    }
    for (std::size_t a = 0; a < 3; ++a) {
      // g*-part: (0, a*) -> (beta* a* / 2, 0)
      const Vector out = plus(unit_vector(m + 3, m + a));
      for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(out[j], beta.matrix()(a, j) / 2);
      for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(is_zero(out[m + j]));
    }
  }
}

TEST(YbBrackets, ZeroAndSl2) {
  const LieAlgebra& s = alg("sl2");
  const Tensor2 z = Tensor2::zero(s.space());
  const YbBrackets zb = yb_brackets(s, z, z);
  EXPECT_TRUE(zb.r12_s13.is_zero() && zb.r12_s23.is_zero() && zb.r13_s23.is_zero());
  const Tensor2 ef = Tensor2::simple(s.space(), 0, 2);
  const YbBrackets b = yb_brackets(s, ef, ef);
  EXPECT_TRUE(b.r12_s13.is_zero());
  EXPECT_TRUE(b.r13_s23.is_zero());
  EXPECT_EQ(b.r12_s23, simple3(s.space(), 0, 1, 2, -1));
}

TEST(YbBrackets, BilinearAndMatchesOracle) {
  Rng rng(27);
  for (int t = 0; t < 40; ++t) {
    const LieAlgebra& g = witness::random_algebra(rng);
    const Tensor2 r = random_tensor(g.space(), g.space(), rng), s = random_tensor(g.space(), g.space(), rng);
    const YbBrackets b = yb_brackets(g, r, s), b2 = yb_brackets(g, Scalar(2) * r, s);
    EXPECT_EQ(b2.r12_s13, Scalar(2) * b.r12_s13);
    EXPECT_EQ(b2.r12_s23, Scalar(2) * b.r12_s23);
    EXPECT_EQ(b2.r13_s23, Scalar(2) * b.r13_s23);
    const YbBrackets bs = yb_brackets(g, r, r + s);
    const YbBrackets br = yb_brackets(g, r, r);
    EXPECT_EQ(bs.r12_s23, br.r12_s23 + b.r12_s23);
    // [r12, r13] etc. against the enveloping oracle.
    const oracle::Element3 r12 = oracle::embed(r.coeffs(), 0, 1), r13 = oracle::embed(r.coeffs(), 0, 2),
                           r23 = oracle::embed(r.coeffs(), 1, 2);
    EXPECT_EQ(oracle::flatten(br.r12_s13), oracle::commutator(g, r12, r13));
    EXPECT_EQ(oracle::flatten(br.r12_s23), oracle::commutator(g, r12, r23));
    EXPECT_EQ(oracle::flatten(br.r13_s23), oracle::commutator(g, r13, r23));
  }
}

TEST(ExtRhs, MatchesEnvelopingOracle) {
  const LieAlgebra& s = alg("sl2");
  EXPECT_TRUE(ext_rhs(s, Tensor2::zero(s.space())).is_zero());
  const Tensor2 ef = Tensor2::simple(s.space(), 0, 2);
  EXPECT_EQ(oracle::flatten(ext_rhs(s, ef)), oracle::ecybe_rhs(s, ef.coeffs()));
  Rng rng(28);
  for (int t = 0; t < 40; ++t) {
    const LieAlgebra& g = witness::random_algebra(rng);
    Matrix m = rng.matrix(g.dim(), g.dim());
    if (t % 2) m = m + m.transpose();
    const Tensor2 r(g.space(), g.space(), m);
    EXPECT_EQ(oracle::flatten(ext_rhs(g, r)), oracle::ecybe_rhs(g, m));
  }
}

TEST(ExtRhs, DependsOnlyOnSymmetricPart) {
  Rng rng(29);
  for (int t = 0; t < 30; ++t) {
    const LieAlgebra& g = witness::random_algebra(rng);
    const Tensor2 r(g.space(), g.space(), rng.matrix(g.dim(), g.dim()));
    EXPECT_EQ(ext_rhs(g, r), ext_rhs(g, pm_parts(r).plus));
    EXPECT_TRUE(ext_rhs(g, pm_parts(r).minus).is_zero());
  }
}

TEST(RotateSummands, MovesBlocks) {
  const Space a = Space::primal("A", 1), b = Space::primal("B", 2);
  const Space ab = direct_sum(a, b);
  const Tensor2 t = Tensor2::simple(ab, 0, 1);
  const Tensor2 r = rotate_summands(t, 1);
  EXPECT_EQ(r.left(), direct_sum(b, a));
  EXPECT_EQ(r.coeffs()(2, 0), Scalar(1));
  EXPECT_EQ(rotate_summands(r, 1), t);
}
