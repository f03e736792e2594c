#include <gtest/gtest.h>

#include "nkt/t_tensor.hpp"
#include "support/random_models.hpp"

using namespace nkt;

namespace {

const Rational half(1, 2);

NumericCoeffs random_coeffs(test_support::ModelGenerator& gen) {
  NumericCoeffs a;
  for (auto& x : a) x = gen.small();
  return a;
}

NumericCoeffs unit(std::size_t i) {
  NumericCoeffs a{};
  a[i] = 1;
  return a;
}

}  // namespace

TEST(Presets, NamesRoundTrip) {
  for (PresetName p : all_presets) {
    EXPECT_EQ(preset_from_name(preset_info(p).name), p);
    EXPECT_EQ(preset_from_name(preset_info(p).label), p);
  }
  EXPECT_EQ(preset_from_name("W0*"), PresetName::W0_star);
  EXPECT_FALSE(preset_from_name("W10"));
}

TEST(Presets, CatalogRows) {
  auto t = [](long p, long q) { return RationalExpr(Rational(p, q)); };
  const RationalExpr n = RationalExpr::variable(Var::n);
  TCoeffs riemann = preset(PresetName::riemann);
  EXPECT_EQ(riemann[0], t(1, 1));
  for (std::size_t i = 1; i < 8; ++i) EXPECT_TRUE(riemann[i].is_zero());

  TCoeffs v = preset(PresetName::V);
  EXPECT_EQ(v[7], -1 / (2 * n * (2 * n + 1)));

  TCoeffs w0 = preset(PresetName::W0), w0s = preset(PresetName::W0_star);
  EXPECT_EQ(w0[1], -1 / (2 * n));
  EXPECT_EQ(w0[5], 1 / (2 * n));
  EXPECT_EQ(w0s[1], 1 / (2 * n));
  EXPECT_EQ(w0s[5], -1 / (2 * n));
  EXPECT_TRUE(w0s.has_flag("reconstructed"));

  EXPECT_EQ(preset_as_printed(PresetName::W0_star), preset_as_printed(PresetName::W0));
  EXPECT_TRUE(preset_as_printed(PresetName::W0_star).has_flag("duplicate-row"));
  EXPECT_EQ(preset_as_printed(PresetName::W9)[3], -preset(PresetName::W9)[3]);

  EXPECT_TRUE(preset(PresetName::C_star).has_flag("free-parameters"));
  EXPECT_THROW(evaluate_coeffs(preset(PresetName::C_star), 1), error);
  NumericCoeffs cs = evaluate_coeffs(preset(PresetName::C_star),
                                     Bindings{{Var::n, Rational(1)}, {Var::a0, Rational(1)}, {Var::a1, Rational(0)}});
  EXPECT_EQ(cs[0], 1);
  EXPECT_EQ(cs[7], Rational(-1, 6));
}

TEST(TComponents, LinearInCoefficients) {
  test_support::ModelGenerator gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    CurvatureData d = curvature(gen.next());
    NumericCoeffs a = random_coeffs(gen), b = random_coeffs(gen), sum;
    Rational s = gen.small();
    for (std::size_t i = 0; i < 8; ++i) sum[i] = a[i] + s * b[i];
    EXPECT_EQ(t_components(d, sum), t_components(d, a) + s * t_components(d, b));
  }
}

TEST(TComponents, RiemannPresetIsRiemann) {
  test_support::ModelGenerator gen(12);
  for (int trial = 0; trial < 10; ++trial) {
    CurvatureData d = curvature(gen.next());
    EXPECT_EQ(t_components(d, evaluate_coeffs(preset(PresetName::riemann), 1)), d.riemann);
  }
}

TEST(TComponents, ExpandedFormAgrees) {
  test_support::ModelGenerator gen(13);
  for (int trial = 0; trial < 10; ++trial) {
    CurvatureData d = curvature(gen.next());
    NumericCoeffs a = random_coeffs(gen);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t l = 0; l < 3; ++l)
            EXPECT_EQ(t_scalar(d, a, i, j, k, l), t_scalar_expanded(d, a, i, j, k, l));
  }
}

TEST(TComponents, SkewWhenCoefficientsPair) {
  test_support::ModelGenerator gen(14);
  for (int trial = 0; trial < 10; ++trial) {
    CurvatureData d = curvature(gen.next());
    NumericCoeffs a = random_coeffs(gen);
    a[2] = -a[1];
    a[5] = -a[4];
    a[3] = a[6] = 0;
    Tensor<4> t = t_components(d, a);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t l = 0; l < 3; ++l) EXPECT_EQ(t(i, j, k, l), -t(j, i, k, l));
  }
}

// On an N(kappa) model, g(T(X, xi) xi, W) collapses to
// (a0 k + 2nk a1 + a7 r) g + (-a0 k + 2nk (a2 + a3 + a5 + a6) - a7 r) eta eta + a4 S.
TEST(TComponents, XiInsertionIdentity) {
  test_support::ModelGenerator gen(15);
  for (Rational lambda : {Rational(0), half, Rational(3, 5), Rational(2)}) {
    FrameModel m = nk_lie_group_3d(lambda);
    CurvatureData d = curvature(m);
    const Rational k = 1 - lambda * lambda, r = d.scalar, two_nk = 2 * k;
    for (int trial = 0; trial < 5; ++trial) {
      NumericCoeffs a = random_coeffs(gen);
      Tensor<4> t = t_components(d, a);
      Rational g_part = a[0] * k + two_nk * a[1] + a[7] * r;
      Rational eta_part = -a[0] * k + two_nk * (a[2] + a[3] + a[5] + a[6]) - a[7] * r;
      for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t w = 0; w < 3; ++w) {
          Rational expected = a[4] * d.ricci(x, w);
          if (x == w) expected += g_part;
          if (x == m.xi && w == m.xi) expected += eta_part;
          EXPECT_EQ(t(x, m.xi, m.xi, w), expected) << to_string(lambda);
        }
    }
  }
}

TEST(TComponents, FrozenValuesOnNkHalf) {
  FrameModel m = nk_lie_group_3d(half);
  CurvatureData d = curvature(m);
  auto at = [](PresetName p) { return evaluate_coeffs(preset(p), 1); };
  EXPECT_EQ(t_scalar(d, at(PresetName::L), 2, 0, 0, 2), Rational(-3, 4));

  Vector e1 = basis_vector(3, 0);
  EXPECT_EQ(t_apply(d, at(PresetName::V), 0, 2, 2), half * e1);
  EXPECT_EQ(t_apply(d, at(PresetName::riemann), 0, 2, 2), Rational(3, 4) * e1);

  Tensor<4> t = t_components(d, at(PresetName::M));
  Vector x = basis_vector(3, 0) + basis_vector(3, 1);
  Vector xi = basis_vector(3, 2);
  Vector sum = t_apply(d, at(PresetName::M), 0, 2, 2) + t_apply(d, at(PresetName::M), 1, 2, 2);
  EXPECT_EQ(t_apply(t, x, xi, xi), sum);
}

TEST(Derivations, FrozenValuesOnNkHalf) {
  CurvatureData d = curvature(nk_lie_group_3d(half));
  NumericCoeffs w1 = evaluate_coeffs(preset(PresetName::W1), 1);
  EXPECT_EQ(t_dot_riemann(d, w1), Rational(9, 4));
  EXPECT_EQ(t_dot_riemann(d, w1, DerivationVariant::standard), Rational(9, 4));
  EXPECT_EQ(t_dot_ricci(d, evaluate_coeffs(preset(PresetName::P), 1)), Rational(9, 8));
}

TEST(Derivations, VanishForRiemannOnUnitSphere) {
  // On constant curvature 1, R(xi, X) = xi ^ X lies in so(3) and kills R and S.
  test_support::ModelGenerator gen(0);
  CurvatureData d = curvature(gen.unimodular(2, 2, 2));
  NumericCoeffs r = unit(0);
  EXPECT_EQ(t_dot_riemann(d, r, DerivationVariant::standard), 0);
  EXPECT_EQ(t_dot_ricci(d, r), 0);
  // The printed fourth term does not share that property.
  EXPECT_NE(t_dot_riemann(d, r, DerivationVariant::printed), 0);
}

TEST(Derivations, AllZeroCoefficientsGiveZero) {
  test_support::ModelGenerator gen(16);
  CurvatureData d = curvature(gen.next());
  NumericCoeffs zero{};
  EXPECT_EQ(t_dot_riemann(d, zero), 0);
  EXPECT_EQ(t_dot_ricci(d, zero), 0);
}

TEST(Flatness, XiFlatOnNkHalf) {
  FrameModel m = nk_lie_group_3d(half);
  EXPECT_EQ(flatness_residual(m, preset(PresetName::W7), ConditionKind::xi_t_flat), 0);
  EXPECT_NE(flatness_residual(m, preset(PresetName::L), ConditionKind::xi_t_flat), 0);
  ResidualOptions strict;
  strict.xi_strict = true;
  EXPECT_NE(flatness_residual(m, preset(PresetName::W7), ConditionKind::xi_t_flat, strict), 0);
}

TEST(Flatness, AbelianModelIsFlatForEveryPreset) {
  FrameModel m = abelian_model(3);
  for (PresetName p : all_presets) {
    TCoeffs c = preset(p);
    if (c.has_flag("free-parameters")) continue;
    for (ConditionKind kind : all_conditions) EXPECT_EQ(flatness_residual(m, c, kind), 0);
  }
}

TEST(Flatness, ConditionNames) {
  for (ConditionKind kind : all_conditions) EXPECT_EQ(condition_from_name(to_string(kind)), kind);
  EXPECT_EQ(condition_from_name("tdotS"), ConditionKind::t_dot_s);
  EXPECT_FALSE(condition_from_name("flatish"));
}
