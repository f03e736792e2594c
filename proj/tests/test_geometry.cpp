#include <gtest/gtest.h>

#include "nkt/curvature.hpp"
#include "support/random_models.hpp"

using namespace nkt;

namespace {

const Rational half(1, 2);

FrameModel heisenberg5() {
  FrameModel m = empty_model(5, 4);
  set_bracket(m, 0, 1, 4, 2);
  set_bracket(m, 2, 3, 4, 2);
  m.phi = standard_phi(5, 4);
  return m;
}

// Independent oracle for unimodular 3-dim algebras with [e2,e3] = c1 e1,
// [e3,e1] = c2 e2, [e1,e2] = c3 e3: mu_i = (c_j + c_k - c_i)/2 and
// Ric(e_i, e_i) = 2 mu_j mu_k, with no off-diagonal terms.
std::array<Rational, 3> milnor_ricci(const Rational& c1, const Rational& c2, const Rational& c3) {
  Rational mu1 = (-c1 + c2 + c3) / 2, mu2 = (c1 - c2 + c3) / 2, mu3 = (c1 + c2 - c3) / 2;
  return {2 * mu2 * mu3, 2 * mu1 * mu3, 2 * mu1 * mu2};
}

}  // namespace

TEST(LeviCivita, Examples) {
  Tensor<3> flat = levi_civita(abelian_model(3));
  EXPECT_EQ(max_abs(flat), 0);

  Tensor<3> g = levi_civita(nk_lie_group_3d(half));
  EXPECT_EQ(g(0, 2, 1), Rational(-3, 2));
  EXPECT_EQ(g(0, 2, 0), 0);
  EXPECT_EQ(g(0, 2, 2), 0);

  Tensor<3> sasakian = levi_civita(nk_lie_group_3d(0));
  EXPECT_EQ(sasakian(0, 1, 2), 1);
  EXPECT_EQ(sasakian(1, 0, 2), -1);
}

TEST(LeviCivita, RejectsInvalidBrackets) {
  FrameModel m = abelian_model(3);
  m.c(0, 1, 2) = 1;  // no antisymmetric partner
  EXPECT_THROW(levi_civita(m), error);

  // [e1,e2] = e3, [e1,e3] = e1 violates Jacobi.
  FrameModel bad = abelian_model(3);
  set_bracket(bad, 0, 1, 2, 1);
  set_bracket(bad, 0, 2, 0, 1);
  try {
    levi_civita(bad);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_model);
  }

  FrameModel even = empty_model(4, 3);
  EXPECT_THROW(validate_structure(even), error);
}

TEST(Curvature, AbelianIsFlat) {
  CurvatureData d = curvature(abelian_model(5));
  EXPECT_EQ(max_abs(d.riemann), 0);
  EXPECT_EQ(max_abs(d.ricci), 0);
  EXPECT_EQ(d.scalar, 0);
}

TEST(Curvature, NkGroupAtHalf) {
  CurvatureData d = curvature(nk_lie_group_3d(half));
  EXPECT_EQ(d.riemann(0, 2, 2, 0), Rational(3, 4));
  Matrix expected(3);
  expected(2, 2) = Rational(3, 2);
  EXPECT_EQ(d.ricci, expected);
  EXPECT_EQ(d.q, d.ricci);
  EXPECT_EQ(d.scalar, Rational(3, 2));
}

TEST(Curvature, MatchesMilnorFormulas) {
  test_support::ModelGenerator gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    Rational c1 = gen.small(), c2 = gen.small(), c3 = gen.small();
    CurvatureData d = curvature(gen.unimodular(c1, c2, c3));
    auto ric = milnor_ricci(c1, c2, c3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(d.ricci(i, j), i == j ? ric[i] : Rational(0));
    // In dimension three K(e_i, e_j) = (Ric_ii + Ric_jj - Ric_kk) / 2.
    EXPECT_EQ(d.riemann(0, 2, 2, 0), (ric[0] + ric[2] - ric[1]) / 2);
    EXPECT_EQ(d.riemann(0, 1, 1, 0), (ric[0] + ric[1] - ric[2]) / 2);
  }
}

TEST(HTensor, Examples) {
  Matrix h = h_tensor(nk_lie_group_3d(half));
  Matrix expected(3);
  expected(0, 0) = half;
  expected(1, 1) = -half;
  EXPECT_EQ(h, expected);
  EXPECT_EQ(max_abs(h_tensor(nk_lie_group_3d(0))), 0);
  EXPECT_EQ(max_abs(h_tensor(abelian_model(3))), 0);
}

TEST(ContactAudit, NkGroupPasses) {
  for (Rational lambda : {Rational(0), half, Rational(1), Rational(3, 5), Rational(-2), Rational(7, 3)}) {
    AuditReport report = contact_audit(nk_lie_group_3d(lambda));
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << to_string(lambda) << " " << c.name << " " << c.detail;
  }
  EXPECT_TRUE(contact_audit(heisenberg5()).passed());
}

TEST(ContactAudit, ReportsFirstViolation) {
  FrameModel m = nk_lie_group_3d(half);
  m.phi = Matrix(3);
  AuditReport report = contact_audit(m);
  EXPECT_FALSE(report.passed());
  const AuditCheck* sq = report.find("phi_squared");
  ASSERT_NE(sq, nullptr);
  EXPECT_FALSE(sq->passed);
  EXPECT_EQ(sq->component, (std::vector<std::size_t>{1, 1}));

  AuditReport flat = contact_audit(abelian_model(3));
  EXPECT_TRUE(flat.find("phi_squared")->passed);
  EXPECT_TRUE(flat.find("compatibility")->passed);
  EXPECT_FALSE(flat.find("contact")->passed);
}

TEST(NullityFit, Examples) {
  NullityFit fit = nullity_fit(nk_lie_group_3d(half));
  EXPECT_EQ(fit.kappa, Rational(3, 4));
  EXPECT_EQ(fit.mu, 0);
  EXPECT_TRUE(fit.exact);
  EXPECT_TRUE(fit.ricci_xi_verified);

  NullityFit sasakian = nullity_fit(nk_lie_group_3d(0));
  EXPECT_EQ(sasakian.kappa, 1);
  EXPECT_EQ(sasakian.mu, 0);
  EXPECT_TRUE(sasakian.exact);

  NullityFit flat = nullity_fit(abelian_model(3));
  EXPECT_EQ(flat.kappa, 0);
  EXPECT_EQ(flat.mu, 0);
  EXPECT_TRUE(flat.exact);

  NullityFit heis = nullity_fit(heisenberg5());
  EXPECT_EQ(heis.kappa, 1);
  EXPECT_TRUE(heis.exact);
}

TEST(NullityFit, UnimodularContactGroupsAreKappaMuSpaces) {
  // [e1,e2] = 2 e3, [e2,e3] = p e1, [e3,e1] = q e2 is a (kappa, mu)-space with
  // kappa = 1 - ((q - p)/2)^2 and mu = 2 - (p + q).
  test_support::ModelGenerator gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    Rational p = gen.small(), q = gen.small();
    FrameModel m = gen.unimodular(p, q, 2);
    ASSERT_TRUE(contact_audit(m).passed());
    NullityFit fit = nullity_fit(m);
    EXPECT_TRUE(fit.exact);
    EXPECT_EQ(fit.kappa, 1 - (q - p) * (q - p) / 4);
    if (p != q) {
      EXPECT_EQ(fit.mu, 2 - p - q);
    }
  }
}

TEST(NullityFit, InexactModel) {
  test_support::ModelGenerator gen(1);
  NullityFit fit = nullity_fit(gen.semidirect(1, 2, 0, 3));
  EXPECT_FALSE(fit.exact);
  EXPECT_GT(fit.max_residual, 0);
}

TEST(NkGroup, CurvatureRelations) {
  for (Rational lambda : {Rational(0), half, Rational(1), Rational(3, 5)}) {
    FrameModel m = nk_lie_group_3d(lambda);
    CurvatureData d = curvature(m);
    Rational kappa = 1 - lambda * lambda;
    EXPECT_EQ(nk_relation_residual(m, d, kappa), 0);
    EXPECT_EQ(ricci_formula_residual(m, d, kappa), 0);
    EXPECT_EQ(d.scalar, 2 * (kappa));  // 2n(2n - 2 + kappa) at n = 1
    EXPECT_EQ(d.ricci(2, 2), 2 * kappa);
  }
  FrameModel m = nk_lie_group_3d(1);
  EXPECT_EQ(curvature(m).ricci(2, 2), 0);
}

TEST(FrameIdentities, HoldOnRandomModels) {
  test_support::ModelGenerator gen(2024);
  for (int trial = 0; trial < 50; ++trial) {
    FrameModel m = gen.next();
    CurvatureData d = curvature(m);
    IdentityResiduals r = identity_residuals(m, d);
    EXPECT_EQ(r.max(), 0) << write_model(m);
  }
  EXPECT_EQ(identity_residuals(heisenberg5(), curvature(heisenberg5())).max(), 0);
}

TEST(FrameIdentities, FrameChangeKeepsScalarCurvature) {
  test_support::ModelGenerator gen(77);
  for (int trial = 0; trial < 20; ++trial) {
    FrameModel m = gen.next();
    FrameModel rotated = test_support::ModelGenerator::rotate_about_xi(m, gen.small() + Rational(1, 7));
    EXPECT_EQ(curvature(m).scalar, curvature(rotated).scalar);
  }
}

TEST(ModelFile, RoundTrip) {
  test_support::ModelGenerator gen(9);
  for (int trial = 0; trial < 10; ++trial) {
    FrameModel m = gen.next();
    FrameModel back = parse_model_text(write_model(m));
    EXPECT_EQ(back, m);
  }
  FrameModel nk = nk_lie_group_3d(half);
  EXPECT_EQ(parse_model_text(write_model(nk)).name, nk.name);
}

TEST(ModelFile, ParsesDocumentedExample) {
  FrameModel m = parse_model_text(R"(# nk group at lambda = 1/2
dim 3
xi 3
phi
0 -1 0
1 0 0
0 0 0
bracket
1 2 3 : 2
2 3 1 : 1/2
3 1 2 : 3/2
2 1 3 : -2   # mirror entries are accepted when consistent
)");
  EXPECT_EQ(m, nk_lie_group_3d(half));
}

TEST(ModelFile, Rejections) {
  auto code = [](const std::string& text) {
    try {
      parse_model_text(text);
    } catch (const error& e) {
      return e.code();
    }
    return errc::invalid_argument;
  };
  const std::string head = "dim 3\nxi 3\nphi\n0 -1 0\n1 0 0\n0 0 0\nbracket\n";
  EXPECT_EQ(code(head + "1 2 3 : 2\n2 1 3 : 2\n"), errc::invalid_model);
  EXPECT_EQ(code(head + "1 1 3 : 2\n"), errc::invalid_model);
  EXPECT_EQ(code(head + "1 2 : 2\n"), errc::parse_error);
  EXPECT_EQ(code(head + "1 2 4 : 2\n"), errc::parse_error);
  EXPECT_EQ(code(head + "1 2 3 : x\n"), errc::parse_error);
  EXPECT_EQ(code("dim 3\nxi 3\nphi\n0 -1\n"), errc::parse_error);
  EXPECT_EQ(code("xi 3\n"), errc::parse_error);
}
