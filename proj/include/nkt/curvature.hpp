#pragma once

// Connection, curvature and contact-structure checks for frame models.
//
// Conventions:
//   gamma(i, j, k) = g(nabla_{e_i} e_j, e_k)            (Koszul formula)
//   R(X, Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y]
//   riemann(i, j, k, l) = g(R(e_i, e_j) e_k, e_l)
//   S(X, Y) = sum_i g(R(e_i, X) Y, e_i)
//   h = (1/2) L_xi phi
//   2 deta(X, Y) = X eta(Y) - Y eta(X) - eta([X, Y]), contact: deta(X, Y) = g(X, phi Y)

#include <optional>
#include <string>
#include <vector>

#include "nkt/frame_model.hpp"

namespace nkt {

struct CurvatureData {
  std::size_t dim = 0;
  std::size_t xi = 0;
  Tensor<3> gamma;
  Tensor<4> riemann;
  Matrix ricci;
  Matrix q;
  Rational scalar;
  Matrix h;

  /// Frame components of R(e_i, e_j) v.
  Vector riemann_apply(std::size_t i, std::size_t j, const Vector& v) const {
    Vector out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (v(k) == 0) continue;
      for (std::size_t l = 0; l < dim; ++l) out(l) += v(k) * riemann(i, j, k, l);
    }
    return out;
  }

  Rational ricci_form(const Vector& x, const Vector& y) const {
    Rational out = 0;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) out += x(a) * ricci(a, b) * y(b);
    return out;
  }
};

/// Levi-Civita connection coefficients; throws InvalidModel for a bad bracket.
inline Tensor<3> levi_civita(const FrameModel& m) {
  validate_structure(m);
  Tensor<3> gamma(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j)
      for (std::size_t k = 0; k < m.dim; ++k)
        gamma(i, j, k) = (m.c(i, j, k) - m.c(j, k, i) + m.c(k, i, j)) / 2;
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j)
      for (std::size_t k = 0; k < m.dim; ++k) {
        if (gamma(i, j, k) - gamma(j, i, k) != m.c(i, j, k)) throw std::logic_error("connection has torsion");
        if (gamma(i, j, k) != -gamma(i, k, j)) throw std::logic_error("connection is not metric");
      }
  return gamma;
}

/// h = (1/2) L_xi phi, where (L_xi phi) X = [xi, phi X] - phi [xi, X].
inline Matrix h_tensor(const FrameModel& m) {
  validate_structure(m);
  Matrix h(m.dim);
  for (std::size_t j = 0; j < m.dim; ++j)
    for (std::size_t k = 0; k < m.dim; ++k) {
      Rational sum = 0;
      for (std::size_t i = 0; i < m.dim; ++i) sum += m.phi(i, j) * m.c(m.xi, i, k) - m.c(m.xi, j, i) * m.phi(k, i);
      h(k, j) = sum / 2;
    }
  return h;
}

inline CurvatureData curvature(const FrameModel& m) {
  CurvatureData d;
  d.dim = m.dim;
  d.xi = m.xi;
  d.gamma = levi_civita(m);
  d.h = h_tensor(m);
  const auto& G = d.gamma;
  const std::size_t n = m.dim;
  d.riemann = Tensor<4>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational sum = 0;
          for (std::size_t p = 0; p < n; ++p)
            sum += G(j, k, p) * G(i, p, l) - G(i, k, p) * G(j, p, l) - m.c(i, j, p) * G(p, k, l);
          d.riemann(i, j, k, l) = sum;
        }
  d.ricci = Matrix(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) d.ricci(j, k) += d.riemann(i, j, k, i);
  d.q = d.ricci;
  d.scalar = 0;
  for (std::size_t i = 0; i < n; ++i) d.scalar += d.q(i, i);
  return d;
}

struct AuditCheck {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> component;  // first violating component, 1-based
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const AuditCheck* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

inline std::string render_component(const std::vector<std::size_t>& idx) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
  return out + ")";
}

/// Compares two matrices entrywise, recording the first mismatch.
inline AuditCheck compare_matrices(std::string name, const Matrix& actual, const Matrix& expected) {
  AuditCheck check{std::move(name), true, {}, ""};
  for (std::size_t i = 0; i < actual.dim() && check.passed; ++i)
    for (std::size_t j = 0; j < actual.dim(); ++j)
      if (actual(i, j) != expected(i, j)) {
        check.passed = false;
        check.component = {i + 1, j + 1};
        check.detail = "component " + render_component(check.component) + " is " + to_string(actual(i, j)) +
                       ", expected " + to_string(expected(i, j));
        break;
      }
  return check;
}

}  // namespace detail

/// Checks the contact metric axioms on the frame; never throws for
/// well-sized inputs, failures are recorded in the report.
inline AuditReport contact_audit(const FrameModel& m) {
  AuditReport report;
  const std::size_t n = m.dim;
  Matrix eta_xi(n);
  eta_xi(m.xi, m.xi) = 1;
  Matrix minus_id_plus(n);
  Matrix id_minus(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational delta = i == j ? 1 : 0;
      minus_id_plus(i, j) = -delta + eta_xi(i, j);
      id_minus(i, j) = delta - eta_xi(i, j);
    }

  bool structure_ok = true;
  try {
    validate_structure(m);
  } catch (const error& e) {
    structure_ok = false;
    report.checks.push_back({"structure", false, {}, e.what()});
  }
  if (structure_ok) report.checks.push_back({"structure", true, {}, ""});

  report.checks.push_back(detail::compare_matrices("phi_squared", m.phi * m.phi, minus_id_plus));

  AuditCheck phi_xi{"phi_xi", true, {}, ""};
  for (std::size_t i = 0; i < n; ++i)
    if (m.phi(i, m.xi) != 0) {
      phi_xi = {"phi_xi", false, {i + 1}, "phi(xi) has nonzero component " + std::to_string(i + 1)};
      break;
    }
  report.checks.push_back(phi_xi);

  AuditCheck eta_phi{"eta_phi", true, {}, ""};
  for (std::size_t j = 0; j < n; ++j)
    if (m.phi(m.xi, j) != 0) {
      eta_phi = {"eta_phi", false, {j + 1}, "eta(phi e_" + std::to_string(j + 1) + ") is nonzero"};
      break;
    }
  report.checks.push_back(eta_phi);

  report.checks.push_back(detail::compare_matrices("compatibility", transpose(m.phi) * m.phi, id_minus));

  // deta(e_i, e_j) = -(1/2) eta([e_i, e_j]) against g(e_i, phi e_j) = phi(i, j).
  Matrix d_eta(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d_eta(i, j) = -m.c(i, j, m.xi) / 2;
  report.checks.push_back(detail::compare_matrices("contact", d_eta, m.phi));

  if (!structure_ok) {
    report.checks.push_back({"nabla_xi", false, {}, "connection unavailable for an invalid bracket"});
    report.checks.push_back({"h_operator", false, {}, "h unavailable for an invalid bracket"});
    return report;
  }
  Tensor<3> gamma = levi_civita(m);
  Matrix h = h_tensor(m);
  Matrix phi_h = m.phi * h;
  Matrix nabla_xi(n), expected(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      nabla_xi(k, i) = gamma(i, m.xi, k);
      expected(k, i) = -m.phi(k, i) - phi_h(k, i);
    }
  report.checks.push_back(detail::compare_matrices("nabla_xi", nabla_xi, expected));

  // h is symmetric, kills xi, is traceless and anticommutes with phi.
  AuditCheck h_check = detail::compare_matrices("h_operator", h, transpose(h));
  if (h_check.passed) h_check = detail::compare_matrices("h_operator", h * m.phi, -(m.phi * h));
  if (h_check.passed) {
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += h(i, i);
    if (trace != 0) h_check = {"h_operator", false, {}, "trace of h is " + to_string(trace)};
  }
  if (h_check.passed)
    for (std::size_t i = 0; i < n; ++i)
      if (h(i, m.xi) != 0) {
        h_check = {"h_operator", false, {i + 1, m.xi + 1}, "h(xi) is nonzero"};
        break;
      }
  report.checks.push_back(h_check);
  return report;
}

struct NullityFit {
  Rational kappa;
  Rational mu;
  bool exact = false;
  Rational max_residual;
  bool ricci_xi_verified = false;  // S(X, xi) = 2 n kappa eta(X), meaningful for exact fits
};

/// Best (kappa, mu) with R(X, xi) xi = kappa (X - eta(X) xi) + mu h X, then
/// checked against every component of R(X, Y) xi.
inline NullityFit nullity_fit(const FrameModel& m, const CurvatureData& d) {
  const std::size_t n = m.dim;
  const std::size_t xi = m.xi;
  // A(l, j) = g(R(e_j, xi) xi, e_l); project onto span{P, h} with P the
  // projector onto xi-perp (P and h are orthogonal since tr h = h(xi) = 0).
  Rational a_dot_p = 0, a_dot_h = 0, h_dot_h = 0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      Rational a = d.riemann(j, xi, xi, l);
      if (j == l && j != xi) a_dot_p += a;
      a_dot_h += a * d.h(l, j);
      h_dot_h += d.h(l, j) * d.h(l, j);
    }
  NullityFit fit;
  fit.kappa = a_dot_p / Rational(n - 1);
  fit.mu = h_dot_h == 0 ? Rational(0) : a_dot_h / h_dot_h;

  Rational worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Rational eta_i = i == xi ? 1 : 0, eta_j = j == xi ? 1 : 0;
        Rational expected = fit.kappa * (eta_j * (i == l ? 1 : 0) - eta_i * (j == l ? 1 : 0)) +
                            fit.mu * (eta_j * d.h(l, i) - eta_i * d.h(l, j));
        worst = std::max(worst, abs_value(d.riemann(i, j, xi, l) - expected));
      }
  fit.max_residual = worst;
  fit.exact = worst == 0;
  fit.ricci_xi_verified = true;
  const Rational two_n_kappa = Rational(n - 1) * fit.kappa;
  for (std::size_t i = 0; i < n; ++i) {
    Rational expected = i == xi ? two_n_kappa : Rational(0);
    if (d.ricci(i, xi) != expected) fit.ricci_xi_verified = false;
  }
  return fit;
}

inline NullityFit nullity_fit(const FrameModel& m) { return nullity_fit(m, curvature(m)); }

/// Max residual of the three N(kappa) curvature relations
///   R(X, xi) xi = kappa (X - eta(X) xi)
///   R(X, Y) xi = kappa (eta(Y) X - eta(X) Y)
///   R(X, xi) Y = -kappa (g(X, Y) xi - eta(Y) X).
inline Rational nk_relation_residual(const FrameModel& m, const CurvatureData& d, const Rational& kappa) {
  const std::size_t n = m.dim, xi = m.xi;
  auto delta = [](std::size_t a, std::size_t b) { return Rational(a == b ? 1 : 0); };
  Rational worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      Rational expected = kappa * (delta(i, l) - delta(i, xi) * delta(xi, l));
      worst = std::max(worst, abs_value(d.riemann(i, xi, xi, l) - expected));
      for (std::size_t j = 0; j < n; ++j) {
        Rational rxy = kappa * (delta(j, xi) * delta(i, l) - delta(i, xi) * delta(j, l));
        worst = std::max(worst, abs_value(d.riemann(i, j, xi, l) - rxy));
        Rational rxi = -kappa * (delta(i, j) * delta(xi, l) - delta(j, xi) * delta(i, l));
        worst = std::max(worst, abs_value(d.riemann(i, xi, j, l) - rxi));
      }
    }
  return worst;
}

/// Max residual of S = 2(n-1) g + 2(n-1) g(h., .) + [2 n kappa - 2(n-1)] eta (x) eta.
inline Rational ricci_formula_residual(const FrameModel& m, const CurvatureData& d, const Rational& kappa) {
  const Rational n = m.n();
  Rational worst = 0;
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) {
      Rational expected = 2 * (n - 1) * (i == j ? 1 : 0) + 2 * (n - 1) * d.h(j, i);
      if (i == m.xi && j == m.xi) expected += 2 * n * kappa - 2 * (n - 1);
      worst = std::max(worst, abs_value(d.ricci(i, j) - expected));
    }
  return worst;
}

/// Residuals of identities that hold on every valid model.
struct IdentityResiduals {
  Rational trace_g;           // sum over the xi-perp frame of g(e_i, e_i) and g(phi e_i, phi e_i) minus 2n
  Rational ricci_projection;  // sum_i g(e_i, X) S(Y, e_i) = S(Y, X) - S(Y, xi) eta(X), both frame forms
  Rational ricci_phi;         // sum_i g(phi e_i, phi X) S(Y, phi e_i) = S(Y, phi X)
  Rational riemann_symmetry;  // antisymmetries and pair symmetry
  Rational bianchi;           // first Bianchi identity
  Rational ricci_symmetry;

  Rational max() const {
    Rational out = 0;
    for (const auto* r : {&trace_g, &ricci_projection, &ricci_phi, &riemann_symmetry, &bianchi, &ricci_symmetry})
      out = std::max(out, *r);
    return out;
  }
};

inline IdentityResiduals identity_residuals(const FrameModel& m, const CurvatureData& d) {
  IdentityResiduals r;
  const std::size_t n = m.dim;
  const auto horizontal = m.horizontal();
  auto bump = [](Rational& slot, const Rational& value) { slot = std::max(slot, abs_value(value)); };
  auto e = [&](std::size_t i) { return basis_vector(n, i); };
  auto g = [](const Vector& x, const Vector& y) { return dot(x, y); };
  auto phi = [&](const Vector& x) { return m.phi * x; };

  Rational sum_g = 0, sum_phi = 0;
  for (auto i : horizontal) {
    sum_g += g(e(i), e(i));
    sum_phi += g(phi(e(i)), phi(e(i)));
  }
  bump(r.trace_g, sum_g - Rational(n - 1));
  bump(r.trace_g, sum_phi - Rational(n - 1));

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector x = e(a), y = e(b);
      Rational plain = 0, twisted = 0, phi_plain = 0, phi_twisted = 0;
      for (auto i : horizontal) {
        plain += g(e(i), x) * d.ricci_form(y, e(i));
        twisted += g(phi(e(i)), x) * d.ricci_form(y, phi(e(i)));
        phi_plain += g(e(i), phi(x)) * d.ricci_form(y, e(i));
        phi_twisted += g(phi(e(i)), phi(x)) * d.ricci_form(y, phi(e(i)));
      }
      Rational eta_x = a == m.xi ? 1 : 0;
      Rational projected = d.ricci_form(y, x) - d.ricci_form(y, e(m.xi)) * eta_x;
      bump(r.ricci_projection, plain - projected);
      bump(r.ricci_projection, twisted - projected);
      bump(r.ricci_phi, phi_plain - d.ricci_form(y, phi(x)));
      bump(r.ricci_phi, phi_twisted - d.ricci_form(y, phi(x)));
      bump(r.ricci_symmetry, d.ricci(a, b) - d.ricci(b, a));
    }

  const auto& R = d.riemann;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          bump(r.riemann_symmetry, R(i, j, k, l) + R(j, i, k, l));
          bump(r.riemann_symmetry, R(i, j, k, l) + R(i, j, l, k));
          bump(r.riemann_symmetry, R(i, j, k, l) - R(k, l, i, j));
          bump(r.bianchi, R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l));
        }
  return r;
}

}  // namespace nkt
