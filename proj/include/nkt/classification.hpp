#pragma once

// Coefficient-level classification of N(kappa)-contact metric manifolds
// under T-curvature conditions, plus the Boeckx invariant, D-homothetic
// deformations and the constant-curvature tangent sphere bundle example.

#include <optional>
#include <string>
#include <vector>

#include "nkt/t_tensor.hpp"

namespace nkt {

using KappaSolution = LinearSolution;

/// Scalar curvature of an N(kappa)-contact metric manifold, 2n(2n - 2 + kappa).
inline RationalExpr scalar_curvature_expr() {
  const RationalExpr n = var(Var::n), k = var(Var::kappa);
  return 2 * n * (2 * n - 2 + k);
}

inline RationalExpr substitute_r(const RationalExpr& e) { return substitute(e, Var::r, scalar_curvature_expr()); }

/// Left side of the T-flat kappa equation
/// a1(2n-2+kappa) + (a0+a2+a3+(2n+1)a4+a5+a6)kappa + 2n(2n-2+kappa)a7.
inline RationalExpr prop1_expression(const TCoeffs& c) {
  const RationalExpr n = var(Var::n), k = var(Var::kappa);
  return c[1] * (2 * n - 2 + k) + (c[0] + c[2] + c[3] + (2 * n + 1) * c[4] + c[5] + c[6]) * k +
         2 * n * (2 * n - 2 + k) * c[7];
}

/// kappa forced by T-flatness; Identity means any kappa (a real number).
inline KappaSolution t_flat_kappa(const TCoeffs& c) { return solve_linear(prop1_expression(c), Var::kappa); }

inline std::string render_kappa(const KappaSolution& s) {
  switch (s.kind) {
    case KappaSolution::Kind::unique: return s.root.to_string();
    case KappaSolution::Kind::identity: return "a real number";
    case KappaSolution::Kind::no_solution: return "none";
  }
  return "";
}

enum class FormTag { einstein, eta_einstein, degenerate };

inline std::string_view to_string(FormTag tag) {
  switch (tag) {
    case FormTag::einstein: return "Einstein";
    case FormTag::eta_einstein: return "eta-Einstein";
    case FormTag::degenerate: return "degenerate";
  }
  return "";
}

inline std::optional<FormTag> form_tag_from_name(std::string_view text) {
  for (FormTag t : {FormTag::einstein, FormTag::eta_einstein, FormTag::degenerate})
    if (to_string(t) == text) return t;
  return std::nullopt;
}

/// S = b1 g + b2 eta (x) eta, derived as b1 = A/C, b2 = B/C under C != 0.
struct EtaEinsteinForm {
  RationalExpr b1, b2;
  FormTag tag = FormTag::degenerate;
  RationalExpr denominator_condition;  // C
  RationalExpr a_part, b_part;         // A and B

  bool degenerate() const { return tag == FormTag::degenerate; }

  std::string render(const std::string& eta = "eta(x)eta") const {
    if (degenerate()) return "degenerate (C = 0)";
    auto wrap = [](const RationalExpr& e) {
      std::string s = e.to_string();
      return e.numerator().size() > 1 || s.front() == '-' ? "(" + s + ")" : s;
    };
    std::string out;
    if (!b1.is_zero()) out = wrap(b1) + " g";
    if (!b2.is_zero()) out += (out.empty() ? "" : " + ") + wrap(b2) + " " + eta;
    return out.empty() ? "0" : out;
  }
};

inline EtaEinsteinForm make_form(const RationalExpr& a, const RationalExpr& b, const RationalExpr& c) {
  EtaEinsteinForm f;
  f.a_part = a;
  f.b_part = b;
  f.denominator_condition = c;
  if (c.is_zero()) return f;
  f.b1 = a / c;
  f.b2 = b / c;
  f.tag = f.b2.is_zero() ? FormTag::einstein : FormTag::eta_einstein;
  return f;
}

inline EtaEinsteinForm substitute_r(const EtaEinsteinForm& f) {
  return make_form(substitute_r(f.a_part), substitute_r(f.b_part), f.denominator_condition);
}

/// Quasi-T-flat: C1 S = A1 g + B1 eta (x) eta with
/// A1 = a0 kappa + a4(2n kappa - r) + a7 r(1 - 2n),
/// B1 = -a0 kappa + 2n kappa(a2 + a3 + a5 + a6) - a7 r,
/// C1 = a0 + 2n a1 + a2 + a3 + a5 + a6.
inline EtaEinsteinForm quasi_flat_form(const TCoeffs& c, bool substitute_scalar = false) {
  const RationalExpr n = var(Var::n), k = var(Var::kappa), r = var(Var::r);
  RationalExpr a = c[0] * k + c[4] * (2 * n * k - r) + c[7] * r * (1 - 2 * n);
  RationalExpr b = -c[0] * k + 2 * n * k * (c[2] + c[3] + c[5] + c[6]) - c[7] * r;
  RationalExpr cc = c[0] + 2 * n * c[1] + c[2] + c[3] + c[5] + c[6];
  EtaEinsteinForm f = make_form(a, b, cc);
  return substitute_scalar ? substitute_r(f) : f;
}

/// phi-T-flat: S = (A2/C2) g + (2n kappa - A2/C2) eta (x) eta with A2 = A1, C2 = C1.
inline EtaEinsteinForm phi_flat_form(const TCoeffs& c, bool substitute_scalar = false) {
  const RationalExpr n = var(Var::n), k = var(Var::kappa), r = var(Var::r);
  RationalExpr a = c[0] * k + c[4] * (2 * n * k - r) + c[7] * r * (1 - 2 * n);
  RationalExpr cc = c[0] + 2 * n * c[1] + c[2] + c[3] + c[5] + c[6];
  EtaEinsteinForm f = make_form(a, 2 * n * k * cc - a, cc);
  return substitute_scalar ? substitute_r(f) : f;
}

/// xi-T-flat: -a4 S = A3 g + B3 eta (x) eta with
/// A3 = a0 kappa + 2n kappa a1 + 2n(2n-2+kappa) a7,
/// B3 = -a0 kappa + 2n kappa(a2 + a3 + a5 + a6) - 2n(2n-2+kappa) a7.
inline EtaEinsteinForm xi_flat_form(const TCoeffs& c) {
  const RationalExpr n = var(Var::n), k = var(Var::kappa);
  const RationalExpr tau = scalar_curvature_expr();
  RationalExpr a3 = c[0] * k + 2 * n * k * c[1] + tau * c[7];
  RationalExpr b3 = -c[0] * k + 2 * n * k * (c[2] + c[3] + c[5] + c[6]) - tau * c[7];
  return make_form(-a3, -b3, c[4]);
}

/// T(xi, X).R = 0: A = -2n kappa(a2 + a4), B = 2n kappa(a1 + a2 + a4 + a5), C = a1 + a5.
inline EtaEinsteinForm tdotR_form(const TCoeffs& c) {
  const RationalExpr n = var(Var::n), k = var(Var::kappa);
  return make_form(-2 * n * k * (c[2] + c[4]), 2 * n * k * (c[1] + c[2] + c[4] + c[5]), c[1] + c[5]);
}

/// T(xi, X).S = 0 with h = 0:
/// A5 = (2n kappa - 2n + 2)(a0 kappa + a7 r) + 4n kappa(n-1) a2 + 4n^2 kappa^2 a4,
/// B5 = (2n - 2n kappa - 2)(a0 kappa + a7 r)
///      + 4n^2 kappa^2 (a1 + 2a2 + 2a3 + a4 + 2a5 + 2a6) - 4n kappa(n-1)(a2 + a5),
/// C5 = -a1 - a5.
inline EtaEinsteinForm tdotS_form(const TCoeffs& c, bool substitute_scalar = false) {
  const RationalExpr n = var(Var::n), k = var(Var::kappa), r = var(Var::r);
  RationalExpr base = c[0] * k + c[7] * r;
  RationalExpr a = (2 * n * k - 2 * n + 2) * base + 4 * n * k * (n - 1) * c[2] + 4 * n * n * k * k * c[4];
  RationalExpr b = (2 * n - 2 * n * k - 2) * base +
                   4 * n * n * k * k * (c[1] + 2 * c[2] + 2 * c[3] + c[4] + 2 * c[5] + 2 * c[6]) -
                   4 * n * k * (n - 1) * (c[2] + c[5]);
  EtaEinsteinForm f = make_form(a, b, -c[1] - c[5]);
  return substitute_scalar ? substitute_r(f) : f;
}

inline EtaEinsteinForm classify(const TCoeffs& c, ConditionKind kind, bool substitute_scalar = true) {
  switch (kind) {
    case ConditionKind::quasi_t_flat: return quasi_flat_form(c, substitute_scalar);
    case ConditionKind::phi_t_flat: return phi_flat_form(c, substitute_scalar);
    case ConditionKind::xi_t_flat: return xi_flat_form(c);
    case ConditionKind::t_dot_r: return tdotR_form(c);
    case ConditionKind::t_dot_s: return tdotS_form(c, substitute_scalar);
    case ConditionKind::t_flat: break;
  }
  throw error(errc::invalid_argument, "flat is classified by t_flat_kappa, not by an eta-Einstein form");
}

/// Solves b1 + b2 = 2n kappa (the trace S(xi, xi) = 2n kappa) for kappa.
inline KappaSolution consistency_kappa(const EtaEinsteinForm& f) {
  if (f.degenerate()) throw error(errc::invalid_argument, "degenerate form has no Ricci tensor");
  if (f.b1.contains(Var::r) || f.b2.contains(Var::r))
    throw error(errc::invalid_argument, "substitute r before checking consistency");
  return solve_linear(f.b1 + f.b2 - 2 * var(Var::n) * var(Var::kappa), Var::kappa);
}

/// Boeckx invariant (1 - mu/2) / sqrt(1 - kappa). `value` is present when the
/// square root is exact (rational, or a rational multiple of sqrt(n)).
struct BoeckxValue {
  RationalExpr squared;  // (1 - mu/2)^2 / (1 - kappa)
  std::optional<RationalExpr> value;
};

inline BoeckxValue boeckx_invariant(const RationalExpr& kappa, const RationalExpr& mu) {
  RationalExpr radicand = 1 - kappa;
  if (radicand.is_zero()) throw error(errc::sasakian_input, "kappa = 1 (Sasakian) has no Boeckx invariant");
  if (auto c = radicand.constant(); c && *c < 0)
    throw error(errc::non_real_radical, "1 - kappa = " + to_string(*c) + " is negative");
  RationalExpr top = 1 - mu / 2;
  BoeckxValue out{top * top / radicand, std::nullopt};
  if (auto root = sqrt_exact(radicand)) {
    RationalExpr r = *root;
    if (auto c = r.constant(); c && *c < 0) r = -r;
    out.value = top / r;
  }
  return out;
}

/// Exact Boeckx invariant; throws NonRealRadical when sqrt(1 - kappa) is not exact.
inline RationalExpr boeckx(const RationalExpr& kappa, const RationalExpr& mu) {
  BoeckxValue v = boeckx_invariant(kappa, mu);
  if (!v.value)
    throw error(errc::non_real_radical, "sqrt(" + (1 - kappa).to_string() + ") is not exact; I^2 = " +
                                            v.squared.to_string());
  return *v.value;
}

struct KappaMu {
  RationalExpr kappa, mu;
};

/// D-homothetic deformation in the form kappa' = (kappa + a^2 - 1)/a, mu' = (mu + 2c - 2)/a.
inline KappaMu d_homothetic(const RationalExpr& kappa, const RationalExpr& mu, const RationalExpr& a,
                            const RationalExpr& c) {
  if (a.is_zero()) throw error(errc::zero_deformation, "deformation constant a must be nonzero");
  return {(kappa + a * a - 1) / a, (mu + 2 * c - 2) / a};
}

/// Blair-Koufogiorgos-Papantoniou form kappa' = (kappa + a^2 - 1)/a^2, mu' = (mu + 2a - 2)/a,
/// under which the Boeckx invariant is preserved for a > 0.
inline KappaMu d_homothetic_standard(const RationalExpr& kappa, const RationalExpr& mu, const RationalExpr& a) {
  if (a.is_zero()) throw error(errc::zero_deformation, "deformation constant a must be nonzero");
  return {(kappa + a * a - 1) / (a * a), (mu + 2 * a - 2) / a};
}

/// Sign of e at n = value, s = sqrt(value), for e linear in s (always true
/// for canonical expressions). Exact: compares squares when signs differ.
inline int sign_at(const RationalExpr& e, long value) {
  const Bindings at{{Var::n, Rational(value)}};
  auto [n0, n1] = detail::split_sqrt_n(e.numerator());
  Rational p = n0.evaluate(at), q = n1.evaluate(at), d = e.denominator().evaluate(at);
  if (d == 0) throw error(errc::division_by_zero, "denominator vanishes at n = " + std::to_string(value));
  auto sgn = [](const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
  int sp = sgn(p), sq = sgn(q), s;
  if (sq == 0 || value == 0)
    s = sp;
  else if (sp == 0 || sp == sq)
    s = sq;
  else {
    Rational lhs = p * p, rhs = q * q * value;
    s = lhs == rhs ? 0 : (lhs > rhs ? sp : sq);
  }
  return s * sgn(d);
}

/// Value of e at n = value, s = sqrt(value), when sqrt(value) is rational.
inline std::optional<Rational> value_at(const RationalExpr& e, long value) {
  auto root = exact_sqrt(Integer(value));
  if (!root) return std::nullopt;
  return eval_at(e, Bindings{{Var::n, Rational(value)}, {Var::s, Rational(*root)}});
}

struct Example1Report {
  long n = 0;
  int sign = -1;
  RationalExpr c, a, kappa, mu;
  RationalExpr one_minus_c_abs;  // |1 - c| as chosen by the sign branch
  RationalExpr boeckx_value;
  KappaMu deformed;           // standard D-homothetic deformation with a = 1 + c
  KappaMu deformed_as_printed;  // kappa' = (kappa + a^2 - 1)/a, mu' = (mu + 2c - 2)/a
  bool root_positive = false;
  bool boeckx_is_sqrt_n = false;
  bool deformed_is_target = false;  // (1 - 1/n, 0)
  bool deformed_boeckx_is_sqrt_n = false;

  bool passed() const { return root_positive && boeckx_is_sqrt_n && deformed_is_target && deformed_boeckx_is_sqrt_n; }
};

/// Tangent sphere bundle over a space of constant curvature c with
/// c = (sqrt(n) +- 1)^2/(n - 1), kappa = c(2 - c), mu = -2c, a = 1 + c.
/// Works in Q(sqrt(n)) with s = sqrt(n); n stays symbolic and only signs are
/// decided at the given n.
inline Example1Report example1_check(long n_value, int sign) {
  if (n_value < 2) throw error(errc::invalid_argument, "n must be at least 2");
  if (sign != 1 && sign != -1) throw error(errc::invalid_argument, "sign must be +1 or -1");
  const RationalExpr n = var(Var::n), s = var(Var::s);
  Example1Report r;
  r.n = n_value;
  r.sign = sign;
  r.c = (s + sign) * (s + sign) / (n - 1);
  r.a = 1 + r.c;
  r.kappa = r.c * (2 - r.c);
  r.mu = -2 * r.c;
  // 1 - kappa = (1 - c)^2; the minus branch has c < 1, the plus branch c > 1.
  r.one_minus_c_abs = sign < 0 ? 1 - r.c : r.c - 1;
  r.root_positive = r.one_minus_c_abs * r.one_minus_c_abs == 1 - r.kappa && sign_at(r.one_minus_c_abs, n_value) > 0;
  r.boeckx_value = (1 - r.mu / 2) / r.one_minus_c_abs;
  r.boeckx_is_sqrt_n = r.boeckx_value == s;
  r.deformed = d_homothetic_standard(r.kappa, r.mu, r.a);
  r.deformed_as_printed = d_homothetic(r.kappa, r.mu, r.a, r.c);
  r.deformed_is_target = r.deformed.kappa == 1 - 1 / n && r.deformed.mu.is_zero();
  if (r.deformed_is_target) r.deformed_boeckx_is_sqrt_n = boeckx(r.deformed.kappa, r.deformed.mu) == s;
  return r;
}

}  // namespace nkt
