#pragma once

// The T-curvature tensor
//
//   T(X, Y)Z = a0 R(X, Y)Z + a1 S(Y, Z)X + a2 S(X, Z)Y + a3 S(X, Y)Z
//            + a4 g(Y, Z)QX + a5 g(X, Z)QY + a6 g(X, Y)QZ
//            + a7 r (g(Y, Z)X - g(X, Z)Y),
//
// its named specialisations, flatness residuals and the derivations
// T(xi, X).R and T(xi, X).S on frame models.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nkt/curvature.hpp"
#include "nkt/rational_expr.hpp"

namespace nkt {

/// Coefficients a0..a7, rational functions of n and possibly a0, a1.
struct TCoeffs {
  std::array<RationalExpr, 8> a;
  std::vector<std::string> flags;

  RationalExpr& operator[](std::size_t i) { return a[i]; }
  const RationalExpr& operator[](std::size_t i) const { return a[i]; }

  bool has_flag(std::string_view flag) const { return std::find(flags.begin(), flags.end(), flag) != flags.end(); }

  friend TCoeffs operator+(const TCoeffs& x, const TCoeffs& y) {
    TCoeffs out;
    for (std::size_t i = 0; i < 8; ++i) out.a[i] = x.a[i] + y.a[i];
    return out;
  }
  friend TCoeffs operator*(const RationalExpr& factor, const TCoeffs& x) {
    TCoeffs out;
    for (std::size_t i = 0; i < 8; ++i) out.a[i] = factor * x.a[i];
    return out;
  }
  friend bool operator==(const TCoeffs& x, const TCoeffs& y) { return x.a == y.a; }
};

using NumericCoeffs = std::array<Rational, 8>;

enum class PresetName {
  riemann,
  C_star,
  C,
  L,
  V,
  P_star,
  P,
  M,
  W0,
  W0_star,
  W1,
  W1_star,
  W2,
  W3,
  W4,
  W5,
  W6,
  W7,
  W8,
  W9,
};

inline constexpr std::array<PresetName, 20> all_presets = {
    PresetName::riemann, PresetName::C_star, PresetName::C,  PresetName::L,       PresetName::V,
    PresetName::P_star,  PresetName::P,      PresetName::M,  PresetName::W0,      PresetName::W0_star,
    PresetName::W1,      PresetName::W1_star, PresetName::W2, PresetName::W3,     PresetName::W4,
    PresetName::W5,      PresetName::W6,     PresetName::W7, PresetName::W8,      PresetName::W9};

struct PresetInfo {
  PresetName id;
  std::string_view name;   // identifier used on the command line and in data files
  std::string_view label;  // display label
  std::string_view description;
};

inline constexpr std::array<PresetInfo, 20> preset_table = {{
    {PresetName::riemann, "Riemann", "R", "Riemannian curvature tensor"},
    {PresetName::C_star, "C_star", "C*", "quasi-conformal curvature tensor"},
    {PresetName::C, "C", "C", "conformal curvature tensor"},
    {PresetName::L, "L", "L", "conharmonic curvature tensor"},
    {PresetName::V, "V", "V", "concircular curvature tensor"},
    {PresetName::P_star, "P_star", "P*", "pseudo-projective curvature tensor"},
    {PresetName::P, "P", "P", "projective curvature tensor"},
    {PresetName::M, "M", "M", "M-projective curvature tensor"},
    {PresetName::W0, "W0", "W0", "W0-curvature tensor"},
    {PresetName::W0_star, "W0_star", "W0*", "W0*-curvature tensor"},
    {PresetName::W1, "W1", "W1", "W1-curvature tensor"},
    {PresetName::W1_star, "W1_star", "W1*", "W1*-curvature tensor"},
    {PresetName::W2, "W2", "W2", "W2-curvature tensor"},
    {PresetName::W3, "W3", "W3", "W3-curvature tensor"},
    {PresetName::W4, "W4", "W4", "W4-curvature tensor"},
    {PresetName::W5, "W5", "W5", "W5-curvature tensor"},
    {PresetName::W6, "W6", "W6", "W6-curvature tensor"},
    {PresetName::W7, "W7", "W7", "W7-curvature tensor"},
    {PresetName::W8, "W8", "W8", "W8-curvature tensor"},
    {PresetName::W9, "W9", "W9", "W9-curvature tensor"},
}};

inline const PresetInfo& preset_info(PresetName p) { return preset_table[static_cast<std::size_t>(p)]; }

inline std::string_view to_string(PresetName p) { return preset_info(p).name; }

/// Accepts the identifier ("W0_star") or the display label ("W0*"), case-sensitive.
inline std::optional<PresetName> preset_from_name(std::string_view text) {
  for (const auto& info : preset_table)
    if (info.name == text || info.label == text) return info.id;
  return std::nullopt;
}

namespace detail {

inline TCoeffs coeffs(std::initializer_list<std::pair<int, RationalExpr>> entries) {
  TCoeffs c;
  for (auto& x : c.a) x = RationalExpr(0);
  for (const auto& [i, v] : entries) c.a[static_cast<std::size_t>(i)] = v;
  return c;
}

inline TCoeffs build_preset(PresetName p, bool as_printed) {
  const RationalExpr n = var(Var::n), one(1);
  const RationalExpr t = one / (2 * n);
  const RationalExpr u = one / (2 * n - 1);
  const RationalExpr q = one / (4 * n);
  const RationalExpr a0 = var(Var::a0), a1 = var(Var::a1);
  TCoeffs c;
  switch (p) {
    case PresetName::riemann: c = coeffs({{0, one}}); break;
    case PresetName::C_star:
      c = coeffs({{0, a0}, {1, a1}, {2, -a1}, {4, a1}, {5, -a1}, {7, -(a0 / (2 * n) + 2 * a1) / (2 * n + 1)}});
      c.flags.push_back("free-parameters");
      break;
    case PresetName::C: c = coeffs({{0, one}, {1, -u}, {2, u}, {4, -u}, {5, u}, {7, u / (2 * n)}}); break;
    case PresetName::L: c = coeffs({{0, one}, {1, -u}, {2, u}, {4, -u}, {5, u}}); break;
    case PresetName::V: c = coeffs({{0, one}, {7, -one / (2 * n * (2 * n + 1))}}); break;
    case PresetName::P_star:
      c = coeffs({{0, a0}, {1, a1}, {2, -a1}, {7, -(a0 / (2 * n) + a1) / (2 * n + 1)}});
      c.flags.push_back("free-parameters");
      break;
    case PresetName::P: c = coeffs({{0, one}, {1, -t}, {2, t}}); break;
    case PresetName::M: c = coeffs({{0, one}, {1, -q}, {2, q}, {4, -q}, {5, q}}); break;
    case PresetName::W0: c = coeffs({{0, one}, {1, -t}, {5, t}}); break;
    case PresetName::W0_star:
      if (as_printed) {
        // The catalog prints the W0 row again for W0*.
        c = coeffs({{0, one}, {1, -t}, {5, t}});
        c.flags.push_back("duplicate-row");
      } else {
        c = coeffs({{0, one}, {1, t}, {5, -t}});
        c.flags.push_back("reconstructed");
      }
      break;
    case PresetName::W1: c = coeffs({{0, one}, {1, t}, {2, -t}}); break;
    case PresetName::W1_star: c = coeffs({{0, one}, {1, -t}, {2, t}}); break;
    case PresetName::W2: c = coeffs({{0, one}, {4, -t}, {5, t}}); break;
    case PresetName::W3: c = coeffs({{0, one}, {2, -t}, {4, t}}); break;
    case PresetName::W4:
      // The value of the vanishing coefficients is cut off in the catalog; zero is used.
      c = coeffs({{0, one}, {5, t}, {6, -t}});
      c.flags.push_back("reconstructed");
      break;
    case PresetName::W5: c = coeffs({{0, one}, {2, -t}, {5, t}}); break;
    case PresetName::W6: c = coeffs({{0, one}, {1, -t}, {6, t}}); break;
    case PresetName::W7: c = coeffs({{0, one}, {1, -t}, {4, t}}); break;
    case PresetName::W8: c = coeffs({{0, one}, {1, -t}, {3, t}}); break;
    case PresetName::W9:
      if (as_printed) {
        c = coeffs({{0, one}, {3, -t}, {4, t}});
      } else {
        // W9(X,Y)Z = R(X,Y)Z + (1/2n)(S(X,Y)Z - g(Y,Z)QX).
        c = coeffs({{0, one}, {3, t}, {4, -t}});
        c.flags.push_back("reconstructed");
      }
      break;
  }
  return c;
}

}  // namespace detail

/// Coefficients of a named tensor. W0* and W9 use the standard definitions,
/// which differ from the rows as printed in the source catalog; see
/// preset_as_printed for those.
inline TCoeffs preset(PresetName p) { return detail::build_preset(p, false); }

/// The catalog rows verbatim (W0* duplicating W0, W9 with the printed signs).
inline TCoeffs preset_as_printed(PresetName p) { return detail::build_preset(p, true); }

/// Binds the indeterminates (normally n, and a0/a1 for the free rows) and
/// returns plain rationals. Throws UnevaluatedCoefficient if any remain.
inline NumericCoeffs evaluate_coeffs(const TCoeffs& c, const Bindings& at) {
  NumericCoeffs out;
  for (std::size_t i = 0; i < 8; ++i) {
    RationalExpr value = substitute(c.a[i], at);
    auto constant = value.constant();
    if (!constant)
      throw error(errc::unevaluated_coefficient, "a" + std::to_string(i) + " = " + value.to_string() +
                                                     " still contains an indeterminate");
    out[i] = *constant;
  }
  return out;
}

inline NumericCoeffs evaluate_coeffs(const TCoeffs& c, std::size_t n) {
  return evaluate_coeffs(c, Bindings{{Var::n, Rational(static_cast<long>(n))}});
}

/// Component tensor t(i, j, k, l) = g(T(e_i, e_j) e_k, e_l), built term by term
/// from the (1,3) definition using Q and r from the curvature data.
inline Tensor<4> t_components(const CurvatureData& d, const NumericCoeffs& a) {
  const std::size_t n = d.dim;
  Tensor<4> t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational v = a[0] * d.riemann(i, j, k, l);
          if (l == i) v += a[1] * d.ricci(j, k);
          if (l == j) v += a[2] * d.ricci(i, k);
          if (l == k) v += a[3] * d.ricci(i, j);
          if (j == k) v += a[4] * d.q(l, i);
          if (i == k) v += a[5] * d.q(l, j);
          if (i == j) v += a[6] * d.q(l, k);
          if (j == k && l == i) v += a[7] * d.scalar;
          if (i == k && l == j) v -= a[7] * d.scalar;
          t(i, j, k, l) = v;
        }
  return t;
}

/// Frame components of T(e_i, e_j) e_k.
inline Vector t_apply(const CurvatureData& d, const NumericCoeffs& a, std::size_t i, std::size_t j, std::size_t k) {
  Tensor<4> t = t_components(d, a);
  Vector out(d.dim);
  for (std::size_t l = 0; l < d.dim; ++l) out(l) = t(i, j, k, l);
  return out;
}

/// T(X, Y) Z for arbitrary frame vectors, from precomputed components.
inline Vector t_apply(const Tensor<4>& t, const Vector& x, const Vector& y, const Vector& z) {
  const std::size_t n = t.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x(i) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y(j) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (z(k) == 0) continue;
        Rational w = x(i) * y(j) * z(k);
        for (std::size_t l = 0; l < n; ++l) out(l) += w * t(i, j, k, l);
      }
    }
  }
  return out;
}

inline Rational t_scalar(const CurvatureData& d, const NumericCoeffs& a, std::size_t i, std::size_t j, std::size_t k,
                         std::size_t l) {
  return t_apply(d, a, i, j, k)(l);
}

/// g(T(e_i, e_j) e_k, e_l) from the eight (0,4) terms, written with S and g only.
inline Rational t_scalar_expanded(const CurvatureData& d, const NumericCoeffs& a, std::size_t i, std::size_t j,
                                  std::size_t k, std::size_t l) {
  auto g = [](std::size_t x, std::size_t y) { return Rational(x == y ? 1 : 0); };
  const auto& S = d.ricci;
  return a[0] * d.riemann(i, j, k, l) + a[1] * S(j, k) * g(i, l) + a[2] * S(i, k) * g(j, l) +
         a[3] * S(i, j) * g(k, l) + a[4] * g(j, k) * S(i, l) + a[5] * g(i, k) * S(j, l) + a[6] * S(k, l) * g(i, j) +
         a[7] * d.scalar * (g(j, k) * g(i, l) - g(i, k) * g(j, l));
}

enum class ConditionKind { t_flat, xi_t_flat, quasi_t_flat, phi_t_flat, t_dot_r, t_dot_s };

inline constexpr std::array<ConditionKind, 6> all_conditions = {
    ConditionKind::t_flat,     ConditionKind::xi_t_flat, ConditionKind::quasi_t_flat,
    ConditionKind::phi_t_flat, ConditionKind::t_dot_r,   ConditionKind::t_dot_s};

inline std::string_view to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::t_flat: return "flat";
    case ConditionKind::xi_t_flat: return "xi-flat";
    case ConditionKind::quasi_t_flat: return "quasi-flat";
    case ConditionKind::phi_t_flat: return "phi-flat";
    case ConditionKind::t_dot_r: return "t-dot-r";
    case ConditionKind::t_dot_s: return "t-dot-s";
  }
  return "";
}

inline std::optional<ConditionKind> condition_from_name(std::string_view text) {
  for (ConditionKind kind : all_conditions)
    if (to_string(kind) == text) return kind;
  if (text == "t-flat") return ConditionKind::t_flat;
  if (text == "tdotR") return ConditionKind::t_dot_r;
  if (text == "tdotS") return ConditionKind::t_dot_s;
  return std::nullopt;
}

/// Fourth term of (T(xi, e_i).R)(e_j, e_k) e_l: `printed` uses R(e_i, e_j) T(xi, e_i) e_l,
/// `standard` the usual derivation term R(e_j, e_k) T(xi, e_i) e_l.
enum class DerivationVariant { printed, standard };

struct ResidualOptions {
  // xi-flatness: false tests T(X, xi) xi = 0 (the slice the classification uses),
  // true tests the full T(X, Y) xi = 0.
  bool xi_strict = false;
  DerivationVariant variant = DerivationVariant::printed;
};

namespace detail {

/// Matrix of Z -> T(xi, e_i) Z.
inline Matrix t_xi_map(const Tensor<4>& t, std::size_t xi, std::size_t i) {
  Matrix out(t.dim());
  for (std::size_t k = 0; k < t.dim(); ++k)
    for (std::size_t l = 0; l < t.dim(); ++l) out(l, k) = t(xi, i, k, l);
  return out;
}

/// Frame components of R(X, Y) Z.
inline Vector riemann_apply(const CurvatureData& d, const Vector& x, const Vector& y, const Vector& z) {
  Vector out(d.dim);
  for (std::size_t i = 0; i < d.dim; ++i) {
    if (x(i) == 0) continue;
    for (std::size_t j = 0; j < d.dim; ++j) {
      if (y(j) == 0) continue;
      Vector part = d.riemann_apply(i, j, z);
      Rational w = x(i) * y(j);
      for (std::size_t l = 0; l < d.dim; ++l) out(l) += w * part(l);
    }
  }
  return out;
}

}  // namespace detail

/// Components D(i, j, k, l, p) of (T(xi, e_i).R)(e_j, e_k) e_l.
inline Tensor<5> t_dot_riemann_components(const CurvatureData& d, const NumericCoeffs& a,
                                          DerivationVariant variant = DerivationVariant::printed) {
  const std::size_t n = d.dim;
  Tensor<4> t = t_components(d, a);
  Tensor<5> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix tx = detail::t_xi_map(t, d.xi, i);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Vector ej = basis_vector(n, j), ek = basis_vector(n, k), el = basis_vector(n, l);
          Vector v = tx * d.riemann_apply(j, k, el);
          v -= detail::riemann_apply(d, column(tx, j), ek, el);
          v -= detail::riemann_apply(d, ej, column(tx, k), el);
          if (variant == DerivationVariant::printed)
            v -= d.riemann_apply(i, j, column(tx, l));
          else
            v -= d.riemann_apply(j, k, column(tx, l));
          for (std::size_t p = 0; p < n; ++p) out(i, j, k, l, p) = v(p);
        }
  }
  return out;
}

/// Components E(i, j, k) of (T(xi, e_i).S)(e_j, e_k) = S(T(xi, e_i) e_j, e_k) + S(e_j, T(xi, e_i) e_k).
inline Tensor<3> t_dot_ricci_components(const CurvatureData& d, const NumericCoeffs& a) {
  const std::size_t n = d.dim;
  Tensor<4> t = t_components(d, a);
  Tensor<3> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix tx = detail::t_xi_map(t, d.xi, i);
    Matrix st = transpose(tx) * d.ricci;  // st(j, k) = S(T e_j, e_k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = st(j, k) + st(k, j);
  }
  return out;
}

inline Rational t_dot_riemann(const CurvatureData& d, const NumericCoeffs& a,
                              DerivationVariant variant = DerivationVariant::printed) {
  return max_abs(t_dot_riemann_components(d, a, variant));
}

inline Rational t_dot_ricci(const CurvatureData& d, const NumericCoeffs& a) {
  return max_abs(t_dot_ricci_components(d, a));
}

/// Max-abs residual of a condition over all frame index tuples; zero means the
/// condition holds identically on the model.
inline Rational condition_residual(const FrameModel& m, const CurvatureData& d, const NumericCoeffs& a,
                                   ConditionKind kind, const ResidualOptions& options = {}) {
  const std::size_t n = d.dim;
  if (kind == ConditionKind::t_dot_r) return t_dot_riemann(d, a, options.variant);
  if (kind == ConditionKind::t_dot_s) return t_dot_ricci(d, a);
  Tensor<4> t = t_components(d, a);
  Rational worst = 0;
  auto record = [&](const Rational& v) { worst = std::max(worst, abs_value(v)); };
  switch (kind) {
    case ConditionKind::t_flat: return max_abs(t);
    case ConditionKind::xi_t_flat:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (!options.xi_strict && j != m.xi) continue;
          for (std::size_t l = 0; l < n; ++l) record(t(i, j, m.xi, l));
        }
      return worst;
    case ConditionKind::quasi_t_flat:
    case ConditionKind::phi_t_flat: {
      const bool all_phi = kind == ConditionKind::phi_t_flat;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            Vector x = column(m.phi, i);
            Vector y = all_phi ? column(m.phi, j) : basis_vector(n, j);
            Vector z = all_phi ? column(m.phi, k) : basis_vector(n, k);
            Vector v = t_apply(t, x, y, z);
            for (std::size_t l = 0; l < n; ++l) record(dot(v, column(m.phi, l)));
          }
      return worst;
    }
    default: break;
  }
  return worst;
}

/// Evaluates symbolic coefficients at the model's n and computes the residual.
inline Rational flatness_residual(const FrameModel& m, const TCoeffs& c, ConditionKind kind,
                                  const ResidualOptions& options = {}) {
  CurvatureData d = curvature(m);
  return condition_residual(m, d, evaluate_coeffs(c, m.n()), kind, options);
}

}  // namespace nkt
