#pragma once

// Multivariate rational functions over Q in canonical form.
//
// Canonical form of num/den:
//   * s*s is rewritten to n everywhere (s stands for sqrt(n)), so both parts
//     are at most linear in s;
//   * the denominator is s-free (a denominator D0 + s*D1 is rationalised by
//     its conjugate D0 - s*D1);
//   * gcd(N0, N1, D) = 1 where num = N0 + s*N1;
//   * all coefficients are integers with no common factor and the leading
//     coefficient of the denominator is positive.
// Two expressions are equal as rational functions iff their canonical forms
// are identical, so operator== is structural.

#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "nkt/polynomial.hpp"

namespace nkt {

namespace detail {

inline Polynomial reduce_sqrt_n(const Polynomial& p) {
  constexpr auto s_idx = static_cast<std::size_t>(Var::s);
  constexpr auto n_idx = static_cast<std::size_t>(Var::n);
  bool needed = false;
  for (const auto& [e, c] : p.terms())
    if (e[s_idx] >= 2) needed = true;
  if (!needed) return p;
  Polynomial out;
  for (const auto& [e, c] : p.terms()) {
    Exponents reduced = e;
    reduced[n_idx] = static_cast<std::uint16_t>(reduced[n_idx] + e[s_idx] / 2);
    reduced[s_idx] = static_cast<std::uint16_t>(e[s_idx] % 2);
    out.add_term(reduced, c);
  }
  return out;
}

/// Splits p = even + s*odd with both parts s-free (p must already be reduced).
inline std::pair<Polynomial, Polynomial> split_sqrt_n(const Polynomial& p) {
  constexpr auto s_idx = static_cast<std::size_t>(Var::s);
  Polynomial even, odd;
  for (const auto& [e, c] : p.terms()) {
    if (e[s_idx] == 0) {
      even.add_term(e, c);
    } else {
      Exponents rest = e;
      rest[s_idx] = 0;
      odd.add_term(rest, c);
    }
  }
  return {even, odd};
}

inline Integer integer_lcm(const Integer& x, const Integer& y) { return x / boost::multiprecision::gcd(x, y) * y; }

}  // namespace detail

class RationalExpr {
 public:
  RationalExpr() : den_(1) {}
  RationalExpr(const Rational& value) : num_(value), den_(1) { canonicalize(); }  // NOLINT
  RationalExpr(int value) : RationalExpr(Rational(value)) {}                      // NOLINT
  RationalExpr(const Polynomial& p) : num_(p), den_(1) { canonicalize(); }        // NOLINT
  RationalExpr(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  static RationalExpr variable(Var v) { return RationalExpr(Polynomial::variable(v)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  std::optional<Rational> constant() const {
    if (!is_constant()) return std::nullopt;
    return num_.constant_value() / den_.constant_value();
  }

  bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }

  bool is_free() const {
    for (Var v : all_vars)
      if (contains(v)) return false;
    return true;
  }

  RationalExpr operator-() const {
    RationalExpr out = *this;
    out.num_ = -out.num_;
    return out;
  }

  // Sums and products of canonical operands only need the small gcds below;
  // a product of two s-dependent numerators can create new factors through
  // s*s = n, so it takes the general path.
  friend RationalExpr operator+(const RationalExpr& x, const RationalExpr& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.den_ == y.den_) return RationalExpr(x.num_ + y.num_, x.den_);
    Polynomial g = gcd(x.den_, y.den_);
    Polynomial xd = divide_known(x.den_, g), yd = divide_known(y.den_, g);
    Polynomial num = x.num_ * yd + y.num_ * xd;
    Polynomial den = x.den_ * yd;
    if (num.is_zero()) return RationalExpr();
    if (!g.is_constant()) {
      Polynomial h = gcd(num, g);
      if (!h.is_constant()) {
        num = divide_known(num, h);
        den = divide_known(den, h);
      }
    }
    return RationalExpr(std::move(num), std::move(den), reduced_tag{});
  }
  friend RationalExpr operator-(const RationalExpr& x, const RationalExpr& y) { return x + (-y); }
  friend RationalExpr operator*(const RationalExpr& x, const RationalExpr& y) {
    if (x.is_zero() || y.is_zero()) return RationalExpr();
    if (x.num_.contains(Var::s) && y.num_.contains(Var::s)) return RationalExpr(x.num_ * y.num_, x.den_ * y.den_);
    Polynomial g1 = gcd(x.num_, y.den_), g2 = gcd(y.num_, x.den_);
    return RationalExpr(divide_known(x.num_, g1) * divide_known(y.num_, g2),
                        divide_known(x.den_, g2) * divide_known(y.den_, g1), reduced_tag{});
  }
  friend RationalExpr operator/(const RationalExpr& x, const RationalExpr& y) {
    if (y.is_zero()) throw error(errc::division_by_zero, "division by the zero expression");
    if (y.num_.contains(Var::s)) return RationalExpr(x.num_ * y.den_, x.den_ * y.num_);
    return x * RationalExpr(y.den_, y.num_, reduced_tag{});
  }

  RationalExpr& operator+=(const RationalExpr& y) { return *this = *this + y; }
  RationalExpr& operator-=(const RationalExpr& y) { return *this = *this - y; }
  RationalExpr& operator*=(const RationalExpr& y) { return *this = *this * y; }
  RationalExpr& operator/=(const RationalExpr& y) { return *this = *this / y; }

  friend bool operator==(const RationalExpr& x, const RationalExpr& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  /// Deterministic infix rendering, e.g. "(n - 1)/n" or "2*n*kappa - 2*n + 2".
  std::string to_string() const {
    std::string num = num_.to_string();
    if (den_ == Polynomial(1)) return num;
    if (num_.size() > 1) num = "(" + num + ")";
    std::string den = den_.to_string();
    const bool bare_den = den_.size() == 1 && (den_.is_constant() || den_.leading_coefficient() == 1) &&
                          (den_.is_constant() || nkt::total_degree(den_.leading_exponents()) == 1);
    if (!bare_den) den = "(" + den + ")";
    return num + "/" + den;
  }

 private:
  struct reduced_tag {};

  // num/den already coprime with an s-free denominator; only the scale is fixed.
  RationalExpr(Polynomial num, Polynomial den, reduced_tag) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    normalize_scale();
  }

  void canonicalize() {
    num_ = detail::reduce_sqrt_n(num_);
    den_ = detail::reduce_sqrt_n(den_);
    if (den_.is_zero()) throw error(errc::zero_denominator, "denominator is identically zero");
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    if (den_.contains(Var::s)) {
      auto [even, odd] = detail::split_sqrt_n(den_);
      Polynomial conjugate = even - odd * Polynomial::variable(Var::s);
      num_ = detail::reduce_sqrt_n(num_ * conjugate);
      den_ = detail::reduce_sqrt_n(den_ * conjugate);
    }
    auto [n_even, n_odd] = detail::split_sqrt_n(num_);
    Polynomial g = gcd(gcd(n_even, n_odd), den_);
    if (!g.is_constant()) {
      num_ = divide_known(num_, g);
      den_ = divide_known(den_, g);
    }
    normalize_scale();
  }

  // Integer coefficients, overall content 1, positive leading denominator coefficient.
  void normalize_scale() {
    Integer common_den = 1;
    for (const auto* p : {&num_, &den_})
      for (const auto& [e, c] : p->terms()) common_den = detail::integer_lcm(common_den, denominator_of(c));
    Integer content = 0;
    for (const auto* p : {&num_, &den_})
      for (const auto& [e, c] : p->terms())
        content = boost::multiprecision::gcd(content, numerator_of(c * common_den));
    Rational factor(common_den, content);
    if (den_.leading_coefficient() < 0) factor = -factor;
    if (factor != 1) {
      num_ = scale(num_, factor);
      den_ = scale(den_, factor);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalExpr& e) { return os << e.to_string(); }

/// Canonical form; the constructor already canonicalises, so this is the identity.
inline RationalExpr normalize(const RationalExpr& e) { return e; }

inline RationalExpr normalize(const Polynomial& num, const Polynomial& den) { return RationalExpr(num, den); }

inline RationalExpr var(Var v) { return RationalExpr::variable(v); }

inline RationalExpr pow(const RationalExpr& base, unsigned exponent) {
  RationalExpr out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline Rational eval_at(const RationalExpr& e, const Bindings& at) {
  Rational den = e.denominator().evaluate(at);
  Rational num = e.numerator().evaluate(at);
  if (den == 0) throw error(errc::division_by_zero, "denominator " + e.denominator().to_string() + " vanishes");
  return num / den;
}

/// Replaces every occurrence of v by value.
inline RationalExpr substitute(const RationalExpr& e, Var v, const RationalExpr& value) {
  if (!e.contains(v)) return e;
  if (v == Var::n && e.contains(Var::s))
    throw error(errc::invalid_argument, "substituting n would break the s*s = n rule");
  auto substitute_poly = [&](const Polynomial& p) {
    const auto idx = static_cast<std::size_t>(v);
    RationalExpr out;
    for (const auto& [ex, c] : p.terms()) {
      Exponents rest = ex;
      rest[idx] = 0;
      out += RationalExpr(Polynomial::monomial(rest, c)) * pow(value, ex[idx]);
    }
    return out;
  };
  RationalExpr den = substitute_poly(e.denominator());
  if (den.is_zero())
    throw error(errc::division_by_zero, "denominator vanishes after substituting " + std::string(name_of(v)));
  return substitute_poly(e.numerator()) / den;
}

inline RationalExpr substitute(const RationalExpr& e, const Bindings& at) {
  RationalExpr out = e;
  for (const auto& [v, value] : at) {
    if (v == Var::n) continue;
    out = substitute(out, v, RationalExpr(value));
  }
  if (auto it = at.find(Var::n); it != at.end()) out = substitute(out, Var::n, RationalExpr(it->second));
  return out;
}

/// Outcome of solving e = 0 for one indeterminate.
struct LinearSolution {
  enum class Kind { unique, identity, no_solution };

  Kind kind = Kind::no_solution;
  RationalExpr root;            // meaningful for Kind::unique
  RationalExpr side_condition;  // root is valid wherever this is nonzero

  bool is_unique() const { return kind == Kind::unique; }
  bool is_identity() const { return kind == Kind::identity; }
  bool is_no_solution() const { return kind == Kind::no_solution; }

  std::string to_string() const {
    switch (kind) {
      case Kind::unique: return root.to_string();
      case Kind::identity: return "identity";
      case Kind::no_solution: return "none";
    }
    return "";
  }
};

inline std::string_view to_string(LinearSolution::Kind kind) {
  switch (kind) {
    case LinearSolution::Kind::unique: return "unique";
    case LinearSolution::Kind::identity: return "identity";
    case LinearSolution::Kind::no_solution: return "none";
  }
  return "";
}

/// Solves numerator(e) = 0 for v; the numerator must be at most linear in v.
inline LinearSolution solve_linear(const RationalExpr& e, Var v) {
  const Polynomial& num = e.numerator();
  if (num.is_zero()) return {LinearSolution::Kind::identity, {}, {}};
  const unsigned degree = num.degree(v);
  if (degree >= 2)
    throw error(errc::nonlinear_in_variable,
                "degree " + std::to_string(degree) + " in " + std::string(name_of(v)) + ": " + e.to_string());
  if (degree == 0) return {LinearSolution::Kind::no_solution, {}, {}};
  auto coefficients = num.coefficients_in(v);
  RationalExpr lead(coefficients[1]);
  RationalExpr root = -RationalExpr(coefficients[0]) / lead;
  return {LinearSolution::Kind::unique, root, lead};
}

/// Exact square root of an s-free expression, with sqrt(n) rendered as s.
/// Returns nullopt when no polynomial square root exists.
inline std::optional<RationalExpr> sqrt_exact(const RationalExpr& e) {
  if (e.contains(Var::s)) return std::nullopt;
  if (e.is_zero()) return e;
  Polynomial radicand = e.numerator() * e.denominator();
  if (auto root = sqrt_exact(radicand)) return RationalExpr(*root, e.denominator());
  if (auto rest = divide_exact(radicand, Polynomial::variable(Var::n))) {
    if (auto root = sqrt_exact(*rest)) return RationalExpr(*root * Polynomial::variable(Var::s), e.denominator());
  }
  return std::nullopt;
}

}  // namespace nkt
