#pragma once

// Sparse multivariate polynomials with rational coefficients over the fixed
// indeterminate set used throughout the library, together with exact
// division, pseudo-remainders, a recursive primitive-PRS gcd and an exact
// square root.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nkt/error.hpp"
#include "nkt/rational.hpp"

namespace nkt {

enum class Var : std::uint8_t { n, kappa, lambda, r, mu, a, c, a0, a1, s };

inline constexpr std::size_t var_count = 10;

inline constexpr std::array<Var, var_count> all_vars = {
    Var::n, Var::kappa, Var::lambda, Var::r, Var::mu, Var::a, Var::c, Var::a0, Var::a1, Var::s};

constexpr std::string_view name_of(Var v) {
  constexpr std::array<std::string_view, var_count> names = {"n",  "kappa", "lambda", "r",  "mu",
                                                             "a",  "c",     "a0",     "a1", "s"};
  return names[static_cast<std::size_t>(v)];
}

/// Accepts the canonical names plus "tau" (scalar curvature, identified with r).
inline std::optional<Var> var_from_name(std::string_view text) {
  for (Var v : all_vars)
    if (name_of(v) == text) return v;
  if (text == "tau") return Var::r;
  return std::nullopt;
}

using Exponents = std::array<std::uint16_t, var_count>;
using Bindings = std::map<Var, Rational>;

inline unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Graded lexicographic order, used as "greater than" so maps iterate from the
/// leading term downwards.
struct MonomialGreater {
  bool operator()(const Exponents& x, const Exponents& y) const {
    unsigned dx = total_degree(x), dy = total_degree(y);
    if (dx != dy) return dx > dy;
    return x > y;
  }
};

inline bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < var_count; ++i)
    if (d[i] > e[i]) return false;
  return true;
}

class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, MonomialGreater>;

  Polynomial() = default;
  Polynomial(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Exponents{}, constant);
  }
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(const Exponents& e, const Rational& coefficient) {
    Polynomial p;
    p.add_term(e, coefficient);
    return p;
  }

  static Polynomial variable(Var v, unsigned power = 1) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(power);
    return monomial(e, 1);
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && nkt::total_degree(terms_.begin()->first) == 0);
  }

  Rational constant_value() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  unsigned degree(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[static_cast<std::size_t>(v)]);
    return d;
  }

  bool contains(Var v) const { return degree(v) > 0; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, nkt::total_degree(e));
    return d;
  }

  /// Coefficients of this polynomial viewed as univariate in v; index = power.
  std::vector<Polynomial> coefficients_in(Var v) const {
    std::vector<Polynomial> out(degree(v) + 1);
    auto idx = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      rest[idx] = 0;
      out[e[idx]].add_term(rest, c);
    }
    return out;
  }

  void add_term(const Exponents& e, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    for (const auto& [ex, cx] : lhs.terms_)
      for (const auto& [ey, cy] : rhs.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < var_count; ++i) e[i] = static_cast<std::uint16_t>(ex[i] + ey[i]);
        out.add_term(e, cx * cy);
      }
    return out;
  }

  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.terms_ == rhs.terms_; }

  Rational evaluate(const Bindings& at) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < var_count; ++i) {
        if (e[i] == 0) continue;
        auto it = at.find(static_cast<Var>(i));
        if (it == at.end())
          throw error(errc::unbound_indeterminate,
                      "no value bound for '" + std::string(name_of(static_cast<Var>(i))) + "'");
        for (unsigned k = 0; k < e[i]; ++k) term *= it->second;
      }
      sum += term;
    }
    return sum;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool negative = c < 0;
      Rational magnitude = negative ? Rational(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono = monomial_string(e);
      if (mono.empty()) {
        out += nkt::to_string(magnitude);
      } else if (magnitude == 1) {
        out += mono;
      } else {
        out += nkt::to_string(magnitude) + "*" + mono;
      }
    }
    return out;
  }

 private:
  static std::string monomial_string(const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < var_count; ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += name_of(static_cast<Var>(i));
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  }

  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

inline Polynomial scale(const Polynomial& p, const Rational& factor) { return p * Polynomial(factor); }

/// Scales p so its leading coefficient is 1 (zero stays zero).
inline Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return scale(p, Rational(1) / p.leading_coefficient());
}

/// Quotient a / b when b divides a exactly, nullopt otherwise.
inline std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
  Polynomial quotient;
  Polynomial rest = a;
  const Exponents& lead_b = b.leading_exponents();
  const Rational& lc_b = b.leading_coefficient();
  while (!rest.is_zero()) {
    const Exponents& lead_r = rest.leading_exponents();
    if (!divides(lead_b, lead_r)) return std::nullopt;
    Exponents e;
    for (std::size_t i = 0; i < var_count; ++i) e[i] = static_cast<std::uint16_t>(lead_r[i] - lead_b[i]);
    Polynomial t = Polynomial::monomial(e, rest.leading_coefficient() / lc_b);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

/// a / b where b is known to divide a; a failure is an internal error.
inline Polynomial divide_known(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("inexact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return *std::move(q);
}

/// Pseudo-remainder of a by b as univariate polynomials in v: the remainder
/// of lc(b)^(deg a - deg b + 1) * a.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var v) {
  const unsigned db = b.degree(v);
  const Polynomial lc_b = b.coefficients_in(v)[db];
  Polynomial rest = a;
  const unsigned da = a.degree(v);
  unsigned pending = da >= db ? da - db + 1 : 0;
  while (!rest.is_zero() && rest.degree(v) >= db) {
    const unsigned dr = rest.degree(v);
    Polynomial lc_r = rest.coefficients_in(v)[dr];
    rest = lc_b * rest - lc_r * Polynomial::variable(v, dr - db) * b;
    --pending;
  }
  for (; pending > 0; --pending) rest *= lc_b;
  return rest;
}

inline Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Monic gcd of the coefficients of p viewed as univariate in v.
inline Polynomial content_in(const Polynomial& p, Var v) {
  Polynomial g;
  for (const auto& coefficient : p.coefficients_in(v)) {
    if (coefficient.is_zero()) continue;
    g = gcd(g, coefficient);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

/// p scaled to integer coefficients with no common factor and positive leading coefficient.
inline Polynomial integer_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) {
    const Integer& d = denominator_of(c);
    den = den / boost::multiprecision::gcd(den, d) * d;
  }
  for (const auto& [e, c] : p.terms()) num = boost::multiprecision::gcd(num, numerator_of(c * den));
  Rational factor(den, num);
  if (p.leading_coefficient() < 0) factor = -factor;
  return scale(p, factor);
}

inline Polynomial primitive_part(const Polynomial& p, Var v) {
  if (p.is_zero()) return p;
  return integer_primitive(divide_known(p, content_in(p, v)));
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);

  if (a.size() == 1 || b.size() == 1) {
    Exponents common = (a.size() == 1 ? a : b).leading_exponents();
    for (const auto* p : {&a, &b})
      for (const auto& [e, c] : p->terms())
        for (std::size_t i = 0; i < var_count; ++i) common[i] = std::min(common[i], e[i]);
    return Polynomial::monomial(common, 1);
  }

  // A variable occurring in only one operand can only contribute through that
  // operand's content with respect to it.
  for (Var v : all_vars) {
    if (a.contains(v) && !b.contains(v)) return gcd(content_in(a, v), b);
    if (b.contains(v) && !a.contains(v)) return gcd(a, content_in(b, v));
  }
  if (a.total_degree() <= b.total_degree()) {
    if (divide_exact(b, a)) return make_monic(a);
  } else if (divide_exact(a, b)) {
    return make_monic(b);
  }

  Var main{};
  unsigned best = ~0u;
  for (Var v : all_vars) {
    if (!a.contains(v)) continue;
    unsigned d = std::max(a.degree(v), b.degree(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }
  Polynomial content_a = content_in(a, main);
  Polynomial content_b = content_in(b, main);
  Polynomial common = gcd(content_a, content_b);
  Polynomial pa = integer_primitive(divide_known(a, content_a));
  Polynomial pb = integer_primitive(divide_known(b, content_b));
  if (pa.degree(main) < pb.degree(main)) std::swap(pa, pb);
  // Subresultant remainder sequence; keeps coefficient growth polynomial.
  Polynomial g(1), h(1);
  while (!pb.is_zero() && pb.degree(main) > 0) {
    const unsigned delta = pa.degree(main) - pb.degree(main);
    Polynomial rem = pseudo_remainder(pa, pb, main);
    Polynomial divisor = g;
    for (unsigned i = 0; i < delta; ++i) divisor *= h;
    pa = std::move(pb);
    pb = rem.is_zero() ? rem : divide_known(rem, divisor);
    g = pa.coefficients_in(main)[pa.degree(main)];
    if (delta == 0) continue;
    Polynomial numer = g;
    for (unsigned i = 1; i < delta; ++i) numer *= g;
    Polynomial denom(1);
    for (unsigned i = 1; i < delta; ++i) denom *= h;
    h = divide_known(numer, denom);
  }
  if (!pb.is_zero()) return make_monic(common);
  return make_monic(common * primitive_part(pa, main));
}

/// Exact square root with positive leading coefficient, if p is a perfect square.
inline std::optional<Polynomial> sqrt_exact(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Exponents& lead = p.leading_exponents();
  Exponents half{};
  for (std::size_t i = 0; i < var_count; ++i) {
    if (lead[i] % 2 != 0) return std::nullopt;
    half[i] = static_cast<std::uint16_t>(lead[i] / 2);
  }
  auto root_coefficient = exact_sqrt(p.leading_coefficient());
  if (!root_coefficient || *root_coefficient <= 0) return std::nullopt;

  Polynomial root = Polynomial::monomial(half, *root_coefficient);
  Polynomial rest = p - root * root;
  const Rational twice_lead = 2 * *root_coefficient;
  Exponents previous = half;
  while (!rest.is_zero()) {
    const Exponents& lr = rest.leading_exponents();
    if (!divides(half, lr)) return std::nullopt;
    Exponents e;
    for (std::size_t i = 0; i < var_count; ++i) e[i] = static_cast<std::uint16_t>(lr[i] - half[i]);
    // Successive root terms must strictly decrease, otherwise p is not a square.
    if (!MonomialGreater{}(previous, e)) return std::nullopt;
    previous = e;
    Polynomial t = Polynomial::monomial(e, rest.leading_coefficient() / twice_lead);
    rest -= Polynomial(2) * root * t + t * t;
    root += t;
  }
  return root;
}

}  // namespace nkt
