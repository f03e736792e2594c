#pragma once

// Dense exact tensors over an n-dimensional frame, indexed from 0.

#include <array>
#include <cstddef>
#include <vector>

#include "nkt/rational.hpp"

namespace nkt {

template <std::size_t Rank>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::size_t dim) : dim_(dim), data_(power(dim), Rational(0)) {}

  std::size_t dim() const { return dim_; }

  template <typename... I>
  Rational& operator()(I... idx) {
    static_assert(sizeof...(I) == Rank);
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <typename... I>
  const Rational& operator()(I... idx) const {
    static_assert(sizeof...(I) == Rank);
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  const std::vector<Rational>& data() const { return data_; }

  Tensor& operator+=(const Tensor& other) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& other) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }
  Tensor& operator*=(const Rational& factor) {
    for (auto& x : data_) x *= factor;
    return *this;
  }

  friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
  friend Tensor operator-(Tensor x, const Tensor& y) { return x -= y; }
  friend Tensor operator*(const Rational& factor, Tensor x) { return x *= factor; }
  friend Tensor operator-(Tensor x) { return x *= Rational(-1); }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  static std::size_t power(std::size_t dim) {
    std::size_t out = 1;
    for (std::size_t r = 0; r < Rank; ++r) out *= dim;
    return out;
  }
  std::size_t offset(const std::array<std::size_t, Rank>& idx) const {
    std::size_t out = 0;
    for (std::size_t r = 0; r < Rank; ++r) out = out * dim_ + idx[r];
    return out;
  }

  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

using Vector = Tensor<1>;
using Matrix = Tensor<2>;

inline Matrix identity_matrix(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

inline Vector operator*(const Matrix& a, const Vector& v) {
  Vector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) out(i) += a(i, k) * v(k);
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(j, i);
  return out;
}

inline Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v(i) = 1;
  return v;
}

inline Rational dot(const Vector& x, const Vector& y) {
  Rational out = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) out += x(i) * y(i);
  return out;
}

/// Column j of a, i.e. the image of e_j.
inline Vector column(const Matrix& a, std::size_t j) {
  Vector v(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) v(i) = a(i, j);
  return v;
}

template <std::size_t Rank>
Rational max_abs(const Tensor<Rank>& t) {
  Rational out = 0;
  for (const auto& x : t.data()) out = std::max(out, abs_value(x));
  return out;
}

}  // namespace nkt
