#pragma once

// Fixed-size vector and matrix kernels used throughout the library.
// Only what gyrations and boosts need: 3-vectors, square 3x3 and 4x4 matrices.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

namespace gyro {

struct Vec3 {
  double x{0.0};
  double y{0.0};
  double z{0.0};

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  constexpr Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double norm_squared(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::hypot(a.x, a.y, a.z); }

inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

/// Largest absolute component of a - b.
inline double max_abs_diff(const Vec3& a, const Vec3& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

/// Row-major dense square matrix.
template <std::size_t N>
struct SquareMatrix {
  std::array<double, N * N> data{};

  static constexpr std::size_t size = N;

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr SquareMatrix zero() { return SquareMatrix{}; }

  constexpr double operator()(std::size_t r, std::size_t c) const { return data[r * N + c]; }
  constexpr double& operator()(std::size_t r, std::size_t c) { return data[r * N + c]; }

  constexpr SquareMatrix transposed() const {
    SquareMatrix t;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  constexpr double trace() const {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += (*this)(i, i);
    return s;
  }

  constexpr SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] += o.data[i];
    return *this;
  }
  constexpr SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] -= o.data[i];
    return *this;
  }
  constexpr SquareMatrix& operator*=(double s) {
    for (auto& e : data) e *= s;
    return *this;
  }

  friend constexpr bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

template <std::size_t N>
constexpr SquareMatrix<N> operator+(SquareMatrix<N> a, const SquareMatrix<N>& b) { return a += b; }
template <std::size_t N>
constexpr SquareMatrix<N> operator-(SquareMatrix<N> a, const SquareMatrix<N>& b) { return a -= b; }
template <std::size_t N>
constexpr SquareMatrix<N> operator*(double s, SquareMatrix<N> a) { return a *= s; }

template <std::size_t N>
constexpr SquareMatrix<N> operator*(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  SquareMatrix<N> m;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t k = 0; k < N; ++k) {
      const double ark = a(r, k);
      for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

/// Max-norm (largest absolute entry) of a - b.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

template <std::size_t N>
double max_abs(const SquareMatrix<N>& a) {
  return max_abs_diff(a, SquareMatrix<N>::zero());
}

using Mat3 = SquareMatrix<3>;
using Mat4 = SquareMatrix<4>;

constexpr Vec3 operator*(const Mat3& m, const Vec3& v) {
  return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
          m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
          m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

constexpr double determinant(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// a b^T
constexpr Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = a[r] * b[c];
  return m;
}

/// Matrix of x -> w x x.
constexpr Mat3 cross_matrix(const Vec3& w) {
  Mat3 m;
  m(0, 1) = -w.z; m(0, 2) = w.y;
  m(1, 0) = w.z;  m(1, 2) = -w.x;
  m(2, 0) = -w.y; m(2, 1) = w.x;
  return m;
}

inline std::array<double, 9> flatten(const Mat3& m) { return m.data; }

}  // namespace gyro
