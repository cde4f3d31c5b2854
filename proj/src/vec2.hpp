/// @file vec2.hpp
/// @brief Minimal 2D vector, 2x2 matrix, and axis-aligned box types.
#pragma once

#include <cmath>

namespace cov2d {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Vec2& a) { return a.x * a.x + a.y * a.y; }
inline double norm(const Vec2& a) { return std::sqrt(norm2(a)); }
inline bool finite(const Vec2& a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Row-major 2x2 matrix.
struct Mat2 {
  double a00 = 0.0, a01 = 0.0;
  double a10 = 0.0, a11 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 outer(const Vec2& a, const Vec2& b) {
    return {a.x * b.x, a.x * b.y, a.y * b.x, a.y * b.y};
  }

  Vec2 apply(const Vec2& v) const { return {a00 * v.x + a01 * v.y, a10 * v.x + a11 * v.y}; }
  Vec2 apply_transpose(const Vec2& v) const { return {a00 * v.x + a10 * v.y, a01 * v.x + a11 * v.y}; }

  Mat2 operator+(const Mat2& o) const { return {a00 + o.a00, a01 + o.a01, a10 + o.a10, a11 + o.a11}; }
  Mat2 operator-(const Mat2& o) const { return {a00 - o.a00, a01 - o.a01, a10 - o.a10, a11 - o.a11}; }
  Mat2 operator*(double s) const { return {a00 * s, a01 * s, a10 * s, a11 * s}; }
  Mat2& operator+=(const Mat2& o) { a00 += o.a00; a01 += o.a01; a10 += o.a10; a11 += o.a11; return *this; }

  Mat2 matmul(const Mat2& o) const {
    return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
            a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
  }
  Mat2 transpose() const { return {a00, a10, a01, a11}; }
  double det() const { return a00 * a11 - a01 * a10; }
  double trace() const { return a00 + a11; }
  Mat2 inverse() const {
    const double d = det();
    return {a11 / d, -a01 / d, -a10 / d, a00 / d};
  }
  double max_abs() const {
    return std::max(std::max(std::fabs(a00), std::fabs(a01)), std::max(std::fabs(a10), std::fabs(a11)));
  }
};

/// Eigenvalues of a symmetric 2x2 matrix, returned as (min, max).
inline void sym_eigenvalues(const Mat2& m, double& lo, double& hi) {
  const double mean = 0.5 * (m.a00 + m.a11);
  const double diff = 0.5 * (m.a00 - m.a11);
  const double rad = std::sqrt(diff * diff + m.a01 * m.a10);
  lo = mean - rad;
  hi = mean + rad;
}

struct Box {
  Vec2 lo;
  Vec2 hi;

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double area() const { return width() * height(); }
  bool contains(const Vec2& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  Vec2 clamp(const Vec2& p, double inset = 0.0) const {
    return {std::min(std::max(p.x, lo.x + inset), hi.x - inset),
            std::min(std::max(p.y, lo.y + inset), hi.y - inset)};
  }
};

}  // namespace cov2d
