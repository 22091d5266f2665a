#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace kummerlab {

/// Canonical representative of a circle coordinate in [0, 1).
inline double mod1(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;  // guards against floor rounding at negative -eps
  if (r < 0.0) r += 1.0;
  return r;
}

/// Signed representative in [-1/2, 1/2).
inline double wrap_half(double x) {
  double r = mod1(x);
  return (r >= 0.5) ? r - 1.0 : r;
}

/// Distance on the circle R/Z.
inline double circle_dist(double a, double b) { return std::fabs(wrap_half(a - b)); }

/// Point on T^4 with coordinates (x1, y1, x2, y2), each reduced mod 1.
/// The complex identification pairs them as z1 = x1 + i*x2, z2 = y1 + i*y2;
/// the factor maps act on (x1, y1) and on (x2, y2).
struct Torus4 {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  Torus4() = default;
  Torus4(double a, double b, double cc, double d) : c{a, b, cc, d} { reduce(); }
  explicit Torus4(const std::array<double, 4>& v) : c(v) { reduce(); }

  void reduce() {
    for (auto& x : c) x = mod1(x);
  }

  double operator[](std::size_t i) const { return c[i]; }
  double& operator[](std::size_t i) { return c[i]; }

  friend Torus4 operator+(const Torus4& a, const Torus4& b) {
    return Torus4{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
  }

  Torus4 negated() const { return Torus4{-c[0], -c[1], -c[2], -c[3]}; }
};

inline double circle_dist(const Torus4& a, const Torus4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, circle_dist(a[i], b[i]));
  return m;
}

/// Lexicographic order on the canonical representatives.
inline bool lex_less(const Torus4& a, const Torus4& b) {
  for (int i = 0; i < 4; ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace kummerlab
