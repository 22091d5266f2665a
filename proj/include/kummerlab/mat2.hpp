#pragma once

#include <array>
#include <cstdint>

#include <Eigen/Dense>

namespace kummerlab {

/// 2x2 integer matrix with exact arithmetic.
struct Mat2i {
  // row-major: (a b; c d)
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Mat2i identity() { return {1, 0, 0, 1}; }

  std::int64_t det() const { return a * d - b * c; }
  std::int64_t trace() const { return a + d; }
  bool symmetric() const { return b == c; }

  Mat2i operator*(const Mat2i& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }

  bool operator==(const Mat2i& o) const = default;

  /// Adjugate; for det = 1 this is the exact inverse.
  Mat2i adjugate() const { return {d, -b, -c, a}; }

  Mat2i mod2() const {
    auto m = [](std::int64_t x) { return ((x % 2) + 2) % 2; };
    return {m(a), m(b), m(c), m(d)};
  }

  Eigen::Matrix2d as_real() const {
    Eigen::Matrix2d m;
    m << static_cast<double>(a), static_cast<double>(b), static_cast<double>(c),
        static_cast<double>(d);
    return m;
  }
};

/// The hyperbolic matrix used throughout: B = (13 8; 8 5).
inline Mat2i paper_B() { return {13, 8, 8, 5}; }

struct SymEig2 {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  Eigen::Vector2d vec_plus;
  Eigen::Vector2d vec_minus;
};

/// Closed-form eigendecomposition of a symmetric 2x2 integer matrix via the
/// quadratic formula. lambda_plus >= lambda_minus; eigenvectors orthonormal.
/// Throws std::invalid_argument for non-symmetric input.
SymEig2 eig_sym2(const Mat2i& m);

/// Eigenvalues of a general real 2x2 matrix, |mu_hat| >= |mu_check|.
/// Throws std::domain_error if the eigenvalues are not real.
std::array<double, 2> eig_real2(const Eigen::Matrix2d& m);

}  // namespace kummerlab
