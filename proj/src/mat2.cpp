#include "kummerlab/mat2.hpp"

#include <cmath>
#include <stdexcept>

namespace kummerlab {

SymEig2 eig_sym2(const Mat2i& m) {
  if (!m.symmetric()) throw std::invalid_argument("eig_sym2: matrix must be symmetric");
  const double a = static_cast<double>(m.a);
  const double b = static_cast<double>(m.b);
  const double d = static_cast<double>(m.d);
  const double mean = 0.5 * (a + d);
  const double disc = std::sqrt(0.25 * (a - d) * (a - d) + b * b);

  SymEig2 e;
  e.lambda_plus = mean + disc;
  e.lambda_minus = mean - disc;

  if (b == 0.0) {
    // already diagonal; order the axes by eigenvalue
    if (a >= d) {
      e.vec_plus = Eigen::Vector2d(1.0, 0.0);
      e.vec_minus = Eigen::Vector2d(0.0, 1.0);
    } else {
      e.vec_plus = Eigen::Vector2d(0.0, 1.0);
      e.vec_minus = Eigen::Vector2d(1.0, 0.0);
    }
    return e;
  }

  Eigen::Vector2d v(b, e.lambda_plus - a);
  v.normalize();
  e.vec_plus = v;
  e.vec_minus = Eigen::Vector2d(-v.y(), v.x());
  return e;
}

std::array<double, 2> eig_real2(const Eigen::Matrix2d& m) {
  const double tr = m(0, 0) + m(1, 1);
  const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const double disc = 0.25 * tr * tr - det;
  if (disc < 0.0) throw std::domain_error("eig_real2: complex eigenvalues");
  const double root = std::sqrt(disc);
  double e1 = 0.5 * tr + root;
  double e2 = 0.5 * tr - root;
  if (std::fabs(e1) < std::fabs(e2)) std::swap(e1, e2);
  return {e1, e2};
}

}  // namespace kummerlab
