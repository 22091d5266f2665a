#pragma once

#include <cstdint>

namespace kummerlab {

enum class BumpKind { SmoothGlued, AnalyticSin };

struct BumpValue {
  double h = 0.0;
  double dh = 0.0;
};

/// Circle bump h_{eps,d} driving the perturbed torus maps.
///
/// Both kinds are odd, 1/2-periodic, and satisfy sup|h'| <= eps. The
/// smooth-glued kind equals eps*x exactly on the linear zone around 0 and 1/2
/// (half-width delta/d); the analytic-sin kind eps*sin(4*pi*d*x)/(4*pi*d) is
/// linear only to first order.
///
/// The base profile (d = 1) of the smooth-glued kind is built from its
/// derivative: even, 1/2-periodic, equal to +eps on [0, delta], equal to -eps
/// on [1/4 - delta, 1/4], joined by an exp(-1/x)-mollifier bridge whose point
/// symmetry makes the mean over a half-period exactly zero. h is recovered by
/// quadrature of h'; the d-fold profile is the lift h_d(x) = h_1(d x)/d.
class BumpProfile {
 public:
  /// Throws std::invalid_argument on invalid parameters. delta must lie in
  /// (0, 1/8); at delta = 1/8 the mollifier bridge degenerates to a jump and
  /// the profile stops being smooth.
  BumpProfile(BumpKind kind, double epsilon, int d, double delta = 1.0 / 16.0);

  static BumpProfile smooth(double epsilon, int d, double delta = 1.0 / 16.0) {
    return BumpProfile(BumpKind::SmoothGlued, epsilon, d, delta);
  }
  static BumpProfile analytic_sin(double epsilon, int d) {
    return BumpProfile(BumpKind::AnalyticSin, epsilon, d, 1.0 / 16.0);
  }

  BumpValue eval(double x) const;

  BumpKind kind() const { return kind_; }
  double epsilon() const { return eps_; }
  int d() const { return d_; }
  double delta() const { return delta_; }

  /// Half-width of the zone around 0 and 1/2 where h(x) = eps*x holds exactly.
  /// Zero for the analytic-sin kind.
  double linear_zone_halfwidth() const {
    return kind_ == BumpKind::SmoothGlued ? delta_ / d_ : 0.0;
  }

  bool in_linear_zone(double x) const;

 private:
  BumpKind kind_;
  double eps_;
  int d_;
  double delta_;

  double base_dh(double t) const;       // h_1' on the folded domain
  double base_h_quarter(double t) const;  // h_1 on [0, 1/4]
};

}  // namespace kummerlab
