#include "kummerlab/bump.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kummerlab/torus.hpp"

namespace kummerlab {
namespace {

double phi(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

/// C-infinity step: 0 at u<=0, 1 at u>=1, s(u)+s(1-u)=1.
double smoothstep(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double p = phi(u);
  return p / (p + phi(1.0 - u));
}

// 16-point Gauss-Legendre rule on [-1, 1] (positive half; rule is symmetric).
constexpr double kGlNodes[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kGlWeights[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

template <typename F>
double gauss16(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kGlNodes[i];
    acc += kGlWeights[i] * (f(mid - dx) + f(mid + dx));
  }
  return acc * half;
}

/// Composite quadrature; panel count scaled to keep the mollifier bridge
/// resolved to machine precision.
template <typename F>
double integrate(F&& f, double a, double b) {
  const int panels = 1 + static_cast<int>(std::ceil(std::fabs(b - a) / 0.01));
  double acc = 0.0;
  const double step = (b - a) / panels;
  for (int i = 0; i < panels; ++i) acc += gauss16(f, a + i * step, a + (i + 1) * step);
  return acc;
}

}  // namespace

BumpProfile::BumpProfile(BumpKind kind, double epsilon, int d, double delta)
    : kind_(kind), eps_(epsilon), d_(d), delta_(delta) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("BumpProfile: epsilon must be >= 0");
  if (d < 1) throw std::invalid_argument("BumpProfile: d must be a positive integer");
  if (kind == BumpKind::SmoothGlued && !(delta > 0.0 && delta < 0.125))
    throw std::invalid_argument("BumpProfile: delta must lie in (0, 1/8)");
}

double BumpProfile::base_dh(double t) const {
  // t in [0, 1/4]; even + 1/2-periodic extension handled by the caller.
  if (t <= delta_) return eps_;
  const double hi = 0.25 - delta_;
  if (t >= hi) return -eps_;
  return eps_ * (1.0 - 2.0 * smoothstep((t - delta_) / (hi - 2.0 * 0.0 - delta_ - delta_ + delta_)));
}

double BumpProfile::base_h_quarter(double t) const {
  // cumulative integral of base_dh on [0, 1/4]; exact on the closed-form pieces
  if (t <= delta_) return eps_ * t;
  const double hi = 0.25 - delta_;
  if (t >= hi) return eps_ * delta_ - eps_ * (t - hi);
  return eps_ * delta_ + integrate([this](double u) { return base_dh(u); }, delta_, t);
}

BumpValue BumpProfile::eval(double x) const {
  if (kind_ == BumpKind::AnalyticSin) {
    const double f = 4.0 * std::numbers::pi * d_;
    return {eps_ * std::sin(f * x) / f, eps_ * std::cos(f * x)};
  }

  // lift: h_d(x) = h_1(d x)/d, h_d'(x) = h_1'(d x)
  const double y = mod1(static_cast<double>(d_) * x);
  // reduce mod 1/2, then use h(1/2 - r) = -h(r) to land in [0, 1/4]
  double r = y >= 0.5 ? y - 0.5 : y;
  double sign = 1.0;
  if (r > 0.25) {
    r = 0.5 - r;
    sign = -1.0;
  }
  const double dh = base_dh(r);  // h' is even, so no sign flip
  const double h = sign * base_h_quarter(r);
  return {h / d_, dh};
}

bool BumpProfile::in_linear_zone(double x) const {
  if (kind_ != BumpKind::SmoothGlued) return false;
  const double y = mod1(static_cast<double>(d_) * x);
  const double t = std::min({y, std::fabs(y - 0.5), 1.0 - y});
  return t <= delta_;
}

}  // namespace kummerlab
