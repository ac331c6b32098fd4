#pragma once

#include <cassert>
#include <cmath>

namespace cslam {

inline constexpr double kPi = 3.14159265358979323846;

/// Normalizes an angle to the half-open interval (-pi, pi].
inline double wrap_angle(double theta) {
  assert(std::isfinite(theta));
  double w = std::remainder(theta, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
};

inline Vec2 rotate(double angle, const Vec2& v) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Planar pose (x, y, heading). The heading is kept normalized to (-pi, pi].
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double psi = 0.0;

  Pose2() = default;
  Pose2(double x_, double y_, double psi_) : x(x_), y(y_), psi(wrap_angle(psi_)) {}

  Vec2 translation() const { return {x, y}; }
};

/// Rigid planar transform, the (rotation, translation) form of the 3x3
/// homogeneous matrix. Unlike Pose2 the rotation is not wrapped, so
/// composed transforms keep accumulated turns.
struct Transform2 {
  double rotation = 0.0;
  Vec2 translation;
};

inline Transform2 to_transform(const Pose2& p) { return {p.psi, {p.x, p.y}}; }
inline Pose2 to_pose(const Transform2& t) {
  return {t.translation.x, t.translation.y, t.rotation};
}

inline Transform2 compose(const Transform2& a, const Transform2& b) {
  return {a.rotation + b.rotation, a.translation + rotate(a.rotation, b.translation)};
}

inline Transform2 inverse(const Transform2& a) {
  const Vec2 t = rotate(-a.rotation, a.translation);
  return {-a.rotation, {-t.x, -t.y}};
}

inline Vec2 apply_to_point(const Transform2& t, const Vec2& p) {
  return t.translation + rotate(t.rotation, p);
}

// Pose2 overloads for the common case where a pose acts as a transform.
inline Pose2 compose(const Pose2& a, const Pose2& b) {
  return to_pose(compose(to_transform(a), to_transform(b)));
}

inline Pose2 inverse(const Pose2& a) { return to_pose(inverse(to_transform(a))); }

inline Vec2 apply_to_point(const Pose2& t, const Vec2& p) {
  return apply_to_point(to_transform(t), p);
}

/// Relative pose from a to b: the z_hat{i,j} edge prediction, A^-1 * B.
inline Pose2 between(const Pose2& a, const Pose2& b) {
  return compose(inverse(a), b);
}

/// Diagonal 3x3 information matrix (inverse-variance weights for x, y, psi).
struct InfoMatrix3 {
  double wx = 1.0;
  double wy = 1.0;
  double wpsi = 1.0;

  InfoMatrix3() = default;
  InfoMatrix3(double wx_, double wy_, double wpsi_) : wx(wx_), wy(wy_), wpsi(wpsi_) {
    assert(wx > 0.0 && wy > 0.0 && wpsi > 0.0);
  }
};

}  // namespace cslam
