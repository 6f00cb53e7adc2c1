#include "hopf/quaternion.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hopf {

Quaternion Quaternion::exp(const Vec3& v) {
  const double angle = v.norm();
  if (angle == 0.0) return identity();
  const double s = std::sin(angle) / angle;
  return {std::cos(angle), s * v.x(), s * v.y(), s * v.z()};
}

Quaternion Quaternion::inverse() const {
  const double n2 = norm2();
  if (n2 == 0.0) throw std::domain_error("inverse of zero quaternion");
  return conj() * (1.0 / n2);
}

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize zero quaternion");
  return *this * (1.0 / n);
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w += o.w;
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w -= o.w;
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

Quaternion& Quaternion::operator*=(double s) {
  w *= s;
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

bool operator==(const Quaternion& p, const Quaternion& q) {
  return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

double max_abs_diff(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.w - q.w), std::abs(p.x - q.x), std::abs(p.y - q.y),
                   std::abs(p.z - q.z)});
}

double log_angle(const Quaternion& q) { return std::atan2(q.vec().norm(), q.w); }

Vec3 principal_log(const Quaternion& q) {
  const Vec3 v = q.vec();
  const double s = v.norm();
  if (s == 0.0) return Vec3::Zero();
  return (std::atan2(s, q.w) / s) * v;
}

Vec3 rotate(const Quaternion& g, const Vec3& v) {
  // g v g^-1 for unit g, expanded: v + 2w (u x v) + 2 u x (u x v).
  const Vec3 u = g.vec();
  const Vec3 t = 2.0 * u.cross(v);
  return v + g.w * t + u.cross(t);
}

Vec3 ad_action(const Quaternion& g, const Vec3& v) {
  if (!g.is_unit()) throw std::invalid_argument("ad_action: group element is not a unit quaternion");
  return rotate(g, v);
}

}  // namespace hopf
