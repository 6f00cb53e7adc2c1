#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <iosfwd>

namespace hopf {

/// Imaginary quaternions, i.e. elements of su2 = Im H in the basis {i, j, k}.
using Vec3 = Eigen::Vector3d;

/// Hamilton quaternion w + x i + y j + z k.
///
/// Unit quaternions represent SU2, purely imaginary ones represent su2, and
/// unit imaginary ones represent points of CP1 = S2 (the image of q U1 -> q i q^-1).
struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quaternion pure(const Vec3& v) { return {0.0, v.x(), v.y(), v.z()}; }
  static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }

  /// exp of the imaginary quaternion v: cos|v| + sin|v| v/|v|.
  static Quaternion exp(const Vec3& v);

  Vec3 vec() const { return {x, y, z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  Quaternion inverse() const;
  Quaternion normalized() const;
  bool is_unit(double tol = 1e-10) const { return std::abs(norm() - 1.0) <= tol; }

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(double s);
};

inline constexpr Quaternion kQuatI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kQuatJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kQuatK{0.0, 0.0, 0.0, 1.0};

/// Hamilton product.
Quaternion quat_mul(const Quaternion& p, const Quaternion& q);

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }
inline Quaternion operator*(double s, Quaternion q) { return q *= s; }
inline Quaternion operator*(Quaternion q, double s) { return q *= s; }
inline Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
inline Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
inline Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
bool operator==(const Quaternion& p, const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Largest component-wise difference.
double max_abs_diff(const Quaternion& p, const Quaternion& q);

/// Principal logarithm of a unit quaternion: the imaginary v with |v| <= pi and exp(v) = q.
Vec3 principal_log(const Quaternion& q);

/// Rotation angle 2*atan2(|vec|, w) / 2, i.e. |principal_log(q)| in [0, pi].
double log_angle(const Quaternion& q);

/// Ad_*(g) v = g v g^-1 for unit g. Throws std::invalid_argument if g is not unit within 1e-10.
Vec3 ad_action(const Quaternion& g, const Vec3& v);

/// Same as ad_action but without the unit check (hot loops on renormalized data).
Vec3 rotate(const Quaternion& g, const Vec3& v);

/// Lie bracket on Im H: [a, b] = ab - ba = 2 a x b.
inline Vec3 bracket(const Vec3& a, const Vec3& b) { return 2.0 * a.cross(b); }

}  // namespace hopf
